#include "ccrlab/pspace.hpp"

#include <cmath>
#include <vector>

namespace ccrlab {

PSpace::PSpace(QuotientChart chart, Cone cone, RatMat translates)
    : chart_(std::move(chart)), cone_(std::move(cone)), translates_(std::move(translates)) {
  require(chart_.dim() == cone_.dim(), ErrorCode::ChartMismatch,
          "chart and cone dimensions differ");
  if (translates_.size() == 0) translates_ = RatMat::Zero(cone_.dim(), 1);
  require(translates_.rows() == cone_.dim(), ErrorCode::BadInput, "translate dimension mismatch");

  // e must be strictly positive on every generator: this is what certifies
  // the compact slab behind the membership enumeration.
  const RatVec& e = chart_.functional().direction;
  for (Eigen::Index j = 0; j < cone_.generators().cols(); ++j) {
    Rat s = 0;
    for (int i = 0; i < dim(); ++i) s += cone_.generators()(i, j) * e[i];
    require(s > 0, ErrorCode::NotInteriorFunctional,
            "chart functional is not interior to the dual cone");
  }
  functionalDirectionNorm_ = to_double(e).norm();

  const int r = chart_.torusRank();
  if (r > 0) {
    const RatMat& basis = chart_.lattice().basis();
    RatMat gram = basis.transpose() * basis;
    RatMat gramInv = exact_solve_matrix(gram, RatMat(RatMat::Identity(r, r)));
    latticePseudoInverse_ = gramInv * basis.transpose();
    boxScale_.resize(r);
    for (int i = 0; i < r; ++i) boxScale_[i] = std::sqrt(to_double(gramInv(i, i)));
  }
}

bool PSpace::member(const RatVec& x) const {
  require(x.size() == dim(), ErrorCode::BadInput, "dimension mismatch");
  const RatVec& e = chart_.functional().direction;
  const int r = chart_.torusRank();

  for (Eigen::Index t = 0; t < translates_.cols(); ++t) {
    RatVec z = x - translates_.col(t);
    Rat pairing = 0;
    for (int i = 0; i < dim(); ++i) pairing += z[i] * e[i];
    // <z+n|e> = <z|e> since e ⊥ N; negative pairing rules the translate out.
    if (pairing < 0) continue;
    if (r == 0) {
      if (in_cone(cone_, z)) return true;
      continue;
    }
    // Any candidate z+n lies in the slab {y in P : <y|e-hat> <= c}, hence in
    // a ball of radius R; enumerate the lattice coefficient box.
    Rat c(rat_from_double(to_double(pairing) / functionalDirectionNorm_ * (1 + 1e-12) + 1e-12));
    double radius = slab_radius(cone_, chart_.functional(), c) * (1 + 1e-9) + 1e-9;

    const RatMat& basis = chart_.lattice().basis();
    RatVec w = latticePseudoInverse_ * z;  // z_parallel = B w
    RatVec zPerp = z - basis * w;
    Rat perpSq = 0;
    for (int i = 0; i < dim(); ++i) perpSq += zPerp[i] * zPerp[i];
    double rhoSq = radius * radius - to_double(perpSq);
    if (rhoSq < 0) continue;
    double rho = std::sqrt(rhoSq);

    std::vector<long> lo(static_cast<size_t>(r)), hi(static_cast<size_t>(r));
    bool emptyBox = false;
    for (int i = 0; i < r; ++i) {
      double wi = to_double(w[i]);
      double b = rho * boxScale_[i] + 1e-9;
      lo[static_cast<size_t>(i)] = static_cast<long>(std::floor(-wi - b));
      hi[static_cast<size_t>(i)] = static_cast<long>(std::ceil(-wi + b));
      if (lo[static_cast<size_t>(i)] > hi[static_cast<size_t>(i)]) emptyBox = true;
    }
    if (emptyBox) continue;

    std::vector<long> m(lo);
    while (true) {
      RatVec candidate = z;
      for (int i = 0; i < r; ++i) candidate += basis.col(i) * Rat(m[static_cast<size_t>(i)]);
      if (in_cone(cone_, candidate)) return true;
      int axis = 0;
      while (axis < r) {
        if (++m[static_cast<size_t>(axis)] <= hi[static_cast<size_t>(axis)]) break;
        m[static_cast<size_t>(axis)] = lo[static_cast<size_t>(axis)];
        ++axis;
      }
      if (axis == r) break;
    }
  }
  return false;
}

BoundaryReport boundary_compact(const PSpace& a) {
  const int freeRank = a.chart().freeRank();
  BoundaryReport report;
  report.compact = (freeRank == 1);
  if (report.compact) {
    report.reason =
        "abelian quotient R x T^r with one noncompact direction: the boundary sits in a "
        "bounded slab [k, k+x] x T^r";
  } else {
    report.reason = "quotient has an R^" + std::to_string(freeRank) +
                    " factor; with " + std::to_string(freeRank) +
                    " >= 2 noncompact directions the complement of every bounded set stays "
                    "connected, so no invariant proper closed set has compact boundary";
  }
  return report;
}

}  // namespace ccrlab
