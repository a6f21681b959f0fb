#include "ccrlab/cone.hpp"

#include <cmath>
#include <vector>

namespace ccrlab {

namespace {

constexpr int kMaxEnumDim = 4;

/// Scale a rational column to a primitive integer vector (content 1). The
/// sign is left untouched; callers fix orientation.
RatVec primitive(const RatVec& v) {
  RatMat m = v;
  Int den = common_denominator(m);
  IntVec w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(den);
    w[i] = scaled.get_num();  // denominator is 1 after scaling
  }
  Int g = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  RatVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = (g == 0) ? Rat(0) : Rat(w[i] / g);
  return out;
}

bool satisfies_all(const RatMat& normals, const RatVec& x) {
  for (Eigen::Index j = 0; j < normals.cols(); ++j) {
    Rat s = 0;
    for (Eigen::Index i = 0; i < normals.rows(); ++i) s += normals(i, j) * x[i];
    if (s < 0) return false;
  }
  return true;
}

void append_unique(std::vector<RatVec>& rays, const RatVec& r) {
  for (const auto& known : rays)
    if (known == r) return;
  rays.push_back(r);
}

}  // namespace

RatMat extreme_rays(const RatMat& normals) {
  const int d = static_cast<int>(normals.rows());
  const int m = static_cast<int>(normals.cols());
  require(d >= 1, ErrorCode::BadInput, "cone dimension must be >= 1");
  require(d <= kMaxEnumDim, ErrorCode::DimensionTooLarge,
          "ray enumeration supported up to dimension 4");
  require(m >= 1, ErrorCode::BadInput, "need at least one inequality");

  std::vector<RatVec> rays;
  // Each extreme ray is the 1-dimensional kernel of d-1 active inequalities;
  // iterate over all (d-1)-subsets of the inequality columns.
  std::vector<int> idx(static_cast<size_t>(d - 1));
  const int choose = d - 1;
  if (choose == 0) {
    // dimension 1: candidate rays are +-1
    for (int sgn : {+1, -1}) {
      RatVec r(1);
      r[0] = sgn;
      if (satisfies_all(normals, r)) append_unique(rays, r);
    }
  } else {
    for (int i = 0; i < choose; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      RatMat sub(choose, d);
      for (int i = 0; i < choose; ++i) sub.row(i) = normals.col(idx[static_cast<size_t>(i)]).transpose();
      RatMat kernel = exact_kernel(sub);
      if (kernel.cols() == 1) {
        RatVec r = primitive(kernel.col(0));
        if (!r.isZero()) {
          if (satisfies_all(normals, r)) append_unique(rays, r);
          RatVec neg = -r;
          if (satisfies_all(normals, neg)) append_unique(rays, neg);
        }
      }
      // next subset
      int pos = choose - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - choose + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < choose; ++i) idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
    }
  }

  RatMat out(d, static_cast<Eigen::Index>(rays.size()));
  for (size_t j = 0; j < rays.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = rays[j];
  return out;
}

Cone Cone::from_generators(const RatMat& generators) {
  const int d = static_cast<int>(generators.rows());
  require(d >= 1, ErrorCode::BadInput, "cone dimension must be >= 1");
  require(generators.cols() >= 1, ErrorCode::BadInput, "cone needs at least one generator");
  for (Eigen::Index j = 0; j < generators.cols(); ++j)
    require(!generators.col(j).isZero(), ErrorCode::BadInput, "zero generator");

  require(exact_rank(generators) == d, ErrorCode::NotSpanning, "generators do not span R^d");

  // Facets of cone(V) are the extreme rays of {y : V^T y >= 0}.
  RatMat facets = extreme_rays(generators);
  require(facets.cols() >= 1 && exact_rank(facets) == d, ErrorCode::NotPointed,
          "cone contains a line");

  Cone cone(generators, facets);
  for (Eigen::Index j = 0; j < generators.cols(); ++j)
    require(in_cone(cone, generators.col(j)), ErrorCode::BadInput,
            "generator violates derived facet inequality");
  return cone;
}

Cone Cone::from_representations(const RatMat& generators, const RatMat& facets) {
  return Cone(generators, facets);
}

UnitFunctional make_unit_functional(const RatVec& direction) {
  require(!direction.isZero(), ErrorCode::BadInput, "zero functional");
  UnitFunctional e;
  e.direction = direction;
  Eigen::VectorXd v = to_double(direction);
  e.unit = v / v.norm();
  return e;
}

Cone dual_cone(const Cone& p) {
  require(p.dim() <= kMaxEnumDim, ErrorCode::DimensionTooLarge,
          "dual V-representation supported up to dimension 4");
  RatMat dualGens = extreme_rays(p.generators());
  // The H-representation of P* is free: it is cut out by P's generators.
  Cone dual = Cone::from_generators(dualGens);
  return dual;
}

UnitFunctional interior_unit(const Cone& pstar, const std::optional<RatVec>& hint) {
  RatVec direction;
  if (hint) {
    direction = *hint;
  } else {
    direction = RatVec::Zero(pstar.dim());
    for (Eigen::Index j = 0; j < pstar.generators().cols(); ++j)
      direction += pstar.generators().col(j);
  }
  // Strict interiority of pstar <=> strictly positive on all facets of pstar.
  for (Eigen::Index j = 0; j < pstar.facets().cols(); ++j) {
    Rat s = 0;
    for (Eigen::Index i = 0; i < pstar.facets().rows(); ++i)
      s += pstar.facets()(i, j) * direction[i];
    require(s > 0, ErrorCode::EmptyInterior,
            hint ? "hint is not strictly interior" : "no strictly interior point");
  }
  return make_unit_functional(direction);
}

bool in_cone(const Cone& p, const RatVec& x, bool strict) {
  require(x.size() == p.dim(), ErrorCode::BadInput, "dimension mismatch");
  for (Eigen::Index j = 0; j < p.facets().cols(); ++j) {
    Rat s = 0;
    for (Eigen::Index i = 0; i < p.facets().rows(); ++i) s += p.facets()(i, j) * x[i];
    if (strict ? (s <= 0) : (s < 0)) return false;
  }
  return true;
}

double slab_radius(const Cone& p, const UnitFunctional& e, const Rat& c) {
  require(c >= 0, ErrorCode::BadInput, "slab height must be nonnegative");
  double minPairing = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < p.generators().cols(); ++j) {
    Rat exact = 0;
    for (Eigen::Index i = 0; i < p.dim(); ++i) exact += p.generators()(i, j) * e.direction[i];
    require(exact > 0, ErrorCode::NotInteriorFunctional,
            "functional is not strictly positive on a generator");
    Eigen::VectorXd g = to_double(RatVec(p.generators().col(j)));
    minPairing = std::min(minPairing, g.dot(e.unit) / g.norm());
  }
  return to_double(c) / minPairing;
}

}  // namespace ccrlab
