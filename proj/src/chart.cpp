#include "ccrlab/chart.hpp"

#include <vector>

namespace ccrlab {

namespace {

/// Rational orthogonal basis of span(basis)^perp, columns scaled primitive.
RatMat orthogonal_complement(int dim, const RatMat& basis) {
  const int r = static_cast<int>(basis.cols());
  const int free = dim - r;
  RatMat projector;  // onto span(basis)
  if (r > 0) {
    RatMat gram = basis.transpose() * basis;
    projector = basis * exact_solve_matrix(gram, RatMat(basis.transpose()));
  }
  std::vector<RatVec> columns;
  for (int i = 0; i < dim && static_cast<int>(columns.size()) < free; ++i) {
    RatVec w = RatVec::Zero(dim);
    w[i] = 1;
    if (r > 0) w -= projector * w;
    // Gram-Schmidt against already chosen columns, without normalization.
    for (const auto& f : columns) {
      Rat num = 0, den = 0;
      for (int j = 0; j < dim; ++j) {
        num += w[j] * f[j];
        den += f[j] * f[j];
      }
      if (num != 0) w -= f * (num / den);
    }
    if (w.isZero()) continue;
    // scale to primitive integer entries for readability and small denominators
    RatMat asMat = w;
    Int den = common_denominator(asMat);
    IntVec iw(dim);
    Int g = 0;
    for (int j = 0; j < dim; ++j) {
      Rat q = w[j] * Rat(den);
      iw[j] = q.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iw[j].get_mpz_t());
    }
    for (int j = 0; j < dim; ++j) w[j] = Rat(iw[j] / g);
    columns.push_back(w);
  }
  require(static_cast<int>(columns.size()) == free, ErrorCode::BadInput,
          "failed to complete complement basis");
  RatMat out(dim, free);
  for (int j = 0; j < free; ++j) out.col(j) = columns[static_cast<size_t>(j)];
  return out;
}

}  // namespace

QuotientChart::QuotientChart(const Lattice& lattice, const RatVec& functionalDirection)
    : lattice_(lattice), functional_(make_unit_functional(functionalDirection)) {
  const int d = lattice_.dim();
  for (Eigen::Index j = 0; j < lattice_.basis().cols(); ++j) {
    Rat s = 0;
    for (int i = 0; i < d; ++i) s += functionalDirection[i] * lattice_.basis()(i, j);
    require(s == 0, ErrorCode::FunctionalNotOrthogonal,
            "functional must be orthogonal to the lattice");
  }
  complement_ = orthogonal_complement(d, lattice_.basis());
  complementUnit_.resize(d, complement_.cols());
  axisScale_.resize(complement_.cols());
  for (Eigen::Index j = 0; j < complement_.cols(); ++j) {
    Eigen::VectorXd col = to_double(RatVec(complement_.col(j)));
    axisScale_[j] = col.norm();
    complementUnit_.col(j) = col / axisScale_[j];
  }
  frame_.resize(d, d);
  frame_.leftCols(complement_.cols()) = complement_;
  if (lattice_.rank() > 0) frame_.rightCols(lattice_.rank()) = lattice_.basis();
  Eigen::FullPivLU<RatMat> lu(frame_);
  require(lu.isInvertible(), ErrorCode::BadInput, "degenerate chart frame");
  frameInv_ = lu.inverse();
  Rat det = lu.determinant();
  jacobian_ = det < 0 ? Rat(-det) : det;
}

RatVec QuotientChart::point(const RatVec& y, const RatVec& u) const {
  require(y.size() == freeRank() && u.size() == torusRank(), ErrorCode::BadInput,
          "coordinate size mismatch");
  RatVec x = complement_ * y;
  if (torusRank() > 0) x += lattice_.basis() * u;
  return x;
}

QuotientChart::Coords QuotientChart::coords(const RatVec& x) const {
  require(x.size() == dim(), ErrorCode::BadInput, "dimension mismatch");
  RatVec c = frameInv_ * x;
  Coords out;
  out.y = c.head(freeRank());
  out.u.resize(torusRank());
  for (int j = 0; j < torusRank(); ++j) out.u[j] = rat_mod1(c[freeRank() + j]);
  return out;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> QuotientChart::coords(const Eigen::VectorXd& x) const {
  Coords c = coords(rat_from_double(x));
  return {to_double(c.y), to_double(c.u)};
}

}  // namespace ccrlab
