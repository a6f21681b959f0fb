#include "ccrlab/lattice.hpp"

namespace ccrlab {

namespace {

// Combine columns j and l so that row `row` becomes (g, 0), using the
// extended gcd; both column operations are unimodular.
void gcd_columns(IntMat& m, int row, int j, int l) {
  Int a = m(row, j), b = m(row, l);
  Int g, p, q;
  mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int aOverG = a / g, bOverG = b / g;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Int cj = m(i, j), cl = m(i, l);
    m(i, j) = p * cj + q * cl;
    m(i, l) = aOverG * cl - bOverG * cj;
  }
}

}  // namespace

IntMat hermite_normal_form(IntMat m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int col = 0;
  for (int row = 0; row < rows && col < cols; ++row) {
    // find a column with a nonzero entry in this row
    int pivot = -1;
    for (int l = col; l < cols; ++l)
      if (m(row, l) != 0) {
        pivot = l;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != col) m.col(pivot).swap(m.col(col));
    for (int l = col + 1; l < cols; ++l)
      if (m(row, l) != 0) gcd_columns(m, row, col, l);
    if (m(row, col) < 0) m.col(col) = -m.col(col);
    // reduce the entries left of the pivot into [0, pivot)
    for (int l = 0; l < col; ++l) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m(row, l).get_mpz_t(), m(row, col).get_mpz_t());
      if (q != 0) m.col(l) -= m.col(col) * q;
    }
    ++col;
  }
  return m;
}

RatMat rational_hnf(const RatMat& basis) {
  if (basis.cols() == 0) return basis;
  Int den = common_denominator(basis);
  IntMat scaled(basis.rows(), basis.cols());
  for (Eigen::Index i = 0; i < basis.rows(); ++i)
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
      Rat q = basis(i, j) * Rat(den);
      scaled(i, j) = q.get_num();
    }
  IntMat h = hermite_normal_form(std::move(scaled));
  RatMat out(basis.rows(), basis.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) = frac(h(i, j), den);
  return out;
}

Lattice::Lattice(int dim, const RatMat& basis) : dim_(dim), basis_(basis) {
  require(dim >= 1, ErrorCode::BadInput, "lattice dimension must be >= 1");
  require(basis.rows() == dim, ErrorCode::BadInput, "basis row count != dim");
  require(basis.cols() <= dim - 1, ErrorCode::BadInput, "lattice rank must be <= dim-1");
  if (basis.cols() > 0) {
    require(exact_rank(basis) == static_cast<int>(basis.cols()), ErrorCode::BadInput,
            "basis columns are linearly dependent");
    RatMat gram = basis.transpose() * basis;
    pseudoInverse_ = exact_solve_matrix(gram, RatMat(basis.transpose()));
  }
  hnf_ = rational_hnf(basis_);
}

std::optional<RatVec> Lattice::span_coordinates(const RatVec& x) const {
  if (rank() == 0) return x.isZero() ? std::optional<RatVec>(RatVec(0)) : std::nullopt;
  RatVec w = pseudoInverse_ * x;
  RatVec back = basis_ * w;
  if (back != x) return std::nullopt;
  return w;
}

bool Lattice::contains(const RatVec& x) const {
  auto w = span_coordinates(x);
  if (!w) return false;
  for (Eigen::Index i = 0; i < w->size(); ++i)
    if (!is_integer((*w)[i])) return false;
  return true;
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim() || a.rank() != b.rank()) return false;
  return a.hnf() == b.hnf();
}

TwoPiLattice dual_lattice(const Lattice& n, const RatVec& functionalDirection) {
  require(n.rank() >= 1, ErrorCode::BadInput, "dual of the zero lattice is not discrete");
  require(functionalDirection.size() == n.dim(), ErrorCode::BadInput, "dimension mismatch");
  for (Eigen::Index j = 0; j < n.basis().cols(); ++j) {
    Rat s = 0;
    for (Eigen::Index i = 0; i < n.dim(); ++i) s += functionalDirection[i] * n.basis()(i, j);
    require(s == 0, ErrorCode::FunctionalNotOrthogonal,
            "functional is not orthogonal to the lattice");
  }
  RatMat gram = n.basis().transpose() * n.basis();
  RatMat coeff = n.basis() * exact_solve_matrix(gram, RatMat(RatMat::Identity(n.rank(), n.rank())));
  return TwoPiLattice{Lattice(n.dim(), coeff)};
}

}  // namespace ccrlab
