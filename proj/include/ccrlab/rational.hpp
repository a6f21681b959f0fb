#pragma once

// Exact scalar types used throughout: GMP rationals/integers plugged into
// Eigen dense types. All geometry and classification logic runs over Rat;
// floating point appears only in grid quadrature and spectral solvers.

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "ccrlab/error.hpp"

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 120,
    MulCost = 100,
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 80,
    MulCost = 80,
  };
};

}  // namespace Eigen

namespace ccrlab {

using Rat = mpq_class;
using Int = mpz_class;

using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

inline double to_double(const Rat& q) { return q.get_d(); }

inline Eigen::VectorXd to_double(const RatVec& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
  return out;
}

inline Eigen::MatrixXd to_double(const RatMat& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

/// Exact conversion: every finite double is a dyadic rational.
inline Rat rat_from_double(double x) {
  Rat q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

inline RatVec rat_from_double(const Eigen::VectorXd& v) {
  RatVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = rat_from_double(v[i]);
  return out;
}

/// floor(num/den) as an exact integer.
inline Int rat_floor(const Rat& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline Int rat_ceil(const Rat& q) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// Canonical fraction constructor. mpq_class(num, den) keeps the pair as
/// given; GMP comparisons require canonical form, so runtime pairs must go
/// through here.
inline Rat frac(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat frac(long num, long den) { return frac(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) {
  return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0;
}

/// q mod 1, result in [0,1).
inline Rat rat_mod1(const Rat& q) {
  Rat f = q - Rat(rat_floor(q));
  return f;
}

/// Parse "p/q", "-3", "2.75" or "1e-2"-free decimal strings exactly.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) fail(ErrorCode::ParseError, "empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Rat q(s);  // gmp accepts "p/q" directly
      q.canonicalize();
      return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
      Rat q(s);
      q.canonicalize();
      return q;
    }
    // decimal literal: sign, integer part, fractional part
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorCode::ParseError, "bad decimal literal '" + s + "'");
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
    if (head.empty()) head = "0";
    Int ipart(head);
    Int num = ipart;
    Int den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    Rat q(num, den);
    q.canonicalize();
    return neg ? Rat(-q) : q;
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::ParseError, "bad rational literal '" + s + "'");
  }
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

/// lcm of denominators over a matrix; 1 for an empty matrix.
inline Int common_denominator(const RatMat& m) {
  Int d = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Int den = m(i, j).get_den();
      Int g;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
      d = d / g * den;
    }
  return d;
}

/// Exact rank via fraction-free elimination.
inline int exact_rank(RatMat m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (m(r, col) == 0) continue;
      Rat factor = m(r, col) / m(row, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= factor * m(row, c);
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// Solve A x = b exactly; requires A square nonsingular.
inline RatVec exact_solve(const RatMat& a, const RatVec& b) {
  Eigen::FullPivLU<RatMat> lu(a);
  return lu.solve(b);
}

/// Solve A X = B exactly for a matrix right-hand side.
inline RatMat exact_solve_matrix(const RatMat& a, const RatMat& b) {
  Eigen::FullPivLU<RatMat> lu(a);
  return lu.solve(b);
}

/// Exact nullspace basis (columns) of a rational matrix.
inline RatMat exact_kernel(const RatMat& a) {
  Eigen::FullPivLU<RatMat> lu(a);
  return lu.kernel();
}

}  // namespace ccrlab
