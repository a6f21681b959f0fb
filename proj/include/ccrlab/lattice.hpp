#pragma once

// Discrete subgroups of R^d of rank r given by a rational basis matrix.
// The canonical form is the column Hermite normal form of the basis scaled
// to a common denominator, stored back as a rational matrix; it is invariant
// under basis change and decides lattice equality exactly.

#include <Eigen/Dense>
#include <optional>

#include "ccrlab/rational.hpp"

namespace ccrlab {

class Lattice {
 public:
  /// basis: d x r rational matrix with full column rank (r = 0 allowed).
  Lattice(int dim, const RatMat& basis);

  static Lattice zero(int dim) { return Lattice(dim, RatMat(dim, 0)); }

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(basis_.cols()); }
  const RatMat& basis() const { return basis_; }
  const RatMat& hnf() const { return hnf_; }

  /// Exact membership of a rational point.
  bool contains(const RatVec& x) const;

  /// Exact coordinates w with basis*w = x, if x lies in the basis span.
  std::optional<RatVec> span_coordinates(const RatVec& x) const;

 private:
  int dim_;
  RatMat basis_;
  RatMat hnf_;
  RatMat pseudoInverse_;  // (B^T B)^{-1} B^T, cached for membership solves
};

/// Column Hermite normal form of an integer matrix with full column rank.
IntMat hermite_normal_form(IntMat m);

/// Canonical rational HNF of a lattice basis (independent of scaling choice).
RatMat rational_hnf(const RatMat& basis);

/// Same lattice as a set; rank mismatch short-circuits to false.
bool lattice_equal(const Lattice& a, const Lattice& b);

/// Coefficient lattice of the dual: the physical dual inside span(basis) is
/// 2*pi times the stored lattice. The 2*pi factor is carried symbolically so
/// spectrum arithmetic stays rational.
struct TwoPiLattice {
  Lattice lattice;
};

/// Dual of N inside span(N): basis B(B^T B)^{-1}, tagged with the symbolic
/// 2*pi factor. Requires the functional direction orthogonal to N.
TwoPiLattice dual_lattice(const Lattice& n, const RatVec& functionalDirection);

}  // namespace ccrlab
