#pragma once

// Symmetric Fock space machinery along two routes. The kernel route works
// with inner products of exponential vectors only, <e(f)|e(g)> = e^{<f|g>},
// and is truncation-free; it backs every unit and flow check. The truncated
// matrix route (occupation basis up to level n) validates the Weyl calculus
// itself: W(xi) = exp(a†(xi) - a(xi)) acting by
//   W(xi) e(eta) = e^{-|xi|^2/2 - <xi|eta>} e(xi + eta),
// with <.|.> conjugate-linear in the first slot.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <vector>

#include "ccrlab/error.hpp"

namespace ccrlab {

using Cd = std::complex<double>;

/// Inner product, conjugate-linear in the first argument, with an optional
/// volume weight (grid L^2).
inline Cd inner(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, double weight = 1.0) {
  return f.dot(g) * weight;
}

/// <e(f)|e(g)> = exp(<f|g>).
inline Cd exp_inner(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, double weight = 1.0) {
  return std::exp(inner(f, g, weight));
}

class TruncatedFock {
 public:
  TruncatedFock(int modes, int level);

  int modes() const { return modes_; }
  int level() const { return level_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<int>>& basis() const { return basis_; }

  /// Index of a multi-index in the basis, -1 when truncated away.
  int position(const std::vector<int>& alpha) const;

  const Eigen::SparseMatrix<Cd>& create(int mode) const { return create_[static_cast<size_t>(mode)]; }
  const Eigen::SparseMatrix<Cd>& annihilate(int mode) const {
    return annihilate_[static_cast<size_t>(mode)];
  }

  /// Components xi^alpha / sqrt(alpha!). Guarded by |xi|^2 <= level/3.
  Eigen::VectorXcd exp_vector(const Eigen::VectorXcd& xi) const;

  /// exp(a†(xi) - a(xi)); exactly unitary on the truncated space.
  Eigen::MatrixXcd weyl_matrix(const Eigen::VectorXcd& xi) const;

  /// |e(xi) - e_n(xi)|: sqrt of the series tail sum_{j>n} |xi|^{2j} / j!.
  double tail_bound(const Eigen::VectorXcd& xi) const;
  double tail_bound(const Eigen::VectorXcd& xi, int level) const;

  void truncation_guard(const Eigen::VectorXcd& xi) const;

  /// Projector onto the sub-block |alpha| <= maxLevel (diagonal 0/1).
  Eigen::VectorXd level_selector(int maxLevel) const;

 private:
  int modes_;
  int level_;
  std::vector<std::vector<int>> basis_;  // graded, lexicographic within a level
  std::vector<Eigen::SparseMatrix<Cd>> create_, annihilate_;
};

struct WeylActionReport {
  double residual;    // |W(xi) e_n(eta) - c e_n(xi+eta)|
  double tailBudget;  // combined truncation tails
  Cd coefficient;     // c = exp(-|xi|^2/2 - <xi|eta>)
};

WeylActionReport weyl_action_check(const TruncatedFock& fock, const Eigen::VectorXcd& xi,
                                   const Eigen::VectorXcd& eta);

struct WeylRelationReport {
  double ccrResidual;        // max-norm of W(xi)W(eta) - phase W(xi+eta) on the half block
  double unitarityResidual;  // max-norm of W(xi)*W(xi) - I on the half block
  double tailBudget;
  Cd phase;  // exp(-i Im<xi|eta>)
};

WeylRelationReport verify_weyl(const TruncatedFock& fock, const Eigen::VectorXcd& xi,
                               const Eigen::VectorXcd& eta);

}  // namespace ccrlab
