#include "ccrlab/fock.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <map>

namespace ccrlab {

namespace {

void enumerate_level(int modes, int total, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == modes - 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int take = total; take >= 0; --take) {
    current.push_back(take);
    enumerate_level(modes, total - take, current, out);
    current.pop_back();
  }
}

}  // namespace

TruncatedFock::TruncatedFock(int modes, int level) : modes_(modes), level_(level) {
  require(modes >= 1 && level >= 1, ErrorCode::BadInput, "need modes >= 1 and level >= 1");
  for (int j = 0; j <= level; ++j) {
    std::vector<int> current;
    enumerate_level(modes, j, current, basis_);
  }

  create_.resize(static_cast<size_t>(modes));
  annihilate_.resize(static_cast<size_t>(modes));
  for (int mode = 0; mode < modes; ++mode) {
    std::vector<Eigen::Triplet<Cd>> up, down;
    for (int col = 0; col < dim(); ++col) {
      std::vector<int> alpha = basis_[static_cast<size_t>(col)];
      if (alpha[static_cast<size_t>(mode)] > 0) {
        double root = std::sqrt(static_cast<double>(alpha[static_cast<size_t>(mode)]));
        std::vector<int> lower = alpha;
        --lower[static_cast<size_t>(mode)];
        down.emplace_back(position(lower), col, Cd(root, 0));
      }
      std::vector<int> upper = alpha;
      ++upper[static_cast<size_t>(mode)];
      int pos = position(upper);
      if (pos >= 0) {
        double root = std::sqrt(static_cast<double>(upper[static_cast<size_t>(mode)]));
        up.emplace_back(pos, col, Cd(root, 0));
      }
    }
    create_[static_cast<size_t>(mode)].resize(dim(), dim());
    create_[static_cast<size_t>(mode)].setFromTriplets(up.begin(), up.end());
    annihilate_[static_cast<size_t>(mode)].resize(dim(), dim());
    annihilate_[static_cast<size_t>(mode)].setFromTriplets(down.begin(), down.end());
  }
}

int TruncatedFock::position(const std::vector<int>& alpha) const {
  int total = 0;
  for (int a : alpha) total += a;
  if (total > level_) return -1;
  // basis is graded then generated in a fixed recursive order; binary search
  // within the level block
  auto begin = std::lower_bound(basis_.begin(), basis_.end(), alpha,
                                [](const std::vector<int>& a, const std::vector<int>& b) {
                                  int sa = 0, sb = 0;
                                  for (int v : a) sa += v;
                                  for (int v : b) sb += v;
                                  if (sa != sb) return sa < sb;
                                  return std::lexicographical_compare(b.begin(), b.end(),
                                                                      a.begin(), a.end());
                                });
  if (begin == basis_.end() || *begin != alpha) return -1;
  return static_cast<int>(begin - basis_.begin());
}

void TruncatedFock::truncation_guard(const Eigen::VectorXcd& xi) const {
  require(xi.size() == modes_, ErrorCode::BadInput, "one-particle dimension mismatch");
  require(xi.squaredNorm() <= static_cast<double>(level_) / 3.0, ErrorCode::TruncationGuard,
          "|xi|^2 exceeds level/3; raise the truncation level");
}

Eigen::VectorXcd TruncatedFock::exp_vector(const Eigen::VectorXcd& xi) const {
  truncation_guard(xi);
  Eigen::VectorXcd v(dim());
  for (int i = 0; i < dim(); ++i) {
    const auto& alpha = basis_[static_cast<size_t>(i)];
    Cd term(1, 0);
    double factorial = 1;
    for (int mode = 0; mode < modes_; ++mode) {
      for (int rep = 1; rep <= alpha[static_cast<size_t>(mode)]; ++rep) {
        term *= xi[mode];
        factorial *= rep;
      }
    }
    v[i] = term / std::sqrt(factorial);
  }
  return v;
}

Eigen::MatrixXcd TruncatedFock::weyl_matrix(const Eigen::VectorXcd& xi) const {
  truncation_guard(xi);
  Eigen::MatrixXcd generator = Eigen::MatrixXcd::Zero(dim(), dim());
  for (int mode = 0; mode < modes_; ++mode) {
    generator += xi[mode] * Eigen::MatrixXcd(create_[static_cast<size_t>(mode)]);
    generator -= std::conj(xi[mode]) * Eigen::MatrixXcd(annihilate_[static_cast<size_t>(mode)]);
  }
  return generator.exp();
}

double TruncatedFock::tail_bound(const Eigen::VectorXcd& xi) const { return tail_bound(xi, level_); }

double TruncatedFock::tail_bound(const Eigen::VectorXcd& xi, int level) const {
  double t = xi.squaredNorm();
  double term = 1;
  for (int j = 1; j <= level; ++j) term *= t / j;
  // sum_{j>n} t^j/j! <= t^{n+1}/(n+1)! * 1/(1 - t/(n+2)) for t < n+2
  double first = term * t / (level + 1);
  double ratio = t / (level + 2);
  require(ratio < 1, ErrorCode::TruncationGuard, "tail bound diverges");
  return std::sqrt(first / (1 - ratio));
}

Eigen::VectorXd TruncatedFock::level_selector(int maxLevel) const {
  Eigen::VectorXd sel(dim());
  for (int i = 0; i < dim(); ++i) {
    int total = 0;
    for (int a : basis_[static_cast<size_t>(i)]) total += a;
    sel[i] = total <= maxLevel ? 1.0 : 0.0;
  }
  return sel;
}

WeylActionReport weyl_action_check(const TruncatedFock& fock, const Eigen::VectorXcd& xi,
                                   const Eigen::VectorXcd& eta) {
  fock.truncation_guard(xi);
  fock.truncation_guard(eta);
  Eigen::VectorXcd sum = xi + eta;
  fock.truncation_guard(sum);

  Cd coefficient = std::exp(Cd(-xi.squaredNorm() / 2.0, 0) - inner(xi, eta));
  Eigen::VectorXcd lhs = fock.weyl_matrix(xi) * fock.exp_vector(eta);
  Eigen::VectorXcd rhs = coefficient * fock.exp_vector(sum);

  WeylActionReport report;
  report.coefficient = coefficient;
  report.residual = (lhs - rhs).norm();
  report.tailBudget =
      fock.tail_bound(eta) + fock.tail_bound(xi) + (1 + std::abs(coefficient)) * fock.tail_bound(sum);
  return report;
}

WeylRelationReport verify_weyl(const TruncatedFock& fock, const Eigen::VectorXcd& xi,
                               const Eigen::VectorXcd& eta) {
  fock.truncation_guard(xi);
  fock.truncation_guard(eta);
  Eigen::VectorXcd sum = xi + eta;
  fock.truncation_guard(sum);

  Eigen::MatrixXcd wx = fock.weyl_matrix(xi);
  Eigen::MatrixXcd wy = fock.weyl_matrix(eta);
  Eigen::MatrixXcd wsum = fock.weyl_matrix(sum);
  Cd phase = std::exp(Cd(0, -std::imag(inner(xi, eta))));

  Eigen::VectorXd sel = fock.level_selector(fock.level() / 2);
  Eigen::MatrixXcd ccr = wx * wy - phase * wsum;
  Eigen::MatrixXcd unit = wx.adjoint() * wx - Eigen::MatrixXcd::Identity(fock.dim(), fock.dim());

  WeylRelationReport report;
  report.phase = phase;
  report.ccrResidual = 0;
  report.unitarityResidual = 0;
  for (int i = 0; i < fock.dim(); ++i)
    for (int j = 0; j < fock.dim(); ++j) {
      if (sel[i] == 0 || sel[j] == 0) continue;
      report.ccrResidual = std::max(report.ccrResidual, std::abs(ccr(i, j)));
      report.unitarityResidual = std::max(report.unitarityResidual, std::abs(unit(i, j)));
    }
  // The half block sits level/2 below the truncation edge, so the effective
  // one-particle tail for its entries is the level/2 tail.
  int effective = fock.level() / 2;
  report.tailBudget = fock.tail_bound(xi, effective) + fock.tail_bound(eta, effective) +
                      fock.tail_bound(sum, effective);
  return report;
}

}  // namespace ccrlab
