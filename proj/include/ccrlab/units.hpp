#pragma once

// Units of the CCR flow, parameterized by a character exponent lambda in C^d
// (pullback through the quotient, chi(x) = e^{<lambda|x>}) and an additive
// cocycle coefficient in C^k. Unit identities are verified weakly against
// exponential vectors through the closed-form kernel, so no Fock truncation
// enters: u_x e(eta) = chi(x) e(xi_x + V_x eta).

#include "ccrlab/cocycle.hpp"
#include "ccrlab/fock.hpp"

namespace ccrlab {

struct UnitSpec {
  Eigen::VectorXcd characterExponent;   // lambda in C^d
  Eigen::VectorXcd cocycleCoefficient;  // coefficient vector in C^k
};

/// chi(x) = exp(sum_i lambda_i x_i) for a real group element x.
Cd character_value(const Eigen::VectorXcd& lambda, const Eigen::VectorXd& x);

struct UnitCheckReport {
  double semigroupResidual;     // relative, over all probe pairs
  double intertwiningResidual;  // relative, over all probe pairs
};

/// Low-level variant with explicit cocycle vectors and character values;
/// used directly for negative controls.
UnitCheckReport unit_weak_check_raw(const ShiftRep& rep, const GridSteps& x, const GridSteps& y,
                                    const Eigen::VectorXcd& xiX, const Eigen::VectorXcd& xiY,
                                    const Eigen::VectorXcd& xiXY, Cd chiX, Cd chiY, Cd chiXY,
                                    const std::vector<Eigen::VectorXcd>& probes);

/// Kernel-path verification of the unit laws for u = (chi, canonical cocycle):
/// (a) semigroup <u_{x+y} e(eta)|e(zeta)> = <u_x u_y e(eta)|e(zeta)>,
/// (b) intertwining with alpha_x(W(zeta)) = W(V_x zeta).
/// Probes must be supported so that every shift stays inside the window.
UnitCheckReport unit_weak_check(const ShiftRep& rep, const UnitSpec& unit, const GridSteps& x,
                                const GridSteps& y,
                                const std::vector<Eigen::VectorXcd>& probes);

/// Deterministic probe vectors supported on member cells that remain safe
/// under both shifts (and their sum).
std::vector<Eigen::VectorXcd> make_probes(const ShiftRep& rep, const GridSteps& x,
                                          const GridSteps& y, int count, std::uint64_t seed);

/// V_x applied to a dense vector (kill outside A, truncate at the window).
Eigen::VectorXcd apply_shift(const ShiftRep& rep, const GridSteps& x, const Eigen::VectorXcd& f);

}  // namespace ccrlab
