#include "ccrlab/units.hpp"

#include <random>

namespace ccrlab {

Cd character_value(const Eigen::VectorXcd& lambda, const Eigen::VectorXd& x) {
  require(lambda.size() == x.size(), ErrorCode::BadInput, "character dimension mismatch");
  Cd exponent(0, 0);
  for (Eigen::Index i = 0; i < x.size(); ++i) exponent += lambda[i] * x[i];
  return std::exp(exponent);
}

Eigen::VectorXcd apply_shift(const ShiftRep& rep, const GridSteps& x, const Eigen::VectorXcd& f) {
  const int k = rep.multiplicity();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(rep.dimension());
  for (long p = 0; p < rep.cells(); ++p) {
    if (!rep.alive(p, x)) continue;
    long src = rep.grid().shifted(p, x);
    for (int c = 0; c < k; ++c) out[p * k + c] = f[src * k + c];
  }
  return out;
}

std::vector<Eigen::VectorXcd> make_probes(const ShiftRep& rep, const GridSteps& x,
                                          const GridSteps& y, int count, std::uint64_t seed) {
  const Grid& grid = rep.grid();
  GridSteps xy = x + y;
  // support: member cells q with q + s inside the window for s in {x, y, x+y}
  auto forwardSafe = [&](long q, const GridSteps& s) {
    GridSteps minus = s;
    for (auto& v : minus.y) v = -v;
    for (auto& v : minus.u) v = -v;
    return grid.shifted(q, minus) >= 0;
  };
  std::vector<long> support;
  for (long q = 0; q < grid.cells(); ++q) {
    if (!rep.mask()[static_cast<size_t>(q)]) continue;
    if (forwardSafe(q, x) && forwardSafe(q, y) && forwardSafe(q, xy)) support.push_back(q);
  }
  require(!support.empty(), ErrorCode::UnsafeShift, "no member cell is safe for both shifts");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Eigen::VectorXcd> probes;
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(rep.dimension());
    for (long q : support)
      for (int c = 0; c < rep.multiplicity(); ++c)
        v[q * rep.multiplicity() + c] = Cd(gauss(rng), gauss(rng)) * 0.3;
    probes.push_back(std::move(v));
  }
  return probes;
}

UnitCheckReport unit_weak_check_raw(const ShiftRep& rep, const GridSteps& x, const GridSteps& y,
                                    const Eigen::VectorXcd& xiX, const Eigen::VectorXcd& xiY,
                                    const Eigen::VectorXcd& xiXY, Cd chiX, Cd chiY, Cd chiXY,
                                    const std::vector<Eigen::VectorXcd>& probes) {
  const double w = rep.grid().cell_volume();
  GridSteps xy = x + y;
  UnitCheckReport report{0, 0};

  for (const auto& eta : probes)
    for (const auto& zeta : probes) {
      // semigroup law on the kernel: u_{x+y} e(eta) vs u_x u_y e(eta)
      Eigen::VectorXcd direct = xiXY + apply_shift(rep, xy, eta);
      Eigen::VectorXcd throughY = xiY + apply_shift(rep, y, eta);
      Eigen::VectorXcd chained = xiX + apply_shift(rep, x, throughY);
      Cd lhs = chiXY * exp_inner(direct, zeta, w);
      Cd rhs = chiX * chiY * exp_inner(chained, zeta, w);
      double scale = std::max(std::abs(lhs), 1e-12);
      report.semigroupResidual = std::max(report.semigroupResidual, std::abs(lhs - rhs) / scale);

      // intertwining: alpha_x(W(zeta)) u_x e(eta) vs u_x W(zeta) e(eta),
      // both paired against e(rho = eta)
      const Eigen::VectorXcd& rho = eta;
      Eigen::VectorXcd vxZeta = apply_shift(rep, x, zeta);
      Eigen::VectorXcd ux = xiX + apply_shift(rep, x, eta);  // u_x e(eta) = chi e(ux)
      Cd coeffL = std::exp(Cd(-vxZeta.squaredNorm() * w / 2.0, 0) - inner(vxZeta, ux, w));
      Cd left = chiX * coeffL * exp_inner(vxZeta + ux, rho, w);
      Cd coeffR = std::exp(Cd(-zeta.squaredNorm() * w / 2.0, 0) - inner(zeta, eta, w));
      Eigen::VectorXcd shiftedSum = xiX + apply_shift(rep, x, Eigen::VectorXcd(zeta + eta));
      Cd right = chiX * coeffR * exp_inner(shiftedSum, rho, w);
      double scale2 = std::max(std::abs(left), 1e-12);
      report.intertwiningResidual =
          std::max(report.intertwiningResidual, std::abs(left - right) / scale2);
    }
  return report;
}

UnitCheckReport unit_weak_check(const ShiftRep& rep, const UnitSpec& unit, const GridSteps& x,
                                const GridSteps& y,
                                const std::vector<Eigen::VectorXcd>& probes) {
  require(unit.cocycleCoefficient.size() == rep.multiplicity(), ErrorCode::BadInput,
          "cocycle coefficient size mismatch");
  AdditiveCocycle cocycle{unit.cocycleCoefficient};
  GridSteps xy = x + y;
  Eigen::VectorXd vx = to_double(rep.grid().step_vector(x));
  Eigen::VectorXd vy = to_double(rep.grid().step_vector(y));
  Eigen::VectorXd vxy = to_double(rep.grid().step_vector(xy));
  return unit_weak_check_raw(rep, x, y, cocycle_vector(rep, cocycle, x),
                             cocycle_vector(rep, cocycle, y), cocycle_vector(rep, cocycle, xy),
                             character_value(unit.characterExponent, vx),
                             character_value(unit.characterExponent, vy),
                             character_value(unit.characterExponent, vxy), probes);
}

}  // namespace ccrlab
