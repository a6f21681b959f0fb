#include "ccrlab/index.hpp"

#include <Eigen/Eigenvalues>
#include <random>

namespace ccrlab {

Eigen::MatrixXcd CovMatrix::gram() const {
  const Eigen::Index k = entries.rows() - 1;
  Eigen::MatrixXcd g(k, k);
  for (Eigen::Index p = 0; p < k; ++p)
    for (Eigen::Index q = 0; q < k; ++q)
      g(p, q) = entries(p, q) - entries(p, k) - entries(k, q) + entries(k, k);
  return g;
}

CovMatrix covariance(const PSpace& a, const Grid& grid, const MemberMask& mask,
                     const std::vector<UnitSpec>& units, const GridSteps& interiorPoint) {
  require(units.size() >= 2, ErrorCode::BadInput, "need at least two units");
  RatVec point = grid.step_vector(interiorPoint);
  require(in_cone(a.cone(), point, /*strict=*/true), ErrorCode::UnsafeInteriorPoint,
          "covariance point must be strictly interior to the cone");

  CovMatrix cov;
  cov.units = units;
  cov.interiorPoint = interiorPoint;
  cov.diffMeasure = diff_measure(a, grid, mask, interiorPoint);

  Eigen::VectorXd aVec = to_double(point);
  const int count = static_cast<int>(units.size());
  cov.entries.resize(count, count);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      Cd charTerm(0, 0);
      for (Eigen::Index s = 0; s < aVec.size(); ++s)
        charTerm += units[static_cast<size_t>(i)].characterExponent[s] * aVec[s] +
                    std::conj(units[static_cast<size_t>(j)].characterExponent[s] * aVec[s]);
      // <xi_i|xi_j>_a with the first slot conjugate-linear matches the Gram
      // convention G = W W^H below
      Cd pairing = units[static_cast<size_t>(j)].cocycleCoefficient.dot(
                       units[static_cast<size_t>(i)].cocycleCoefficient) *
                   cov.diffMeasure;
      cov.entries(i, j) = charTerm + pairing;
    }
  return cov;
}

int gns_rank(const CovMatrix& c) {
  Eigen::MatrixXcd g = c.gram();
  if (g.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig((g + g.adjoint()) / 2.0);
  const auto& values = eig.eigenvalues();
  // tolerance relative to the kernel scale, not to the Gram itself: a Gram
  // of pure cancellation noise must read as rank 0, not as indefinite
  double scale = std::max({values.cwiseAbs().maxCoeff(), c.entries.cwiseAbs().maxCoeff(), 1e-30});
  require(values.minCoeff() > -1e-9 * scale, ErrorCode::NotConditionallyPSD,
          "Gram matrix has a significantly negative eigenvalue");
  int rank = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (values[i] > 1e-9 * scale) ++rank;
  return rank;
}

std::vector<UnitSpec> sample_units(int dim, int multiplicity, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xccab1ab1u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<UnitSpec> units;
  UnitSpec vacuum;
  vacuum.characterExponent = Eigen::VectorXcd::Zero(dim);
  vacuum.cocycleCoefficient = Eigen::VectorXcd::Zero(multiplicity);
  units.push_back(vacuum);
  for (int i = 1; i < count; ++i) {
    UnitSpec u;
    u.characterExponent.resize(dim);
    u.cocycleCoefficient.resize(multiplicity);
    for (int s = 0; s < dim; ++s) u.characterExponent[s] = Cd(gauss(rng), gauss(rng));
    for (int s = 0; s < multiplicity; ++s) u.cocycleCoefficient[s] = Cd(gauss(rng), gauss(rng));
    units.push_back(std::move(u));
  }
  return units;
}

IndexReport index_of(const PSpace& a, const Grid& grid, int multiplicity,
                     const std::vector<Grid>& growthLadder, const GridSteps& pointA,
                     const GridSteps& pointB, std::uint64_t seed) {
  IndexReport report;
  report.degenerate = (pointA == pointB);

  GrowthProfile profile = growth_profile(a, growthLadder, pointA);
  report.compactBoundary = profile.kind == GrowthProfile::Kind::Bounded;
  if (!report.compactBoundary) {
    // no square-integrable difference indicators, hence no nonvacuum cocycle
    // directions: only character units contribute and the Gram rank is zero
    report.index = 0;
    report.independencePass = true;
    report.note = "growth profile is not Bounded; only character units, index 0";
    return report;
  }

  MemberMask mask = build_mask(a, grid);
  const int dim = a.dim();
  for (int size : {3, 6, 10}) {
    auto units = sample_units(dim, multiplicity, size, seed);
    CovMatrix cov = covariance(a, grid, mask, units, pointA);
    report.rankLadder.push_back(gns_rank(cov));
  }
  report.index = report.rankLadder.back();

  auto units = sample_units(dim, multiplicity, 10, seed);
  CovMatrix covA = covariance(a, grid, mask, units, pointA);
  CovMatrix covB = covariance(a, grid, mask, units, pointB);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(
      (covA.gram() + covA.gram().adjoint()) / 2.0);
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
    report.gramEigenvalues.push_back(eig.eigenvalues()[i]);
  report.independencePass = (gns_rank(covA) == gns_rank(covB));
  if (report.degenerate) report.note = "interior points coincide; independence check degenerate";
  return report;
}

}  // namespace ccrlab
