#pragma once

// Arveson index at desk scale. The covariance kernel on units is
//   c_a(u_i, u_j) = <lambda_i|a> + conj(<lambda_j|a>) + <xi_i|xi_j>_a,
// with <xi|eta>_a the L^2 pairing of the canonical cocycles at a, i.e. the
// coefficient pairing times mu(A \ aA). The index is reported as the rank of
// the GNS Gram matrix on differences against the last unit, stabilized over
// growing unit sets and cross-checked at a second interior point.

#include "ccrlab/measure.hpp"
#include "ccrlab/units.hpp"

namespace ccrlab {

struct CovMatrix {
  std::vector<UnitSpec> units;
  GridSteps interiorPoint;
  double diffMeasure = 0;     // mu(A \ aA) on the window
  Eigen::MatrixXcd entries;   // K x K kernel values c_a(u_i, u_j)

  /// (K-1)x(K-1) Gram matrix of [u_p] - [u_K]; Hermitian PSD.
  Eigen::MatrixXcd gram() const;
};

/// Requires the interior point to be grid-snapped, strictly interior and safe.
CovMatrix covariance(const PSpace& a, const Grid& grid, const MemberMask& mask,
                     const std::vector<UnitSpec>& units, const GridSteps& interiorPoint);

/// Rank of the Gram matrix, relative eigenvalue tolerance 1e-9. Throws
/// NotConditionallyPSD when a significantly negative eigenvalue appears.
int gns_rank(const CovMatrix& c);

struct IndexReport {
  int index = 0;
  bool independencePass = false;
  bool degenerate = false;         // the two interior points coincide
  bool compactBoundary = false;    // growth gate
  std::vector<int> rankLadder;     // ranks at growing unit-set sizes
  std::vector<double> gramEigenvalues;
  std::string note;
};

/// Index of the CCR flow for the given P-space/window/multiplicity: GNS rank
/// at two interior points with rank stabilization over unit sets {3, 6, 10}.
/// Refuses the cocycle pairing when the growth profile is not Bounded and
/// reports index 0 (character-only units).
IndexReport index_of(const PSpace& a, const Grid& grid, int multiplicity,
                     const std::vector<Grid>& growthLadder, const GridSteps& pointA,
                     const GridSteps& pointB, std::uint64_t seed);

/// Seeded unit sample: the vacuum unit plus count-1 random units.
std::vector<UnitSpec> sample_units(int dim, int multiplicity, int count, std::uint64_t seed);

}  // namespace ccrlab
