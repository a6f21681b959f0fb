#pragma once

// Haar measure of difference sets A \ (x+A) inside a grid window: exact cell
// counting as the primary route, Monte Carlo with per-chunk deterministic
// RNG streams as the independent cross-check, and the bounded-vs-linear
// growth classification over a window ladder.

#include <cstdint>
#include <vector>

#include "ccrlab/grid.hpp"

namespace ccrlab {

/// Grid quadrature of mu((A \ (x+A)) ∩ window). Requires the step vector of
/// x to lie in the cone.
double diff_measure(const PSpace& a, const Grid& grid, const MemberMask& mask,
                    const GridSteps& x);

/// Number of cells in (A \ (x+A)) ∩ window (the quantity behind diff_measure).
long diff_cell_count(const PSpace& a, const Grid& grid, const MemberMask& mask,
                     const GridSteps& x);

struct MonteCarloEstimate {
  double value;
  double standardError;
  long samples;
};

/// Monte Carlo estimate with the same indicator; chunked RNG streams keyed by
/// (seed, chunk) so the result is independent of evaluation order.
MonteCarloEstimate diff_measure_mc(const PSpace& a, const Grid& grid, const GridSteps& x,
                                   long samples, std::uint64_t seed, int threads = 1);

struct GrowthProfile {
  enum class Kind { Bounded, Linear };
  Kind kind;
  double slope;                // least-squares slope of measure vs extent
  std::vector<double> values;  // measure per ladder window
  std::vector<double> extents;
};

/// Classifies mu(A \ (a+A)) over nested windows of increasing extent.
/// Bounded when the fitted slope is below epsilonSlope * (mu_max / L_max).
GrowthProfile growth_profile(const PSpace& a, const std::vector<Grid>& ladder,
                             const GridSteps& interiorPoint, double epsilonSlope = 1e-2);

}  // namespace ccrlab
