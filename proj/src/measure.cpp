#include "ccrlab/measure.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

namespace ccrlab {

long diff_cell_count(const PSpace& a, const Grid& grid, const MemberMask& mask,
                     const GridSteps& x) {
  require(in_cone(a.cone(), grid.step_vector(x)), ErrorCode::NotInCone,
          "shift must lie in the cone");
  long count = 0;
  for (long p = 0; p < grid.cells(); ++p) {
    if (!mask[static_cast<size_t>(p)]) continue;
    if (!member_shifted(a, grid, mask, p, x)) ++count;
  }
  return count;
}

double diff_measure(const PSpace& a, const Grid& grid, const MemberMask& mask,
                    const GridSteps& x) {
  return static_cast<double>(diff_cell_count(a, grid, mask, x)) * grid.cell_volume();
}

MonteCarloEstimate diff_measure_mc(const PSpace& a, const Grid& grid, const GridSteps& x,
                                   long samples, std::uint64_t seed, int threads) {
  require(in_cone(a.cone(), grid.step_vector(x)), ErrorCode::NotInCone,
          "shift must lie in the cone");
  const int f = grid.freeRank(), r = grid.torusRank();
  const RatVec shift = grid.step_vector(x);

  double windowVolume = to_double(grid.chart().jacobian());
  for (int axis = 0; axis < f; ++axis)
    windowVolume *= to_double(Rat(grid.window().yHi[axis] - grid.window().yLo[axis]));

  constexpr long kChunks = 64;
  std::array<long, kChunks> chunkHits{};
  // Streams are keyed by (seed, chunk), so the totals are independent of the
  // evaluation order and of the thread count.
  auto runChunk = [&](long chunk) {
    long quota = samples / kChunks + (chunk < samples % kChunks ? 1 : 0);
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x100 + static_cast<std::uint64_t>(chunk));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    long hits = 0;
    for (long s = 0; s < quota; ++s) {
      Eigen::VectorXd y(f), u(r);
      for (int axis = 0; axis < f; ++axis) {
        double lo = to_double(grid.window().yLo[axis]);
        double hi = to_double(grid.window().yHi[axis]);
        y[axis] = lo + (hi - lo) * unit(rng);
      }
      for (int axis = 0; axis < r; ++axis) u[axis] = unit(rng);
      RatVec p = grid.chart().point(rat_from_double(y), rat_from_double(u));
      if (a.member(p) && !a.member(RatVec(p - shift))) ++hits;
    }
    chunkHits[static_cast<size_t>(chunk)] = hits;
  };
  if (threads <= 1) {
    for (long chunk = 0; chunk < kChunks; ++chunk) runChunk(chunk);
  } else {
    std::vector<std::thread> pool;
    std::atomic<long> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (long chunk = next.fetch_add(1); chunk < kChunks; chunk = next.fetch_add(1))
          runChunk(chunk);
      });
    for (auto& th : pool) th.join();
  }
  long hits = 0, total = samples;
  for (long h : chunkHits) hits += h;
  double mean = static_cast<double>(hits) / static_cast<double>(total);
  double variance = mean * (1 - mean) / static_cast<double>(total);
  return {mean * windowVolume, std::sqrt(variance) * windowVolume, total};
}

GrowthProfile growth_profile(const PSpace& a, const std::vector<Grid>& ladder,
                             const GridSteps& interiorPoint, double epsilonSlope) {
  require(ladder.size() >= 4, ErrorCode::LadderTooShort, "need at least 4 windows");
  for (size_t i = 1; i < ladder.size(); ++i)
    require(ladder[i].extent() > ladder[i - 1].extent(), ErrorCode::LadderTooShort,
            "window extents must strictly increase");
  require(in_cone(a.cone(), ladder.front().step_vector(interiorPoint), /*strict=*/true),
          ErrorCode::NotInCone, "profile point must be interior");

  GrowthProfile profile;
  for (const Grid& grid : ladder) {
    MemberMask mask = build_mask(a, grid);
    profile.values.push_back(diff_measure(a, grid, mask, interiorPoint));
    profile.extents.push_back(grid.extent());
  }

  // least-squares line through (extent, measure)
  const size_t n = ladder.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += profile.extents[i];
    sy += profile.values[i];
    sxx += profile.extents[i] * profile.extents[i];
    sxy += profile.extents[i] * profile.values[i];
  }
  double denom = static_cast<double>(n) * sxx - sx * sx;
  profile.slope = (static_cast<double>(n) * sxy - sx * sy) / denom;

  double scale = profile.values.back() / profile.extents.back();
  profile.kind = std::abs(profile.slope) < epsilonSlope * scale ? GrowthProfile::Kind::Bounded
                                                                : GrowthProfile::Kind::Linear;
  return profile;
}

}  // namespace ccrlab
