#pragma once

// Grid windows over chart coordinates: a box [yLo, yHi]^{d-r} with step h in
// the free directions, and M equispaced points per torus direction. Cells are
// indexed lexicographically, free axes first (y-major). Every cell point is
// an exact rational vector in R^d, so membership masks are exact and shift
// identities hold bitwise under index arithmetic.

#include <cstdint>
#include <string>
#include <vector>

#include "ccrlab/pspace.hpp"

namespace ccrlab {

struct GridWindow {
  RatVec yLo, yHi;  // per free axis (coordinate units)
  Rat h;            // free-axis step
  int M = 0;        // torus subdivisions per torus axis
};

/// A grid-snapped group element: integer steps per free axis and per torus
/// axis (torus steps are taken mod M).
struct GridSteps {
  std::vector<long> y;
  std::vector<long> u;
};

bool operator==(const GridSteps& a, const GridSteps& b);
GridSteps operator+(const GridSteps& a, const GridSteps& b);

class Grid {
 public:
  /// Holds a copy of the chart; charts are immutable values.
  Grid(QuotientChart chart, GridWindow window);

  const GridWindow& window() const { return window_; }
  const QuotientChart& chart() const { return chart_; }
  long cells() const { return cellCount_; }
  int freeRank() const { return static_cast<int>(ySize_.size()); }
  int torusRank() const { return chart_.torusRank(); }
  const std::vector<long>& ySize() const { return ySize_; }

  /// Exact chart point of a cell.
  RatVec cell_point(long index) const;

  /// Exact group element of a step vector.
  RatVec step_vector(const GridSteps& s) const;

  /// Shifted cell index, or -1 when the shift leaves the window in a free
  /// direction. Torus directions wrap.
  long shifted(long index, const GridSteps& s) const;

  /// Cells whose preimage under the shift stays inside the window.
  bool safe(long index, const GridSteps& s) const { return shifted(index, s) >= 0; }

  /// Snap an exact rational group element to grid steps.
  GridSteps snap(const RatVec& x) const;

  std::vector<long> decode(long index) const;
  long encode(const std::vector<long>& coords) const;

  /// Haar volume of one cell: h^{d-r} M^{-r} |det [F B]| (exact, as double).
  double cell_volume() const { return cellVolume_; }

  /// Largest free-axis extent (coordinate units), used by growth ladders.
  double extent() const;

 private:
  QuotientChart chart_;
  GridWindow window_;
  std::vector<long> ySize_;
  long cellCount_;
  double cellVolume_;
};

using MemberMask = std::vector<std::uint8_t>;

/// Exact membership indicator over all cells; cell-parallel when threads > 1
/// (the result does not depend on the thread count).
MemberMask build_mask(const PSpace& a, const Grid& grid, int threads = 1);

/// Indicator of member(point(index) - step_vector(s)): index arithmetic when
/// the preimage cell is inside the window, exact membership otherwise.
bool member_shifted(const PSpace& a, const Grid& grid, const MemberMask& mask, long index,
                    const GridSteps& s);

/// Portable binary cache of a membership mask ("CCRLAB1" header, little-endian
/// scalar fields, bit-packed row-major indicator array).
void write_mask_cache(const std::string& path, const Grid& grid, const MemberMask& mask);

/// Reads a cache; returns false when the header does not match this grid.
bool read_mask_cache(const std::string& path, const Grid& grid, MemberMask& mask);

}  // namespace ccrlab
