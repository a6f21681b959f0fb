#include "ccrlab/shiftrep.hpp"

#include <cstdio>
#include <vector>

namespace ccrlab {

ShiftRep::ShiftRep(PSpace pspace, Grid grid, int multiplicity)
    : pspace_(std::move(pspace)), grid_(std::move(grid)), multiplicity_(multiplicity) {
  require(multiplicity >= 1, ErrorCode::InfiniteMultiplicity,
          "multiplicity must be a finite positive integer");
  require(grid_.chart().dim() == pspace_.chart().dim() &&
              grid_.chart().torusRank() == pspace_.chart().torusRank() &&
              grid_.chart().functional().direction == pspace_.chart().functional().direction &&
              lattice_equal(grid_.chart().lattice(), pspace_.chart().lattice()),
          ErrorCode::WindowChartMismatch, "grid and P-space charts differ");
  mask_ = build_mask(pspace_, grid_);
  memberCells_ = 0;
  for (auto b : mask_) memberCells_ += b;
}

bool ShiftRep::alive(long cell, const GridSteps& x) const {
  if (!mask_[static_cast<size_t>(cell)]) return false;
  long src = grid_.shifted(cell, x);
  return src >= 0 && mask_[static_cast<size_t>(src)];
}

bool ShiftRep::range_indicator(long cell, const GridSteps& x) const {
  if (!mask_[static_cast<size_t>(cell)]) return false;
  return member_shifted(pspace_, grid_, mask_, cell, x);
}

bool ShiftRep::difference_indicator(long cell, const GridSteps& x) const {
  if (!mask_[static_cast<size_t>(cell)]) return false;
  return !member_shifted(pspace_, grid_, mask_, cell, x);
}

const SparseC& ShiftRep::shift(const GridSteps& x) const {
  auto key = std::make_pair(x.y, x.u);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  std::vector<Eigen::Triplet<Complex>> triplets;
  for (long p = 0; p < cells(); ++p) {
    if (!alive(p, x)) continue;
    long src = grid_.shifted(p, x);
    for (int c = 0; c < multiplicity_; ++c)
      triplets.emplace_back(static_cast<int>(p * multiplicity_ + c),
                            static_cast<int>(src * multiplicity_ + c), Complex(1, 0));
  }
  SparseC m(static_cast<int>(dimension()), static_cast<int>(dimension()));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return cache_.emplace(std::move(key), std::move(m)).first->second;
}

RepDiagnostics verify_rep(const ShiftRep& rep, const std::vector<GridSteps>& samples) {
  const Grid& grid = rep.grid();
  const MemberMask& mask = rep.mask();
  RepDiagnostics diag{};

  for (const GridSteps& x : samples)
    require(in_cone(rep.pspace().cone(), grid.step_vector(x)), ErrorCode::NotInCone,
            "sample shift must lie in the cone");

  // (a) isometry: (V_x* V_x)(q,q) = 1 for member q whose image stays in the
  // window; the indicator difference is mask[q] && !mask[q + x].
  long isoMismatch = 0;
  for (const GridSteps& x : samples) {
    GridSteps minus = x;
    for (auto& v : minus.y) v = -v;
    for (auto& v : minus.u) v = -v;
    for (long q = 0; q < grid.cells(); ++q) {
      if (!mask[static_cast<size_t>(q)]) continue;
      long img = grid.shifted(q, minus);  // q + x
      if (img < 0) continue;              // image truncated: outside the safe region
      if (!mask[static_cast<size_t>(img)]) ++isoMismatch;
    }
  }
  diag.isometryResidual = static_cast<double>(isoMismatch);

  // (b) semigroup: V_x V_y = V_{x+y} on chains staying inside the window.
  long semiMismatch = 0;
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = 0; j < samples.size(); ++j) {
      const GridSteps& x = samples[i];
      const GridSteps& y = samples[j];
      GridSteps xy = x + y;
      for (long p = 0; p < grid.cells(); ++p) {
        long viaY = grid.shifted(p, x);  // p - x
        long viaXY = grid.shifted(p, xy);
        if (viaY < 0 || viaXY < 0) continue;  // outside the safe region
        bool direct = rep.alive(p, xy);
        // chained: f(p-x-y) survives V_y then V_x iff p-x-y, p-x, p all in A
        bool chained = mask[static_cast<size_t>(p)] && mask[static_cast<size_t>(viaY)] &&
                       mask[static_cast<size_t>(viaXY)];
        if (direct != chained) ++semiMismatch;
      }
    }
  diag.semigroupResidual = static_cast<double>(semiMismatch);

  // (c) E_x = V_x V_x* equals multiplication by 1_{(x+A) ∩ A}.
  long rangeMismatch = 0;
  for (const GridSteps& x : samples) {
    for (long p = 0; p < grid.cells(); ++p) {
      if (grid.shifted(p, x) < 0) continue;
      bool viaMatrix = rep.alive(p, x);
      bool viaSet = rep.range_indicator(p, x);
      if (viaMatrix != viaSet) ++rangeMismatch;
    }
  }
  diag.rangeResidual = static_cast<double>(rangeMismatch);

  // (d) purity decay: test vector = indicator of the deepest member cell
  // along the first sample direction.
  const GridSteps& a = samples.front();
  long p0 = -1;
  int bestDepth = -1;
  for (long p = 0; p < grid.cells(); ++p) {
    if (!mask[static_cast<size_t>(p)]) continue;
    int depth = 0;
    GridSteps acc{std::vector<long>(a.y.size(), 0), std::vector<long>(a.u.size(), 0)};
    while (depth < 64) {
      acc = acc + a;
      if (grid.shifted(p, acc) < 0 || !rep.range_indicator(p, acc)) break;
      ++depth;
    }
    if (depth > bestDepth) {
      bestDepth = depth;
      p0 = p;
    }
  }
  GridSteps acc{std::vector<long>(a.y.size(), 0), std::vector<long>(a.u.size(), 0)};
  diag.purityMonotone = true;
  double prev = 1.0;
  diag.purityNorms.push_back(1.0);  // n = 0: E_0 = id on A
  for (int n = 1; n <= bestDepth + 1; ++n) {
    acc = acc + a;
    if (grid.shifted(p0, acc) < 0) break;
    double norm = rep.range_indicator(p0, acc) ? 1.0 : 0.0;
    if (norm > prev + 0) diag.purityMonotone = false;
    diag.purityNorms.push_back(norm);
    prev = norm;
  }
  diag.purityReachesZero = !diag.purityNorms.empty() && diag.purityNorms.back() == 0.0;
  return diag;
}

void export_shift_csv(const ShiftRep& rep, const GridSteps& x, const std::string& path) {
  const SparseC& m = rep.shift(x);
  std::FILE* f = std::fopen(path.c_str(), "w");
  require(f != nullptr, ErrorCode::BadInput, "cannot open " + path);
  std::fprintf(f, "row,col,re,im\n");
  for (int k = 0; k < m.outerSize(); ++k)
    for (SparseC::InnerIterator it(m, k); it; ++it)
      std::fprintf(f, "%ld,%ld,%.17g,%.17g\n", static_cast<long>(it.row()),
                   static_cast<long>(it.col()), it.value().real(), it.value().imag());
  std::fclose(f);
}

}  // namespace ccrlab
