#pragma once

// Grid discretization of the isometric shift representation on L^2(A, C^k):
// (V_x f)(p) = f(p - x) when p - x stays in A, 0 otherwise. Free directions
// truncate at the window edge, torus directions wrap; operator identities
// are therefore asserted only on safe regions, where they hold exactly.

#include <Eigen/Sparse>
#include <complex>
#include <map>
#include <string>

#include "ccrlab/measure.hpp"

namespace ccrlab {

using Complex = std::complex<double>;
using SparseC = Eigen::SparseMatrix<Complex>;

class ShiftRep {
 public:
  /// Holds copies: the representation stays valid independently of the
  /// lifetime of the arguments.
  ShiftRep(PSpace pspace, Grid grid, int multiplicity);

  const PSpace& pspace() const { return pspace_; }
  const Grid& grid() const { return grid_; }
  const MemberMask& mask() const { return mask_; }
  int multiplicity() const { return multiplicity_; }
  long cells() const { return grid_.cells(); }
  long dimension() const { return cells() * multiplicity_; }
  long memberCells() const { return memberCells_; }

  /// Sparse matrix of V_x on C^{cells*k}; built lazily and cached.
  const SparseC& shift(const GridSteps& x) const;

  /// True when cell p has mask[p] and the x-preimage cell is a member that
  /// stays inside the window (the single permutation entry of V_x at p).
  bool alive(long cell, const GridSteps& x) const;

  /// 1_{(x+A) ∩ A}(p), with out-of-window preimages resolved exactly.
  bool range_indicator(long cell, const GridSteps& x) const;

  /// 1_{A \ xA}(p), exact.
  bool difference_indicator(long cell, const GridSteps& x) const;

 private:
  PSpace pspace_;
  Grid grid_;
  int multiplicity_;
  MemberMask mask_;
  long memberCells_;
  mutable std::map<std::pair<std::vector<long>, std::vector<long>>, SparseC> cache_;
};

struct RepDiagnostics {
  double isometryResidual;   // max |(V*V - I)| over member cells in safe regions
  double semigroupResidual;  // max |(V_x V_y - V_{x+y})| over safe chains
  double rangeResidual;      // max |E_x - diag 1_{(x+A)∩A}| on safe cells
  std::vector<double> purityNorms;  // |E_{na} f| for the test vector
  bool purityMonotone;
  bool purityReachesZero;
};

/// Exact representation diagnostics; the first three residuals are integer
/// indicator mismatches and must be identically zero.
RepDiagnostics verify_rep(const ShiftRep& rep, const std::vector<GridSteps>& samples);

/// Coordinate-format CSV (row, col, re, im) of a shift matrix.
void export_shift_csv(const ShiftRep& rep, const GridSteps& x, const std::string& path);

}  // namespace ccrlab
