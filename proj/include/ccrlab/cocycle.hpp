#pragma once

// Additive cocycles of the discretized shift representation. The canonical
// cocycle with coefficient vector lambda in C^k is x -> lambda ⊗ 1_{A \ xA};
// the cocycle identity xi_{x+y} = xi_x + V_x xi_y is a disjoint-union set
// identity and holds bitwise on safe regions. The cocycle-space dimension is
// the stable nullspace dimension of the windowed support-plus-compatibility
// system, screened by a cross-window norm-growth filter (finite windows admit
// formal solutions whose L^2 norm grows with the window in the noncompact
// boundary case; those are not cocycles).

#include <Eigen/Dense>

#include "ccrlab/shiftrep.hpp"

namespace ccrlab {

struct AdditiveCocycle {
  Eigen::VectorXcd coefficient;  // lambda in C^k
};

inline AdditiveCocycle canonical_cocycle(const ShiftRep& rep, const Eigen::VectorXcd& lambda) {
  require(lambda.size() == rep.multiplicity(), ErrorCode::BadInput,
          "coefficient size must equal the multiplicity");
  return AdditiveCocycle{lambda};
}

/// xi_x as a dense vector on C^{cells*k}.
Eigen::VectorXcd cocycle_vector(const ShiftRep& rep, const AdditiveCocycle& c,
                                const GridSteps& x);

/// sup-norm of xi_{x+y} - xi_x - V_x xi_y over the safe region of x+y;
/// identically zero by the disjoint-union identity.
double cocycle_residual(const ShiftRep& rep, const AdditiveCocycle& c, const GridSteps& x,
                        const GridSteps& y);

struct CocycleDimResult {
  bool stable;
  int dim;                      // meaningful when stable
  std::vector<int> windowDims;  // raw nullspace dimensions per ladder window
  std::vector<double> restrictionSingularValues;  // growth filter data
  std::string note;
};

/// Stable dimension of the additive-cocycle space over a window ladder
/// (>= 3 nested windows, >= 2 generators). SVD tolerance 1e-9 relative;
/// growth filter threshold 0.5 on the smallest-window restriction.
CocycleDimResult cocycle_space_dim(const PSpace& a, int multiplicity,
                                   const std::vector<GridSteps>& generators,
                                   const std::vector<Grid>& ladder);

}  // namespace ccrlab
