#pragma once

// Dimension of {X : X V_x = V_x X, X V_x* = V_x* X for all samples},
// computed as the nullity of the stacked Sylvester system over matrices
// supported on member cells. Each constraint row couples at most two matrix
// entries, so the system is extremely sparse; a dense SVD is used up to a
// size threshold; beyond it the rows (each touching at most two entries with
// coefficients +-1) are eliminated exactly by union-find with zero-marking.

#include "ccrlab/shiftrep.hpp"

namespace ccrlab {

struct CommutantResult {
  int dim;
  long variables;
  std::string method;  // "svd" or "sparse-qr"
};

CommutantResult commutant_dim(const ShiftRep& rep, const std::vector<GridSteps>& samples,
                              long denseLimit = 700);

}  // namespace ccrlab
