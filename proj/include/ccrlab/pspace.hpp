#pragma once

// P-spaces A in the quotient group R^d/N: finite unions of translated cone
// images A = U_i phi(P + g_i), with an exact membership decision procedure.
// Membership reduces to lattice-point enumeration inside a compact cone slab;
// compactness is certified by the interior functional e in Int(P*), e ⊥ N.

#include <Eigen/Dense>
#include <string>

#include "ccrlab/chart.hpp"
#include "ccrlab/cone.hpp"

namespace ccrlab {

class PSpace {
 public:
  /// translates: d x m columns g_i; an empty matrix means the single
  /// translate 0 (the cone image itself).
  PSpace(QuotientChart chart, Cone cone, RatMat translates = RatMat());

  const QuotientChart& chart() const { return chart_; }
  const Cone& cone() const { return cone_; }
  const RatMat& translates() const { return translates_; }
  int dim() const { return cone_.dim(); }

  /// Exact membership: exists i and n in N with x - g_i + n in P.
  bool member(const RatVec& x) const;

 private:
  QuotientChart chart_;
  Cone cone_;
  RatMat translates_;
  RatMat latticePseudoInverse_;      // (B^T B)^{-1} B^T
  Eigen::VectorXd boxScale_;         // sqrt((B^T B)^{-1}_ii) per lattice axis
  double functionalDirectionNorm_;   // |e direction|
};

inline bool member(const PSpace& a, const RatVec& x) { return a.member(x); }

struct BoundaryReport {
  bool compact;
  std::string reason;
};

/// Compactness of the boundary of A in R^{d-r} x T^r: decided by the
/// effective noncompact dimension d - r.
BoundaryReport boundary_compact(const PSpace& a);

}  // namespace ccrlab
