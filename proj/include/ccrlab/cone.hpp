#pragma once

// Polyhedral closed convex cones over the rationals. A cone is stored in
// V-representation (generator columns) together with the derived
// H-representation (facet inequality normals). All decisions are exact.

#include <Eigen/Dense>
#include <optional>

#include "ccrlab/rational.hpp"

namespace ccrlab {

class Cone {
 public:
  /// Builds a cone from generator columns; derives facets and validates
  /// that the cone is spanning and pointed.
  static Cone from_generators(const RatMat& generators);

  /// Builds directly from both representations (already validated elsewhere).
  static Cone from_representations(const RatMat& generators, const RatMat& facets);

  int dim() const { return static_cast<int>(generators_.rows()); }
  const RatMat& generators() const { return generators_; }
  const RatMat& facets() const { return facets_; }

 private:
  Cone(RatMat generators, RatMat facets)
      : generators_(std::move(generators)), facets_(std::move(facets)) {}

  RatMat generators_;  // d x m, columns are generator rays
  RatMat facets_;      // d x f, columns are inner facet normals: P = {x : facets^T x >= 0}
};

/// Fixed normalized interior functional: exact rational direction plus its
/// floating-point unit vector.
struct UnitFunctional {
  RatVec direction;      // nonzero, exact
  Eigen::VectorXd unit;  // direction / |direction|
};

UnitFunctional make_unit_functional(const RatVec& direction);

/// Extreme rays of {x : normals^T x >= 0}, as primitive integer columns.
/// Vertex enumeration cost grows combinatorially; guarded at dim <= 4.
RatMat extreme_rays(const RatMat& normals);

/// Dual cone P* = {y : <v|y> >= 0 for all generators v}. V-representation is
/// enumerated (dim <= 4); the facets of the result are P's generators.
Cone dual_cone(const Cone& p);

/// Interior unit functional of pstar: normalized generator sum, or the hint
/// when one is supplied (hint must be strictly interior).
UnitFunctional interior_unit(const Cone& pstar, const std::optional<RatVec>& hint = std::nullopt);

/// Exact facet-inequality membership test.
bool in_cone(const Cone& p, const RatVec& x, bool strict = false);

/// Radius bound for the slab {y in P : <y|e> <= c}: c / min_j <v_j/|v_j| | e>.
double slab_radius(const Cone& p, const UnitFunctional& e, const Rat& c);

}  // namespace ccrlab
