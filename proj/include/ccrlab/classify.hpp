#pragma once

// The classification program for the quotient-lattice family: scenarios
// Q^N = phi(P) in R^d/N with N of rank d-1 inside e^perp, decided exactly.
// Unitary equivalence reduces to lattice equality (certified by HNF), with a
// separating spectral witness computed from N^perp = 2*pi*L* + span-complement;
// the non-pullback certificate compares the same spectrum against the circle
// closure of a one-parameter dilation.

#include <optional>

#include "ccrlab/cocycle.hpp"
#include "ccrlab/commutant.hpp"
#include "ccrlab/index.hpp"

namespace ccrlab {

struct Scenario {
  std::string name;
  PSpace pspace;  // owns chart (lattice + functional) and cone
  int multiplicity = 1;
  GridWindow window;
  std::vector<Rat> ladderTops;  // yHi values for growth / cocycle ladders
  std::uint64_t seed = 1;
  bool rankWarning = false;  // lattice rank != d-1

  const Cone& cone() const { return pspace.cone(); }
  const Lattice& lattice() const { return pspace.chart().lattice(); }
  const UnitFunctional& functional() const { return pspace.chart().functional(); }
  int dim() const { return pspace.dim(); }

  Grid grid() const { return Grid(pspace.chart(), window); }
  std::vector<Grid> ladder() const;

  /// Grid-semigroup generators lying in the cone (one per torus axis plus a
  /// pure free step; two free steps when there is no torus factor).
  std::vector<GridSteps> generators() const;

  /// Strictly interior grid points; index 1 doubles index 0.
  GridSteps interior_point(int which) const;
};

struct ScenarioSpec {
  std::string name;
  RatMat coneGenerators;
  std::optional<RatVec> functional;  // absent = normalized dual generator sum
  RatMat latticeBasis;               // d x r (r = 0 for the trivial lattice)
  RatMat translates;                 // optional
  RatVec yLo, yHi;
  Rat h;
  int torusSubdivisions = 8;
  std::vector<Rat> ladderTops;
  int multiplicity = 1;
  std::uint64_t seed = 1;
};

/// Builds and validates a family scenario: e in Int(P*), N in e^perp
/// (LatticeNotOrthogonal otherwise), P ∩ N = {0} by exact membership; lattices
/// of rank != d-1 are allowed but flagged with rankWarning.
Scenario generate_family(const ScenarioSpec& spec);

enum class SpectrumKind { Trivial, Cyclic, Dense };

struct SpectrumType {
  SpectrumKind kind;
  Int order;  // 1 for Trivial, m for Cyclic(m), 0 for Dense

  bool operator==(const SpectrumType& o) const { return kind == o.kind && order == o.order; }
};

std::string to_string(const SpectrumType& s);

/// Spectrum of the dilation unitary at x: closure{e^{i<x|xi>} : xi in N^perp}.
/// Dense when x has a component outside span(N); otherwise the pairings with
/// the dual coefficient basis are rationals q_j and the spectrum is the cyclic
/// group of order lcm(denominators), Trivial exactly when x lies in N.
SpectrumType spectrum_type(const RatVec& x, const Lattice& n);

struct EquivalenceCert {
  bool equivalent;
  std::optional<RatVec> witness;  // lattice point of one, not of the other
  SpectrumType spectrumA{SpectrumKind::Trivial, 1}, spectrumB{SpectrumKind::Trivial, 1};
  std::string hnfA, hnfB;
};

/// Prop-level equivalence decision: lattice equality, with a separating
/// spectral witness when unequal. Scenarios must share dim, cone and e.
EquivalenceCert equivalent(const Scenario& s1, const Scenario& s2);

struct PullbackWitness {
  RatVec w;                      // rational, w ⟂ mu, w not in N
  SpectrumType quotientSpectrum; // != Trivial
  // the one-parameter side: closure{e^{it<w|mu>}} = {1} since <w|mu> = 0
};

/// Certificate that the scenario representation is not a pullback along mu.
PullbackWitness pullback_obstruction(const Scenario& s, const RatVec& mu);

struct TypeOneReport {
  CocycleDimResult cocycle;
  CommutantResult commutant;
  bool hasNonzeroCocycle = false;
  bool baseIrreducible = false;  // commutant dim == k^2
  bool typeI = false;            // strict criterion: k == 1 and commutant trivial
  std::string conclusion;
};

TypeOneReport type_one_report(const Scenario& s);

/// Small window (a few free-axis rows) used for commutant computations.
Grid commutant_grid(const Scenario& s);

}  // namespace ccrlab
