#include "ccrlab/classify.hpp"

#include <functional>
#include <sstream>

namespace ccrlab {

std::vector<Grid> Scenario::ladder() const {
  std::vector<Grid> grids;
  for (const Rat& top : ladderTops) {
    GridWindow w = window;
    for (Eigen::Index a = 0; a < w.yHi.size(); ++a) w.yHi[a] = top;
    grids.emplace_back(pspace.chart(), w);
  }
  return grids;
}

std::vector<GridSteps> Scenario::generators() const {
  const QuotientChart& chart = pspace.chart();
  const int f = chart.freeRank(), r = chart.torusRank();
  Grid g = grid();

  auto stepInCone = [&](const GridSteps& s, bool strict) {
    return in_cone(cone(), g.step_vector(s), strict);
  };

  std::vector<GridSteps> out;

  // free-axis part: greedily collect small step vectors in P whose free
  // components span R^f, enumerated by 1-norm then lexicographically
  RatMat collected(f, 0);
  for (long budget = 1; budget <= 8 && collected.cols() < f; ++budget) {
    std::vector<long> sy(static_cast<size_t>(f), 0);
    std::function<void(int, long)> scan = [&](int axis, long left) {
      if (static_cast<int>(collected.cols()) == f) return;
      if (axis == f) {
        if (left != 0) return;
        GridSteps s{sy, std::vector<long>(static_cast<size_t>(r), 0)};
        if (!stepInCone(s, false)) return;
        RatMat trial(f, collected.cols() + 1);
        trial.leftCols(collected.cols()) = collected;
        for (int i = 0; i < f; ++i) trial(i, collected.cols()) = Rat(sy[static_cast<size_t>(i)]);
        if (exact_rank(trial) == static_cast<int>(trial.cols())) {
          collected = trial;
          out.push_back(s);
        }
        return;
      }
      for (long v = left; v >= 0; --v) {
        sy[static_cast<size_t>(axis)] = v;
        scan(axis + 1, left - v);
      }
      sy[static_cast<size_t>(axis)] = 0;
    };
    scan(0, budget);
  }
  require(!out.empty(), ErrorCode::BadInput, "no free-axis step lies in the cone");
  if (r == 0 && out.size() < 2) {
    GridSteps s = out[0];
    for (auto& v : s.y) v *= 2;
    out.push_back(s);
  }

  // torus part: per torus axis, the cheapest diagonal free step that carries
  // a unit torus offset and stays in the cone
  for (int axis = 0; axis < r; ++axis) {
    bool found = false;
    for (int q = 1; q <= 64 && !found; ++q) {
      for (long dir : {+1L, -1L}) {
        GridSteps s{std::vector<long>(static_cast<size_t>(f), q),
                    std::vector<long>(static_cast<size_t>(r), 0)};
        s.u[static_cast<size_t>(axis)] = dir;
        if (stepInCone(s, false)) {
          out.push_back(s);
          found = true;
          break;
        }
      }
    }
    require(found, ErrorCode::BadInput, "no torus step of this scenario lies in the cone");
  }
  return out;
}

GridSteps Scenario::interior_point(int which) const {
  Grid g = grid();
  const int f = pspace.chart().freeRank(), r = pspace.chart().torusRank();
  for (int q = 1; q <= 64; ++q) {
    GridSteps s{std::vector<long>(static_cast<size_t>(f), q),
                std::vector<long>(static_cast<size_t>(r), 0)};
    if (in_cone(cone(), g.step_vector(s), /*strict=*/true)) {
      for (auto& v : s.y) v *= (1 + which);
      return s;
    }
  }
  fail(ErrorCode::UnsafeInteriorPoint, "no strictly interior grid point found");
}

Scenario generate_family(const ScenarioSpec& spec) {
  Cone cone = Cone::from_generators(spec.coneGenerators);
  const int d = cone.dim();

  RatVec eDir;
  if (spec.functional) {
    eDir = *spec.functional;
  } else {
    Cone dual = dual_cone(cone);
    eDir = interior_unit(dual).direction;
  }

  Lattice lattice = spec.latticeBasis.cols() > 0 ? Lattice(d, spec.latticeBasis)
                                                 : Lattice::zero(d);
  for (Eigen::Index j = 0; j < lattice.basis().cols(); ++j) {
    Rat s = 0;
    for (int i = 0; i < d; ++i) s += eDir[i] * lattice.basis()(i, j);
    require(s == 0, ErrorCode::LatticeNotOrthogonal,
            "lattice basis column is not orthogonal to e");
  }

  QuotientChart chart(lattice, eDir);
  PSpace pspace(std::move(chart), std::move(cone), spec.translates);

  // Q^N ∩ -Q^N = {0}: equivalently P ∩ N = {0}. e in Int(P*) with N ⟂ e
  // forces this; verify on a small coefficient box by exact membership.
  if (lattice.rank() > 0) {
    std::vector<long> m(static_cast<size_t>(lattice.rank()), -3);
    while (true) {
      RatVec candidate = RatVec::Zero(d);
      bool zero = true;
      for (int j = 0; j < lattice.rank(); ++j) {
        candidate += lattice.basis().col(j) * Rat(m[static_cast<size_t>(j)]);
        if (m[static_cast<size_t>(j)] != 0) zero = false;
      }
      if (!zero)
        require(!in_cone(pspace.cone(), candidate), ErrorCode::BadInput,
                "nonzero lattice point inside the cone");
      int axis = 0;
      while (axis < lattice.rank()) {
        if (++m[static_cast<size_t>(axis)] <= 3) break;
        m[static_cast<size_t>(axis)] = -3;
        ++axis;
      }
      if (axis == lattice.rank()) break;
    }
  }

  Scenario scenario{spec.name,
                    std::move(pspace),
                    spec.multiplicity,
                    GridWindow{spec.yLo, spec.yHi, spec.h, spec.torusSubdivisions},
                    spec.ladderTops,
                    spec.seed,
                    lattice.rank() != d - 1};
  return scenario;
}

std::string to_string(const SpectrumType& s) {
  switch (s.kind) {
    case SpectrumKind::Trivial: return "Trivial";
    case SpectrumKind::Cyclic: return "Cyclic(" + s.order.get_str() + ")";
    case SpectrumKind::Dense: return "Dense";
  }
  return "";
}

SpectrumType spectrum_type(const RatVec& x, const Lattice& n) {
  require(x.size() == n.dim(), ErrorCode::BadInput, "dimension mismatch");
  if (n.rank() == 0)
    return x.isZero() ? SpectrumType{SpectrumKind::Trivial, 1} : SpectrumType{SpectrumKind::Dense, 0};

  auto w = n.span_coordinates(x);
  // a component outside span(N) pairs with a line in N^perp: full circle
  if (!w) return {SpectrumKind::Dense, 0};

  // inside the span, pairings with the dual coefficient basis are w_j (the
  // 2*pi factors cancel); the closed subgroup they generate is cyclic
  Int order = 1;
  for (Eigen::Index j = 0; j < w->size(); ++j) {
    Int den = (*w)[j].get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), order.get_mpz_t(), den.get_mpz_t());
    order = order / g * den;
  }
  if (order == 1) return {SpectrumKind::Trivial, 1};
  return {SpectrumKind::Cyclic, order};
}

namespace {

std::string hnf_string(const Lattice& n) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < n.hnf().rows(); ++i) {
    if (i) out << "; ";
    for (Eigen::Index j = 0; j < n.hnf().cols(); ++j) {
      if (j) out << " ";
      out << n.hnf()(i, j).get_str();
    }
  }
  return out.str();
}

}  // namespace

EquivalenceCert equivalent(const Scenario& s1, const Scenario& s2) {
  require(s1.dim() == s2.dim(), ErrorCode::IncomparableScenarios, "dimension mismatch");
  require(s1.cone().generators() == s2.cone().generators(), ErrorCode::IncomparableScenarios,
          "scenarios use different cones");
  require(s1.functional().direction == s2.functional().direction,
          ErrorCode::IncomparableScenarios, "scenarios use different functionals");

  EquivalenceCert cert;
  cert.hnfA = hnf_string(s1.lattice());
  cert.hnfB = hnf_string(s2.lattice());
  cert.equivalent = lattice_equal(s1.lattice(), s2.lattice());
  if (cert.equivalent) return cert;

  // separating witness: a lattice point of one side that the other misses
  const Lattice& n1 = s1.lattice();
  const Lattice& n2 = s2.lattice();
  std::optional<RatVec> witness;
  for (Eigen::Index j = 0; j < n1.basis().cols() && !witness; ++j)
    if (!n2.contains(n1.basis().col(j))) witness = RatVec(n1.basis().col(j));
  for (Eigen::Index j = 0; j < n2.basis().cols() && !witness; ++j)
    if (!n1.contains(n2.basis().col(j))) witness = RatVec(n2.basis().col(j));
  require(witness.has_value(), ErrorCode::BadInput, "unequal lattices without separating basis vector");
  cert.witness = witness;
  cert.spectrumA = spectrum_type(*witness, n1);
  cert.spectrumB = spectrum_type(*witness, n2);
  return cert;
}

PullbackWitness pullback_obstruction(const Scenario& s, const RatVec& mu) {
  require(mu.size() == s.dim(), ErrorCode::BadInput, "dimension mismatch");
  require(!mu.isZero(), ErrorCode::ZeroDirection, "pullback direction must be nonzero");

  RatMat muRow(1, s.dim());
  for (int i = 0; i < s.dim(); ++i) muRow(0, i) = mu[i];
  RatMat kernel = exact_kernel(muRow);  // d-1 columns spanning mu^perp
  require(kernel.cols() >= 1, ErrorCode::BadInput, "unexpected empty orthogonal complement");

  // pick a kernel vector, halving until it leaves the (discrete) lattice
  RatVec w = kernel.col(0);
  while (s.lattice().contains(w)) w /= 2;

  PullbackWitness witness;
  witness.w = w;
  witness.quotientSpectrum = spectrum_type(w, s.lattice());
  require(witness.quotientSpectrum.kind != SpectrumKind::Trivial, ErrorCode::BadInput,
          "witness spectrum unexpectedly trivial");
  return witness;
}

Grid commutant_grid(const Scenario& s) {
  // Depth must let shift orbits wrap every torus axis, else distant torus
  // sectors decouple and the commutant comes out too large.
  GridWindow w = s.window;
  long wrapCost = 0;
  for (const GridSteps& g : s.generators()) {
    long yCost = 0;
    for (long v : g.y) yCost = std::max(yCost, std::labs(v));
    for (long u : g.u)
      if (u != 0) wrapCost = std::max(wrapCost, yCost * w.M);
  }
  long rows = std::max<long>(8, wrapCost + 6);
  for (Eigen::Index a = 0; a < w.yHi.size(); ++a) w.yHi[a] = w.yLo[a] + w.h * Rat(rows - 1);
  return Grid(s.pspace.chart(), w);
}

TypeOneReport type_one_report(const Scenario& s) {
  TypeOneReport report;
  report.cocycle = cocycle_space_dim(s.pspace, s.multiplicity, s.generators(), s.ladder());
  report.hasNonzeroCocycle = report.cocycle.stable && report.cocycle.dim >= 1;

  Grid small = commutant_grid(s);
  ShiftRep rep(s.pspace, small, s.multiplicity);
  report.commutant = commutant_dim(rep, s.generators());
  const int k = s.multiplicity;
  report.baseIrreducible = (report.commutant.dim == k * k);
  report.typeI = report.hasNonzeroCocycle && k == 1 && report.commutant.dim == 1;

  if (!report.cocycle.stable) {
    report.conclusion = "cocycle dimension unstable; no conclusion";
  } else if (!report.hasNonzeroCocycle) {
    report.conclusion = "no nonzero additive cocycle; only the vacuum unit up to characters";
  } else if (k == 1 && report.commutant.dim == 1) {
    report.conclusion =
        "irreducible with a nonzero additive cocycle: every invariant subspace containing the "
        "cocycle ranges is the whole space, so the flow is type I";
  } else if (report.baseIrreducible) {
    report.conclusion =
        "base representation irreducible (commutant = full multiplicity algebra, dim k^2); the "
        "type I conclusion transfers across the multiplicity tensor factor";
  } else {
    report.conclusion = "commutant larger than the multiplicity algebra; no conclusion";
  }
  return report;
}

}  // namespace ccrlab
