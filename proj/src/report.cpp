#include "ccrlab/report.hpp"

#include <chrono>
#include <iostream>
#include <random>

namespace ccrlab {

namespace {

struct CheckContext {
  const ScenarioConfig& config;
  const RunOptions& options;
  Scenario scenario;
  std::vector<std::string> failures;

  std::uint64_t subSeed(std::uint64_t tag) const {
    std::uint64_t x = scenario.seed ^ (tag * 0x9e3779b97f4a7c15ULL);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    return x;
  }
};

Json check_cone(CheckContext& ctx) {
  const Cone& cone = ctx.scenario.cone();
  Json metrics;
  metrics["generators"] = static_cast<int>(cone.generators().cols());
  metrics["facets"] = static_cast<int>(cone.facets().cols());

  bool pass = true;
  if (cone.dim() <= 4) {
    // double dual returns the same cone: mutual generator membership
    Cone dual = dual_cone(cone);
    Cone doubleDual = dual_cone(dual);
    for (Eigen::Index j = 0; j < cone.generators().cols(); ++j)
      pass = pass && in_cone(doubleDual, cone.generators().col(j));
    for (Eigen::Index j = 0; j < doubleDual.generators().cols(); ++j)
      pass = pass && in_cone(cone, doubleDual.generators().col(j));
    metrics["doubleDualGenerators"] = static_cast<int>(doubleDual.generators().cols());
  }
  // partial order sanity at the apex
  pass = pass && in_cone(cone, RatVec::Zero(cone.dim())) &&
         !in_cone(cone, RatVec::Zero(cone.dim()), /*strict=*/true);
  metrics["pass"] = pass;
  return metrics;
}

Json check_lattice(CheckContext& ctx) {
  const Lattice& lattice = ctx.scenario.lattice();
  Json metrics;
  metrics["rank"] = lattice.rank();
  if (lattice.rank() == 0) {
    metrics["note"] = "trivial lattice; nothing to verify";
    metrics["pass"] = true;
    return metrics;
  }

  // canonical form is invariant under a unimodular basis change
  RatMat transform = RatMat::Identity(lattice.rank(), lattice.rank());
  if (lattice.rank() >= 2) {
    transform(0, 1) = 3;
    transform(1, 0) = 1;
    transform(1, 1) = 4;  // det 1
  }
  Lattice changed(lattice.dim(), RatMat(lattice.basis() * transform));
  bool pass = lattice_equal(lattice, changed);

  // dual pairing: <b_i | c_j> = delta_ij (2*pi symbolic)
  TwoPiLattice dual = dual_lattice(lattice, ctx.scenario.functional().direction);
  RatMat pairing = lattice.basis().transpose() * dual.lattice.basis();
  pass = pass && pairing == RatMat(RatMat::Identity(lattice.rank(), lattice.rank()));

  // duality is an involution
  TwoPiLattice back = dual_lattice(dual.lattice, ctx.scenario.functional().direction);
  pass = pass && lattice_equal(back.lattice, lattice);

  metrics["pairingIdentity"] = pairing == RatMat(RatMat::Identity(lattice.rank(), lattice.rank()));
  metrics["pass"] = pass;
  return metrics;
}

Json check_boundary(CheckContext& ctx) {
  BoundaryReport boundary = boundary_compact(ctx.scenario.pspace);
  GrowthProfile profile =
      growth_profile(ctx.scenario.pspace, ctx.scenario.ladder(), ctx.scenario.interior_point(0));

  Json metrics;
  metrics["compact"] = boundary.compact;
  metrics["reason"] = boundary.reason;
  metrics["growth"] = profile.kind == GrowthProfile::Kind::Bounded ? "Bounded" : "Linear";
  metrics["slope"] = profile.slope;
  metrics["values"] = profile.values;

  bool pass = boundary.compact == (profile.kind == GrowthProfile::Kind::Bounded);
  if (ctx.config.expect.boundaryCompact)
    pass = pass && boundary.compact == *ctx.config.expect.boundaryCompact;
  if (ctx.config.expect.growthSlope) {
    double want = *ctx.config.expect.growthSlope;
    double tol = std::max(0.05 * std::abs(want), 1e-9);
    pass = pass && std::abs(profile.slope - want) <= tol;
    metrics["expectedSlope"] = want;
  }
  metrics["pass"] = pass;
  return metrics;
}

Json check_measure(CheckContext& ctx) {
  Grid grid = ctx.scenario.grid();
  MemberMask mask = build_mask(ctx.scenario.pspace, grid, ctx.options.threads);
  auto gens = ctx.scenario.generators();
  const GridSteps& s1 = gens[0];

  Json metrics;
  bool pass = true;

  GridSteps zero{std::vector<long>(s1.y.size(), 0), std::vector<long>(s1.u.size(), 0)};
  double atZero = diff_measure(ctx.scenario.pspace, grid, mask, zero);
  metrics["atZero"] = atZero;
  pass = pass && atZero == 0.0;

  // additivity within one cell volume
  GridSteps s2 = gens[1 % gens.size()];
  double mu1 = diff_measure(ctx.scenario.pspace, grid, mask, s1);
  double mu2 = diff_measure(ctx.scenario.pspace, grid, mask, s2);
  double mu12 = diff_measure(ctx.scenario.pspace, grid, mask, s1 + s2);
  metrics["additivityGap"] = std::abs(mu12 - mu1 - mu2);
  pass = pass && std::abs(mu12 - mu1 - mu2) <= grid.cell_volume() + 1e-12;

  // cone-order monotonicity: x <= x + s implies mu(x) <= mu(x+s) + cell
  pass = pass && mu1 <= mu12 + grid.cell_volume() + 1e-12;
  pass = pass && mu2 <= mu12 + grid.cell_volume() + 1e-12;

  // grid vs Monte Carlo on random safe multiples of the generators
  std::mt19937_64 rng(ctx.subSeed(5));
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  std::uniform_int_distribution<int> reps(1, 3);
  double worstSigma = 0;
  for (int trial = 0; trial < 20; ++trial) {
    GridSteps x = zero;
    int count = reps(rng);
    for (int i = 0; i < count; ++i) x = x + gens[static_cast<size_t>(pick(rng))];
    double gridValue = diff_measure(ctx.scenario.pspace, grid, mask, x);
    auto mc = diff_measure_mc(ctx.scenario.pspace, grid, x, 10000, ctx.subSeed(100 + trial),
                              ctx.options.threads);
    double gap = std::abs(gridValue - mc.value);
    double budget = 3 * mc.standardError + grid.cell_volume();
    worstSigma = std::max(worstSigma, gap / std::max(budget, 1e-300));
    pass = pass && gap <= budget;
  }
  metrics["mcWorstGapOverBudget"] = worstSigma;
  metrics["cellVolume"] = grid.cell_volume();
  metrics["pass"] = pass;
  return metrics;
}

Json check_rep(CheckContext& ctx) {
  Grid grid = ctx.scenario.grid();
  ShiftRep rep(ctx.scenario.pspace, grid, ctx.scenario.multiplicity);
  RepDiagnostics diag = verify_rep(rep, ctx.scenario.generators());

  Json metrics;
  metrics["isometryResidual"] = diag.isometryResidual;
  metrics["semigroupResidual"] = diag.semigroupResidual;
  metrics["rangeResidual"] = diag.rangeResidual;
  metrics["purityNorms"] = diag.purityNorms;
  bool pass = diag.isometryResidual == 0.0 && diag.semigroupResidual == 0.0 &&
              diag.rangeResidual == 0.0 && diag.purityMonotone && diag.purityReachesZero;
  metrics["pass"] = pass;
  return metrics;
}

Json check_cocycles(CheckContext& ctx, bool& unstable, int& stableDim) {
  Grid grid = ctx.scenario.grid();
  ShiftRep rep(ctx.scenario.pspace, grid, ctx.scenario.multiplicity);
  auto gens = ctx.scenario.generators();

  Json metrics;
  bool pass = true;

  // cocycle identity, bitwise, on random safe pairs
  std::mt19937_64 rng(ctx.subSeed(7));
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd lambda(ctx.scenario.multiplicity);
  for (int c = 0; c < ctx.scenario.multiplicity; ++c) lambda[c] = Cd(gauss(rng), gauss(rng));
  AdditiveCocycle cocycle = canonical_cocycle(rep, lambda);
  double worst = 0;
  for (int trial = 0; trial < 50; ++trial) {
    GridSteps x = gens[static_cast<size_t>(pick(rng))];
    GridSteps y = gens[static_cast<size_t>(pick(rng))];
    worst = std::max(worst, cocycle_residual(rep, cocycle, x, y));
  }
  metrics["identityResidual"] = worst;
  pass = pass && worst == 0.0;

  // linearity of the coefficient map
  Eigen::VectorXcd l1 = lambda, l2 = lambda.reverse();
  Eigen::VectorXcd sum = cocycle_vector(rep, canonical_cocycle(rep, l1 + l2), gens[0]);
  Eigen::VectorXcd parts = cocycle_vector(rep, canonical_cocycle(rep, l1), gens[0]) +
                           cocycle_vector(rep, canonical_cocycle(rep, l2), gens[0]);
  metrics["linearityResidual"] = (sum - parts).cwiseAbs().maxCoeff();
  pass = pass && (sum - parts).cwiseAbs().maxCoeff() == 0.0;

  CocycleDimResult dims = cocycle_space_dim(ctx.scenario.pspace, ctx.scenario.multiplicity, gens,
                                            ctx.scenario.ladder());
  metrics["windowDims"] = dims.windowDims;
  metrics["restrictionSingularValues"] = dims.restrictionSingularValues;
  metrics["stable"] = dims.stable;
  unstable = !dims.stable;
  if (dims.stable) {
    metrics["dim"] = dims.dim;
    stableDim = dims.dim;
    if (ctx.config.expect.cocycleDim) pass = pass && dims.dim == *ctx.config.expect.cocycleDim;
  }
  if (!dims.note.empty()) metrics["note"] = dims.note;
  metrics["pass"] = pass;
  return metrics;
}

Json check_commutant(CheckContext& ctx) {
  Grid grid = commutant_grid(ctx.scenario);
  ShiftRep rep(ctx.scenario.pspace, grid, ctx.scenario.multiplicity);
  CommutantResult result = commutant_dim(rep, ctx.scenario.generators());

  Json metrics;
  metrics["dim"] = result.dim;
  metrics["variables"] = result.variables;
  metrics["method"] = result.method;
  metrics["gridCells"] = grid.cells();
  int expected = ctx.config.expect.commutantDim
                     ? *ctx.config.expect.commutantDim
                     : ctx.scenario.multiplicity * ctx.scenario.multiplicity;
  metrics["expected"] = expected;
  metrics["pass"] = result.dim == expected;
  return metrics;
}

Json check_fock(CheckContext& ctx) {
  Json metrics;
  bool pass = true;
  std::mt19937_64 rng(ctx.subSeed(11));
  std::normal_distribution<double> gauss(0.0, 1.0);

  double worstAction = 0, worstCcr = 0, worstUnitarity = 0;
  for (auto [modes, level] : {std::pair{2, 10}, std::pair{2, 14}, std::pair{3, 12}}) {
    TruncatedFock fock(modes, level);
    for (int trial = 0; trial < 3; ++trial) {
      Eigen::VectorXcd xi(modes), eta(modes);
      for (int i = 0; i < modes; ++i) {
        xi[i] = Cd(gauss(rng), gauss(rng));
        eta[i] = Cd(gauss(rng), gauss(rng));
      }
      xi *= 0.8 / std::max(xi.norm(), 1e-12);
      eta *= 0.7 / std::max(eta.norm(), 1e-12);
      WeylActionReport action = weyl_action_check(fock, xi, eta);
      WeylRelationReport relation = verify_weyl(fock, xi, eta);
      worstAction = std::max(worstAction, action.residual / (10 * action.tailBudget));
      worstCcr = std::max(worstCcr, relation.ccrResidual / (10 * relation.tailBudget));
      worstUnitarity =
          std::max(worstUnitarity, relation.unitarityResidual / (10 * relation.tailBudget));
      pass = pass && action.residual <= 10 * action.tailBudget &&
             relation.ccrResidual <= 10 * relation.tailBudget &&
             relation.unitarityResidual <= 10 * relation.tailBudget;
    }
  }
  metrics["actionResidualOverBudget"] = worstAction;
  metrics["ccrResidualOverBudget"] = worstCcr;
  metrics["unitarityResidualOverBudget"] = worstUnitarity;

  // negative control: a wrong commutation phase must be detected
  {
    TruncatedFock fock(2, 10);
    Eigen::VectorXcd xi(2), eta(2);
    xi << Cd(0.5, 0.2), Cd(-0.1, 0.4);
    eta << Cd(0.3, -0.3), Cd(0.2, 0.1);
    WeylRelationReport relation = verify_weyl(fock, xi, eta);
    Eigen::MatrixXcd lhs = fock.weyl_matrix(xi) * fock.weyl_matrix(eta);
    Eigen::MatrixXcd wrong = std::conj(relation.phase) * fock.weyl_matrix(xi + eta);
    double control = (lhs - wrong).cwiseAbs().maxCoeff();
    metrics["negativeControl"] = control;
    pass = pass && control > 1e-6;
  }
  metrics["pass"] = pass;
  return metrics;
}

Json check_units(CheckContext& ctx) {
  Grid grid = ctx.scenario.grid();
  ShiftRep rep(ctx.scenario.pspace, grid, ctx.scenario.multiplicity);
  auto gens = ctx.scenario.generators();
  const GridSteps& x = gens[0];
  const GridSteps& y = gens[1 % gens.size()];
  auto probes = make_probes(rep, x, y, 5, ctx.subSeed(13));

  std::mt19937_64 rng(ctx.subSeed(17));
  std::normal_distribution<double> gauss(0.0, 1.0);
  UnitSpec unit;
  unit.characterExponent.resize(ctx.scenario.dim());
  unit.cocycleCoefficient.resize(ctx.scenario.multiplicity);
  for (int i = 0; i < ctx.scenario.dim(); ++i)
    unit.characterExponent[i] = 0.4 * Cd(gauss(rng), gauss(rng));
  for (int c = 0; c < ctx.scenario.multiplicity; ++c)
    unit.cocycleCoefficient[c] = Cd(gauss(rng), gauss(rng));

  UnitCheckReport report = unit_weak_check(rep, unit, x, y, probes);
  Json metrics;
  metrics["semigroupResidual"] = report.semigroupResidual;
  metrics["intertwiningResidual"] = report.intertwiningResidual;
  bool pass = report.semigroupResidual <= 1e-10 && report.intertwiningResidual <= 1e-10;

  // negative control 1: cocycle vector pushed out of Ker(V_x*)
  AdditiveCocycle cocycle{unit.cocycleCoefficient};
  GridSteps xy = x + y;
  Eigen::VectorXcd xiX = cocycle_vector(rep, cocycle, x);
  Eigen::VectorXcd bad = xiX;
  for (long p = 0; p < rep.cells(); ++p)
    if (rep.range_indicator(p, x)) {
      for (int c = 0; c < rep.multiplicity(); ++c) bad[p * rep.multiplicity() + c] = Cd(1.0, 0);
      break;
    }
  Eigen::VectorXd vx = to_double(grid.step_vector(x));
  Eigen::VectorXd vy = to_double(grid.step_vector(y));
  Eigen::VectorXd vxy = to_double(grid.step_vector(xy));
  Cd chiX = character_value(unit.characterExponent, vx);
  Cd chiY = character_value(unit.characterExponent, vy);
  Cd chiXY = character_value(unit.characterExponent, vxy);
  UnitCheckReport control1 =
      unit_weak_check_raw(rep, x, y, bad, cocycle_vector(rep, cocycle, y),
                          cocycle_vector(rep, cocycle, xy), chiX, chiY, chiXY, probes);
  metrics["supportControl"] = control1.intertwiningResidual;
  pass = pass && control1.intertwiningResidual > 1e-6;

  // negative control 2: non-multiplicative character
  UnitCheckReport control2 =
      unit_weak_check_raw(rep, x, y, xiX, cocycle_vector(rep, cocycle, y),
                          cocycle_vector(rep, cocycle, xy), chiX, chiY, chiXY * Cd(1.01, 0.0),
                          probes);
  metrics["characterControl"] = control2.semigroupResidual;
  pass = pass && control2.semigroupResidual > 1e-6;

  metrics["pass"] = pass;
  return metrics;
}

Json check_index(CheckContext& ctx, bool cocyclesStable, int cocycleDim) {
  Grid grid = ctx.scenario.grid();
  IndexReport report =
      index_of(ctx.scenario.pspace, grid, ctx.scenario.multiplicity, ctx.scenario.ladder(),
               ctx.scenario.interior_point(0), ctx.scenario.interior_point(1), ctx.scenario.seed);

  Json metrics;
  metrics["index"] = report.index;
  metrics["independencePass"] = report.independencePass;
  metrics["rankLadder"] = report.rankLadder;
  metrics["compactBoundary"] = report.compactBoundary;
  if (!report.note.empty()) metrics["note"] = report.note;
  if (!report.gramEigenvalues.empty()) metrics["gramEigenvalues"] = report.gramEigenvalues;

  bool pass = report.independencePass;
  if (report.rankLadder.size() >= 2)
    pass = pass && report.rankLadder[report.rankLadder.size() - 1] ==
                       report.rankLadder[report.rankLadder.size() - 2];
  if (ctx.config.expect.index) pass = pass && report.index == *ctx.config.expect.index;
  if (cocyclesStable) pass = pass && report.index == cocycleDim;
  metrics["pass"] = pass;
  return metrics;
}

Json check_classify(CheckContext& ctx) {
  Json metrics;
  bool pass = true;
  const Lattice& lattice = ctx.scenario.lattice();

  // lattice points have trivial dilation spectrum; spectrum is N-periodic
  std::mt19937_64 rng(ctx.subSeed(19));
  std::uniform_int_distribution<int> small(-3, 3);
  for (Eigen::Index j = 0; j < lattice.basis().cols(); ++j) {
    SpectrumType s = spectrum_type(lattice.basis().col(j), lattice);
    pass = pass && s.kind == SpectrumKind::Trivial;
  }
  if (lattice.rank() > 0) {
    for (int trial = 0; trial < 10; ++trial) {
      RatVec x(ctx.scenario.dim());
      for (int i = 0; i < ctx.scenario.dim(); ++i) x[i] = frac(small(rng), 1 + (trial % 3));
      RatVec shiftedX = x + lattice.basis().col(0);
      pass = pass && spectrum_type(x, lattice) == spectrum_type(shiftedX, lattice);
    }
  }

  // self equivalence
  EquivalenceCert self = equivalent(ctx.scenario, ctx.scenario);
  pass = pass && self.equivalent;

  // a scaled lattice is inequivalent, with a valid separating witness
  if (lattice.rank() > 0) {
    ScenarioSpec scaled;
    scaled.name = ctx.scenario.name + "-scaled";
    scaled.coneGenerators = ctx.scenario.cone().generators();
    scaled.functional = ctx.scenario.functional().direction;
    scaled.latticeBasis = lattice.basis() / 2;
    scaled.yLo = ctx.scenario.window.yLo;
    scaled.yHi = ctx.scenario.window.yHi;
    scaled.h = ctx.scenario.window.h;
    scaled.torusSubdivisions = ctx.scenario.window.M;
    scaled.ladderTops = ctx.scenario.ladderTops;
    Scenario other = generate_family(scaled);
    EquivalenceCert cert = equivalent(ctx.scenario, other);
    pass = pass && !cert.equivalent && cert.witness.has_value();
    if (cert.witness) {
      pass = pass && !(cert.spectrumA == cert.spectrumB);
      metrics["witnessSpectrumA"] = to_string(cert.spectrumA);
      metrics["witnessSpectrumB"] = to_string(cert.spectrumB);
    }
  }

  // pullback obstructions for random nonzero directions (needs dim >= 2:
  // in dimension 1 there is no nonzero vector orthogonal to mu)
  if (ctx.scenario.dim() >= 2) {
    int obstructions = 0;
    for (int trial = 0; trial < 5; ++trial) {
      RatVec mu(ctx.scenario.dim());
      bool zero = true;
      for (int i = 0; i < ctx.scenario.dim(); ++i) {
        mu[i] = small(rng);
        if (mu[i] != 0) zero = false;
      }
      if (zero) mu[0] = 1;
      PullbackWitness witness = pullback_obstruction(ctx.scenario, mu);
      // the witness pairs to zero with mu (one-parameter spectrum {1}) but
      // has nontrivial quotient spectrum
      Rat pairing = 0;
      for (int i = 0; i < ctx.scenario.dim(); ++i) pairing += witness.w[i] * mu[i];
      if (pairing == 0 && witness.quotientSpectrum.kind != SpectrumKind::Trivial) ++obstructions;
    }
    metrics["pullbackObstructions"] = obstructions;
    pass = pass && obstructions == 5;
  }

  metrics["pass"] = pass;
  return metrics;
}

const char* claim_for(const std::string& check) {
  if (check == "cone")
    return "dual cone duality and exact membership order on the polyhedral cone";
  if (check == "lattice")
    return "HNF canonical form is basis-change invariant; dual lattice pairing is 2*pi*identity "
           "and duality is an involution";
  if (check == "boundary")
    return "boundary compactness criterion (one noncompact direction) agrees with the measured "
           "growth of mu(A \\ aA)";
  if (check == "measure")
    return "difference-set measures: additivity along the semigroup, cone-order monotonicity, "
           "grid quadrature consistent with Monte Carlo";
  if (check == "rep")
    return "discretized shifts are exact isometries with the semigroup law, range projections "
           "are multiplication by 1_{(x+A) cap A}, and the representation is pure";
  if (check == "cocycles")
    return "lambda 1_{A \\ xA} satisfies the additive cocycle identity bitwise; the cocycle "
           "space has the stable dimension k (multiplicity)";
  if (check == "commutant")
    return "the commutant of {V_x, V_x*} is the multiplicity algebra (dimension k^2)";
  if (check == "fock")
    return "Weyl operators on the truncated Fock space satisfy the displacement action and "
           "commutation relation within analytic truncation tails";
  if (check == "units")
    return "(character, additive cocycle) pairs are units: semigroup law and covariance "
           "intertwining hold weakly on exponential vectors";
  if (check == "index")
    return "GNS Gram rank of the unit covariance kernel is interior-point independent and "
           "equals the cocycle space dimension";
  if (check == "classify")
    return "dilation spectra separate distinct lattices; scaled lattices are inequivalent; no "
           "one-parameter pullback reproduces the quotient spectra";
  return "";
}

}  // namespace

std::string content_hash(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ReportDoc run_checks(const ScenarioConfig& config, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();

  ScenarioSpec spec = config.scenario;
  if (options.windowScale != 1.0) {
    for (Eigen::Index a = 0; a < spec.yHi.size(); ++a) {
      Rat extent = spec.yHi[a] - spec.yLo[a];
      spec.yHi[a] = spec.yLo[a] + extent * rat_from_double(options.windowScale);
    }
    for (Rat& top : spec.ladderTops) top = top * rat_from_double(options.windowScale);
  }

  ReportDoc doc;
  doc.json["schema"] = "ccrlab-report/1";
  doc.json["scenario"] = spec.name;
  doc.json["configHash"] = content_hash(config.rawText);
  doc.json["seed"] = spec.seed;
  doc.json["multiplicity"] = spec.multiplicity;
  doc.json["checks"] = Json::array();

  CheckContext ctx{config, options, generate_family(spec), {}};
  if (ctx.scenario.rankWarning)
    doc.json["rankWarning"] = "lattice rank differs from dim-1; family is non-canonical";

  bool anyFail = false, anyUnstable = false;
  bool cocyclesStable = false;
  int cocycleDim = -1;

  for (const std::string& name : config.checks) {
    if (options.verbose) std::cerr << "[ccrlab] running check " << name << "\n";
    Json record;
    record["name"] = name;
    std::string status = "pass";
    Json metrics;
    try {
      bool unstable = false;
      if (name == "cone") metrics = check_cone(ctx);
      else if (name == "lattice") metrics = check_lattice(ctx);
      else if (name == "boundary") metrics = check_boundary(ctx);
      else if (name == "measure") metrics = check_measure(ctx);
      else if (name == "rep") metrics = check_rep(ctx);
      else if (name == "cocycles") metrics = check_cocycles(ctx, unstable, cocycleDim);
      else if (name == "commutant") metrics = check_commutant(ctx);
      else if (name == "fock") metrics = check_fock(ctx);
      else if (name == "units") metrics = check_units(ctx);
      else if (name == "index") metrics = check_index(ctx, cocyclesStable, cocycleDim);
      else if (name == "classify") metrics = check_classify(ctx);
      if (name == "cocycles") cocyclesStable = !unstable;
      if (unstable) status = "unstable";
      else if (!metrics.value("pass", false)) status = "fail";
    } catch (const Error& e) {
      status = "fail";
      metrics["error"] = e.what();
    }
    anyFail = anyFail || status == "fail";
    anyUnstable = anyUnstable || status == "unstable";
    record["status"] = status;
    record["claim"] = claim_for(name);
    record["metrics"] = metrics;
    doc.json["checks"].push_back(record);
  }

  doc.json["status"] = anyFail ? "fail" : (anyUnstable ? "unstable" : "pass");
  doc.json["wallTimeMs"] = static_cast<long>(std::chrono::duration<double, std::milli>(
                                                 std::chrono::steady_clock::now() - start)
                                                 .count());
  doc.exitCode = anyFail ? 1 : (anyUnstable ? 3 : 0);
  return doc;
}

std::string report_to_csv(const Json& report) {
  std::string out = "check,status,claim\n";
  for (const auto& record : report.at("checks")) {
    out += record.at("name").get<std::string>() + "," + record.at("status").get<std::string>() +
           ",\"" + record.at("claim").get<std::string>() + "\"\n";
  }
  return out;
}

}  // namespace ccrlab
