#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "testutil.hpp"

using namespace ccrlab;
using namespace ccrlab::testutil;

TEST_CASE("family generation validates the setup") {
  Scenario s = wedge_scenario();
  CHECK(!s.rankWarning);
  CHECK(s.functional().direction == rv({2, 0}));

  // lattice not orthogonal to e is refused
  ScenarioSpec bad;
  bad.coneGenerators = columns({rv({1, 1}), rv({1, -1})});
  bad.latticeBasis = columns({rv({1, 1})});
  bad.yLo = rv({-1});
  bad.yHi = rv({4});
  bad.h = Rat(1, 4);
  bool rejected = false;
  try {
    generate_family(bad);
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::LatticeNotOrthogonal;
  }
  CHECK(rejected);

  // rank below d-1 is allowed but flagged
  ScenarioSpec lowRank;
  lowRank.coneGenerators = RatMat(RatMat::Identity(3, 3));
  lowRank.latticeBasis = columns({rv({1, -1, 0})});
  lowRank.yLo = rv({-1, -1});
  lowRank.yHi = rv({3, 3});
  lowRank.h = Rat(1, 2);
  lowRank.torusSubdivisions = 4;
  lowRank.ladderTops = {Rat(2), Rat(3), Rat(4), Rat(8)};
  CHECK(generate_family(lowRank).rankWarning);
}

TEST_CASE("spectrum types") {
  Lattice n(2, columns({rv({0, 1})}));

  // lattice points have trivial spectrum
  CHECK(spectrum_type(rv({0, 3}), n) == SpectrumType{SpectrumKind::Trivial, 1});
  CHECK(spectrum_type(rv({0, -2}), n) == SpectrumType{SpectrumKind::Trivial, 1});

  // rational non-lattice points in the span: cyclic of the denominator lcm
  CHECK(spectrum_type(rv({0, Rat(1, 3)}), n) == SpectrumType{SpectrumKind::Cyclic, 3});
  CHECK(spectrum_type(rv({0, Rat(5, 6)}), n) == SpectrumType{SpectrumKind::Cyclic, 6});

  // any component off the span sweeps the circle
  CHECK(spectrum_type(rv({1, 0}), n).kind == SpectrumKind::Dense);
  CHECK(spectrum_type(rv({Rat(1, 7), Rat(1, 2)}), n).kind == SpectrumKind::Dense);

  // rank-2 lattice: orders combine by lcm
  Lattice n2(3, columns({rv({0, 1, 0}), rv({0, 0, 1})}));
  CHECK(spectrum_type(rv({0, Rat(1, 2), Rat(1, 3)}), n2) ==
        SpectrumType{SpectrumKind::Cyclic, 6});

  // trivial lattice: only the origin is trivial
  CHECK(spectrum_type(rv({0, 0}), Lattice::zero(2)).kind == SpectrumKind::Trivial);
  CHECK(spectrum_type(rv({1, 0}), Lattice::zero(2)).kind == SpectrumKind::Dense);

  // periodicity under lattice translation, sampled
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 50; ++trial) {
    RatVec x = random_vector(rng, 2, 6);
    CHECK(spectrum_type(x, n) == spectrum_type(RatVec(x + n.basis().col(0)), n));
  }
}

TEST_CASE("equivalence is lattice equality, with spectral witnesses") {
  Scenario a = wedge_scenario(Rat(1));
  Scenario aAgain = wedge_scenario(Rat(1));
  Scenario half = wedge_scenario(Rat(1, 2));

  auto same = equivalent(a, aAgain);
  CHECK(same.equivalent);
  CHECK(!same.witness.has_value());
  CHECK(same.hnfA == same.hnfB);

  auto diff = equivalent(a, half);
  CHECK(!diff.equivalent);
  REQUIRE(diff.witness.has_value());
  // the witness is a lattice point of exactly one side, and its two spectra
  // disagree with Trivial on the containing side
  bool inA = a.lattice().contains(*diff.witness);
  bool inB = half.lattice().contains(*diff.witness);
  CHECK(inA != inB);
  CHECK(!(diff.spectrumA == diff.spectrumB));
  CHECK((inA ? diff.spectrumA : diff.spectrumB) == SpectrumType{SpectrumKind::Trivial, 1});
  CHECK(!((inA ? diff.spectrumB : diff.spectrumA) == SpectrumType{SpectrumKind::Trivial, 1}));

  // the concrete pair N = Z(0,1) vs Z(0,1/2): witness (0,1/2), spectra
  // Cyclic(2) vs Trivial
  CHECK(*diff.witness == rv({0, Rat(1, 2)}));
  CHECK(diff.spectrumA == SpectrumType{SpectrumKind::Cyclic, 2});
  CHECK(diff.spectrumB == SpectrumType{SpectrumKind::Trivial, 1});

  // incomparable scenarios are rejected
  Scenario flat = orthant_scenario();
  CHECK_THROWS_AS(equivalent(a, flat), Error);
}

TEST_CASE("equivalence classes of random lattices coincide with HNF classes") {
  // 50 random rational scales drawn from a small pool to force collisions
  std::mt19937_64 rng(131);
  std::vector<Rat> pool = {Rat(1), Rat(1, 2), Rat(2), Rat(3, 4), Rat(1, 3), Rat(5, 4)};
  std::vector<Scenario> scenarios;
  std::vector<Rat> scales;
  for (int i = 0; i < 50; ++i) {
    Rat t = pool[rng() % pool.size()];
    scales.push_back(t);
    scenarios.push_back(wedge_scenario(t));
  }
  for (size_t i = 0; i < scenarios.size(); ++i)
    for (size_t j = i + 1; j < scenarios.size(); ++j) {
      bool sameScale = scales[i] == scales[j];
      auto cert = equivalent(scenarios[i], scenarios[j]);
      CHECK(cert.equivalent == sameScale);
      CHECK((cert.hnfA == cert.hnfB) == sameScale);
      if (!cert.equivalent) {
        REQUIRE(cert.witness.has_value());
        CHECK(!(cert.spectrumA == cert.spectrumB));
      }
    }
}

TEST_CASE("one-parameter family is pairwise inequivalent") {
  // N_t = Z t (0,1) for 50 distinct rationals t: an injective image of the
  // HNF classes (the uncountability proxy at desk scale)
  std::vector<Scenario> family;
  std::set<std::string> hnfs;
  for (int i = 1; i <= 50; ++i) family.push_back(wedge_scenario(frac(i, i + 1)));
  int pairs = 0;
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j) {
      auto cert = equivalent(family[i], family[j]);
      CHECK(!cert.equivalent);
      ++pairs;
    }
  CHECK(pairs == 50 * 49 / 2);
}

TEST_CASE("pullback obstruction") {
  Scenario s = wedge_scenario();

  // mu = (1,0): witness w in mu^perp \ N with <w|mu> = 0, so the
  // one-parameter spectrum is {1} while the quotient spectrum is not
  auto w1 = pullback_obstruction(s, rv({1, 0}));
  Rat pairing = w1.w[0] * 1 + w1.w[1] * 0;
  CHECK(pairing == 0);
  CHECK(!s.lattice().contains(w1.w));
  CHECK(w1.quotientSpectrum.kind != SpectrumKind::Trivial);
  CHECK(w1.quotientSpectrum == SpectrumType{SpectrumKind::Cyclic, 2});

  // mu = e direction
  auto w2 = pullback_obstruction(s, rv({2, 0}));
  CHECK(w2.quotientSpectrum.kind != SpectrumKind::Trivial);

  // 20 random nonzero directions never fail
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 20; ++trial) {
    RatVec mu = random_vector(rng, 2, 5);
    if (mu.isZero()) mu[0] = 1;
    auto witness = pullback_obstruction(s, mu);
    Rat p = 0;
    for (int i = 0; i < 2; ++i) p += witness.w[i] * mu[i];
    CHECK(p == 0);
    CHECK(witness.quotientSpectrum.kind != SpectrumKind::Trivial);
  }

  CHECK_THROWS_AS(pullback_obstruction(s, rv({0, 0})), Error);
}

TEST_CASE("type one report") {
  // multiplicity 1: nonzero cocycle + trivial commutant = type I
  Scenario s = wedge_scenario();
  auto report = type_one_report(s);
  CHECK(report.hasNonzeroCocycle);
  CHECK(report.commutant.dim == 1);
  CHECK(report.baseIrreducible);
  CHECK(report.typeI);

  // multiplicity 2: commutant is the full 2x2 block algebra; the conclusion
  // is carried by the tensor note, not by irreducibility
  Scenario s2 = wedge_scenario(Rat(1), 2);
  auto report2 = type_one_report(s2);
  CHECK(report2.hasNonzeroCocycle);
  CHECK(report2.commutant.dim == 4);
  CHECK(report2.baseIrreducible);
  CHECK(!report2.typeI);
  CHECK(report2.conclusion.find("tensor") != std::string::npos);

  // no lattice: no nonzero cocycle, not type I
  Scenario flat = orthant_scenario();
  auto report3 = type_one_report(flat);
  CHECK(!report3.hasNonzeroCocycle);
  CHECK(!report3.typeI);
}

TEST_CASE("equivalence is an equivalence relation on fixed cone data") {
  std::vector<Rat> scales = {Rat(1), Rat(1, 2), Rat(1), Rat(2), Rat(1, 2)};
  std::vector<Scenario> family;
  for (const Rat& t : scales) family.push_back(wedge_scenario(t));
  for (size_t i = 0; i < family.size(); ++i) {
    CHECK(equivalent(family[i], family[i]).equivalent);
    for (size_t j = 0; j < family.size(); ++j) {
      CHECK(equivalent(family[i], family[j]).equivalent ==
            equivalent(family[j], family[i]).equivalent);
      for (size_t l = 0; l < family.size(); ++l)
        if (equivalent(family[i], family[j]).equivalent &&
            equivalent(family[j], family[l]).equivalent)
          CHECK(equivalent(family[i], family[l]).equivalent);
    }
  }
}
