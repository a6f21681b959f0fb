#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace ccrlab;
using namespace ccrlab::testutil;

namespace {

// brute-force membership oracle for a cone given by generators: x is in the
// cone iff the H-representation of the dual cuts it out; sampled against
// exact nonnegative rational combinations instead
bool combination_hits(const RatMat& gens, const RatVec& x, long resolution) {
  // gens has two columns here; scan nonnegative rational coefficients
  for (long a = 0; a <= resolution; ++a)
    for (long b = 0; b <= resolution; ++b) {
      RatVec candidate = gens.col(0) * frac(a, 4) + gens.col(1) * frac(b, 4);
      if (candidate == x) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("orthant is self dual") {
  Cone orthant2 = orthant(2);
  Cone dual = dual_cone(orthant2);
  CHECK(dual.generators().cols() == 2);
  for (Eigen::Index j = 0; j < dual.generators().cols(); ++j) {
    CHECK(in_cone(orthant2, dual.generators().col(j)));
    CHECK(in_cone(dual, orthant2.generators().col(j)));
  }

  Cone orthant3 = orthant(3);
  Cone dual3 = dual_cone(orthant3);
  CHECK(dual3.generators().cols() == 3);
  for (Eigen::Index j = 0; j < 3; ++j) CHECK(in_cone(orthant3, dual3.generators().col(j)));
}

TEST_CASE("dual of cone{(1,0),(1,1)}") {
  Cone p = Cone::from_generators(columns({rv({1, 0}), rv({1, 1})}));
  Cone dual = dual_cone(p);
  REQUIRE(dual.generators().cols() == 2);

  // expected generators (0,1) and (1,-1): check mutual inclusion against the
  // H-representations (both directions), plus brute-force sampling
  Cone expected = Cone::from_generators(columns({rv({0, 1}), rv({1, -1})}));
  for (Eigen::Index j = 0; j < 2; ++j) {
    CHECK(in_cone(expected, dual.generators().col(j)));
    CHECK(in_cone(dual, expected.generators().col(j)));
  }
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    RatVec x = random_vector(rng, 2);
    CHECK(in_cone(dual, x) == in_cone(expected, x));
  }
  // sampled points of the dual really pair nonnegatively with p
  for (long a = 0; a <= 8; ++a)
    for (long b = 0; b <= 8; ++b) {
      RatVec y = dual.generators().col(0) * frac(a, 2) + dual.generators().col(1) * frac(b, 2);
      for (Eigen::Index j = 0; j < 2; ++j) {
        Rat pairing = 0;
        for (int i = 0; i < 2; ++i) pairing += p.generators()(i, j) * y[i];
        CHECK(pairing >= 0);
      }
    }
}

TEST_CASE("double dual returns the same cone") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    RatMat gens(2, 3);
    // positive-x halfplane rays, guaranteed pointed and spanning
    gens.col(0) = rv({1, 3});
    gens.col(1) = rv({1, -3});
    gens.col(2) = rv({1, random_rational(rng, 2)});
    Cone p = Cone::from_generators(gens);
    Cone dd = dual_cone(dual_cone(p));
    for (Eigen::Index j = 0; j < p.generators().cols(); ++j)
      CHECK(in_cone(dd, p.generators().col(j)));
    for (Eigen::Index j = 0; j < dd.generators().cols(); ++j)
      CHECK(in_cone(p, dd.generators().col(j)));
  }
}

TEST_CASE("invariant violations are rejected") {
  // not spanning: both generators on a line
  CHECK_THROWS_AS(Cone::from_generators(columns({rv({1, 1}), rv({2, 2})})), Error);
  // not pointed: contains the x-axis line
  bool pointedRejected = false;
  try {
    Cone::from_generators(columns({rv({1, 0}), rv({-1, 0}), rv({0, 1})}));
  } catch (const Error& e) {
    pointedRejected = e.code() == ErrorCode::NotPointed;
  }
  CHECK(pointedRejected);
  // V-representation enumeration is guarded above dimension 4
  RatMat gens5 = RatMat::Identity(5, 5);
  CHECK_THROWS_AS(Cone::from_generators(gens5), Error);
}

TEST_CASE("interior unit") {
  Cone orthant2 = orthant(2);
  UnitFunctional e = interior_unit(dual_cone(orthant2));
  CHECK(e.direction == rv({1, 1}));
  CHECK(e.unit[0] == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(std::abs(e.unit.norm() - 1.0) < 1e-14);

  // P = cone{(1,0),(1,1)}: P* = cone{(0,1),(1,-1)}, generator sum (1,0)
  Cone p = Cone::from_generators(columns({rv({1, 0}), rv({1, 1})}));
  Cone pstar = dual_cone(p);
  UnitFunctional e2 = interior_unit(pstar);
  CHECK(e2.direction == rv({1, 0}));
  // strict positivity on the generators of p
  for (Eigen::Index j = 0; j < p.generators().cols(); ++j) {
    Rat s = 0;
    for (int i = 0; i < 2; ++i) s += p.generators()(i, j) * e2.direction[i];
    CHECK(s > 0);
  }

  // a valid hint is returned unchanged
  UnitFunctional hinted = interior_unit(dual_cone(orthant2), rv({2, 1}));
  CHECK(hinted.direction == rv({2, 1}));
  // an invalid hint (boundary of the dual) is rejected
  CHECK_THROWS_AS(interior_unit(dual_cone(orthant2), rv({1, 0})), Error);
}

TEST_CASE("membership and the induced order") {
  Cone orthant2 = orthant(2);
  CHECK(in_cone(orthant2, rv({0, 0})));
  CHECK(!in_cone(orthant2, rv({0, 0}), true));
  CHECK(!in_cone(orthant2, rv({0, 1}), true));
  CHECK(in_cone(orthant2, rv({0, 1})));

  Cone p = Cone::from_generators(columns({rv({1, 0}), rv({1, 1})}));
  CHECK(in_cone(p, rv({2, 1}), true));
  CHECK(!in_cone(p, rv({1, 2})));

  // reflexive, transitive, antisymmetric (pointedness) on random triples
  std::mt19937_64 rng(5);
  auto leq = [&](const RatVec& a, const RatVec& b) { return in_cone(p, RatVec(b - a)); };
  for (int trial = 0; trial < 300; ++trial) {
    RatVec a = random_vector(rng, 2, 3), b = random_vector(rng, 2, 3), c = random_vector(rng, 2, 3);
    CHECK(leq(a, a));
    if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
    if (leq(a, b) && leq(b, a)) CHECK(a == b);
  }
}

TEST_CASE("slab radius bounds the slab") {
  Cone orthant2 = orthant(2);
  UnitFunctional e = make_unit_functional(rv({1, 1}));
  CHECK(slab_radius(orthant2, e, Rat(1)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(slab_radius(orthant2, e, Rat(0)) == 0.0);

  Cone orthant3 = orthant(3);
  UnitFunctional e3 = make_unit_functional(rv({1, 1, 1}));
  CHECK(slab_radius(orthant3, e3, Rat(3)) == doctest::Approx(3 * std::sqrt(3.0)));

  // boundary functional rejected
  CHECK_THROWS_AS(slab_radius(orthant2, make_unit_functional(rv({1, 0})), Rat(1)), Error);

  // rejection-sampled slab points stay inside the radius
  Cone wedge = wedge2();
  UnitFunctional ew = make_unit_functional(rv({1, 0}));
  Rat c(3, 2);
  double radius = slab_radius(wedge, ew, c);
  std::mt19937_64 rng(7);
  int kept = 0;
  for (int trial = 0; trial < 600000 && kept < 10000; ++trial) {
    RatVec x = random_vector(rng, 2, 4, 16);
    Rat pairing = x[0];  // e = (1,0)
    if (!in_cone(wedge, x) || pairing > c) continue;
    ++kept;
    CHECK(to_double(Rat(x[0] * x[0] + x[1] * x[1])) <= radius * radius + 1e-9);
  }
  CHECK(kept == 10000);
}

TEST_CASE("sampled brute force agrees on lattice-free membership") {
  // combination sampling can only certify membership, never exclusion; use it
  // as a one-sided oracle on grid-aligned points
  Cone p = Cone::from_generators(columns({rv({1, 0}), rv({1, 1})}));
  for (long x1 = 0; x1 <= 4; ++x1)
    for (long x2 = 0; x2 <= 4; ++x2) {
      RatVec x = rv({Rat(x1), Rat(x2, 2)});
      if (combination_hits(p.generators(), x, 16)) CHECK(in_cone(p, x));
    }
}
