#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace ccrlab;
using namespace ccrlab::testutil;

namespace {

/// Random integer unimodular matrix built from shear and swap operations.
IntMat random_unimodular(std::mt19937_64& rng, int n) {
  IntMat u = IntMat::Identity(n, n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> shear(-3, 3);
  for (int step = 0; step < 8; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Int s(shear(rng));
    u.col(i) += u.col(j) * s;
  }
  return u;
}

}  // namespace

TEST_CASE("hnf is basis-change invariant") {
  // the two bases span the same lattice: second is an integer unimodular
  // transform of the first (b1' = b1 + b2)
  Lattice n1(3, columns({rv({1, -1, 0}), rv({0, 1, -1})}));
  Lattice n2(3, columns({rv({1, 0, -1}), rv({0, 1, -1})}));
  CHECK(lattice_equal(n1, n2));
  // and the integer coefficients solve exactly
  auto w = n1.span_coordinates(n2.basis().col(0));
  REQUIRE(w.has_value());
  CHECK(is_integer((*w)[0]));
  CHECK(is_integer((*w)[1]));

  Lattice doubled(3, RatMat(2 * n1.basis()));
  CHECK(!lattice_equal(n1, doubled));
  CHECK(lattice_equal(n1, n1));
}

TEST_CASE("hnf invariance under random unimodular transforms") {
  std::mt19937_64 rng(11);
  RatMat base = columns({rv({Rat(1, 2), -1, 0}), rv({0, Rat(2, 3), -1})});
  Lattice reference(3, base);
  for (int trial = 0; trial < 30; ++trial) {
    IntMat u = random_unimodular(rng, 2);
    RatMat transformed(3, 2);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 2; ++j)
        transformed(i, j) = base(i, 0) * Rat(u(0, j)) + base(i, 1) * Rat(u(1, j));
    CHECK(lattice_equal(reference, Lattice(3, transformed)));
  }
}

TEST_CASE("rank mismatch short-circuits to false") {
  Lattice a(3, columns({rv({1, -1, 0}), rv({0, 1, -1})}));
  Lattice b(3, columns({rv({1, -1, 0})}));
  CHECK(!lattice_equal(a, b));
  CHECK(!lattice_equal(b, a));
}

TEST_CASE("membership") {
  Lattice n(2, columns({rv({0, Rat(3, 2)})}));
  CHECK(n.contains(rv({0, 3})));
  CHECK(n.contains(rv({0, Rat(-9, 2)})));
  CHECK(!n.contains(rv({0, 1})));
  CHECK(!n.contains(rv({1, Rat(3, 2)})));
  CHECK(Lattice::zero(2).contains(rv({0, 0})));
  CHECK(!Lattice::zero(2).contains(rv({0, 1})));
}

TEST_CASE("dual lattice examples") {
  // d=2, N = Z(0,1), e = (1,0): dual coefficients (0,1)
  Lattice unitLattice(2, columns({rv({0, 1})}));
  TwoPiLattice dual = dual_lattice(unitLattice, rv({1, 0}));
  CHECK(dual.lattice.basis() == columns({rv({0, 1})}));

  // d=2, N = Z(0,3): dual coefficients (0,1/3)
  Lattice scaled(2, columns({rv({0, 3})}));
  CHECK(dual_lattice(scaled, rv({1, 0})).lattice.basis() == columns({rv({0, Rat(1, 3)})}));

  // d=3, N = Z(0,1,0) + Z(0,0,2): diagonal Gram, dual coefficients
  // (0,1,0) and (0,0,1/2)
  Lattice diag(3, columns({rv({0, 1, 0}), rv({0, 0, 2})}));
  TwoPiLattice dual3 = dual_lattice(diag, rv({1, 0, 0}));
  CHECK(dual3.lattice.basis() == columns({rv({0, 1, 0}), rv({0, 0, Rat(1, 2)})}));

  // functional must be orthogonal
  CHECK_THROWS_AS(dual_lattice(unitLattice, rv({1, 1})), Error);
}

TEST_CASE("dual pairing and involution") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    // random rank-2 lattice orthogonal to e = (1,1,1)
    RatVec b1 = rv({random_rational(rng), random_rational(rng), 0});
    b1[2] = -b1[0] - b1[1];
    RatVec b2 = rv({random_rational(rng), 0, random_rational(rng)});
    b2[1] = -b2[0] - b2[2];
    RatMat basis = columns({b1, b2});
    if (exact_rank(basis) != 2) continue;
    Lattice n(3, basis);
    TwoPiLattice dual = dual_lattice(n, rv({1, 1, 1}));
    // <b_i | c_j> = delta_ij exactly (the symbolic 2*pi factors cancel)
    RatMat pairing = n.basis().transpose() * dual.lattice.basis();
    CHECK(pairing == RatMat(RatMat::Identity(2, 2)));
    // applying the construction twice returns the original lattice
    CHECK(lattice_equal(dual_lattice(dual.lattice, rv({1, 1, 1})).lattice, n));
  }
}

TEST_CASE("hnf of an integer matrix is in normal form") {
  IntMat m(3, 2);
  m << Int(4), Int(2), Int(2), Int(8), Int(0), Int(6);
  IntMat h = hermite_normal_form(m);
  // pivot rows strictly increase, pivots positive, left-of-pivot entries
  // reduced
  int lastPivotRow = -1;
  for (int j = 0; j < 2; ++j) {
    int pivotRow = -1;
    for (int i = 0; i < 3; ++i)
      if (h(i, j) != 0) {
        pivotRow = i;
        break;
      }
    REQUIRE(pivotRow > lastPivotRow);
    CHECK(h(pivotRow, j) > 0);
    for (int l = 0; l < j; ++l) {
      CHECK(h(pivotRow, l) >= 0);
      CHECK(h(pivotRow, l) < h(pivotRow, j));
    }
    lastPivotRow = pivotRow;
  }
}
