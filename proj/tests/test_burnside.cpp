#include "doctest.h"

#include <memory>
#include <random>

#include "eqbif/burnside.hpp"

using namespace eqbif;

namespace {
LatticePtr d3_lattice() {
  return SubgroupClassLattice::build(std::make_shared<FiniteGroup>(dihedral_group(3)));
}
// D3 classes in total order: 0=(D3) 1=(Z3) 2=(Z2) 3=(1)
} // namespace

TEST_CASE("A(D3) products") {
  auto L = d3_lattice();
  BurnsideRing A(L);
  auto g = [&](int id, std::int64_t c = 1) { return BurnsideElement::generator(L, id, c); };

  CHECK(A.multiply(g(2), g(2)) == g(2) + g(3));
  CHECK(A.multiply(g(1), g(1)) == g(1, 2));
  CHECK(A.multiply_oracle(g(3), g(3)) == g(3, 6));
  CHECK(A.multiply_oracle(g(0), g(1)) == g(1));
  CHECK(A.multiply_oracle(g(2), g(1)) == g(3));
  for (int h = 0; h < 4; ++h) CHECK(A.multiply(g(0), g(h)) == g(h));
}

TEST_CASE("coeff projection") {
  auto L = d3_lattice();
  auto e = BurnsideElement::generator(L, 2) + BurnsideElement::generator(L, 3);
  CHECK(e.coeff(2) == 1);
  CHECK(BurnsideElement::unit(L).coeff(3) == 0);
  CHECK(BurnsideElement::generator(L, 1, 2).coeff(1) == 2);
  CHECK_THROWS_AS(e.coeff(4), std::out_of_range);
  CHECK_THROWS_AS(e.coeff(-1), std::out_of_range);
}

TEST_CASE("recurrence equals orbit counting on generator pairs") {
  for (int N : {3, 4}) {
    auto L = SubgroupClassLattice::build(std::make_shared<FiniteGroup>(gamma_prime(N)));
    BurnsideRing A(L);
    for (int h = 0; h < L->size(); ++h)
      for (int k = 0; k < L->size(); ++k)
        REQUIRE(A.generator_product(h, k) == A.generator_product_oracle(h, k));
  }
}

TEST_CASE("ring axioms on sampled triples") {
  auto L = SubgroupClassLattice::build(std::make_shared<FiniteGroup>(gamma_prime(4)));
  BurnsideRing A(L);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> cls(0, L->size() - 1), c(-3, 3);
  auto rnd = [&] {
    BurnsideElement e(L);
    for (int i = 0; i < 3; ++i) e.add(cls(rng), c(rng));
    return e;
  };
  for (int trial = 0; trial < 40; ++trial) {
    auto a = rnd(), b = rnd(), d = rnd();
    CHECK(A.multiply(a, b) == A.multiply(b, a));
    CHECK(A.multiply(A.multiply(a, b), d) == A.multiply(a, A.multiply(b, d)));
    CHECK(A.multiply(a, b + d) == A.multiply(a, b) + A.multiply(a, d));
    CHECK(A.multiply(BurnsideElement::unit(L), a) == a);
  }
}
