#include "doctest.h"
#include "oracles.hpp"

#include "eqbif/degrees.hpp"

using namespace eqbif;

TEST_CASE("basic degrees over D3") {
  auto L = SubgroupClassLattice::build(std::make_shared<FiniteGroup>(dihedral_group(3)));
  auto deg_of = [&](const DihedralIrrep& V) {
    return basic_degree(L, [&](const Subgroup& H) {
      std::vector<DihedralElement> hs;
      for (int x : H.elements) hs.push_back(dihedral_from_index(3, x));
      return fixed_dim(V, hs);
    });
  };
  BurnsideRing A(L);
  auto sign = deg_of(DihedralIrrep(3, IrrepKind::Sign));
  // classes: 0=(D3) 1=(Z3) 2=(Z2) 3=(1)
  CHECK(sign == BurnsideElement::generator(L, 0) - BurnsideElement::generator(L, 1));
  CHECK(A.multiply_oracle(sign, sign) == BurnsideElement::unit(L));
  auto triv = deg_of(DihedralIrrep(3, IrrepKind::Trivial));
  CHECK(triv == BurnsideElement::generator(L, 0, -1));
  auto geo = deg_of(DihedralIrrep(3, IrrepKind::Geometric, 1));
  CHECK(A.multiply_oracle(geo, geo) == BurnsideElement::unit(L));
}

TEST_CASE("basic degrees are involutive") {
  for (int N : {3, 4}) {
    EquivariantContext ctx(N);
    for (auto& V : ctx.dressed_irreps()) {
      const auto& d = ctx.basic_degree(V);
      CHECK(ctx.burnside().multiply(d, d) == BurnsideElement::unit(ctx.lattice()));
    }
  }
}

TEST_CASE("linear isomorphism degree") {
  EquivariantContext ctx(3);
  DressedIrrep sign{DihedralIrrep(3, IrrepKind::Sign), 0};
  CHECK(linear_iso_degree(ctx, {}) == BurnsideElement::unit(ctx.lattice()));
  CHECK(linear_iso_degree(ctx, {{sign, 1}}) == ctx.basic_degree(sign));
  CHECK(linear_iso_degree(ctx, {{sign, 2}}) == BurnsideElement::unit(ctx.lattice()));
}

TEST_CASE("twisted fixed dimension matches character averaging") {
  for (int N : {3, 4, 6}) {
    EquivariantContext ctx(N);
    const auto& T = ctx.twisted();
    for (auto& V : ctx.dressed_irreps())
      for (int m : {1, 2}) {
        GIrrep W{m, V};
        for (int c = 0; c < T.lattice()->size(); c += 3)
          for (auto& phi : T.homomorphisms(T.lattice()->cls(c).rep.elements)) {
            TwistedSubgroup H{T.lattice()->cls(c).rep.elements, phi, m};
            CHECK(twisted_fixed_dim(V, H) == fixed_dim(W, T.generators_of(H)));
          }
      }
  }
}

TEST_CASE("twisted basic degree at maximal kinds") {
  EquivariantContext ctx(3);
  GIrrep W{1, {isotypic_irrep(3, 0), 1}};
  auto mk = maximal_kind_types(ctx.twisted(), W);
  REQUIRE(mk.size() == 1);
  auto deg = ctx.twisted_basic_degree(W);
  CHECK(deg.coeff(mk[0].rep) == 1);
  CHECK(fixed_dim(W, ctx.twisted().generators_of(mk[0].rep)) == 2);
  CHECK(oracle::quotient_weyl(ctx.twisted(), mk[0].rep) == 1);

  for (int N : {3, 4, 5}) {
    EquivariantContext c(N);
    for (auto& V : c.dressed_irreps())
      for (int m : {1, 2}) {
        GIrrep G{m, V};
        auto d = c.twisted_basic_degree(G);
        CHECK(d == twisted_basic_degree(c.twisted(), G));
        auto types = maximal_kind_types(c.twisted(), G);
        for (auto& a : types) {
          CHECK(d.coeff(a.rep) >= 1);
          for (auto& b : types)
            if (!(a.rep == b.rep)) CHECK_FALSE(c.twisted().subconjugate(a.rep, b.rep));
        }
      }
  }
}

TEST_CASE("maximal kinds for D7") {
  EquivariantContext ctx(7);
  CHECK(maximal_kind_types(ctx.twisted(), {1, {isotypic_irrep(7, 1), 0}}).size() == 3);
  CHECK(maximal_kind_types(ctx.twisted(), {1, {isotypic_irrep(7, 0), 0}}).size() == 1);
}
