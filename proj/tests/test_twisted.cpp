#include "doctest.h"
#include "oracles.hpp"

#include "eqbif/degrees.hpp"
#include "eqbif/twisted.hpp"

using namespace eqbif;

namespace {

GIrrep irrep(int N, int j, int dressing, int m = 1) { return {m, {isotypic_irrep(N, j), dressing}}; }

TwistedSubgroup product_type(const TwistedAlgebra& T, int class_id) {
  const auto& K = T.lattice()->cls(class_id).rep.elements;
  return {K, std::vector<Turn>(K.size()), 0};
}

} // namespace

TEST_CASE("canonical forms") {
  EquivariantContext ctx(3);
  const auto& T = ctx.twisted();
  const int N = 3;
  auto H = T.from_generators({{Turn(1, 2), {1, 1, {0, true}}}}, 1); // (pi, kappa)
  auto c = T.canonicalize(H);
  CHECK(T.canonicalize(T.conjugate(0, H)).rep == c.rep);
  for (int g = 0; g < T.group().order(); ++g) CHECK(T.canonicalize(T.conjugate(g, H)).rep == c.rep);
  // The three reflections of D3 give one orbit type.
  for (int r = 0; r < N; ++r) {
    auto Hr = T.from_generators({{Turn(1, 2), {1, 1, {r, true}}}}, 1);
    CHECK(T.canonicalize(Hr).rep == c.rep);
  }
  // Product subgroup S^1 x K.
  auto P = product_type(T, 5);
  CHECK(T.canonicalize(P).rep.fold == 0);
  CHECK(T.to_string(T.canonicalize(P).rep).find("| 0]") != std::string::npos);
  TwistedSubgroup bad = H;
  bad.phi.back() = Turn(1, 3);
  CHECK_THROWS_AS(T.canonicalize(bad), std::invalid_argument);
}

TEST_CASE("homomorphisms are exhaustive") {
  EquivariantContext ctx(4);
  const auto& T = ctx.twisted();
  const auto& L = *T.lattice();
  for (int c = 0; c < L.size(); ++c) {
    const auto& K = L.cls(c).rep.elements;
    auto homs = T.homomorphisms(K);
    for (auto& phi : homs) CHECK_NOTHROW(T.validate({K, phi, 1}));
    // Count of homomorphisms K -> S^1 equals |K / [K,K]|.
    const auto& G = T.group();
    std::vector<int> comm;
    for (int a : K)
      for (int b : K) comm.push_back(G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
    int derived = G.closure(comm).count();
    CHECK(static_cast<int>(homs.size()) * derived == static_cast<int>(K.size()));
  }
}

TEST_CASE("Weyl orders against the finite quotient") {
  for (int N : {3, 4, 5, 6}) {
    EquivariantContext ctx(N);
    for (auto& V : ctx.dressed_irreps())
      for (int m : {1, 2, 3})
        for (auto& t : positive_fixed_types(ctx.twisted(), {m, V}))
          CHECK(t.weyl_mod_circle == oracle::quotient_weyl(ctx.twisted(), t.type));
  }
}

TEST_CASE("subconjugacy and n(H,L)") {
  EquivariantContext ctx(3);
  const auto& T = ctx.twisted();
  auto mk = maximal_kind_types(T, irrep(3, 1, 0));
  REQUIRE(mk.size() == 3);
  for (auto& a : mk) {
    CHECK(T.n(a.rep, a.rep) == 1);
    for (auto& b : mk)
      if (!(a.rep == b.rep)) CHECK(T.n(a.rep, b.rep) == 0);
  }
  // Z_1 twisted trivial type sits below everything at the same folding.
  TwistedSubgroup trivial{{T.group().identity()}, {Turn()}, 1};
  for (auto& a : mk) CHECK(T.subconjugate(trivial, a.rep));
  // Folding compatibility.
  auto H = mk[0].rep;
  TwistedSubgroup H2 = H;
  H2.fold = 2;
  CHECK_FALSE(T.contains(H, H2));
}

TEST_CASE("module product against orbit counting") {
  for (int N : {3, 4}) {
    EquivariantContext ctx(N);
    const auto& T = ctx.twisted();
    std::set<TwistedSubgroup> types;
    for (auto& V : ctx.dressed_irreps())
      for (auto& t : positive_fixed_types(T, {1, V})) types.insert(t.type);
    for (int k = 0; k < T.lattice()->size(); ++k)
      for (auto& H : types) REQUIRE(T.generator_module_product(k, H) == T.generator_module_product_oracle(k, H));
    for (int k = 0; k < T.lattice()->size(); ++k) {
      auto P = product_type(T, k);
      CHECK(T.generator_module_product(0, P) == T.generator_module_product_oracle(0, P));
    }
  }
}

TEST_CASE("module identities") {
  EquivariantContext ctx(3);
  const auto& T = ctx.twisted();
  auto deg = ctx.twisted_basic_degree(irrep(3, 1, 1));
  CHECK(T.module_product(BurnsideElement::unit(T.lattice()), deg) == deg);
  auto a = BurnsideElement::generator(T.lattice(), 3) + BurnsideElement::generator(T.lattice(), 7, -2);
  auto b = ctx.twisted_basic_degree(irrep(3, 0, 0));
  CHECK(T.module_product(a, deg + b) == T.module_product(a, deg) + T.module_product(a, b));
  for (auto& H : maximal_kind_types(T, irrep(3, 1, 1))) {
    TwistedSum h;
    h.add(H.rep, 1);
    // (K)*(H) keeps H exactly when K_H is subconjugate to K.
    int kh = T.lattice()->class_of(T.group().closure(H.rep.elements));
    for (int k = 0; k < T.lattice()->size(); ++k) {
      auto c = T.module_product(BurnsideElement::generator(T.lattice(), k), h).coeff(H.rep);
      CHECK((c != 0) == (T.lattice()->n(kh, k) > 0));
    }
  }
}

TEST_CASE("folding") {
  EquivariantContext ctx(5);
  auto d1 = twisted_basic_degree(ctx.twisted(), irrep(5, 2, 1));
  CHECK(fold(1, d1) == d1);
  CHECK(fold(2, fold(3, d1)) == fold(6, d1));
  for (int s : {2, 3})
    CHECK(fold(s, d1) == twisted_basic_degree(ctx.twisted(), irrep(5, 2, 1, s)));
  // Psi_2 preimage of K^{phi,1} is K^{phi,2}, checked elementwise on the finite
  // subgroup generated at folding 2.
  auto H = maximal_kind_types(ctx.twisted(), irrep(5, 2, 1))[0].rep;
  TwistedSum one;
  one.add(H, 1);
  auto H2 = fold(2, one).terms().begin()->first;
  CHECK(H2.fold == 2);
  for (auto& g : ctx.twisted().generators_of(H2)) {
    // psi_2(theta, k) = (2 theta, k) must satisfy the folding-1 condition.
    Turn image = g.theta * 2;
    CHECK(H.value(gamma_prime_index(5, g.g)) == image);
  }
  CHECK_THROWS_AS(fold(0, d1), std::invalid_argument);
}

TEST_CASE("maximal-kind sets at different foldings are disjoint") {
  for (int N = 3; N <= 6; ++N) {
    EquivariantContext ctx(N);
    for (auto& V : ctx.dressed_irreps()) {
      std::vector<std::vector<TwistedSubgroup>> per_m;
      for (int m = 1; m <= 9; ++m) {
        std::vector<TwistedSubgroup> v;
        for (auto& t : maximal_kind_types(ctx.twisted(), {m, V})) v.push_back(t.rep);
        per_m.push_back(v);
      }
      for (std::size_t a = 0; a < per_m.size(); ++a)
        for (std::size_t b = a + 1; b < per_m.size(); ++b)
          for (auto& x : per_m[a])
            for (auto& y : per_m[b]) CHECK_FALSE(x == y);
    }
  }
}
