#include "doctest.h"

#include "eqbif/burnside.hpp"
#include "eqbif/verify.hpp"

using namespace eqbif;

namespace {

ModelParams params(int N) { return ModelParams::make({1, 1}, 1.0, 2.0, N, CouplingCurve::sigmoid()); }

} // namespace

TEST_CASE("Burnside table: parallel equals serial") {
  for (int N : {3, 4}) {
    auto L = SubgroupClassLattice::build(std::make_shared<const FiniteGroup>(gamma_prime(N)));
    BurnsideRing a(L), b(L);
    auto par = a.product_table(Exec::Parallel);
    auto ser = b.product_table(Exec::Serial);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
  }
}

TEST_CASE("critical points: parallel equals serial") {
  for (int N : {3, 6}) {
    auto p = params(N);
    auto par = enumerate_critical_points(p, 6, 6, Exec::Parallel);
    auto ser = enumerate_critical_points(p, 6, 6, Exec::Serial);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i].q == ser[i].q);
      CHECK(par[i].alpha == ser[i].alpha);
      CHECK(par[i].beta == ser[i].beta);
      CHECK(par[i].rho == ser[i].rho);
    }
  }
}

TEST_CASE("sigma_min: parallel equals serial") {
  auto p = params(3);
  CHECK(sigma_min_fd(p, 0.2, 0.9, 32, 16, Exec::Parallel) == sigma_min_fd(p, 0.2, 0.9, 32, 16, Exec::Serial));
  auto par = sigma_min_scan(p, {-0.17, 1.1}, 0.1, 6, 32, 16, Exec::Parallel);
  auto ser = sigma_min_scan(p, {-0.17, 1.1}, 0.1, 6, 32, 16, Exec::Serial);
  CHECK(par.center_sigma == ser.center_sigma);
  REQUIRE(par.ring.size() == ser.ring.size());
  for (std::size_t i = 0; i < par.ring.size(); ++i) CHECK(par.ring[i].sigma == ser.ring[i].sigma);
}

TEST_CASE("xi margin: parallel equals serial") {
  auto p = ModelParams::make({3, 2}, 0.7, 2.0, 3, CouplingCurve::sigmoid());
  double C = xi_lower_bound_constant(p).C;
  CHECK(xi_lower_bound_margin(p, C, 400, 400, Exec::Parallel) == xi_lower_bound_margin(p, C, 400, 400, Exec::Serial));
}
