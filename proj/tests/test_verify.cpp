#include "doctest.h"

#include <cmath>

#include "eqbif/errors.hpp"
#include "eqbif/verify.hpp"

using namespace eqbif;

namespace {

ModelParams params(int N, double tau = 2.0) {
  return ModelParams::make({1, 1}, 1.0, tau, N, CouplingCurve::sigmoid());
}

} // namespace

TEST_CASE("block sigma_min equals dense sigma_min") {
  auto p = params(3);
  for (auto [a, b] : {std::pair{0.3, 0.7}, std::pair{-0.17, 1.1}, std::pair{-2.0, 3.0}}) {
    auto d = assemble(p, a, b, {DiscMode::FiniteDifference, 8, 5});
    Eigen::BDCSVD<Eigen::MatrixXd> svd(d.matrix);
    double dense = svd.singularValues().minCoeff();
    CHECK(sigma_min_fd(p, a, b, 8, 5, Exec::Serial) == doctest::Approx(dense).epsilon(1e-9));
  }
}

TEST_CASE("assembly guards") {
  auto p = params(3);
  CHECK_THROWS_AS(assemble(p, 0.0, 1.0, {DiscMode::FiniteDifference, 128, 64}), std::length_error);
  CHECK_THROWS_AS(assemble(p, 0.0, 1.0, {DiscMode::Spectral, 8, 4}), std::invalid_argument);
}

TEST_CASE("spectral assembly reproduces the closed-form spectrum") {
  for (int N : {3, 4}) {
    auto p = params(N);
    CHECK(spectral_crosscheck(p, 0.4, 0.9, 9, 4) < 1e-9);
    CHECK(spectral_crosscheck(p, -0.1698, 1.0998, 7, 5) < 1e-9);
  }
}

TEST_CASE("fixed spaces have the character-averaged dimension") {
  for (int N = 3; N <= 7; ++N)
    for (int j : isotypic_indices(N))
      for (int m = 1; m <= 2; ++m)
        for (int n_phys = 1; n_phys <= 3; ++n_phys)
          for (auto& [kind, gens] : maximal_orbit_generators(N, m, n_phys + 1, j)) {
            auto F = fixed_space(N, m, n_phys, j, gens);
            CHECK(F.cols() == fixed_dim(mode_irrep(N, m, n_phys + 1, j), gens));
          }
}

TEST_CASE("mode functions satisfy their relations") {
  for (int N : {3, 5, 6})
    for (int j : isotypic_indices(N))
      for (int m = 1; m <= 2; ++m)
        for (int n_phys = 1; n_phys <= 2; ++n_phys)
          for (auto kind : kinds_for(N, j)) {
            auto u = mode_function(N, m, n_phys, j, kind, 32, 11);
            double peak = 0.0;
            for (double v : u.data) peak = std::max(peak, std::abs(v));
            CHECK(peak > 0.1);
            for (auto& c : symmetry_check(u, symmetry_relations(kind, N, m, n_phys + 1, j), 1e-9)) {
              INFO(c.text);
              CHECK(c.pass);
            }
          }
}

TEST_CASE("reference waves U1, U2, U3 match H, S and T") {
  const int N = 3;
  const BranchKind kinds[] = {BranchKind::H, BranchKind::S, BranchKind::T};
  for (int which = 1; which <= 3; ++which) {
    auto u = reference_wave(which, N, 48, 9);
    for (int other = 0; other < 3; ++other) {
      bool all = true;
      for (auto& c : symmetry_check(u, symmetry_relations(kinds[other], N, 1, 2, 1), 1e-9)) all = all && c.pass;
      INFO("U", which, " against ", kind_name(kinds[other]));
      CHECK(all == (other == which - 1));
    }
  }
}

TEST_CASE("zero function satisfies every relation") {
  auto u = sample(4, 16, 5, [](int, double, double) { return 0.0; });
  for (int j : isotypic_indices(4))
    for (auto kind : kinds_for(4, j))
      for (auto& c : symmetry_check(u, symmetry_relations(kind, 4, 1, 1, j), 0.0)) CHECK(c.pass);
}

TEST_CASE("shifted series interpolates band-limited data") {
  auto u = sample(3, 16, 3, [](int i, double t, double x) { return (i + 1) * std::cos(3 * t + 0.2) + x; });
  auto s = u.shifted_series(1, 2, 0.37);
  for (int l = 0; l < 16; ++l) CHECK(s[l] == doctest::Approx(2 * std::cos(3 * (u.t(l) + 0.37) + 0.2) + u.x(2)));
}

TEST_CASE("sigma_min scan") {
  auto p = params(3);
  // Away from the critical set the singular value is flat on a small ring.
  auto flat = sigma_min_scan(p, {0.5, 0.3}, 1e-3, 8, 32, 16, Exec::Serial);
  CHECK(flat.ratio == doctest::Approx(1.0).epsilon(0.05));
  // At the critical point it dips well below the ring.
  auto dip = sigma_min_scan(p, {-0.16980, 1.09981}, 0.05, 8, 64, 32, Exec::Serial);
  INFO(dip.center_sigma, " ", dip.ring_min);
  CHECK(dip.ratio < 0.25);
  CHECK_THROWS(sigma_min_scan(p, {0.0, 0.0}, 0.1, 0, 8, 8));
}
