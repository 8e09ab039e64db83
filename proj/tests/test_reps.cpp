#include "doctest.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "eqbif/reps.hpp"

using namespace eqbif;

TEST_CASE("character table") {
  for (int N = 3; N <= 9; ++N) {
    auto t = character_table(N);
    CHECK(t.size() == static_cast<std::size_t>((N + 1) / 2 + (N % 2 ? 1 : 3)));
    int dims = 0;
    for (auto& a : t) {
      dims += a.dim() * a.dim();
      for (auto& b : t) CHECK(inner_product(N, a, b) == doctest::Approx(a == b ? 1.0 : 0.0));
    }
    CHECK(dims == 2 * N);
    for (int i = 0; i < 2 * N; ++i) CHECK(t[0].character(dihedral_from_index(N, i)) == 1.0);
  }
  auto t3 = character_table(3);
  CHECK(t3[1].character({1, false}) == -1.0);
  // The sign irrep sends kappa to -1; the table row with kappa -> 1, gamma -> -1
  // is not a representation for odd N.
  CHECK(t3[2].label() == "*");
  CHECK(t3[2].character({0, true}) == -1.0);
  CHECK(t3[2].character({1, false}) == 1.0);
}

TEST_CASE("matrix models are homomorphisms") {
  for (int N : {4, 5, 6}) {
    for (auto& V : character_table(N)) {
      for (int a = 0; a < 2 * N; ++a)
        for (int b = 0; b < 2 * N; ++b) {
          auto ga = dihedral_from_index(N, a), gb = dihedral_from_index(N, b);
          auto A = V.matrix(ga), B = V.matrix(gb), C = V.matrix(dihedral_mul(N, ga, gb));
          if (V.dim() == 1) {
            CHECK(C[0] == doctest::Approx(A[0] * B[0]));
          } else {
            CHECK(C[0] == doctest::Approx(A[0] * B[0] + A[1] * B[2]));
            CHECK(C[1] == doctest::Approx(A[0] * B[1] + A[1] * B[3]));
            CHECK(C[2] == doctest::Approx(A[2] * B[0] + A[3] * B[2]));
            CHECK(C[3] == doctest::Approx(A[2] * B[1] + A[3] * B[3]));
          }
        }
    }
  }
}

TEST_CASE("permutation representation") {
  CHECK(permutation_isotypic(3) == std::vector<int>{1, 1, 0});
  CHECK(permutation_isotypic(4) == std::vector<int>{1, 1, 1, 0, 0});
  for (int N = 3; N <= 10; ++N) {
    auto mult = permutation_isotypic(N);
    auto t = character_table(N);
    int total = 0, summands = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      total += mult[i] * t[i].dim();
      summands += mult[i];
    }
    CHECK(total == N);
    double chi2 = 0;
    for (int i = 0; i < 2 * N; ++i) {
      int c = permutation_character(N, dihedral_from_index(N, i));
      chi2 += c * c;
    }
    CHECK(chi2 / (2 * N) == doctest::Approx(summands));
  }
}

TEST_CASE("fixed_dim against projector rank") {
  for (int N = 3; N <= 6; ++N) {
    auto G = dihedral_group(N);
    for (const auto& H : enumerate_subgroups(G)) {
      std::vector<DihedralElement> hs;
      for (int x : H.elements) hs.push_back(dihedral_from_index(N, x));
      for (auto& V : character_table(N)) {
        Eigen::Matrix2d P = Eigen::Matrix2d::Zero();
        for (auto h : hs) {
          auto M = V.matrix(h);
          P += (Eigen::Matrix2d() << M[0], M[1], M[2], M[3]).finished();
        }
        P /= static_cast<double>(hs.size());
        if (V.dim() == 1) P(1, 1) = 0;
        Eigen::JacobiSVD<Eigen::Matrix2d> svd(P);
        int rank = (svd.singularValues().array() > 1e-9).count();
        CHECK(fixed_dim(V, hs) == rank);
      }
      // Permutation representation through its irreducible summands.
      double avg = 0;
      for (auto h : hs) avg += permutation_character(N, h);
      int by_irreps = 0;
      auto mult = permutation_isotypic(N);
      auto t = character_table(N);
      for (std::size_t i = 0; i < t.size(); ++i) by_irreps += mult[i] * fixed_dim(t[i], hs);
      CHECK(by_irreps == static_cast<int>(std::lround(avg / hs.size())));
    }
  }
  // <gamma> in D3 fixes only the diagonal of the permutation representation.
  std::vector<DihedralElement> rot{{0, false}, {1, false}, {2, false}};
  int d = fixed_dim(character_table(3)[0], rot) + fixed_dim(character_table(3)[1], rot);
  CHECK(d == 1);
}

TEST_CASE("fixed_dim over the circle group") {
  GIrrep V{1, {DihedralIrrep(3, IrrepKind::Trivial), 1}};
  std::vector<CircleElement> gens{
      {Turn(1, 2), {-1, 1, {}}},
      {Turn(0, 1), {-1, -1, {}}},
      {Turn(0, 1), {1, 1, {1, false}}},
      {Turn(0, 1), {1, 1, {0, true}}},
  };
  CHECK(generate_circle_group(3, gens).size() == 24);
  CHECK(fixed_dim(V, gens) == 2);
  CHECK(fixed_dim(V, {}) == V.real_dim());
  GIrrep V2{2, {DihedralIrrep(5, IrrepKind::Geometric, 2), 0}};
  CHECK(fixed_dim(V2, {}) == 4);
  GIrrep V0{0, {DihedralIrrep(5, IrrepKind::Geometric, 1), 0}};
  CHECK(fixed_dim(V0, {}) == 2);
}

TEST_CASE("cycle Laplacian eigendata") {
  auto d4 = cycle_laplacian_eigendata(4);
  REQUIRE(d4.entries.size() == 3);
  CHECK(d4.entries[0].z == 0.0);
  CHECK(d4.entries[1].z == doctest::Approx(2.0));
  CHECK(d4.entries[2].z == doctest::Approx(4.0));
  auto d3 = cycle_laplacian_eigendata(3);
  CHECK(d3.entries[1].z == doctest::Approx(3.0));
  for (int N = 3; N <= 9; ++N) {
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(N, N);
    for (int i = 0; i < N; ++i) {
      L(i, i) = 2;
      L(i, (i + 1) % N) = -1;
      L(i, (i + N - 1) % N) = -1;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
    std::vector<double> expected;
    for (auto& e : cycle_laplacian_eigendata(N).entries)
      for (int r = 0; r < isotypic_irrep(N, e.j).dim(); ++r) expected.push_back(e.z);
    std::sort(expected.begin(), expected.end());
    REQUIRE(expected.size() == static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) CHECK(std::abs(es.eigenvalues()(i) - expected[i]) < 1e-10);
    CHECK(cycle_laplacian_eigendata(N).entries[0].z == 0.0);
  }
}
