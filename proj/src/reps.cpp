#include "eqbif/reps.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

#include "eqbif/errors.hpp"

namespace eqbif {

namespace {

int round_dimension(double v) {
  double r = std::round(v);
  if (std::abs(v - r) > 1e-9 || r < 0)
    throw InternalConsistencyError("fixed-point dimension average is not a non-negative integer: " +
                                   std::to_string(v));
  return static_cast<int>(r);
}

// Snap values within 1e-12 of an integer so rational characters are exact.
double snap(double v) {
  double r = std::round(v);
  return std::abs(v - r) < 1e-12 ? r : v;
}

} // namespace

DihedralIrrep::DihedralIrrep(int N, IrrepKind kind, int j) : N_(N), kind_(kind), j_(j) {
  if (N < 3) throw std::invalid_argument("dihedral order N must be at least 3");
  switch (kind) {
  case IrrepKind::Trivial: j_ = 0; break;
  case IrrepKind::Geometric:
    if (j < 1 || 2 * j >= N) throw std::invalid_argument("geometric irrep index out of range");
    break;
  case IrrepKind::Half:
    if (N % 2) throw std::invalid_argument("half irrep requires even N");
    j_ = N / 2;
    break;
  case IrrepKind::Sign: j_ = -1; break;
  case IrrepKind::SignSign:
    if (N % 2) throw std::invalid_argument("signsign irrep requires even N");
    j_ = -1;
    break;
  }
}

std::string DihedralIrrep::label() const {
  switch (kind_) {
  case IrrepKind::Sign: return "*";
  case IrrepKind::SignSign: return "**";
  default: return std::to_string(j_);
  }
}

std::array<double, 4> DihedralIrrep::matrix(DihedralElement g) const {
  const int r = g.rotation;
  const double s = g.reflection ? -1.0 : 1.0;
  const double alt = (r % 2) ? -1.0 : 1.0;
  switch (kind_) {
  case IrrepKind::Trivial: return {1, 0, 0, 0};
  case IrrepKind::Half: return {alt, 0, 0, 0};
  case IrrepKind::Sign: return {s, 0, 0, 0};
  case IrrepKind::SignSign: return {alt * s, 0, 0, 0};
  case IrrepKind::Geometric: break;
  }
  double a = 2.0 * std::numbers::pi * j_ * r / N_;
  double c = std::cos(a), sn = std::sin(a);
  // R(a) * diag(1, s)
  return {c, -sn * s, sn, c * s};
}

double DihedralIrrep::character(DihedralElement g) const {
  auto M = matrix(g);
  return snap(dim() == 2 ? M[0] + M[3] : M[0]);
}

std::vector<int> isotypic_indices(int N) {
  std::vector<int> out;
  for (int j = 0; 2 * j < N; ++j) out.push_back(j);
  if (N % 2 == 0) out.push_back(N / 2);
  return out;
}

DihedralIrrep isotypic_irrep(int N, int j) {
  if (j == 0) return DihedralIrrep(N, IrrepKind::Trivial);
  if (2 * j == N) return DihedralIrrep(N, IrrepKind::Half);
  return DihedralIrrep(N, IrrepKind::Geometric, j);
}

std::vector<DihedralIrrep> character_table(int N) {
  std::vector<DihedralIrrep> out;
  for (int j : isotypic_indices(N)) out.push_back(isotypic_irrep(N, j));
  out.emplace_back(N, IrrepKind::Sign);
  if (N % 2 == 0) out.emplace_back(N, IrrepKind::SignSign);
  return out;
}

double inner_product(int N, const DihedralIrrep& a, const DihedralIrrep& b) {
  double s = 0;
  for (int i = 0; i < 2 * N; ++i) {
    auto g = dihedral_from_index(N, i);
    s += a.character(g) * b.character(g);
  }
  return s / (2.0 * N);
}

int permutation_character(int N, DihedralElement g) {
  int fixed = 0;
  for (int v = 0; v < N; ++v) fixed += dihedral_act(N, g, v) == v;
  return fixed;
}

std::vector<int> permutation_isotypic(int N) {
  std::vector<int> out;
  for (const auto& irrep : character_table(N)) {
    double s = 0;
    for (int i = 0; i < 2 * N; ++i) {
      auto g = dihedral_from_index(N, i);
      s += irrep.character(g) * permutation_character(N, g);
    }
    out.push_back(round_dimension(s / (2.0 * N)));
  }
  return out;
}

double DressedIrrep::character(const GammaPrimeElement& g) const {
  int z = g.kappa1 * (dressing ? g.kappa2 : 1);
  return z * base.character(g.dihedral);
}

std::string DressedIrrep::label() const { return "V" + base.label() + "^" + std::to_string(dressing); }

std::string GIrrep::label() const { return "W" + std::to_string(m) + "x" + dressed.label(); }

CircleElement circle_mul(int N, const CircleElement& a, const CircleElement& b) {
  return {a.theta + b.theta, gamma_prime_mul(N, a.g, b.g)};
}

std::string circle_element_label(const CircleElement& e) {
  auto sign = [](int k) { return k == 1 ? std::string("1") : std::string("-1"); };
  return "(" + e.theta.str() + "," + sign(e.g.kappa1) + "," + sign(e.g.kappa2) + "," +
         dihedral_label(e.g.dihedral) + ")";
}

std::vector<CircleElement> generate_circle_group(int N, const std::vector<CircleElement>& generators,
                                                 std::size_t cap) {
  auto key = [N](const CircleElement& e) {
    return std::make_tuple(e.theta.num(), e.theta.den(), gamma_prime_index(N, e.g));
  };
  std::vector<CircleElement> elems{CircleElement{}};
  std::set<std::tuple<std::int64_t, std::int64_t, int>> seen{key(elems[0])};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      CircleElement y = circle_mul(N, elems[i], g);
      if (seen.insert(key(y)).second) {
        elems.push_back(y);
        if (elems.size() > cap) throw GroupSizeError("generated circle subgroup exceeds cap");
      }
    }
  }
  return elems;
}

int fixed_dim(const DihedralIrrep& V, const std::vector<DihedralElement>& subgroup) {
  double s = 0;
  for (auto g : subgroup) s += V.character(g);
  return round_dimension(s / static_cast<double>(subgroup.size()));
}

int fixed_dim(const DressedIrrep& V, const std::vector<GammaPrimeElement>& subgroup) {
  double s = 0;
  for (const auto& g : subgroup) s += V.character(g);
  return round_dimension(s / static_cast<double>(subgroup.size()));
}

int fixed_dim(const GIrrep& V, const std::vector<CircleElement>& generators) {
  const int N = V.dressed.base.N();
  auto group = generate_circle_group(N, generators);
  double s = 0;
  for (const auto& e : group) {
    double chi = V.dressed.character(e.g);
    s += V.m == 0 ? chi : 2.0 * std::cos(V.m * e.theta.radians()) * chi;
  }
  return round_dimension(s / static_cast<double>(group.size()));
}

int LaplacianEigendata::multiplicity(int j) const {
  int c = 0;
  for (const auto& e : entries) c += e.j == j;
  return c;
}

const LaplacianEigenvalue& LaplacianEigendata::at(int j, int k) const {
  for (const auto& e : entries)
    if (e.j == j && e.k == k) return e;
  throw std::out_of_range("no Laplacian eigenvalue for (j, k) = (" + std::to_string(j) + ", " +
                          std::to_string(k) + ")");
}

LaplacianEigendata cycle_laplacian_eigendata(int N) {
  if (N < 3) throw std::invalid_argument("dihedral order N must be at least 3");
  LaplacianEigendata d;
  d.N = N;
  for (int j : isotypic_indices(N)) {
    double s = std::sin(std::numbers::pi * j / N);
    d.entries.push_back({j, 1, snap(4.0 * s * s)});
  }
  return d;
}

} // namespace eqbif
