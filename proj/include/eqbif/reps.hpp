#pragma once

#include <array>
#include <string>
#include <vector>

#include "eqbif/groups.hpp"
#include "eqbif/turn.hpp"

namespace eqbif {

enum class IrrepKind { Trivial, Geometric, Half, Sign, SignSign };

// Real irreducible representation of D_N. Geometric irreps use
// rho_j(gamma) = rotation by 2*pi*j/N and rho_j(kappa) = diag(1, -1).
class DihedralIrrep {
public:
  DihedralIrrep(int N, IrrepKind kind, int j = 0);

  int N() const { return N_; }
  IrrepKind kind() const { return kind_; }
  // Isotypic index: 0 (trivial), j (geometric), N/2 (half); -1 for the sign kinds.
  int j() const { return j_; }
  int dim() const { return kind_ == IrrepKind::Geometric ? 2 : 1; }
  std::string label() const;

  // Row-major 2x2 matrix; one-dimensional irreps fill entry 0 only.
  std::array<double, 4> matrix(DihedralElement g) const;
  double character(DihedralElement g) const;

  bool operator==(const DihedralIrrep&) const = default;

private:
  int N_;
  IrrepKind kind_;
  int j_;
};

std::vector<DihedralIrrep> character_table(int N);
// Isotypic indices of the permutation representation: 0..floor((N-1)/2), plus N/2 for even N.
std::vector<int> isotypic_indices(int N);
DihedralIrrep isotypic_irrep(int N, int j);

double inner_product(int N, const DihedralIrrep& a, const DihedralIrrep& b);
// Number of fixed vertices of the permutation action.
int permutation_character(int N, DihedralElement g);
// Multiplicity of each character_table(N) entry in the permutation representation.
std::vector<int> permutation_isotypic(int N);

// Z2 x Z2 x D_N irrep: dressing 0 lets kappa1 act by -1 and kappa2 trivially,
// dressing 1 lets both act by -1.
struct DressedIrrep {
  DihedralIrrep base;
  int dressing = 0;

  int dim() const { return base.dim(); }
  double character(const GammaPrimeElement& g) const;
  std::string label() const;
  bool operator==(const DressedIrrep&) const = default;
};

// W_m (x) V for S^1 x Z2 x Z2 x D_N; m = 0 means trivial circle action.
struct GIrrep {
  int m = 1;
  DressedIrrep dressed;

  int real_dim() const { return dressed.dim() * (m == 0 ? 1 : 2); }
  std::string label() const;
};

// Element of S^1 x Z2 x Z2 x D_N with an exact circle coordinate.
struct CircleElement {
  Turn theta;
  GammaPrimeElement g;
  bool operator==(const CircleElement&) const = default;
};

CircleElement circle_mul(int N, const CircleElement& a, const CircleElement& b);
std::string circle_element_label(const CircleElement& e);
// Finite subgroup generated by the given elements.
std::vector<CircleElement> generate_circle_group(int N, const std::vector<CircleElement>& generators,
                                                 std::size_t cap = 1u << 20);

// Fixed-point dimensions by character averaging.
int fixed_dim(const DihedralIrrep& V, const std::vector<DihedralElement>& subgroup);
int fixed_dim(const DressedIrrep& V, const std::vector<GammaPrimeElement>& subgroup);
int fixed_dim(const GIrrep& V, const std::vector<CircleElement>& generators);

struct LaplacianEigenvalue {
  int j = 0; // isotypic index
  int k = 1; // multiplicity index within the isotypic block
  double z = 0.0;
};

struct LaplacianEigendata {
  int N = 0;
  std::vector<LaplacianEigenvalue> entries; // sorted by (j, k)
  int multiplicity(int j) const;
  const LaplacianEigenvalue& at(int j, int k) const;
};

// z_j = 4 sin^2(pi j / N), positive semidefinite convention.
LaplacianEigendata cycle_laplacian_eigendata(int N);

} // namespace eqbif
