#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqbif/degrees.hpp"
#include "eqbif/spectrum.hpp"

namespace eqbif {

enum class BranchKind { H, S, T };
std::string kind_name(BranchKind k);

// Dressing of the Z2 x Z2 action attached to spatial mode n: V_j^{[2 does not divide n]}.
int dressing_of(int n);

struct ModularData {
  int Nt = 0; // N / gcd(N, j)
  int jt = 0; // j / gcd(N, j)
  int h = 0;  // jt^{-1} mod Nt
};
ModularData modular_data(int N, int j);

// Kinds that exist for isotypic index j: H always, S and T for 0 < j < N/2.
std::vector<BranchKind> kinds_for(int N, int j);

// Generators of the maximal orbit types of W_m (x) V_j^{[2 does not divide n]}.
// The circle coordinate of the rotation generator for 0 < j < N/2 is -j/(N m)
// of a turn, and kappa is included for j = N/2.
std::map<BranchKind, std::vector<CircleElement>> maximal_orbit_generators(int N, int m, int n, int j);

GIrrep mode_irrep(int N, int m, int n, int j);

// kappa1 * u_{sigma(i)}(t + 2 pi shift, kappa2 x) = u_i(t, x) for all i, t, x.
struct SymmetryRelation {
  std::string text;
  Turn shift;
  int kappa1 = 1;
  int kappa2 = 1;
  DihedralElement sigma;
};
SymmetryRelation relation_of(int N, const CircleElement& g);
std::vector<SymmetryRelation> symmetry_relations(BranchKind kind, int N, int m, int n, int j);

struct BifurcationInvariant {
  TwistedSum value;
  std::vector<CriticalPoint> contributions; // Sigma_0 quads with their rho
  std::vector<IndexQuad> negative;          // Sigma_-, empty in H-fixed mode
  bool h_fixed = false;
};

// Full invariant; requires condition B1 at (alpha, beta).
BifurcationInvariant local_invariant(const EquivariantContext& ctx, const ModelParams& p, double alpha, double beta,
                                     int m_max, int n_max, const Tolerances& tol = {});
// Odd foldings only, no Sigma_- factor.
BifurcationInvariant h_fixed_invariant(const EquivariantContext& ctx, const ModelParams& p, double alpha, double beta,
                                       int m_max, int n_max, const Tolerances& tol = {});

// Distinct critical parameter pairs with every quad that vanishes there.
struct CriticalSetPoint {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<CriticalPoint> quads;
};
std::vector<CriticalSetPoint> critical_set(const ModelParams& p, int m_max, int n_max, Exec exec = Exec::Parallel,
                                           const Tolerances& tol = {});

enum class PredictionMode { Local, Global };

struct Branch {
  BranchKind kind = BranchKind::H;
  int fold = 1;
  TwistedSubgroup type; // canonical, folded
  std::vector<CircleElement> generators;
  std::int64_t coeff = 0;
  bool unbounded = false;
  bool non_stationary = false;
  std::vector<SymmetryRelation> relations;
  int n = 1; // spatial mode used for the generator list and relations
  int j = 0;
};

struct PointPrediction {
  CriticalSetPoint point;
  BifurcationInvariant invariant;
  std::vector<Branch> branches;
  std::vector<std::string> diagnostics;
};

struct Prediction {
  PredictionMode mode = PredictionMode::Global;
  int m_max = 0;
  int n_max = 0;
  std::vector<PointPrediction> points;
  std::vector<std::string> diagnostics;
};

Prediction predict_branches(const EquivariantContext& ctx, const ModelParams& p, int m_max, int n_max,
                            PredictionMode mode, const Tolerances& tol = {});

} // namespace eqbif
