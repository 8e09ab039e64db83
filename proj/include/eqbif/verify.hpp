#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "eqbif/bifurcation.hpp"
#include "eqbif/parallel.hpp"
#include "eqbif/spectrum.hpp"

namespace eqbif {

enum class DiscMode { Spectral, FiniteDifference };

struct DiscSpec {
  DiscMode mode = DiscMode::FiniteDifference;
  int Mt = 128; // time points (odd in spectral mode)
  int Mx = 64;  // interior x points (FD) or sine/cosine modes (spectral)
};

// Dense linearization nu^2 d_tt - d_xx + delta d_t + beta S_tau + zeta(alpha)(L + I).
// Spectral: Fourier collocation in t with the exact delay multiplier e^{-i m tau},
// diagonal n^2 in x. FD: periodic second-order differences in t, delay by
// linear interpolation, Dirichlet second differences on [-pi/2, pi/2].
// Unknowns ordered (t, x, vertex) with vertex fastest.
struct Discretization {
  DiscSpec spec;
  int N = 0;
  Eigen::MatrixXd matrix;
};

constexpr long kMaxDenseSize = 6000;

Discretization assemble(const ModelParams& p, double alpha, double beta, const DiscSpec& spec);

// Eigenvalues of the spectral assembly against {xi_{m,n} mu_{m,n,j,k}} for
// |m| <= (Mt-1)/2, n <= Mx and every Laplacian eigenvalue with multiplicity.
// Returns the largest distance after nearest matching.
double spectral_crosscheck(const ModelParams& p, double alpha, double beta, int Mt, int Mx);

// Time block nu^2 D2 + delta D1 + beta S on the periodic FD grid.
Eigen::MatrixXd fd_time_matrix(const ModelParams& p, double beta, int Mt);

// Smallest singular value of the FD operator, via orthogonal diagonalization of
// the x-operator and L into independent Mt x Mt blocks.
double sigma_min_fd(const ModelParams& p, double alpha, double beta, int Mt, int Mx, Exec exec = Exec::Parallel);

struct ScanPoint {
  double d_alpha = 0.0;
  double d_beta = 0.0;
  double sigma = 0.0;
};

struct ScanResult {
  double center_sigma = 0.0;
  std::vector<ScanPoint> ring;
  double ring_min = 0.0;
  double ratio = 0.0; // center_sigma / ring_min
};

ScanResult sigma_min_scan(const ModelParams& p, std::pair<double, double> center, double radius, int ring_points,
                          int Mt, int Mx, Exec exec = Exec::Parallel);

// Samples u_i(t_l, x_q) on t_l = 2 pi l / Mt and x_q = -pi/2 + pi q / (Mx - 1).
struct GridFunction {
  int N = 0;
  int Mt = 0;
  int Mx = 0;
  std::vector<double> data;

  double t(int l) const;
  double x(int q) const;
  double& at(int i, int l, int q) { return data[(static_cast<std::size_t>(i) * Mt + l) * Mx + q]; }
  double at(int i, int l, int q) const { return data[(static_cast<std::size_t>(i) * Mt + l) * Mx + q]; }
  // Trigonometric interpolation in t at t_l + shift (radians).
  std::vector<double> shifted_series(int i, int q, double shift) const;
};

GridFunction sample(int N, int Mt, int Mx, const std::function<double(int, double, double)>& f);

// The three functions U1, U2, U3 built from v_1 = (1, g, g^2, ...), g = e^{2 pi i / N}.
GridFunction reference_wave(int which, int N, int Mt, int Mx);

struct RelationCheck {
  std::string text;
  double max_violation = 0.0;
  bool pass = false;
};

std::vector<RelationCheck> symmetry_check(const GridFunction& u, const std::vector<SymmetryRelation>& relations,
                                          double tol);

// Spatial profile of mode n: cos(n x) for odd n, sin(n x) for even n.
double mode_profile(int n, double x);

// Coefficients (a, b) of u_i = v_n(x) (a_i cos mt + b_i sin mt) in isotypic
// component j fixed by the generators; columns span the fixed space.
Eigen::MatrixXd fixed_space(int N, int m, int n_phys, int j, const std::vector<CircleElement>& generators);

// A fixed function of the given kind for physical mode n_phys. Relations and
// generators use the label n_phys + 1, whose x-parity matches v_{n_phys}.
GridFunction mode_function(int N, int m, int n_phys, int j, BranchKind kind, int Mt, int Mx);

} // namespace eqbif
