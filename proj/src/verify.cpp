#include "eqbif/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "eqbif/errors.hpp"

namespace eqbif {

namespace {

constexpr double pi = std::numbers::pi;

Eigen::MatrixXd laplacian_plus_identity(int N) {
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i < N; ++i) {
    L(i, i) = 3.0;
    L(i, (i + 1) % N) -= 1.0;
    L(i, (i + N - 1) % N) -= 1.0;
  }
  return L;
}

Eigen::MatrixXd spectral_time_matrix(const ModelParams& p, double beta, int Mt) {
  const int K = (Mt - 1) / 2;
  const double nu = p.nu.value();
  std::vector<cplx> lam;
  for (int m = -K; m <= K; ++m)
    lam.push_back(cplx(-nu * nu * m * m, p.delta * m) + beta * std::polar(1.0, -m * p.tau));
  Eigen::MatrixXd T(Mt, Mt);
  for (int a = 0; a < Mt; ++a)
    for (int b = 0; b < Mt; ++b) {
      cplx s = 0.0;
      for (int m = -K; m <= K; ++m) s += lam[m + K] * std::polar(1.0, 2.0 * pi * m * (a - b) / Mt);
      T(a, b) = s.real() / Mt;
    }
  return T;
}

// Second-difference -d_xx on Mx interior points of [-pi/2, pi/2].
Eigen::MatrixXd fd_minus_dxx(int Mx) {
  const double h = pi / (Mx + 1);
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(Mx, Mx);
  for (int q = 0; q < Mx; ++q) {
    D(q, q) = 2.0 / (h * h);
    if (q > 0) D(q, q - 1) = -1.0 / (h * h);
    if (q + 1 < Mx) D(q, q + 1) = -1.0 / (h * h);
  }
  return D;
}

double smallest_singular_value(const Eigen::MatrixXd& A) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
  return svd.singularValues().minCoeff();
}

} // namespace

Eigen::MatrixXd fd_time_matrix(const ModelParams& p, double beta, int Mt) {
  if (Mt < 4) throw std::invalid_argument("need at least 4 time points");
  const double dt = 2.0 * pi / Mt;
  const double nu2 = p.nu.value() * p.nu.value();
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(Mt, Mt);
  // u(t_l - tau) from the two grid lines bracketing t_l - tau.
  const double s = p.tau / dt;
  const int back = static_cast<int>(std::floor(s));
  const double w = s - back;
  for (int l = 0; l < Mt; ++l) {
    int up = (l + 1) % Mt, dn = (l + Mt - 1) % Mt;
    T(l, l) += -2.0 * nu2 / (dt * dt);
    T(l, up) += nu2 / (dt * dt) + p.delta / (2.0 * dt);
    T(l, dn) += nu2 / (dt * dt) - p.delta / (2.0 * dt);
    int l0 = ((l - back) % Mt + Mt) % Mt;
    int l1 = (l0 + Mt - 1) % Mt;
    T(l, l0) += beta * (1.0 - w);
    T(l, l1) += beta * w;
  }
  return T;
}

Discretization assemble(const ModelParams& p, double alpha, double beta, const DiscSpec& spec) {
  if (spec.Mt < 4 || spec.Mx < 4) throw std::invalid_argument("grid sizes must be at least 4");
  if (spec.mode == DiscMode::Spectral && spec.Mt % 2 == 0)
    throw std::invalid_argument("spectral mode needs an odd number of time points");
  const long size = static_cast<long>(spec.Mt) * spec.Mx * p.N;
  if (size > kMaxDenseSize) throw std::length_error("dense discretization of size " + std::to_string(size) + " is too large");
  Eigen::MatrixXd T = spec.mode == DiscMode::Spectral ? spectral_time_matrix(p, beta, spec.Mt)
                                                      : fd_time_matrix(p, beta, spec.Mt);
  Eigen::MatrixXd X(spec.Mx, spec.Mx);
  if (spec.mode == DiscMode::Spectral) {
    X.setZero();
    for (int n = 1; n <= spec.Mx; ++n) X(n - 1, n - 1) = static_cast<double>(n) * n;
  } else {
    X = fd_minus_dxx(spec.Mx);
  }
  Eigen::MatrixXd A = p.zeta(alpha) * laplacian_plus_identity(p.N);
  const int Mt = spec.Mt, Mx = spec.Mx, N = p.N;
  auto idx = [&](int l, int q, int i) { return (static_cast<long>(l) * Mx + q) * N + i; };
  Discretization d{spec, N, Eigen::MatrixXd::Zero(size, size)};
  auto& M = d.matrix;
  for (int l = 0; l < Mt; ++l)
    for (int q = 0; q < Mx; ++q)
      for (int i = 0; i < N; ++i) {
        long r = idx(l, q, i);
        for (int l2 = 0; l2 < Mt; ++l2)
          if (T(l, l2) != 0.0) M(r, idx(l2, q, i)) += T(l, l2);
        for (int q2 = 0; q2 < Mx; ++q2)
          if (X(q, q2) != 0.0) M(r, idx(l, q2, i)) += X(q, q2);
        for (int i2 = 0; i2 < N; ++i2)
          if (A(i, i2) != 0.0) M(r, idx(l, q, i2)) += A(i, i2);
      }
  return d;
}

double spectral_crosscheck(const ModelParams& p, double alpha, double beta, int Mt, int Mx) {
  auto d = assemble(p, alpha, beta, {DiscMode::Spectral, Mt, Mx});
  Eigen::EigenSolver<Eigen::MatrixXd> es(d.matrix, false);
  std::vector<cplx> got(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::vector<cplx> want;
  const int K = (Mt - 1) / 2;
  for (int m = -K; m <= K; ++m)
    for (int n = 1; n <= Mx; ++n)
      for (const auto& e : p.eig.entries) {
        cplx v = mu_numerator({m, n, e.j, e.k}, alpha, beta, p);
        for (int c = 0; c < isotypic_irrep(p.N, e.j).dim(); ++c) want.push_back(v);
      }
  if (want.size() != got.size()) throw InternalConsistencyError("spectral eigenvalue count mismatch");
  std::vector<bool> used(got.size(), false);
  double worst = 0.0;
  for (const auto& w : want) {
    std::size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < got.size(); ++i)
      if (!used[i] && std::abs(got[i] - w) < bd) {
        bd = std::abs(got[i] - w);
        best = i;
      }
    used[best] = true;
    worst = std::max(worst, bd);
  }
  return worst;
}

double sigma_min_fd(const ModelParams& p, double alpha, double beta, int Mt, int Mx, Exec exec) {
  if (Mx < 4) throw std::invalid_argument("need at least 4 interior x points");
  const Eigen::MatrixXd T = fd_time_matrix(p, beta, Mt);
  const double h = pi / (Mx + 1);
  std::vector<double> shifts;
  for (int k = 1; k <= Mx; ++k) {
    double s = std::sin(k * h / 2.0);
    double lx = 4.0 / (h * h) * s * s;
    for (const auto& e : p.eig.entries) shifts.push_back(lx + zeta_jk(p, e.j, e.k, alpha));
  }
  const long count = static_cast<long>(shifts.size());
  double best = std::numeric_limits<double>::infinity();
  auto block = [&](long b) {
    Eigen::MatrixXd B = T;
    B.diagonal().array() += shifts[static_cast<std::size_t>(b)];
    return smallest_singular_value(B);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (long b = 0; b < count; ++b) best = std::min(best, block(b));
  } else {
    for (long b = 0; b < count; ++b) best = std::min(best, block(b));
  }
  return best;
}

ScanResult sigma_min_scan(const ModelParams& p, std::pair<double, double> center, double radius, int ring_points,
                          int Mt, int Mx, Exec exec) {
  if (ring_points < 1) throw std::invalid_argument("need at least one ring point");
  ScanResult r;
  r.center_sigma = sigma_min_fd(p, center.first, center.second, Mt, Mx, exec);
  r.ring.resize(static_cast<std::size_t>(ring_points));
  for (int k = 0; k < ring_points; ++k) {
    double th = 2.0 * pi * k / ring_points;
    r.ring[static_cast<std::size_t>(k)] = {radius * std::cos(th), radius * std::sin(th), 0.0};
  }
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < ring_points; ++k) {
      auto& s = r.ring[static_cast<std::size_t>(k)];
      s.sigma = sigma_min_fd(p, center.first + s.d_alpha, center.second + s.d_beta, Mt, Mx, Exec::Serial);
    }
  } else {
    for (auto& s : r.ring) s.sigma = sigma_min_fd(p, center.first + s.d_alpha, center.second + s.d_beta, Mt, Mx, Exec::Serial);
  }
  r.ring_min = std::numeric_limits<double>::infinity();
  for (auto& s : r.ring) r.ring_min = std::min(r.ring_min, s.sigma);
  r.ratio = r.center_sigma / r.ring_min;
  return r;
}

double GridFunction::t(int l) const { return 2.0 * pi * l / Mt; }
double GridFunction::x(int q) const { return -pi / 2.0 + pi * q / (Mx - 1); }

std::vector<double> GridFunction::shifted_series(int i, int q, double shift) const {
  std::vector<double> out(static_cast<std::size_t>(Mt));
  double steps = shift / (2.0 * pi / Mt);
  double r = std::round(steps);
  if (std::abs(steps - r) < 1e-12) {
    int s = static_cast<int>(((static_cast<long>(r) % Mt) + Mt) % Mt);
    for (int l = 0; l < Mt; ++l) out[static_cast<std::size_t>(l)] = at(i, (l + s) % Mt, q);
    return out;
  }
  std::vector<cplx> c(static_cast<std::size_t>(Mt));
  for (int m = 0; m < Mt; ++m) {
    cplx s = 0.0;
    for (int l = 0; l < Mt; ++l) s += at(i, l, q) * std::polar(1.0, -2.0 * pi * m * l / Mt);
    c[static_cast<std::size_t>(m)] = s / static_cast<double>(Mt);
  }
  for (int l = 0; l < Mt; ++l) {
    double tt = t(l) + shift, v = 0.0;
    for (int m = 0; m < Mt; ++m) {
      int k = 2 * m < Mt ? m : m - Mt;
      if (2 * m == Mt) v += c[static_cast<std::size_t>(m)].real() * std::cos(m * tt);
      else v += (c[static_cast<std::size_t>(m)] * std::polar(1.0, k * tt)).real();
    }
    out[static_cast<std::size_t>(l)] = v;
  }
  return out;
}

GridFunction sample(int N, int Mt, int Mx, const std::function<double(int, double, double)>& f) {
  if (Mt < 4 || Mx < 3) throw std::invalid_argument("grid too small");
  GridFunction u{N, Mt, Mx, std::vector<double>(static_cast<std::size_t>(N) * Mt * Mx)};
  for (int i = 0; i < N; ++i)
    for (int l = 0; l < Mt; ++l)
      for (int q = 0; q < Mx; ++q) u.at(i, l, q) = f(i, u.t(l), u.x(q));
  return u;
}

GridFunction reference_wave(int which, int N, int Mt, int Mx) {
  if (which < 1 || which > 3) throw std::invalid_argument("reference waves are numbered 1 to 3");
  return sample(N, Mt, Mx, [which, N](int i, double t, double x) {
    double re = std::cos(2.0 * pi * i / N), im = std::sin(2.0 * pi * i / N);
    switch (which) {
    case 1: return std::cos(x) * (std::cos(t) * re - std::sin(t) * im);
    case 2: return std::cos(x) * std::cos(t) * re;
    default: return std::cos(x) * std::cos(t) * im;
    }
  });
}

std::vector<RelationCheck> symmetry_check(const GridFunction& u, const std::vector<SymmetryRelation>& relations,
                                          double tol) {
  std::vector<RelationCheck> out;
  for (const auto& r : relations) {
    double worst = 0.0;
    for (int i = 0; i < u.N; ++i) {
      int src = dihedral_act(u.N, r.sigma, i);
      for (int q = 0; q < u.Mx; ++q) {
        int qx = r.kappa2 < 0 ? u.Mx - 1 - q : q;
        auto series = u.shifted_series(src, qx, r.shift.radians());
        for (int l = 0; l < u.Mt; ++l)
          worst = std::max(worst, std::abs(r.kappa1 * series[static_cast<std::size_t>(l)] - u.at(i, l, q)));
      }
    }
    out.push_back({r.text, worst, worst <= tol});
  }
  return out;
}

double mode_profile(int n, double x) { return n % 2 != 0 ? std::cos(n * x) : std::sin(n * x); }

Eigen::MatrixXd fixed_space(int N, int m, int n_phys, int j, const std::vector<CircleElement>& generators) {
  const int D = 2 * N;
  const double parity = n_phys % 2 != 0 ? 1.0 : -1.0; // v_n(-x) = parity v_n(x)
  std::vector<Eigen::MatrixXd> blocks;
  for (const auto& g : generators) {
    double phase = m * g.theta.radians();
    double c = g.g.kappa1 * (g.g.kappa2 < 0 ? parity : 1.0);
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(D, D);
    for (int i = 0; i < N; ++i) {
      int s = dihedral_act(N, g.g.dihedral, i);
      G(i, s) = c * std::cos(phase);
      G(i, N + s) = c * std::sin(phase);
      G(N + i, s) = -c * std::sin(phase);
      G(N + i, N + s) = c * std::cos(phase);
    }
    blocks.push_back(G - Eigen::MatrixXd::Identity(D, D));
  }
  // Projector onto isotypic component j of the permutation representation.
  auto V = isotypic_irrep(N, j);
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(N, N);
  for (int e = 0; e < 2 * N; ++e) {
    auto g = dihedral_from_index(N, e);
    for (int i = 0; i < N; ++i) P(i, dihedral_act(N, g, i)) += V.character(g);
  }
  P *= static_cast<double>(V.dim()) / (2.0 * N);
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(D, D);
  Q.topLeftCorner(N, N) = Eigen::MatrixXd::Identity(N, N) - P;
  Q.bottomRightCorner(N, N) = Eigen::MatrixXd::Identity(N, N) - P;
  blocks.push_back(Q);
  Eigen::MatrixXd S(static_cast<long>(blocks.size()) * D, D);
  for (std::size_t b = 0; b < blocks.size(); ++b) S.middleRows(static_cast<long>(b) * D, D) = blocks[b];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(S, Eigen::ComputeFullV);
  int rank = 0;
  for (long k = 0; k < svd.singularValues().size(); ++k) rank += svd.singularValues()(k) > 1e-10;
  return svd.matrixV().rightCols(D - rank);
}

GridFunction mode_function(int N, int m, int n_phys, int j, BranchKind kind, int Mt, int Mx) {
  auto gens = maximal_orbit_generators(N, m, n_phys + 1, j);
  auto it = gens.find(kind);
  if (it == gens.end()) throw std::invalid_argument("kind " + kind_name(kind) + " does not occur for j = " + std::to_string(j));
  Eigen::MatrixXd F = fixed_space(N, m, n_phys, j, it->second);
  if (F.cols() == 0) throw InternalConsistencyError("empty fixed space for kind " + kind_name(kind));
  // Deterministic representative: the fixed-space projection of a fixed seed.
  Eigen::VectorXd seed = Eigen::VectorXd::LinSpaced(2 * N, 1.0, 2.0);
  Eigen::VectorXd v = F * (F.transpose() * seed);
  if (v.norm() < 1e-8) v = F.col(0);
  v /= v.cwiseAbs().maxCoeff();
  return sample(N, Mt, Mx, [&](int i, double t, double x) {
    return mode_profile(n_phys, x) * (v(i) * std::cos(m * t) + v(N + i) * std::sin(m * t));
  });
}

} // namespace eqbif
