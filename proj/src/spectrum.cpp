#include "eqbif/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "eqbif/errors.hpp"

namespace eqbif {

CouplingCurve CouplingCurve::sigmoid() { return CouplingCurve{}; }

CouplingCurve CouplingCurve::linear(double slope, double offset) {
  if (slope == 0.0 || !std::isfinite(slope)) throw std::invalid_argument("linear coupling needs a nonzero slope");
  CouplingCurve c;
  c.kind_ = Kind::Linear;
  c.slope_ = slope;
  c.offset_ = offset;
  return c;
}

CouplingCurve CouplingCurve::table(std::vector<std::pair<double, double>> points) {
  if (points.size() < 2) throw std::invalid_argument("coupling table needs at least two points");
  bool up = points[1].second > points[0].second;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].first > points[i - 1].first)) throw std::invalid_argument("coupling table alphas must increase");
    double d = points[i].second - points[i - 1].second;
    if (d == 0.0 || (d > 0) != up) throw std::invalid_argument("coupling table must be strictly monotone");
  }
  CouplingCurve c;
  c.kind_ = Kind::Table;
  c.points_ = std::move(points);
  return c;
}

std::string CouplingCurve::name() const {
  switch (kind_) {
  case Kind::Sigmoid: return "sigmoid";
  case Kind::Linear: return "linear";
  case Kind::Table: return "table";
  }
  return "";
}

namespace {

std::size_t segment(const std::vector<std::pair<double, double>>& pts, double a) {
  if (a < pts.front().first || a > pts.back().first)
    throw std::domain_error("alpha outside the coupling table");
  auto it = std::upper_bound(pts.begin(), pts.end(), a, [](double x, const auto& p) { return x < p.first; });
  std::size_t i = static_cast<std::size_t>(it - pts.begin());
  return std::clamp<std::size_t>(i, 1, pts.size() - 1) - 1;
}

} // namespace

double CouplingCurve::operator()(double a) const {
  switch (kind_) {
  case Kind::Sigmoid: return 1.0 / (1.0 + std::exp(-a));
  case Kind::Linear: return slope_ * a + offset_;
  case Kind::Table: {
    std::size_t i = segment(points_, a);
    auto [a0, y0] = points_[i];
    auto [a1, y1] = points_[i + 1];
    return y0 + (y1 - y0) * (a - a0) / (a1 - a0);
  }
  }
  return 0.0;
}

double CouplingCurve::derivative(double a) const {
  switch (kind_) {
  case Kind::Sigmoid: {
    double s = 1.0 / (1.0 + std::exp(-a));
    return s * (1.0 - s);
  }
  case Kind::Linear: return slope_;
  case Kind::Table: {
    std::size_t i = segment(points_, a);
    return (points_[i + 1].second - points_[i].second) / (points_[i + 1].first - points_[i].first);
  }
  }
  return 0.0;
}

std::pair<double, double> CouplingCurve::range() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (kind_) {
  case Kind::Sigmoid: return {0.0, 1.0};
  case Kind::Linear: return {-inf, inf};
  case Kind::Table: {
    double a = points_.front().second, b = points_.back().second;
    return {std::min(a, b), std::max(a, b)};
  }
  }
  return {0.0, 0.0};
}

std::optional<double> CouplingCurve::inverse(double y) const {
  auto [lo, hi] = range();
  if (!(y > lo && y < hi)) return std::nullopt;
  switch (kind_) {
  case Kind::Sigmoid: return std::log(y / (1.0 - y));
  case Kind::Linear: return (y - offset_) / slope_;
  case Kind::Table:
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
      auto [a0, y0] = points_[i];
      auto [a1, y1] = points_[i + 1];
      if ((y - y0) * (y - y1) <= 0.0) return a0 + (a1 - a0) * (y - y0) / (y1 - y0);
    }
    return std::nullopt;
  }
  return std::nullopt;
}

bool CouplingCurve::increasing() const {
  switch (kind_) {
  case Kind::Sigmoid: return true;
  case Kind::Linear: return slope_ > 0;
  case Kind::Table: return points_[1].second > points_[0].second;
  }
  return true;
}

ModelParams ModelParams::make(Rational nu, double delta, double tau, int N, CouplingCurve zeta) {
  ModelParams p;
  p.nu = nu;
  p.delta = delta;
  p.tau = tau;
  p.N = N;
  p.zeta = std::move(zeta);
  p.validate();
  p.eig = cycle_laplacian_eigendata(N);
  return p;
}

void ModelParams::validate() const {
  if (nu.p <= 0 || nu.q <= 0) throw DegenerateParameterError("nu must be a positive rational");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DegenerateParameterError("damping delta must be positive");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DegenerateParameterError("delay tau must be positive");
  if (N < 3) throw DegenerateParameterError("dihedral order N must be at least 3");
}

bool ModelParams::tau_near_rational_pi(const Tolerances& tol) const {
  double r = tau / std::numbers::pi;
  for (int q = 1; q <= 1000; ++q)
    if (std::abs(r * q - std::round(r * q)) < tol.rational_pi * q) return true;
  return false;
}

std::string IndexQuad::str() const {
  return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

cplx xi(int m, int n, const ModelParams& p) {
  double nu = p.nu.value();
  return {-nu * nu * m * m + static_cast<double>(n) * n + 1.0, p.delta * m};
}

XiLowerBound xi_lower_bound_constant(const ModelParams& p) {
  const double P = static_cast<double>(p.nu.p), Q = static_cast<double>(p.nu.q);
  const double d = p.delta, nu = P / Q;
  XiLowerBound b;
  b.d1 = d / 4.0 * std::min(Q / P, 1.0);
  b.d2 = (1.0 / Q) * std::min(1.0, P / Q + d * Q / 2.0);
  b.d3 = std::min(1.0, d);
  // M: smallest value with delta m >= 2 for m >= M. N: smallest value with
  // n^2 >= n + 4 nu^2/delta^2 + 1 for n >= N.
  const double M = 2.0 / d;
  const double c = 4.0 * nu * nu / (d * d) + 1.0;
  const double Nn = (1.0 + std::sqrt(1.0 + 4.0 * c)) / 2.0;
  b.m_count = static_cast<int>(std::ceil(M));
  b.n_count = static_cast<int>(std::ceil(Nn));
  b.window_min = std::numeric_limits<double>::infinity();
  for (int m = 0; m < M; ++m)
    for (int n = 1; n < Nn; ++n) b.window_min = std::min(b.window_min, std::abs(xi(m, n, p)) / (m + n));
  b.C = std::min({b.d1, b.d2, b.d3, b.window_min});
  return b;
}

double xi_lower_bound_margin(const ModelParams& p, double C, int m_max, int n_max, Exec exec) {
  double worst = std::numeric_limits<double>::infinity();
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static) reduction(min : worst)
    for (int m = 0; m <= m_max; ++m)
      for (int n = 1; n <= n_max; ++n) worst = std::min(worst, std::abs(xi(m, n, p)) - C * (m + n));
  } else {
    for (int m = 0; m <= m_max; ++m)
      for (int n = 1; n <= n_max; ++n) worst = std::min(worst, std::abs(xi(m, n, p)) - C * (m + n));
  }
  return worst;
}

double zeta_jk(const ModelParams& p, int j, int k, double alpha) { return p.zeta(alpha) * (p.eig.at(j, k).z + 1.0); }

cplx mu_numerator(const IndexQuad& q, double alpha, double beta, const ModelParams& p) {
  double nu = p.nu.value();
  cplx a{-nu * nu * q.m * q.m + static_cast<double>(q.n) * q.n, p.delta * q.m};
  return a + zeta_jk(p, q.j, q.k, alpha) + beta * std::polar(1.0, -q.m * p.tau);
}

cplx mu(const IndexQuad& q, double alpha, double beta, const ModelParams& p) {
  return mu_numerator(q, alpha, beta, p) / xi(q.m, q.n, p);
}

namespace {

double checked_sin(int m, const ModelParams& p, const Tolerances& tol) {
  double s = std::sin(m * p.tau);
  if (std::abs(s) < tol.degenerate_sin)
    throw DegenerateParameterError("sin(m tau) vanishes for m = " + std::to_string(m) + "; tau is resonant");
  return s;
}

} // namespace

std::optional<std::pair<double, double>> critical_point(const IndexQuad& q, const ModelParams& p,
                                                        const Tolerances& tol) {
  if (q.m < 1) throw std::invalid_argument("critical points need m >= 1");
  double s = checked_sin(q.m, p, tol);
  double nu = p.nu.value();
  double beta = p.delta * q.m / s;
  double target = (nu * nu * q.m * q.m - static_cast<double>(q.n) * q.n - p.delta * q.m * std::cos(q.m * p.tau) / s) /
                  (p.eig.at(q.j, q.k).z + 1.0);
  auto alpha = p.zeta.inverse(target);
  if (!alpha) return std::nullopt;
  return std::make_pair(*alpha, beta);
}

int rho(const IndexQuad& q, const ModelParams& p, double alpha0) {
  double v = -p.zeta.derivative(alpha0) * (p.eig.at(q.j, q.k).z + 1.0) * std::sin(q.m * p.tau);
  return (v > 0) - (v < 0);
}

int winding_oracle(const IndexQuad& q, const ModelParams& p, std::pair<double, double> center, double radius,
                   int steps, const Tolerances& tol) {
  double total = 0.0;
  auto at = [&](int i) {
    double th = 2.0 * std::numbers::pi * i / steps;
    cplx v = mu(q, center.first + radius * std::cos(th), center.second + radius * std::sin(th), p);
    if (std::abs(v) < tol.zero_mu) throw InconclusiveError("mu vanishes on the winding circle; change the radius");
    return v;
  };
  cplx prev = at(0);
  for (int i = 1; i <= steps; ++i) {
    cplx cur = at(i % steps);
    total += std::arg(cur / prev);
    prev = cur;
  }
  double w = total / (2.0 * std::numbers::pi);
  double r = std::round(w);
  if (std::abs(w - r) > tol.winding_round) throw InconclusiveError("winding sum is not near an integer");
  return static_cast<int>(r);
}

std::vector<CriticalPoint> enumerate_critical_points(const ModelParams& p, int m_max, int n_max, Exec exec,
                                                     const Tolerances& tol) {
  for (int m = 1; m <= m_max; ++m) checked_sin(m, p, tol);
  std::vector<IndexQuad> quads;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 1; n <= n_max; ++n)
      for (const auto& e : p.eig.entries) quads.push_back({m, n, e.j, e.k});
  std::vector<std::optional<CriticalPoint>> found(quads.size());
  auto work = [&](std::size_t i) {
    auto cp = critical_point(quads[i], p, tol);
    if (cp) found[i] = CriticalPoint{quads[i], cp->first, cp->second, rho(quads[i], p, cp->first)};
  };
  const long total = static_cast<long>(quads.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < total; ++i) work(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < total; ++i) work(static_cast<std::size_t>(i));
  }
  std::vector<CriticalPoint> out;
  for (auto& f : found)
    if (f) out.push_back(*f);
  return out;
}

IndexSets index_sets(double alpha, double beta, const ModelParams& p, int m_max, int n_max, bool h_fixed,
                     const Tolerances& tol) {
  IndexSets s;
  const double nu = p.nu.value();
  const int m_top = static_cast<int>(std::floor(std::abs(beta) / p.delta)) + 1;
  for (int m = 1; m <= m_top; ++m) {
    if (h_fixed && m % 2 == 0) continue;
    for (const auto& e : p.eig.entries) {
      double n2 = nu * nu * m * m - zeta_jk(p, e.j, e.k, alpha) - beta * std::cos(m * p.tau);
      if (n2 < 0.5) continue;
      int n = static_cast<int>(std::lround(std::sqrt(n2)));
      IndexQuad q{m, n, e.j, e.k};
      if (n < 1 || std::abs(mu(q, alpha, beta, p)) >= tol.zero_mu) continue;
      if (m > m_max || n > n_max) s.outside_window = true;
      s.null.push_back(q);
      s.slices[m].push_back(q);
    }
  }
  std::sort(s.null.begin(), s.null.end());
  for (auto& [m, v] : s.slices) std::sort(v.begin(), v.end());
  for (const auto& e : p.eig.entries) {
    double bound = -zeta_jk(p, e.j, e.k, alpha) - beta;
    for (int n = 1; static_cast<double>(n) * n <= bound + 1.0; ++n) {
      double v = mu({0, n, e.j, e.k}, alpha, beta, p).real();
      if (std::abs(v) < tol.zero_mu) s.b1 = false;
      else if (v < 0) s.negative.push_back({0, n, e.j, e.k});
    }
  }
  std::sort(s.negative.begin(), s.negative.end());
  return s;
}

} // namespace eqbif
