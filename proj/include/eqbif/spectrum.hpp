#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqbif/parallel.hpp"
#include "eqbif/reps.hpp"
#include "eqbif/turn.hpp"

namespace eqbif {

using cplx = std::complex<double>;

// Strictly monotone coupling strength zeta(alpha).
class CouplingCurve {
public:
  enum class Kind { Sigmoid, Linear, Table };

  static CouplingCurve sigmoid();
  // zeta(alpha) = slope * alpha + offset, slope != 0.
  static CouplingCurve linear(double slope, double offset = 0.0);
  // Piecewise-linear interpolation of (alpha, zeta) points, alpha strictly
  // increasing, zeta strictly monotone. Defined only on [alpha_0, alpha_last].
  static CouplingCurve table(std::vector<std::pair<double, double>> points);

  Kind kind() const { return kind_; }
  std::string name() const;
  double operator()(double alpha) const;
  double derivative(double alpha) const;
  // The open interval of attained values.
  std::pair<double, double> range() const;
  std::optional<double> inverse(double y) const;
  bool increasing() const;

  double slope() const { return slope_; }
  double offset() const { return offset_; }
  const std::vector<std::pair<double, double>>& points() const { return points_; }

private:
  Kind kind_ = Kind::Sigmoid;
  double slope_ = 1.0;
  double offset_ = 0.0;
  std::vector<std::pair<double, double>> points_;
};

struct Tolerances {
  double degenerate_sin = 1e-8; // |sin(m tau)| below this rejects tau
  double zero_mu = 1e-9;        // |mu| below this counts as a zero
  double winding_round = 0.1;   // winding sums must land this close to an integer
  double separation = 1e-6;     // critical points closer than this are merged
  double rational_pi = 1e-9;    // tau/pi within this of p/q (q <= 1000) warns
};

struct ModelParams {
  Rational nu{1, 1};
  double delta = 1.0;
  double tau = 2.0;
  int N = 3;
  CouplingCurve zeta = CouplingCurve::sigmoid();
  LaplacianEigendata eig;

  // Builds the cycle eigendata for N and validates.
  static ModelParams make(Rational nu, double delta, double tau, int N, CouplingCurve zeta);
  // Throws DegenerateParameterError when delta <= 0, tau <= 0 or N < 3.
  void validate() const;
  // True when tau is numerically indistinguishable from a rational multiple of pi.
  bool tau_near_rational_pi(const Tolerances& tol = {}) const;
};

struct IndexQuad {
  int m = 0;
  int n = 1;
  int j = 0;
  int k = 1;
  auto operator<=>(const IndexQuad&) const = default;
  std::string str() const;
};

cplx xi(int m, int n, const ModelParams& p);

struct XiLowerBound {
  double C = 0.0;
  double d1 = 0.0; // delta/4 min(q/p, 1)
  double d2 = 0.0; // (1/q) min(1, p/q + delta q/2)
  double d3 = 0.0; // min(1, delta)
  double window_min = 0.0;
  int m_count = 0; // window is 0 <= m < m_count
  int n_count = 0; // and 1 <= n < n_count
};

XiLowerBound xi_lower_bound_constant(const ModelParams& p);

// min over 0 <= m <= m_max, 1 <= n <= n_max of |xi_{m,n}| - C (m + n).
double xi_lower_bound_margin(const ModelParams& p, double C, int m_max, int n_max, Exec exec = Exec::Parallel);

// zeta_{j,k}(alpha) = zeta(alpha) (z_{j,k} + 1).
double zeta_jk(const ModelParams& p, int j, int k, double alpha);

cplx mu(const IndexQuad& q, double alpha, double beta, const ModelParams& p);
// Numerator xi * mu; the eigenvalue of the linearized operator itself.
cplx mu_numerator(const IndexQuad& q, double alpha, double beta, const ModelParams& p);

// Closed-form critical parameters for q (m >= 1), if zeta attains the needed value.
std::optional<std::pair<double, double>> critical_point(const IndexQuad& q, const ModelParams& p,
                                                        const Tolerances& tol = {});

// sign(-zeta_{j,k}'(alpha0) sin(m tau)); 0 when zeta' vanishes.
int rho(const IndexQuad& q, const ModelParams& p, double alpha0);

// Winding number of mu_q around the circle of given radius about center in the
// (alpha, beta) plane, counter-clockwise.
int winding_oracle(const IndexQuad& q, const ModelParams& p, std::pair<double, double> center, double radius,
                   int steps = 10000, const Tolerances& tol = {});

struct CriticalPoint {
  IndexQuad q;
  double alpha = 0.0;
  double beta = 0.0;
  int rho = 0;
};

// Every quad with 1 <= m <= m_max, 1 <= n <= n_max and all (j, k) whose
// critical point exists, sorted by quad.
std::vector<CriticalPoint> enumerate_critical_points(const ModelParams& p, int m_max, int n_max,
                                                     Exec exec = Exec::Parallel, const Tolerances& tol = {});

struct IndexSets {
  std::vector<IndexQuad> null;               // Sigma_0 (m >= 1)
  std::vector<IndexQuad> negative;           // Sigma_- (m = 0)
  std::map<int, std::vector<IndexQuad>> slices; // Sigma_s by folding s
  bool b1 = true;                            // mu_{0,n,j,k} != 0 for all n
  bool outside_window = false;               // a zero exists beyond (m_max, n_max)
};

// Sigma_0 is found completely: a zero needs |beta sin(m tau)| = delta m, so
// m <= |beta|/delta, and n is then fixed by the real part. Sigma_- is found
// completely from n^2 < -zeta_{j,k}(alpha) - beta.
IndexSets index_sets(double alpha, double beta, const ModelParams& p, int m_max, int n_max, bool h_fixed,
                     const Tolerances& tol = {});

} // namespace eqbif
