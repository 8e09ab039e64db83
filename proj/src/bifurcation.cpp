#include "eqbif/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "eqbif/errors.hpp"

namespace eqbif {

std::string kind_name(BranchKind k) {
  switch (k) {
  case BranchKind::H: return "H";
  case BranchKind::S: return "S";
  case BranchKind::T: return "T";
  }
  return "?";
}

int dressing_of(int n) { return n % 2 != 0 ? 1 : 0; }

ModularData modular_data(int N, int j) {
  if (j <= 0 || j >= N) throw std::invalid_argument("modular data needs 0 < j < N");
  int g = std::gcd(N, j);
  ModularData d{N / g, j / g, 0};
  for (int h = 1; h <= d.Nt; ++h)
    if ((h * d.jt) % d.Nt == 1 % d.Nt) {
      d.h = h;
      break;
    }
  return d;
}

std::vector<BranchKind> kinds_for(int N, int j) {
  if (j > 0 && 2 * j < N) return {BranchKind::H, BranchKind::S, BranchKind::T};
  return {BranchKind::H};
}

GIrrep mode_irrep(int N, int m, int n, int j) { return {m, {isotypic_irrep(N, j), dressing_of(n)}}; }

std::map<BranchKind, std::vector<CircleElement>> maximal_orbit_generators(int N, int m, int n, int j) {
  if (m < 1) throw std::invalid_argument("maximal orbit types need m >= 1");
  auto idx = isotypic_indices(N);
  if (std::find(idx.begin(), idx.end(), j) == idx.end())
    throw std::invalid_argument("j = " + std::to_string(j) + " is not an isotypic index for N = " + std::to_string(N));
  auto rot = [N](int r) { return DihedralElement{((r % N) + N) % N, false}; };
  const DihedralElement kappa{0, true};
  const Turn half_m(1, 2 * m);
  auto el = [](Turn t, DihedralElement d) { return CircleElement{t, {1, 1, d}}; };
  const std::vector<CircleElement> common{{half_m, {-1, 1, rot(0)}}, {Turn(), {n % 2 ? -1 : 1, -1, rot(0)}}};
  auto with = [&](std::initializer_list<CircleElement> extra) {
    auto v = common;
    v.insert(v.end(), extra);
    return v;
  };

  std::map<BranchKind, std::vector<CircleElement>> out;
  if (j == 0) {
    out[BranchKind::H] = with({el(Turn(), rot(1)), el(Turn(), kappa)});
  } else if (2 * j == N) {
    out[BranchKind::H] = with({el(half_m, rot(1)), el(Turn(), kappa)});
  } else {
    out[BranchKind::H] = with({el(Turn(-j, static_cast<std::int64_t>(N) * m), rot(1))});
    auto md = modular_data(N, j);
    if (md.Nt % 2 != 0) {
      out[BranchKind::S] = with({el(Turn(), kappa), el(Turn(), rot(md.Nt))});
      out[BranchKind::T] = with({el(half_m, kappa), el(Turn(), rot(md.Nt))});
    } else {
      out[BranchKind::S] = with({el(Turn(), kappa), el(half_m, rot(md.Nt / 2 * md.h))});
      out[BranchKind::T] =
          with({el(Turn(), dihedral_mul(N, kappa, rot(md.h))), el(half_m, rot(md.Nt / 2 * md.h))});
    }
  }
  auto V = mode_irrep(N, m, n, j);
  for (auto& [kind, gens] : out)
    if (fixed_dim(V, gens) <= 0)
      throw InternalConsistencyError("generators of kind " + kind_name(kind) + " fix nothing in " + V.label());
  return out;
}

SymmetryRelation relation_of(int N, const CircleElement& g) {
  SymmetryRelation r{"", g.theta, g.g.kappa1, g.g.kappa2, g.g.dihedral};
  std::string index = r.sigma.reflection ? "-i" : "i";
  if (r.sigma.rotation != 0) index += "+" + std::to_string(r.sigma.rotation);
  if (r.sigma.rotation != 0 || r.sigma.reflection) index += " mod " + std::to_string(N);
  std::string t = r.shift == Turn() ? "t" : "t+2pi*" + r.shift.str();
  r.text = std::string(r.kappa1 < 0 ? "-" : "") + "u_{" + index + "}(" + t + "," + (r.kappa2 < 0 ? "-x" : "x") +
           ") = u_i(t,x)";
  return r;
}

std::vector<SymmetryRelation> symmetry_relations(BranchKind kind, int N, int m, int n, int j) {
  auto all = maximal_orbit_generators(N, m, n, j);
  auto it = all.find(kind);
  if (it == all.end()) throw std::invalid_argument("kind " + kind_name(kind) + " does not occur for j = " + std::to_string(j));
  std::vector<SymmetryRelation> out;
  for (const auto& g : it->second)
    if (!(g == CircleElement{})) out.push_back(relation_of(N, g));
  return out;
}

namespace {

BifurcationInvariant assemble(const EquivariantContext& ctx, const ModelParams& p, double alpha, double beta,
                              int m_max, int n_max, bool h_fixed, const Tolerances& tol) {
  if (p.N != ctx.N()) throw std::invalid_argument("context and parameters disagree on N");
  auto sets = index_sets(alpha, beta, p, m_max, n_max, h_fixed, tol);
  if (sets.outside_window)
    throw WindowTooSmallError("a zero of mu lies outside the window (m <= " + std::to_string(m_max) +
                              ", n <= " + std::to_string(n_max) + "); enlarge the window");
  if (!h_fixed && !sets.b1)
    throw DegenerateParameterError("mu_{0,n,j,k} vanishes at this point (condition B1); use H-fixed mode");
  BifurcationInvariant inv;
  inv.h_fixed = h_fixed;
  TwistedSum sum;
  for (const auto& q : sets.null) {
    int r = rho(q, p, alpha);
    inv.contributions.push_back({q, alpha, beta, r});
    if (r != 0) sum = sum + ctx.twisted_basic_degree(mode_irrep(p.N, q.m, q.n, q.j)) * r;
  }
  if (h_fixed) {
    inv.value = sum;
    return inv;
  }
  inv.negative = sets.negative;
  BurnsideElement factor = BurnsideElement::unit(ctx.lattice());
  for (const auto& q : sets.negative)
    factor = ctx.burnside().multiply(factor, ctx.basic_degree({isotypic_irrep(p.N, q.j), dressing_of(q.n)}));
  inv.value = ctx.twisted().module_product(factor, sum);
  return inv;
}

} // namespace

BifurcationInvariant local_invariant(const EquivariantContext& ctx, const ModelParams& p, double alpha, double beta,
                                     int m_max, int n_max, const Tolerances& tol) {
  return assemble(ctx, p, alpha, beta, m_max, n_max, false, tol);
}

BifurcationInvariant h_fixed_invariant(const EquivariantContext& ctx, const ModelParams& p, double alpha,
                                       double beta, int m_max, int n_max, const Tolerances& tol) {
  return assemble(ctx, p, alpha, beta, m_max, n_max, true, tol);
}

std::vector<CriticalSetPoint> critical_set(const ModelParams& p, int m_max, int n_max, Exec exec,
                                           const Tolerances& tol) {
  std::vector<CriticalSetPoint> out;
  for (const auto& c : enumerate_critical_points(p, m_max, n_max, exec, tol)) {
    auto it = std::find_if(out.begin(), out.end(), [&](const CriticalSetPoint& s) {
      return std::abs(s.alpha - c.alpha) < tol.separation && std::abs(s.beta - c.beta) < tol.separation;
    });
    if (it == out.end()) out.push_back({c.alpha, c.beta, {c}});
    else it->quads.push_back(c);
  }
  return out;
}

Prediction predict_branches(const EquivariantContext& ctx, const ModelParams& p, int m_max, int n_max,
                            PredictionMode mode, const Tolerances& tol) {
  const bool global = mode == PredictionMode::Global;
  Prediction pred;
  pred.mode = mode;
  pred.m_max = m_max;
  pred.n_max = n_max;
  const auto& T = ctx.twisted();

  std::vector<PointPrediction> points;
  for (auto& cp : critical_set(p, m_max, n_max, Exec::Parallel, tol)) {
    PointPrediction pp;
    pp.point = cp;
    try {
      pp.invariant = global ? h_fixed_invariant(ctx, p, cp.alpha, cp.beta, m_max, n_max, tol)
                            : local_invariant(ctx, p, cp.alpha, cp.beta, m_max, n_max, tol);
    } catch (const WindowTooSmallError&) {
      throw;
    } catch (const DegenerateParameterError& e) {
      pp.diagnostics.push_back(e.what());
    }
    points.push_back(std::move(pp));
  }

  // Sign of rho per folding across the window (global mode needs one sign per folding).
  std::map<int, std::set<int>> signs;
  for (const auto& pp : points)
    for (const auto& c : pp.invariant.contributions) signs[c.q.m].insert(c.rho);
  std::set<int> mixed_global;
  if (global)
    for (auto& [s, v] : signs)
      if (v.count(1) && v.count(-1)) {
        mixed_global.insert(s);
        pred.diagnostics.push_back("rho changes sign within folding " + std::to_string(s) +
                                   " across the window; global predictions at this folding withheld");
      }

  for (auto& pp : points) {
    std::map<int, std::vector<CriticalPoint>> slices;
    for (const auto& c : pp.invariant.contributions) slices[c.q.m].push_back(c);
    for (auto& [s, quads] : slices) {
      if (global && (s % 2 == 0 || mixed_global.count(s))) continue;
      std::set<int> sg;
      for (auto& c : quads) sg.insert(c.rho);
      if (sg.count(0)) pp.diagnostics.push_back("rho = 0 at folding " + std::to_string(s) + " (zeta' vanishes)");
      if (sg.count(1) && sg.count(-1)) {
        pp.diagnostics.push_back("rho changes sign within folding " + std::to_string(s) + "; prediction withheld");
        continue;
      }
      std::map<TwistedSubgroup, Branch> candidates;
      for (const auto& c : quads) {
        if (c.rho == 0) continue;
        for (auto& [kind, gens] : maximal_orbit_generators(p.N, s, c.q.n, c.q.j)) {
          auto type = T.canonicalize(T.from_generators(gens, s)).rep;
          if (candidates.count(type)) continue;
          Branch b;
          b.kind = kind;
          b.fold = s;
          b.type = type;
          b.generators = gens;
          b.unbounded = global;
          b.non_stationary = global;
          b.relations = symmetry_relations(kind, p.N, s, c.q.n, c.q.j);
          b.n = c.q.n;
          b.j = c.q.j;
          candidates.emplace(type, b);
        }
      }
      for (auto& [type, b] : candidates) {
        std::int64_t coeff = 0;
        for (const auto& c : quads) coeff += c.rho * ctx.twisted_basic_degree(mode_irrep(p.N, s, c.q.n, c.q.j)).coeff(type);
        if (coeff != pp.invariant.value.coeff(type))
          throw InternalConsistencyError("maximal-kind coefficient of " + T.to_string(type) +
                                         " differs between the slice sum and the invariant");
        if (coeff == 0) continue;
        b.coeff = coeff;
        pp.branches.push_back(b);
      }
    }
    std::stable_sort(pp.branches.begin(), pp.branches.end(), [](const Branch& a, const Branch& b) {
      return std::pair(a.fold, a.kind) < std::pair(b.fold, b.kind);
    });
    pred.points.push_back(std::move(pp));
  }
  return pred;
}

} // namespace eqbif
