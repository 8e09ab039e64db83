#include "eqbif/report.hpp"

#include <cstdio>
#include <sstream>

namespace eqbif {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json quad_json(const IndexQuad& q) { return {{"m", q.m}, {"n", q.n}, {"j", q.j}, {"k", q.k}}; }

} // namespace

json curve_json(const CouplingCurve& c) {
  json j{{"kind", c.name()}};
  if (c.kind() == CouplingCurve::Kind::Linear) {
    j["slope"] = c.slope();
    j["offset"] = c.offset();
  } else if (c.kind() == CouplingCurve::Kind::Table) {
    j["points"] = json::array();
    for (auto& [a, z] : c.points()) j["points"].push_back({a, z});
  }
  return j;
}

CouplingCurve curve_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "sigmoid") return CouplingCurve::sigmoid();
    throw std::invalid_argument("unknown coupling curve '" + j.get<std::string>() + "'");
  }
  auto kind = j.at("kind").get<std::string>();
  if (kind == "sigmoid") return CouplingCurve::sigmoid();
  if (kind == "linear") return CouplingCurve::linear(j.at("slope").get<double>(), j.value("offset", 0.0));
  if (kind == "table") {
    std::vector<std::pair<double, double>> pts;
    for (auto& p : j.at("points")) pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    return CouplingCurve::table(std::move(pts));
  }
  throw std::invalid_argument("unknown coupling curve kind '" + kind + "'");
}

json params_json(const ModelParams& p) {
  return {{"nu", p.nu.str()}, {"delta", p.delta}, {"tau", p.tau}, {"N", p.N}, {"zeta", curve_json(p.zeta)}};
}

json tolerances_json(const Tolerances& tol) {
  return {{"degenerate_sin", tol.degenerate_sin},
          {"zero_mu", tol.zero_mu},
          {"winding_round", tol.winding_round},
          {"separation", tol.separation},
          {"rational_pi", tol.rational_pi}};
}

json report_header(const std::string& command, const ModelParams& p, const Tolerances& tol) {
  json h{{"schema", kSchemaVersion},
         {"command", command},
         {"params", params_json(p)},
         {"tolerances", tolerances_json(tol)}};
  if (p.tau_near_rational_pi(tol)) h["warnings"] = {"tau is numerically close to a rational multiple of pi"};
  return h;
}

json twisted_sum_json(const TwistedAlgebra& T, const TwistedSum& s) {
  json out = json::array();
  for (auto& [H, c] : s.terms()) out.push_back({T.to_string(H), c});
  return out;
}

json burnside_json(const SubgroupClassLattice& L, const BurnsideElement& e) {
  json out = json::array();
  for (auto& [k, c] : e.terms()) out.push_back({L.class_label(k), c});
  return out;
}

json critical_points_json(const std::vector<CriticalPoint>& points) {
  json out = json::array();
  for (const auto& c : points) {
    json e = quad_json(c.q);
    e["alpha"] = c.alpha;
    e["beta"] = c.beta;
    e["rho"] = c.rho;
    e["source"] = {{"beta", "delta*m/sin(m*tau)"},
                   {"alpha", "zeta^-1((nu^2 m^2 - n^2 - delta*m*cot(m*tau)) / (z_j + 1))"},
                   {"rho", "sign(-zeta'(alpha)*(z_j+1)*sin(m*tau))"}};
    out.push_back(std::move(e));
  }
  return out;
}

std::string critical_points_csv(const std::vector<CriticalPoint>& points) {
  std::string s = "m,n,j,k,alpha,beta,rho\n";
  for (const auto& c : points)
    s += std::to_string(c.q.m) + "," + std::to_string(c.q.n) + "," + std::to_string(c.q.j) + "," +
         std::to_string(c.q.k) + "," + num(c.alpha) + "," + num(c.beta) + "," + std::to_string(c.rho) + "\n";
  return s;
}

json invariant_json(const EquivariantContext& ctx, const BifurcationInvariant& inv) {
  json j{{"h_fixed", inv.h_fixed},
         {"value", twisted_sum_json(ctx.twisted(), inv.value)},
         {"null_set", critical_points_json(inv.contributions)}};
  if (!inv.h_fixed) {
    json neg = json::array();
    for (auto& q : inv.negative) neg.push_back(quad_json(q));
    j["negative_set"] = neg;
  }
  j["source"] = inv.h_fixed ? "sum over Sigma_0 of rho * twisted basic degree"
                            : "product over Sigma_- of basic degrees times sum over Sigma_0 of rho * twisted basic degree";
  return j;
}

json prediction_json(const EquivariantContext& ctx, const ModelParams& p, const Prediction& pred,
                     const Tolerances& tol) {
  const bool global = pred.mode == PredictionMode::Global;
  json out = report_header("predict", p, tol);
  out["mode"] = global ? "h-fixed" : "full";
  out["window"] = {{"m_max", pred.m_max}, {"n_max", pred.n_max}};
  out["notes"] = json::array();
  if (global)
    out["notes"].push_back("global sums are truncated to the window; unboundedness needs one rho sign per folding "
                           "across the window, which is checked");
  for (auto& d : pred.diagnostics) out["notes"].push_back(d);
  out["critical_points"] = json::array();
  for (const auto& pp : pred.points) {
    json e{{"alpha", pp.point.alpha}, {"beta", pp.point.beta}};
    e["quads"] = critical_points_json(pp.point.quads);
    e["invariant"] = twisted_sum_json(ctx.twisted(), pp.invariant.value);
    json br = json::array();
    for (const auto& b : pp.branches) {
      json g = json::array();
      for (auto& x : b.generators) g.push_back(circle_element_label(x));
      json rel = json::array();
      for (auto& r : b.relations) rel.push_back(r.text);
      // The x-parity of the profile v_n matches the label n + 1.
      json prof = json::array();
      for (auto& r : symmetry_relations(b.kind, p.N, b.fold, b.n + 1, b.j)) prof.push_back(r.text);
      br.push_back({{"kind", kind_name(b.kind)},
                    {"fold", b.fold},
                    {"orbit_type", ctx.twisted().to_string(b.type)},
                    {"generators", g},
                    {"coeff", b.coeff},
                    {"unbounded", b.unbounded},
                    {"non_stationary", b.non_stationary},
                    {"relations", rel},
                    {"profile_relations", prof},
                    {"n", b.n},
                    {"j", b.j}});
    }
    e["branches"] = br;
    e["diagnostics"] = pp.diagnostics;
    out["critical_points"].push_back(std::move(e));
  }
  return out;
}

std::string scan_csv(const ScanResult& r) {
  std::string s = "d_alpha,d_beta,sigma_min\n0,0," + num(r.center_sigma) + "\n";
  for (const auto& pt : r.ring) s += num(pt.d_alpha) + "," + num(pt.d_beta) + "," + num(pt.sigma) + "\n";
  return s;
}

json scan_json(const ScanResult& r, double threshold) {
  return {{"center_sigma", r.center_sigma},
          {"ring_min", r.ring_min},
          {"ratio", r.ratio},
          {"threshold", threshold},
          {"verdict", r.ratio <= threshold ? "singular" : "no singularity"}};
}

std::string grid_csv(const GridFunction& u) {
  std::string s = "i,t,x,u\n";
  for (int i = 0; i < u.N; ++i)
    for (int l = 0; l < u.Mt; ++l)
      for (int q = 0; q < u.Mx; ++q)
        s += std::to_string(i) + "," + num(u.t(l)) + "," + num(u.x(q)) + "," + num(u.at(i, l, q)) + "\n";
  return s;
}

std::string characters_csv(int N) {
  auto G = dihedral_group(N);
  std::string s = "irrep";
  for (int a = 0; a < G.order(); ++a) s += "," + G.label(a);
  s += "\n";
  for (const auto& V : character_table(N)) {
    s += V.label();
    for (int a = 0; a < G.order(); ++a) s += "," + num(V.character(dihedral_from_index(N, a)));
    s += "\n";
  }
  return s;
}

std::string lattice_csv(const SubgroupClassLattice& L) {
  std::ostringstream os;
  os << "id,label,order,normalizer,weyl,members";
  for (int k = 0; k < L.size(); ++k) os << ",n_" << k;
  os << "\n";
  for (int h = 0; h < L.size(); ++h) {
    const auto& c = L.cls(h);
    os << h << ",\"" << L.class_label(h) << "\"," << c.order() << "," << c.normalizer_order << "," << c.weyl_order
       << "," << c.members.size();
    for (int k = 0; k < L.size(); ++k) os << "," << L.n(h, k);
    os << "\n";
  }
  return os.str();
}

std::string burnside_table_csv(const BurnsideRing& R, Exec exec) {
  const auto& L = *R.lattice();
  auto table = R.product_table(exec);
  std::ostringstream os;
  os << "h,k,product\n";
  for (int h = 0; h < L.size(); ++h)
    for (int k = 0; k < L.size(); ++k) {
      os << h << "," << k << ",\"";
      bool first = true;
      for (auto& [c, v] : table[static_cast<std::size_t>(h * L.size() + k)].terms()) {
        os << (first ? "" : " ") << v << "*" << c;
        first = false;
      }
      os << "\"\n";
    }
  return os.str();
}

std::string group_table_csv(const FiniteGroup& G) {
  std::ostringstream os;
  os << "a\\b";
  for (int b = 0; b < G.order(); ++b) os << ",\"" << G.label(b) << "\"";
  os << "\n";
  for (int a = 0; a < G.order(); ++a) {
    os << "\"" << G.label(a) << "\"";
    for (int b = 0; b < G.order(); ++b) os << "," << G.mul(a, b);
    os << "\n";
  }
  return os.str();
}

} // namespace eqbif
