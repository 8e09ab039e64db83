// eqbif: command-line front end.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "eqbif/errors.hpp"
#include "eqbif/report.hpp"

using namespace eqbif;

namespace {

// Flags left unset fall back to the config file, then to built-in defaults.
struct Common {
  std::string config;
  std::optional<std::string> nu;
  std::optional<double> delta, tau;
  std::optional<int> N, m_max, n_max;
  std::optional<std::string> zeta;
  std::optional<double> zero_mu, degenerate_sin, separation;
  std::string out;
};

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  json j = json::parse(in);
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  return j;
}

template <class T>
T pick(const std::optional<T>& flag, const json& cfg, const char* key, T fallback) {
  if (flag) return *flag;
  if (cfg.contains(key)) return cfg.at(key).get<T>();
  return fallback;
}

// "sigmoid", "linear:slope" or "linear:slope:offset".
CouplingCurve parse_curve(const std::string& s) {
  if (s == "sigmoid") return CouplingCurve::sigmoid();
  if (s.rfind("linear:", 0) == 0) {
    std::stringstream ss(s.substr(7));
    std::string a, b;
    std::getline(ss, a, ':');
    std::getline(ss, b, ':');
    return CouplingCurve::linear(std::stod(a), b.empty() ? 0.0 : std::stod(b));
  }
  throw std::invalid_argument("unknown coupling curve '" + s + "'");
}

struct Run {
  json cfg;
  ModelParams p;
  Tolerances tol;
  int m_max = 5;
  int n_max = 5;
};

Run resolve(const Common& c) {
  Run r;
  r.cfg = load_config(c.config);
  const json& cfg = r.cfg;
  if (cfg.contains("nu") && !cfg.at("nu").is_string())
    throw std::invalid_argument("nu must be given as a rational string \"p/q\"");
  Rational nu = Rational::parse(pick<std::string>(c.nu, cfg, "nu", "1/1"));
  CouplingCurve z = c.zeta ? parse_curve(*c.zeta) : cfg.contains("zeta") ? curve_from_json(cfg.at("zeta")) : CouplingCurve::sigmoid();
  r.p = ModelParams::make(nu, pick(c.delta, cfg, "delta", 1.0), pick(c.tau, cfg, "tau", 2.0), pick(c.N, cfg, "N", 3), z);
  json window = cfg.value("window", json::object());
  r.m_max = pick(c.m_max, window, "m_max", 5);
  r.n_max = pick(c.n_max, window, "n_max", 5);
  if (r.m_max < 0 || r.n_max < 1) throw std::invalid_argument("window needs m_max >= 0 and n_max >= 1");
  json tol = cfg.value("tolerances", json::object());
  r.tol.zero_mu = pick(c.zero_mu, tol, "zero_mu", r.tol.zero_mu);
  r.tol.degenerate_sin = pick(c.degenerate_sin, tol, "degenerate_sin", r.tol.degenerate_sin);
  r.tol.separation = pick(c.separation, tol, "separation", r.tol.separation);
  r.tol.winding_round = tol.value("winding_round", r.tol.winding_round);
  r.tol.rational_pi = tol.value("rational_pi", r.tol.rational_pi);
  return r;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

BranchKind parse_kind(const std::string& s) {
  if (s == "H") return BranchKind::H;
  if (s == "S") return BranchKind::S;
  if (s == "T") return BranchKind::T;
  throw std::invalid_argument("kind must be H, S or T");
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "JSON config file");
  sub->add_option("--nu", c.nu, "nu as p/q");
  sub->add_option("--delta", c.delta, "damping");
  sub->add_option("--tau", c.tau, "delay");
  sub->add_option("--N", c.N, "number of strings");
  sub->add_option("--zeta", c.zeta, "coupling curve: sigmoid | linear:slope[:offset]");
  sub->add_option("--m-max", c.m_max, "window bound on m");
  sub->add_option("--n-max", c.n_max, "window bound on n");
  sub->add_option("--zero-mu", c.zero_mu, "tolerance for zeros of mu");
  sub->add_option("--degenerate-sin", c.degenerate_sin, "reject tau when |sin(m tau)| is below this");
  sub->add_option("--separation", c.separation, "merge distance for critical points");
  sub->add_option("-o,--out", c.out, "output path (default stdout)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant bifurcation invariants for a delayed wave system on a cycle of strings"};
  app.require_subcommand(1);

  Common c;
  std::string format = "json";
  std::string mode = "h-fixed";
  std::optional<double> alpha, beta;
  std::vector<int> quad{1, 1, 0, 1};
  double radius = 0.1, threshold = 0.1;
  int ring = 16, Mt = 128, Mx = 64;
  std::string csv_path;
  bool refine = false;
  int spectral_points = 0;
  int em = 1, en = 1, ej = 1, wave = 0;
  std::string kind = "H", report_path;
  bool characters = false, lattice = false, burnside = false, multiplication = false;
  std::string group = "gamma-prime";

  auto* cp = app.add_subcommand("critical-points", "enumerate critical parameter values");
  add_common(cp, c);
  cp->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  auto* pr = app.add_subcommand("predict", "branch predictions at every critical point in the window");
  add_common(pr, c);
  pr->add_option("--mode", mode, "h-fixed (global) | full (local)")->check(CLI::IsMember({"h-fixed", "full"}));

  auto* iv = app.add_subcommand("invariant", "local bifurcation invariant at one parameter point");
  add_common(iv, c);
  iv->add_option("--mode", mode, "h-fixed | full")->check(CLI::IsMember({"h-fixed", "full"}));
  iv->add_option("--alpha", alpha);
  iv->add_option("--beta", beta);
  iv->add_option("--quad", quad, "m n j k selecting a critical point when alpha/beta are not given")->expected(4);

  auto* vf = app.add_subcommand("verify", "finite-difference singular-value scan around a parameter point");
  add_common(vf, c);
  vf->add_option("--alpha", alpha);
  vf->add_option("--beta", beta);
  vf->add_option("--quad", quad, "m n j k selecting a critical point when alpha/beta are not given")->expected(4);
  vf->add_option("--radius", radius, "ring radius in the (alpha, beta) plane");
  vf->add_option("--ring", ring, "number of ring points");
  vf->add_option("--Mt", Mt, "time grid points");
  vf->add_option("--Mx", Mx, "interior x grid points");
  vf->add_option("--threshold", threshold, "largest center/ring ratio reported as singular");
  vf->add_option("--csv", csv_path, "write the (d_alpha, d_beta, sigma_min) table here");
  vf->add_flag("--refine", refine, "also report sigma_min at the center on the half grid");
  vf->add_option("--spectral-check", spectral_points, "odd time points for a spectral cross-check (0 skips)");

  auto* ex = app.add_subcommand("export-eigenfunction", "sample a symmetric kernel function on a grid");
  add_common(ex, c);
  ex->add_option("--m", em, "temporal frequency");
  ex->add_option("--n", en, "spatial mode (physical profile)");
  ex->add_option("--j", ej, "isotypic index");
  ex->add_option("--kind", kind, "H | S | T");
  ex->add_option("--wave", wave, "export U1, U2 or U3 instead of a computed fixed function")->check(CLI::Range(1, 3));
  ex->add_option("--Mt", Mt);
  ex->add_option("--Mx", Mx);
  ex->add_option("--report", report_path, "write the relation check as JSON here");

  auto* gt = app.add_subcommand("group-tables", "lattice, character and multiplication tables as CSV");
  add_common(gt, c);
  gt->add_flag("--characters", characters, "D_N character table");
  gt->add_flag("--lattice", lattice, "subgroup class lattice with n(H,K)");
  gt->add_flag("--burnside", burnside, "Burnside ring generator products");
  gt->add_flag("--multiplication", multiplication, "group multiplication table");
  gt->add_option("--group", group, "dihedral | gamma-prime")->check(CLI::IsMember({"dihedral", "gamma-prime"}));

  CLI11_PARSE(app, argc, argv);

  try {
    Run r = resolve(c);
    const ModelParams& p = r.p;

    auto center = [&]() -> std::pair<double, double> {
      if (alpha && beta) return {*alpha, *beta};
      if (alpha || beta) throw std::invalid_argument("give both --alpha and --beta or neither");
      if (r.cfg.contains("point")) return {r.cfg["point"].at("alpha").get<double>(), r.cfg["point"].at("beta").get<double>()};
      auto x = critical_point({quad[0], quad[1], quad[2], quad[3]}, p, r.tol);
      if (!x) throw DegenerateParameterError("the selected quad has no critical point for this coupling curve");
      return *x;
    };

    if (cp->parsed()) {
      auto pts = enumerate_critical_points(p, r.m_max, r.n_max, Exec::Parallel, r.tol);
      if (format == "csv") {
        emit(c.out, critical_points_csv(pts));
      } else {
        json out = report_header("critical-points", p, r.tol);
        out["window"] = {{"m_max", r.m_max}, {"n_max", r.n_max}};
        out["critical_points"] = critical_points_json(pts);
        emit(c.out, out.dump(2) + "\n");
      }
    } else if (pr->parsed()) {
      EquivariantContext ctx(p.N);
      auto pred = predict_branches(ctx, p, r.m_max, r.n_max,
                                   mode == "full" ? PredictionMode::Local : PredictionMode::Global, r.tol);
      emit(c.out, prediction_json(ctx, p, pred, r.tol).dump(2) + "\n");
    } else if (iv->parsed()) {
      EquivariantContext ctx(p.N);
      auto [a, b] = center();
      auto inv = mode == "full" ? local_invariant(ctx, p, a, b, r.m_max, r.n_max, r.tol)
                                : h_fixed_invariant(ctx, p, a, b, r.m_max, r.n_max, r.tol);
      json out = report_header("invariant", p, r.tol);
      out["point"] = {{"alpha", a}, {"beta", b}};
      out["window"] = {{"m_max", r.m_max}, {"n_max", r.n_max}};
      out["invariant"] = invariant_json(ctx, inv);
      emit(c.out, out.dump(2) + "\n");
    } else if (vf->parsed()) {
      auto [a, b] = center();
      auto scan = sigma_min_scan(p, {a, b}, radius, ring, Mt, Mx);
      json out = report_header("verify", p, r.tol);
      out["point"] = {{"alpha", a}, {"beta", b}};
      out["grid"] = {{"Mt", Mt}, {"Mx", Mx}, {"radius", radius}, {"ring", ring}};
      out["scan"] = scan_json(scan, threshold);
      if (refine) {
        double coarse = sigma_min_fd(p, a, b, Mt / 2, Mx / 2);
        out["refinement"] = {{"coarse_center_sigma", coarse}, {"decreasing", scan.center_sigma < coarse}};
      }
      if (spectral_points > 0) {
        double dev = spectral_crosscheck(p, a, b, spectral_points, 4);
        out["spectral_check"] = {{"max_deviation", dev}, {"tolerance", 1e-10}, {"pass", dev <= 1e-10}};
      }
      if (!csv_path.empty()) emit(csv_path, scan_csv(scan));
      emit(c.out, out.dump(2) + "\n");
    } else if (ex->parsed()) {
      GridFunction u = wave ? reference_wave(wave, p.N, Mt, Mx) : mode_function(p.N, em, en, ej, parse_kind(kind), Mt, Mx);
      if (!report_path.empty()) {
        // Relations use the algebraic label n + 1 (see mode_function).
        json checks = json::array();
        for (auto& rc : symmetry_check(u, symmetry_relations(parse_kind(kind), p.N, em, en + 1, ej), 1e-12))
          checks.push_back({{"relation", rc.text}, {"max_violation", rc.max_violation}, {"pass", rc.pass}});
        json out = report_header("export-eigenfunction", p, r.tol);
        out["kind"] = kind;
        out["m"] = em;
        out["n"] = en;
        out["j"] = ej;
        out["relations"] = checks;
        emit(report_path, out.dump(2) + "\n");
      }
      emit(c.out, grid_csv(u));
    } else if (gt->parsed()) {
      if (!(characters || lattice || burnside || multiplication)) characters = true;
      std::string text;
      if (characters) text += characters_csv(p.N);
      if (multiplication) text += group_table_csv(group == "dihedral" ? dihedral_group(p.N) : gamma_prime(p.N));
      if (lattice || burnside) {
        auto G = std::make_shared<const FiniteGroup>(group == "dihedral" ? dihedral_group(p.N) : gamma_prime(p.N));
        auto L = SubgroupClassLattice::build(G);
        if (lattice) text += lattice_csv(*L);
        if (burnside) text += burnside_table_csv(BurnsideRing(L));
      }
      emit(c.out, text);
    }
  } catch (const DegenerateParameterError& e) {
    std::cerr << "degenerate parameters: " << e.what() << "\n";
    return 2;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
