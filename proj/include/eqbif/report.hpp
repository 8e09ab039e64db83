#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "eqbif/bifurcation.hpp"
#include "eqbif/degrees.hpp"
#include "eqbif/verify.hpp"

namespace eqbif {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "eqbif-report/1";

json params_json(const ModelParams& p);
json tolerances_json(const Tolerances& tol);
json curve_json(const CouplingCurve& c);
CouplingCurve curve_from_json(const json& j);

// Header shared by every report: schema, command, params, tolerances.
json report_header(const std::string& command, const ModelParams& p, const Tolerances& tol);

// List of [orbit type, coefficient] in deterministic order.
json twisted_sum_json(const TwistedAlgebra& T, const TwistedSum& s);
json burnside_json(const SubgroupClassLattice& L, const BurnsideElement& e);

json critical_points_json(const std::vector<CriticalPoint>& points);
std::string critical_points_csv(const std::vector<CriticalPoint>& points);

json invariant_json(const EquivariantContext& ctx, const BifurcationInvariant& inv);
json prediction_json(const EquivariantContext& ctx, const ModelParams& p, const Prediction& pred,
                     const Tolerances& tol);

std::string scan_csv(const ScanResult& r);
json scan_json(const ScanResult& r, double threshold);

// Long-format CSV: i,t,x,u.
std::string grid_csv(const GridFunction& u);

// Group tables for one N.
std::string characters_csv(int N);
std::string lattice_csv(const SubgroupClassLattice& L);
std::string burnside_table_csv(const BurnsideRing& R, Exec exec = Exec::Parallel);
std::string group_table_csv(const FiniteGroup& G);

} // namespace eqbif
