#pragma once

#include <json.hpp>

#include "specker/catalog.hpp"
#include "specker/coloring.hpp"
#include "specker/critical_sets.hpp"
#include "specker/inequality.hpp"
#include "specker/lines.hpp"
#include "specker/peres.hpp"
#include "specker/symmetry.hpp"

namespace specker {

// GoldenInt <-> [a, b]; GoldenVec4 <-> [[a,b] x4]. nlohmann::json orders keys
// alphabetically, which keeps every emitted document byte-stable.
nlohmann::json to_json(GoldenInt g);
nlohmann::json to_json(const GoldenVec4& v);
GoldenInt golden_from_json(const nlohmann::json& j);
GoldenVec4 vec4_from_json(const nlohmann::json& j);

nlohmann::json catalog_json(const Catalog& cat);
nlohmann::json lines_json(const LineTable& lines);
nlohmann::json solve_json(const RaySystem& sys, std::uint64_t subset, const SolveResult& res);
nlohmann::json census_json(const BasisCensus& census);
nlohmann::json critical_family_json(const std::vector<CriticalSetRecord>& family);
nlohmann::json orbit_json(const OrbitResult& orbit);
nlohmann::json gap_json(const GapReport& report);
nlohmann::json proof_tree_json(const RaySystem& sys, const ProofTreeNode& node);

}  // namespace specker
