#include "specker/json_io.hpp"

namespace specker {

using nlohmann::json;

json to_json(GoldenInt g) { return json::array({g.a, g.b}); }

json to_json(const GoldenVec4& v) {
    json arr = json::array();
    for (const auto& g : v.c) arr.push_back(to_json(g));
    return arr;
}

GoldenInt golden_from_json(const json& j) {
    return GoldenInt{j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()};
}

GoldenVec4 vec4_from_json(const json& j) {
    GoldenVec4 v;
    for (int i = 0; i < 4; ++i) v[i] = golden_from_json(j.at(static_cast<std::size_t>(i)));
    return v;
}

json catalog_json(const Catalog& cat) {
    json doc;
    doc["rays"] = json::array();
    for (const auto& r : cat.rays()) doc["rays"].push_back({{"id", r.id}, {"vec", to_json(r.vec)}});
    doc["bases"] = json::array();
    for (const auto& b : cat.bases()) doc["bases"].push_back(b.rays);
    doc["cells"] = json::array();
    for (const auto& c : cat.cells())
        doc["cells"].push_back({{"label", to_string(c.label)},
                                {"rays", c.rays},
                                {"bases", c.bases}});
    doc["decompositions"] = json::array();
    for (const auto& d : cat.decompositions()) {
        json cells = json::array();
        for (int ci : d.cells) cells.push_back(to_string(cat.cells()[static_cast<std::size_t>(ci)].label));
        doc["decompositions"].push_back(
            {{"kind", d.kind == Decomposition::Kind::Row ? "row" : "column"},
             {"letter", std::string{d.letter} + (d.kind == Decomposition::Kind::Row ? "'" : "")},
             {"cells", cells}});
    }
    return doc;
}

json lines_json(const LineTable& lines) {
    json doc;
    doc["count"] = lines.lines().size();
    json pairs = json::array();
    for (char r1 = 'A'; r1 <= 'E'; ++r1)
        for (char r2 = static_cast<char>(r1 + 1); r2 <= 'E'; ++r2)
            for (char c1 = 'A'; c1 <= 'E'; ++c1)
                for (char c2 = static_cast<char>(c1 + 1); c2 <= 'E'; ++c2) {
                    const DualPair& p = lines.box({r1, r2}, {c1, c2});
                    pairs.push_back({{"row", std::string{r1} + "'" + r2 + "'"},
                                     {"column", std::string{c1} + std::string{c2}},
                                     {"left", p.left.pts},
                                     {"right", p.right.pts}});
                }
    doc["dual_pairs"] = std::move(pairs);
    return doc;
}

json solve_json(const RaySystem& sys, std::uint64_t subset, const SolveResult& res) {
    json doc;
    doc["rays"] = ids_of_mask(subset);
    switch (res.status) {
        case SolveStatus::Colorable: doc["status"] = "colorable"; break;
        case SolveStatus::Uncolorable: doc["status"] = "uncolorable"; break;
        case SolveStatus::Undecided: doc["status"] = "undecided"; break;
    }
    doc["nodes"] = res.stats.nodes;
    if (res.status == SolveStatus::Colorable) doc["greens"] = ids_of_mask(res.greens);
    if (res.parity) {
        json cert;
        json bases = json::array();
        for (int bi : res.parity->bases) bases.push_back(sys.bases[static_cast<std::size_t>(bi)]);
        cert["bases"] = std::move(bases);
        json mult = json::array();
        for (const auto& [id, m] : res.parity->multiplicity) mult.push_back({{"ray", id}, {"count", m}});
        cert["multiplicity"] = std::move(mult);
        doc["parity_certificate"] = std::move(cert);
    }
    return doc;
}

json census_json(const BasisCensus& c) {
    return {{"intact", c.intact},
            {"almost_intact", c.almost_intact},
            {"half_intact", c.half_intact},
            {"quarter_intact", c.quarter_intact},
            {"empty", c.empty}};
}

json critical_family_json(const std::vector<CriticalSetRecord>& family) {
    json arr = json::array();
    for (const auto& rec : family) {
        json prov = json::array();
        for (const auto& p : rec.provenance) prov.push_back(to_string(p));
        arr.push_back({{"rays", ids_of_mask(rec.rays)}, {"size", rec.size}, {"provenance", prov}});
    }
    return arr;
}

json orbit_json(const OrbitResult& orbit) {
    json members = json::array();
    for (const std::uint64_t m : orbit.members) members.push_back(ids_of_mask(m));
    return {{"size", orbit.members.size()},
            {"stabilizer_order", orbit.stabilizer_order},
            {"members", members}};
}

json gap_json(const GapReport& rep) {
    json doc{{"instance", rep.instance},
             {"classical", rep.classical},
             {"quantum", rep.quantum},
             {"gap", rep.gap},
             {"classical_exact", rep.classical_exact}};
    json greens = json::array();
    for (int r = 0; r < 64; ++r)
        if ((rep.witness >> r) & 1u) greens.push_back(r);
    doc["witness"] = std::move(greens);
    return doc;
}

json proof_tree_json(const RaySystem& sys, const ProofTreeNode& node) {
    if (node.all_red_basis >= 0)
        return {{"all_red_basis", sys.bases[static_cast<std::size_t>(node.all_red_basis)]}};
    json branches = json::array();
    for (const auto& br : node.branches)
        branches.push_back({{"green", br.green},
                            {"forced_greens", br.forced_greens},
                            {"subtree", proof_tree_json(sys, *br.child)}});
    return {{"basis", sys.bases[static_cast<std::size_t>(node.basis)]}, {"branches", branches}};
}

}  // namespace specker
