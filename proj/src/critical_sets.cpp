#include "specker/critical_sets.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "specker/parallel.hpp"

namespace specker {

std::vector<Chain> enumerate_chains(ChainKind kind) {
    std::vector<Chain> out;
    if (kind == ChainKind::Cycle5) {
        // Distinct 5-cycles on ABCDE as edge sets: fix A first, take the two
        // directions together, (5-1)!/2 = 12 of them.
        std::array<char, 4> rest = {'B', 'C', 'D', 'E'};
        std::sort(rest.begin(), rest.end());
        std::vector<std::vector<std::array<char, 2>>> seen;
        do {
            std::array<char, 5> cyc = {'A', rest[0], rest[1], rest[2], rest[3]};
            std::vector<std::array<char, 2>> edges;
            for (int i = 0; i < 5; ++i) {
                std::array<char, 2> e{cyc[static_cast<std::size_t>(i)],
                                      cyc[static_cast<std::size_t>((i + 1) % 5)]};
                if (e[0] > e[1]) std::swap(e[0], e[1]);
                edges.push_back(e);
            }
            std::sort(edges.begin(), edges.end());
            if (std::find(seen.begin(), seen.end(), edges) == seen.end()) seen.push_back(edges);
        } while (std::next_permutation(rest.begin(), rest.end()));
        std::sort(seen.begin(), seen.end());
        for (auto& edges : seen) out.push_back(Chain{ChainKind::Cycle5, std::move(edges)});
        if (out.size() != 12) throw std::logic_error("expected 12 five-cycle chains");
    } else {
        for (char a = 'A'; a <= 'E'; ++a)
            for (char b = static_cast<char>(a + 1); b <= 'E'; ++b) {
                std::vector<std::array<char, 2>> edges;
                for (char c = 'A'; c <= 'E'; ++c) {
                    if (c == a || c == b) continue;
                    for (char x : {a, b}) {
                        std::array<char, 2> e{x, c};
                        if (e[0] > e[1]) std::swap(e[0], e[1]);
                        edges.push_back(e);
                    }
                }
                std::sort(edges.begin(), edges.end());
                out.push_back(Chain{ChainKind::Bipartite23, std::move(edges)});
            }
        if (out.size() != 10) throw std::logic_error("expected 10 bipartite chains");
    }
    return out;
}

std::string to_string(const Chain& chain) {
    std::string s;
    for (const auto& e : chain.edges) {
        if (!s.empty()) s += '-';
        s += e[0];
        s += e[1];
    }
    return s;
}

std::string to_string(const Provenance& prov) {
    std::string s = to_string(prov.chain);
    s += prov.axis == GridAxis::Row ? " on row " : " on column ";
    if (prov.axis == GridAxis::Row) {
        s += prov.grid_line[0];
        s += "'";
        s += prov.grid_line[1];
        s += "'";
    } else {
        s += prov.grid_line[0];
        s += prov.grid_line[1];
    }
    return s;
}

std::uint64_t apply_chain(const LineTable& lines, const Chain& chain, GridAxis axis,
                          std::array<char, 2> grid_line) {
    if (grid_line[0] > grid_line[1]) std::swap(grid_line[0], grid_line[1]);
    if (grid_line[0] < 'A' || grid_line[1] > 'E' || grid_line[0] == grid_line[1])
        throw std::invalid_argument("apply_chain: grid line must be two distinct letters A..E");
    std::uint64_t rays = 0;
    for (const auto& e : chain.edges)
        rays |= axis == GridAxis::Row ? lines.box_mask(grid_line, e) : lines.box_mask(e, grid_line);
    const int expect = static_cast<int>(chain.edges.size()) * 6;
    if (std::popcount(rays) != expect)
        throw std::logic_error("apply_chain: boxes overlapped unexpectedly");
    return rays;
}

std::vector<CriticalSetRecord> enumerate_critical_sets(ChainKind kind, const LineTable& lines) {
    const auto chains = enumerate_chains(kind);
    std::vector<std::array<char, 2>> grid_lines;
    for (char a = 'A'; a <= 'E'; ++a)
        for (char b = static_cast<char>(a + 1); b <= 'E'; ++b) grid_lines.push_back({a, b});

    std::map<std::uint64_t, std::vector<Provenance>> by_rays;
    for (const auto& chain : chains)
        for (const GridAxis axis : {GridAxis::Row, GridAxis::Column})
            for (const auto& gl : grid_lines)
                by_rays[apply_chain(lines, chain, axis, gl)].push_back({chain, axis, gl});

    std::vector<CriticalSetRecord> out;
    for (auto& [rays, prov] : by_rays)
        out.push_back({rays, std::popcount(rays), std::move(prov)});
    return out;  // std::map iteration keeps mask order deterministic
}

std::uint64_t example_set_30(const LineTable& lines) {
    // The chain AB-BC-CD-DE-EA applied to the first grid row.
    Chain chain{ChainKind::Cycle5,
                {{'A', 'B'}, {'A', 'E'}, {'B', 'C'}, {'C', 'D'}, {'D', 'E'}}};
    return apply_chain(lines, chain, GridAxis::Row, {'A', 'B'});
}

std::uint64_t example_set_36(const LineTable& lines) {
    // The chain AC-AD-AE-BC-BD-BE applied to the first grid row.
    Chain chain{ChainKind::Bipartite23,
                {{'A', 'C'}, {'A', 'D'}, {'A', 'E'}, {'B', 'C'}, {'B', 'D'}, {'B', 'E'}}};
    return apply_chain(lines, chain, GridAxis::Row, {'A', 'B'});
}

std::vector<std::pair<int, int>> complementary_pairs(const std::vector<CriticalSetRecord>& family) {
    std::map<std::uint64_t, int> index;
    for (std::size_t i = 0; i < family.size(); ++i) index[family[i].rays] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const std::uint64_t comp = kAllRays & ~family[i].rays;
        const auto it = index.find(comp);
        if (it == index.end())
            throw std::runtime_error("complementary_pairs: complement not in the family");
        if (static_cast<int>(i) < it->second) pairs.push_back({static_cast<int>(i), it->second});
    }
    return pairs;
}

FamilyVerification verify_family(const std::vector<CriticalSetRecord>& family, ChainKind kind,
                                 const RaySystem& sys, const Group* group, bool fast, int threads,
                                 SolveOptions opts) {
    const BasisCensus expected = kind == ChainKind::Cycle5 ? BasisCensus{15, 0, 45, 0, 15}
                                                           : BasisCensus{18, 12, 36, 0, 9};
    FamilyVerification out;
    out.records = static_cast<int>(family.size());
    std::vector<std::string> failures(family.size());
    std::vector<char> crit(family.size(), 0), parity(family.size(), 0), census_ok(family.size(), 0),
        uncolorable(family.size(), 0);

    parallel_for(family.size(), threads, [&](std::size_t i) {
        const CriticalSetRecord& rec = family[i];
        std::string why;
        if (classify_bases(sys, rec.rays) == expected) census_ok[i] = 1;
        else why += "census mismatch; ";

        const auto cert = parity_certificate(sys, rec.rays);
        if (kind == ChainKind::Cycle5) {
            if (cert) parity[i] = 1;
            else why += "missing parity certificate; ";
        } else {
            if (!cert) parity[i] = 1;
            else why += "unexpected parity certificate; ";
        }

        const SolveResult solved = solve(sys, rec.rays, nullptr, opts);
        if (solved.status == SolveStatus::Uncolorable) uncolorable[i] = 1;
        else why += "not uncolorable; ";

        std::vector<int> reps;
        if (fast && group) {
            const auto stab = group->stabilizer(rec.rays);
            for (const auto& orbit : Group::ray_orbits(stab, rec.rays)) reps.push_back(orbit[0]);
        }
        const CriticalityResult cr = is_critical(sys, rec.rays, fast ? &reps : nullptr, opts);
        if (cr.kind == CriticalityKind::Critical) {
            bool witnesses_ok = true;
            for (const auto& [deleted, greens] : cr.witnesses)
                witnesses_ok = witnesses_ok &&
                               witness_valid(sys, rec.rays & ~(std::uint64_t{1} << (deleted - 1)), greens);
            if (fast && group && witnesses_ok) {
                // Transfer each representative witness across the stabilizer
                // orbit and re-validate the transported colorings.
                const auto stab = group->stabilizer(rec.rays);
                for (const auto& [deleted, greens] : cr.witnesses)
                    for (const auto& g : stab) {
                        const int moved = g[static_cast<std::size_t>(deleted - 1)];
                        const std::uint64_t moved_greens = apply_perm(g, greens);
                        witnesses_ok = witnesses_ok &&
                                       witness_valid(sys, rec.rays & ~(std::uint64_t{1} << (moved - 1)),
                                                     moved_greens);
                        if (!witnesses_ok) break;
                    }
            }
            if (witnesses_ok) crit[i] = 1;
            else why += "deletion witness failed validation; ";
        } else {
            why += "not critical; ";
        }
        if (!why.empty()) failures[i] = to_string(rec.provenance.front()) + ": " + why;
    });

    for (std::size_t i = 0; i < family.size(); ++i) {
        out.critical += crit[i];
        out.parity_certificates += (kind == ChainKind::Cycle5) ? parity[i] : 0;
        out.census_matches += census_ok[i];
        if (!failures[i].empty()) out.failures.push_back(failures[i]);
    }
    if (kind == ChainKind::Bipartite23) {
        out.parity_certificates = 0;
        for (std::size_t i = 0; i < family.size(); ++i)
            out.parity_certificates += parity[i] ? 0 : 1;  // count unexpected certificates
    }
    out.all_uncolorable =
        std::all_of(uncolorable.begin(), uncolorable.end(), [](char c) { return c != 0; });
    return out;
}

}  // namespace specker
