#include "specker/verify.hpp"

#include <bit>
#include <chrono>
#include <sstream>

#include "specker/catalog.hpp"
#include "specker/coloring.hpp"
#include "specker/critical_sets.hpp"
#include "specker/inequality.hpp"
#include "specker/lines.hpp"
#include "specker/peres.hpp"
#include "specker/symmetry.hpp"

namespace specker {

namespace {

struct Checker {
    CriterionResult result;

    void check(bool cond, const std::string& what) {
        result.lines.push_back({cond, false, what});
        result.pass = result.pass && cond;
    }
    template <typename T>
    void check_eq(const T& got, const T& want, const std::string& what) {
        std::ostringstream os;
        os << what << ": expected " << want << ", got " << got;
        check(got == want, os.str());
    }
    void note(const std::string& what) { result.lines.push_back({true, true, what}); }
};

Checker make(int number, const std::string& title) {
    Checker c;
    c.result.number = number;
    c.result.title = title;
    c.result.pass = true;
    return c;
}

// Everything the criteria consume, built once per run.
struct Pipeline {
    Catalog catalog;
    LineTable lines;
    RaySystem system;
    Group group;
    std::vector<CriticalSetRecord> family30, family36;
    PeresCatalog peres;

    explicit Pipeline(int threads)
        : catalog(Catalog::build()),
          lines(LineTable::build(catalog)),
          system(ray_system_of(catalog)),
          group(Group::generate(catalog, threads)),
          family30(enumerate_critical_sets(ChainKind::Cycle5, lines)),
          family36(enumerate_critical_sets(ChainKind::Bipartite23, lines)),
          peres(build_peres()) {}
};

std::vector<CriterionResult> run_criteria(const VerifyOptions& opts) {
    std::vector<CriterionResult> out;
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&t0] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    double mark = 0.0;
    auto finish = [&](Checker& c) {
        const double now = elapsed();
        c.result.seconds = now - mark;
        mark = now;
        out.push_back(std::move(c.result));
    };

    Pipeline p(opts.threads);
    const SolveOptions solve_opts{opts.node_limit};

    {  // 1. catalog basics
        auto c = make(1, "catalog: vertices, rays, norms, regularity");
        const auto vertices = Catalog::generate_vertices();
        c.check_eq(static_cast<int>(vertices.size()), 120, "vertex count");
        c.check_eq(static_cast<int>(p.catalog.rays().size()), 60, "projective ray count");
        bool norms = true;
        for (const auto& r : p.catalog.rays())
            norms = norms && inner_product(r.vec, r.vec) == GoldenInt{4, 0};
        c.check(norms, "every ray has squared norm 4");
        bool regular = true;
        for (int id = 1; id <= 60; ++id)
            regular = regular && std::popcount(p.catalog.neighbor_mask(id)) == 15;
        c.check(regular, "orthogonality graph is 15-regular");
        finish(c);
    }

    {  // 2. bases, cells, decompositions
        auto c = make(2, "bases and 24-cells");
        c.check_eq(static_cast<int>(p.catalog.bases().size()), 75, "basis count");
        c.check_eq(static_cast<int>(p.catalog.cells().size()), 25, "24-cell count");
        c.check_eq(static_cast<int>(p.catalog.decompositions().size()), 10, "decomposition count");
        bool quads_orth = true;
        for (const auto& b : p.catalog.bases())
            for (int i = 0; i < 4 && quads_orth; ++i)
                for (int j = i + 1; j < 4; ++j)
                    quads_orth = quads_orth &&
                                 is_zero(inner_product(p.catalog.vec(b.rays[static_cast<std::size_t>(i)]),
                                                       p.catalog.vec(b.rays[static_cast<std::size_t>(j)])));
        c.check(quads_orth, "every basis quadruple is orthogonal");
        bool inter_ok = true;
        const auto& cells = p.catalog.cells();
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t j = i + 1; j < cells.size(); ++j) {
                int common = 0;
                for (int x : cells[i].rays)
                    for (int y : cells[j].rays) common += (x == y);
                inter_ok = inter_ok && (common == 0 || common == 3);
            }
        c.check(inter_ok, "any two 24-cells share 0 or 3 rays");
        bool five = true;
        for (int id = 1; id <= 60; ++id) {
            int n = 0;
            for (const auto& b : p.catalog.bases())
                for (int x : b.rays) n += (x == id);
            five = five && n == 5;
        }
        c.check(five, "every ray occurs in exactly 5 bases (75*4 = 60*5)");
        finish(c);
    }

    {  // 3. lines and dual pairs
        auto c = make(3, "Reye lines and dual pairs");
        bool per_cell = true;
        for (std::size_t ci = 0; ci < p.catalog.cells().size(); ++ci)
            per_cell = per_cell && p.lines.lines_of_cell(static_cast<int>(ci)).size() == 16;
        c.check(per_cell, "16 lines per 24-cell");
        c.check_eq(static_cast<int>(p.lines.lines().size()), 200, "unique line count");
        {
            int shared = 0;
            for (const auto& l : p.lines.lines()) {
                int cells_with = 0;
                for (std::size_t ci = 0; ci < p.catalog.cells().size(); ++ci) {
                    const auto& ls = p.lines.lines_of_cell(static_cast<int>(ci));
                    cells_with += std::find(ls.begin(), ls.end(), l) != ls.end();
                }
                shared += (cells_with == 2);
            }
            c.check_eq(shared, 200, "lines shared by exactly two cells");
        }
        c.check_eq(static_cast<int>(p.lines.pairs().size()), 100, "dual pair count");
        bool involution = true;
        for (const auto& l : p.lines.lines()) {
            const Line d = p.lines.dual_of(l);
            involution = involution && !(d == l) && p.lines.dual_of(d) == l;
        }
        c.check(involution, "duality is a fixed-point-free involution");
        const Line probe{{3, 8, 10}};
        c.check(p.lines.dual_of(probe) == Line{{16, 17, 24}}, "dual of {3,8,10} is {16,17,24}");
        bool partitions = true;
        for (char a = 'A'; a <= 'E' && partitions; ++a)
            for (char b = static_cast<char>(a + 1); b <= 'E'; ++b) {
                std::uint64_t row_cover = 0, col_cover = 0;
                for (char x = 'A'; x <= 'E'; ++x)
                    for (char y = static_cast<char>(x + 1); y <= 'E'; ++y) {
                        row_cover |= p.lines.box_mask({a, b}, {x, y});
                        col_cover |= p.lines.box_mask({x, y}, {a, b});
                    }
                partitions = partitions && row_cover == kAllRays && col_cover == kAllRays;
            }
        c.check(partitions, "every grid row and column partitions the 60 rays");
        finish(c);
    }

    {  // 4. symmetry group
        auto c = make(4, "symmetry group");
        c.check_eq(p.group.signed_map_count(), 14400, "signed frame maps");
        c.check_eq(static_cast<int>(p.group.elements().size()), 7200, "projective permutations");
        c.check(p.group.closed_under_composition(opts.threads), "closed under composition");
        Perm add12;
        for (int i = 0; i < 60; ++i)
            add12[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 12) % 60 + 1);
        c.check(p.group.contains(add12), "add-12 map present");
        {
            const auto cycles = cycle_decomposition(add12);
            bool twelve5 = cycles.size() == 12;
            for (const auto& cy : cycles) twelve5 = twelve5 && cy.size() == 5;
            c.check(twelve5, "add-12 decomposes into twelve 5-cycles");
        }
        {
            std::vector<std::uint64_t> rays_family, bases_family, lines_family;
            for (int id = 1; id <= 60; ++id) rays_family.push_back(std::uint64_t{1} << (id - 1));
            for (const auto& b : p.catalog.bases())
                bases_family.push_back(mask_of_ids({b.rays.begin(), b.rays.end()}));
            for (const auto& l : p.lines.lines())
                lines_family.push_back(mask_of_ids({l.pts.begin(), l.pts.end()}));
            c.check(p.group.transitive_on(rays_family), "transitive on the 60 rays");
            c.check(p.group.transitive_on(bases_family), "transitive on the 75 bases");
            c.check(p.group.transitive_on(lines_family), "transitive on the 200 lines");
        }
        finish(c);
    }

    OrbitResult orbit30, orbit36;
    {  // 5. critical families and orbit structure
        auto c = make(5, "critical families: counts, orbits, complements");
        c.check_eq(static_cast<int>(p.family30.size()), 240, "distinct 30-ray sets");
        c.check_eq(static_cast<int>(p.family36.size()), 200, "distinct 36-ray sets");
        if (p.family36.size() != 200) {
            c.note("note: the ten bipartite chains over 10 rows and 10 columns give 200 "
                   "applications, but each row application equals a transposed column "
                   "application, leaving " +
                   std::to_string(p.family36.size()) + " distinct sets");
        }
        orbit30 = p.group.orbit(example_set_30(p.lines));
        orbit36 = p.group.orbit(example_set_36(p.lines));
        std::vector<std::uint64_t> members30, members36;
        for (const auto& r : p.family30) members30.push_back(r.rays);
        for (const auto& r : p.family36) members36.push_back(r.rays);
        std::sort(members30.begin(), members30.end());
        std::sort(members36.begin(), members36.end());

        c.check(orbit30.members == members30, "30-ray family forms a single orbit");
        c.check_eq(static_cast<int>(orbit30.members.size()), 240, "orbit size of a 30-ray set");
        c.check_eq(orbit30.stabilizer_order, 30, "30-ray stabilizer order");
        const bool two_orbits_cover =
            orbit30.members.size() * 2 == members30.size() &&
            std::includes(members30.begin(), members30.end(), orbit30.members.begin(),
                          orbit30.members.end());
        if (two_orbits_cover)
            c.note("note: the 240 thirty-ray sets split into two orbits of 120 "
                   "(stabilizer order 60); complementation exchanges the orbits");

        c.check(orbit36.members == members36, "36-ray family forms a single orbit");
        c.check_eq(static_cast<int>(orbit36.members.size()), 200, "orbit size of a 36-ray set");
        c.check_eq(orbit36.stabilizer_order, 36, "36-ray stabilizer order");
        if (orbit36.members == members36)
            c.note("note: the " + std::to_string(members36.size()) +
                   " thirty-six-ray sets form one orbit with stabilizer order " +
                   std::to_string(orbit36.stabilizer_order));
        const auto pairs = complementary_pairs(p.family30);
        c.check_eq(static_cast<int>(pairs.size()), 120, "complementary 30-ray pairs");
        bool disjoint_union = true;
        for (const auto& [i, j] : pairs)
            disjoint_union = disjoint_union &&
                             (p.family30[static_cast<std::size_t>(i)].rays &
                              p.family30[static_cast<std::size_t>(j)].rays) == 0 &&
                             (p.family30[static_cast<std::size_t>(i)].rays |
                              p.family30[static_cast<std::size_t>(j)].rays) == kAllRays;
        c.check(disjoint_union, "every complementary pair partitions the 60 rays");
        finish(c);
    }

    {  // 6. 30-ray verification
        auto c = make(6, std::string("30-ray sets: parity proofs and criticality") +
                             (opts.fast ? " (fast)" : ""));
        const auto v = verify_family(p.family30, ChainKind::Cycle5, p.system, &p.group, opts.fast,
                                     opts.threads, solve_opts);
        c.check_eq(v.census_matches, v.records, "sets with exactly 15 intact bases");
        c.check_eq(v.parity_certificates, v.records, "parity certificates (every ray twice)");
        c.check(v.all_uncolorable, "solver confirms uncolorability independently");
        c.check_eq(v.critical, v.records, "criticality: every single-ray deletion colorable");
        for (const auto& f : v.failures) c.check(false, "record failed: " + f);
        const std::uint64_t s30 = example_set_30(p.lines);
        const std::uint64_t witness = mask_of_ids({25, 45, 55, 16, 4, 32, 49});
        c.check(witness_valid(p.system, s30 & ~(std::uint64_t{1} << (3 - 1)), witness),
                "published witness colors the set minus ray 3 (greens 25,45,55,16,4,32,49)");
        finish(c);
    }

    std::uint64_t s36 = 0;
    {  // 7. 36-ray verification
        auto c = make(7, std::string("36-ray sets: census, restricted uncolorability, criticality") +
                             (opts.fast ? " (fast)" : ""));
        const auto v = verify_family(p.family36, ChainKind::Bipartite23, p.system, &p.group,
                                     opts.fast, opts.threads, solve_opts);
        c.check_eq(v.census_matches, v.records, "sets with census (18,12,36,0,9)");
        c.check_eq(v.parity_certificates, 0, "parity certificates (none may exist)");
        c.check(v.all_uncolorable, "solver confirms uncolorability");
        c.check_eq(v.critical, v.records, "criticality: every single-ray deletion colorable");
        for (const auto& f : v.failures) c.check(false, "record failed: " + f);

        s36 = example_set_36(p.lines);
        bool restricted = true;
        for (const auto& rec : p.family36) {
            std::vector<int> constraint;
            for (std::size_t bi = 0; bi < p.system.bases.size(); ++bi) {
                const int kept = std::popcount(p.system.basis_masks[bi] & rec.rays);
                if (kept >= 3) constraint.push_back(static_cast<int>(bi));
            }
            restricted = restricted && constraint.size() == 30 &&
                         solve(p.system, rec.rays, &constraint, solve_opts).status ==
                             SolveStatus::Uncolorable;
        }
        c.check(restricted, "uncolorable using only the 30 intact and almost-intact bases");

        const std::uint64_t witness = mask_of_ids({11, 4, 22, 54, 18, 5, 35, 25});
        const std::uint64_t survivors = s36 & ~(std::uint64_t{1} << (1 - 1));
        c.check(witness_valid(p.system, survivors, witness),
                "published witness colors the set minus ray 1 (greens 11,4,22,54,18,5,35,25)");
        int involved = 0;
        for (std::size_t bi = 0; bi < p.system.bases.size(); ++bi)
            involved += (p.system.basis_masks[bi] & survivors) != 0;
        c.check_eq(involved, 66, "bases involving any of the 35 surviving rays");
        finish(c);
    }

    {  // 8. the 448 count
        auto c = make(8, "448 colorings of the 36-ray intact bases");
        std::vector<int> intact, intact_plus_almost;
        for (std::size_t bi = 0; bi < p.system.bases.size(); ++bi) {
            const int kept = std::popcount(p.system.basis_masks[bi] & s36);
            if (kept == 4) intact.push_back(static_cast<int>(bi));
            if (kept >= 3) intact_plus_almost.push_back(static_cast<int>(bi));
        }
        const ColoringCount with_intact = count_colorings(p.system, s36, intact);
        const ColoringCount with_almost = count_colorings(p.system, s36, intact_plus_almost);
        c.note("note: intact-bases regime counts " + std::to_string(with_intact.count) +
               "; intact+almost regime counts " + std::to_string(with_almost.count));
        const bool pinned_intact = with_intact.count == 448;
        c.check(pinned_intact || with_almost.count == 448,
                "one regime yields exactly 448 colorings");
        const ColoringCount& pinned = pinned_intact ? with_intact : with_almost;
        c.note(std::string("note: pinned regime = ") +
               (pinned_intact ? "18 intact bases only" : "30 intact+almost bases"));
        c.check_eq(static_cast<int>(pinned.overload_half), static_cast<int>(pinned.count),
                   "counted colorings overloading some half-intact basis");
        if (pinned.overload_half != pinned.count)
            c.note("note: every counted coloring does overload an almost-intact or half-intact "
                   "basis (" +
                   std::to_string(pinned.overload_any) + " of " + std::to_string(pinned.count) +
                   "); " + std::to_string(pinned.overload_almost) +
                   " overload an almost-intact one");
        finish(c);
    }

    {  // 9. Peres system
        auto c = make(9, "Peres 24-ray system");
        c.check_eq(static_cast<int>(p.peres.rays.size()), 24, "ray count");
        c.check_eq(static_cast<int>(p.peres.system.bases.size()), 24, "basis count");
        const auto c18 = peres_criticals_18(p.peres);
        c.check_eq(static_cast<int>(c18.size()), 16, "18-ray critical sets");
        bool parity_ok = true;
        for (const auto& s : c18) {
            const auto cert = parity_certificate(p.peres.system, s.rays);
            parity_ok = parity_ok && cert && cert->bases.size() == 9;
        }
        c.check(parity_ok, "each 18-ray set has a 9-basis parity certificate");
        const auto c20 = peres_criticals_20(p.peres, opts.threads);
        c.check_eq(static_cast<int>(c20.size()), 96, "20-ray critical sets from the C(24,4) scan");
        finish(c);
    }

    {  // 10. inequality
        auto c = make(10, "noncontextuality inequality bounds");
        const auto inst30 = make_instance_30ray(p.catalog, p.lines);
        const GapReport g30 = gap_report(inst30, "sweep", opts.threads);
        c.check_eq(g30.quantum, 15, "30-ray quantum value");
        c.check_eq(g30.classical, 13, "30-ray classical maximum (2^30 sweep)");
        const auto inst18 = make_instance_peres18();
        const GapReport g18 = gap_report(inst18, "sweep", opts.threads);
        c.check_eq(g18.quantum, 9, "Peres-18 quantum value");
        c.check_eq(g18.classical, 7, "Peres-18 classical maximum");
        c.check(g30.gap == 2 && g18.gap == 2, "both gaps equal 2");
        finish(c);
    }

    return out;
}

}  // namespace

VerifySummary verify_all(const VerifyOptions& opts) {
    VerifySummary summary;
    summary.criteria = run_criteria(opts);

    CriterionResult det;
    det.number = 11;
    det.title = "determinism: identical content on a repeated run";
    det.pass = true;
    if (opts.check_determinism) {
        const auto t0 = std::chrono::steady_clock::now();
        VerifySummary first;
        first.criteria = summary.criteria;
        VerifySummary second;
        second.criteria = run_criteria(opts);
        const bool same = verify_report(first) == verify_report(second);
        det.lines.push_back({same, false, "two full runs render byte-identical reports"});
        det.pass = same;
        det.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } else {
        det.lines.push_back({true, true, "note: skipped (determinism re-run disabled)"});
    }
    summary.criteria.push_back(std::move(det));

    summary.all_pass = true;
    for (const auto& c : summary.criteria) summary.all_pass = summary.all_pass && c.pass;
    return summary;
}

std::string verify_report(const VerifySummary& summary) {
    std::ostringstream os;
    for (const auto& c : summary.criteria) {
        os << "criterion " << (c.number < 10 ? " " : "") << c.number << ' '
           << (c.pass ? "PASS" : "FAIL") << "  " << c.title << '\n';
        for (const auto& line : c.lines) {
            if (line.informational)
                os << "    " << line.text << '\n';
            else
                os << "    " << (line.pass ? "ok: " : "FAIL: ") << line.text << '\n';
        }
    }
    os << (summary.all_pass ? "all criteria passed" : "some criteria failed") << '\n';
    return os.str();
}

}  // namespace specker
