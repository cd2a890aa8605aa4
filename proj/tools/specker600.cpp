#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "specker/json_io.hpp"
#include "specker/parallel.hpp"
#include "specker/verify.hpp"

namespace {

using namespace specker;

std::ostream& out_stream(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

// Ray sets arrive as a comma list ("1,2,3") or a file with one id per line.
std::vector<int> parse_ray_set(const std::string& arg) {
    std::vector<int> ids;
    auto push = [&ids](const std::string& tok) {
        if (tok.empty()) return;
        const int id = std::stoi(tok);
        if (id < 1 || id > 60) throw CLI::ValidationError("ray ids must lie in 1..60");
        ids.push_back(id);
    };
    if (arg.find(',') == std::string::npos && std::ifstream(arg).good()) {
        std::ifstream in(arg);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) push(tok);
        }
    } else {
        std::istringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) push(tok);
    }
    if (ids.empty()) throw CLI::ValidationError("empty ray set");
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::string compact_coords(const GoldenVec4& v) {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (i) s += ' ';
        s += to_string(v[i]);
    }
    return s;
}

void emit_catalog_table(std::ostream& os, const Catalog& cat) {
    os << "The 60 rays (coordinates over Z[t], t = golden ratio, k = t-1)\n";
    for (int row = 0; row < 15; ++row) {
        for (int col = 0; col < 4; ++col) {
            const int id = row * 4 + col + 1;
            os << id << " = " << compact_coords(cat.vec(id)) << (col == 3 ? "\n" : "\t");
        }
    }
    os << "\nThe 75 bases (rows) in 25 labeled 24-cells\n";
    os << "     A               B               C               D               E\n";
    for (char rowL = 'A'; rowL <= 'E'; ++rowL) {
        for (int line = 0; line < 3; ++line) {
            os << (line == 1 ? std::string{rowL} + "'  " : "   ");
            for (char colL = 'A'; colL <= 'E'; ++colL) {
                const auto& cell = cat.cells()[static_cast<std::size_t>(cat.cell_index({colL, rowL}))];
                const auto& basis = cat.bases()[static_cast<std::size_t>(cell.bases[static_cast<std::size_t>(line)])];
                std::string cellstr;
                for (int id : basis.rays) cellstr += std::to_string(id) + ' ';
                os << cellstr;
                if (cellstr.size() < 16) os << std::string(16 - cellstr.size(), ' ');
            }
            os << '\n';
        }
        os << '\n';
    }
}

void emit_lines_table(std::ostream& os, const LineTable& lines) {
    os << "The 200 lines as 100 dual pairs (left; right per box)\n";
    os << "rows: primed letter pairs, columns: plain letter pairs\n\n";
    auto pair_names = [] {
        std::vector<std::array<char, 2>> v;
        for (char a = 'A'; a <= 'E'; ++a)
            for (char b = static_cast<char>(a + 1); b <= 'E'; ++b) v.push_back({a, b});
        return v;
    }();
    os << "      ";
    for (const auto& c : pair_names) os << "  " << c[0] << c[1] << "                 ";
    os << '\n';
    for (const auto& r : pair_names) {
        os << r[0] << "'" << r[1] << "'  ";
        for (const auto& c : pair_names) {
            const DualPair& p = lines.box(r, c);
            std::ostringstream box;
            for (std::size_t i = 0; i < 3; ++i)
                box << p.left.pts[i] << ',' << p.right.pts[i] << (i < 2 ? " " : "");
            std::string s = box.str();
            if (s.size() < 20) s += std::string(20 - s.size(), ' ');
            os << s << ' ';
        }
        os << '\n';
    }
}

void emit_family_table(std::ostream& os, const Catalog& cat, std::uint64_t set,
                       const std::string& title) {
    // Basis-table facsimile with the set's intact bases bolded as *id* and
    // other surviving rays italicized as _id_.
    os << title << '\n';
    for (char rowL = 'A'; rowL <= 'E'; ++rowL) {
        for (int line = 0; line < 3; ++line) {
            os << (line == 1 ? std::string{rowL} + "'  " : "   ");
            for (char colL = 'A'; colL <= 'E'; ++colL) {
                const auto& cell = cat.cells()[static_cast<std::size_t>(cat.cell_index({colL, rowL}))];
                const auto& basis =
                    cat.bases()[static_cast<std::size_t>(cell.bases[static_cast<std::size_t>(line)])];
                std::uint64_t bm = 0;
                for (int id : basis.rays) bm |= std::uint64_t{1} << (id - 1);
                const bool intact = (bm & set) == bm;
                std::string cellstr;
                for (int id : basis.rays) {
                    const bool in = (set >> (id - 1)) & 1u;
                    if (intact)
                        cellstr += "*" + std::to_string(id) + "*";
                    else if (in)
                        cellstr += "_" + std::to_string(id) + "_";
                    else
                        cellstr += std::to_string(id);
                    cellstr += ' ';
                }
                os << cellstr;
                if (cellstr.size() < 22) os << std::string(22 - cellstr.size(), ' ');
            }
            os << '\n';
        }
        os << '\n';
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact reconstruction and verification of the 600-cell ray system"};
    app.require_subcommand(1);
    app.fallthrough();

    int threads = 0;
    std::uint64_t node_limit = 100'000'000;
    std::string output_path;
    app.add_option("--threads", threads, "worker threads (default: SPECKER600_THREADS or hardware)");
    app.add_option("--node-limit", node_limit, "solver node budget before reporting undecided");
    app.add_option("--output", output_path, "write output to a file instead of stdout");

    std::string format = "json";

    auto* cmd_catalog = app.add_subcommand("catalog", "emit the 60 rays, 75 bases, cells and decompositions");
    cmd_catalog->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* cmd_lines = app.add_subcommand("lines", "emit the 200 lines as the 10x10 dual-pair grid");
    cmd_lines->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* cmd_sym = app.add_subcommand("symmetry", "group order, generators, orbits");
    bool opt_order = false, opt_generators = false;
    std::string orbit_arg;
    cmd_sym->add_flag("--order", opt_order, "print the projective group order");
    cmd_sym->add_flag("--verify-generators", opt_generators, "check the period-5 row/column maps");
    cmd_sym->add_option("--orbit", orbit_arg, "ray set (comma list or file); prints its orbit");

    auto* cmd_solve = app.add_subcommand("solve", "decide colorability of a ray subset");
    std::string rays_arg, bases_arg = "intact";
    bool opt_tree = false;
    cmd_solve->add_option("--rays", rays_arg, "comma list or file of ray ids")->required();
    cmd_solve->add_option("--bases", bases_arg,
                          "intact (default), all, or a file of basis quadruples");
    cmd_solve->add_flag("--proof-tree", opt_tree, "also print a branching transcript when uncolorable");

    auto* cmd_crit = app.add_subcommand("critical", "enumerate or verify the chain-built critical sets");
    int crit_size = 30;
    bool crit_enumerate = false, crit_verify = false, crit_fast = false;
    cmd_crit->add_option("--size", crit_size)->check(CLI::IsMember({30, 36}));
    cmd_crit->add_flag("--enumerate", crit_enumerate, "list the family");
    cmd_crit->add_flag("--verify-all", crit_verify, "verify criticality of every member");
    cmd_crit->add_flag("--fast", crit_fast, "one deletion per stabilizer orbit instead of all");
    cmd_crit->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* cmd_peres = app.add_subcommand("peres", "the 24-ray system and its critical subsets");
    int peres_size = 0;
    cmd_peres->add_option("--criticals", peres_size)->check(CLI::IsMember({18, 20}));
    cmd_peres->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* cmd_ineq = app.add_subcommand("inequality", "classical vs quantum bound for an instance");
    std::string instance = "30ray", method = "sweep";
    cmd_ineq->add_option("--instance", instance)->check(CLI::IsMember({"30ray", "peres18", "full60"}));
    cmd_ineq->add_option("--method", method)->check(CLI::IsMember({"sweep", "bnb"}));

    auto* cmd_verify = app.add_subcommand("verify-all", "run every acceptance criterion");
    bool verify_fast = false, skip_det = false;
    cmd_verify->add_flag("--fast", verify_fast, "sampled criticality (one deletion per orbit)");
    cmd_verify->add_flag("--skip-determinism", skip_det, "do not re-run the pipeline for the determinism check");

    auto* cmd_explore = app.add_subcommand(
        "explore", "conjecture exploration: random search for critical sets outside the chain "
                   "construction (absence of finds proves nothing)");
    int explore_size = 29;
    std::uint64_t explore_samples = 10000, explore_seed = 1;
    cmd_explore->add_option("--size", explore_size, "subset size to sample")->check(CLI::Range(4, 59));
    cmd_explore->add_option("--samples", explore_samples, "number of random subsets");
    cmd_explore->add_option("--seed", explore_seed, "PRNG seed");

    CLI11_PARSE(app, argc, argv);

    std::ofstream file;
    std::ostream& os = out_stream(file, output_path);

    if (cmd_catalog->parsed()) {
        const Catalog& cat = Catalog::get();
        if (format == "json")
            os << catalog_json(cat).dump(2) << '\n';
        else
            emit_catalog_table(os, cat);
        return 0;
    }

    if (cmd_lines->parsed()) {
        const Catalog& cat = Catalog::get();
        const LineTable lines = LineTable::build(cat);
        if (format == "json")
            os << lines_json(lines).dump(2) << '\n';
        else
            emit_lines_table(os, lines);
        return 0;
    }

    if (cmd_sym->parsed()) {
        const Catalog& cat = Catalog::get();
        const Group group = Group::generate(cat, threads);
        nlohmann::json doc;
        if (opt_order) {
            doc["projective_order"] = group.elements().size();
            doc["signed_maps"] = group.signed_map_count();
        }
        if (opt_generators) {
            const auto rep = group.verify_period5_generators(cat);
            doc["generators_ok"] = rep.ok;
            doc["generator_checks"] = rep.notes;
        }
        if (!orbit_arg.empty()) {
            const auto ids = parse_ray_set(orbit_arg);
            doc["orbit"] = orbit_json(group.orbit(mask_of_ids(ids)));
        }
        if (doc.empty()) doc["projective_order"] = group.elements().size();
        os << doc.dump(2) << '\n';
        return 0;
    }

    if (cmd_solve->parsed()) {
        const Catalog& cat = Catalog::get();
        const RaySystem sys = ray_system_of(cat);
        const std::uint64_t subset = mask_of_ids(parse_ray_set(rays_arg));
        std::vector<int> constraint;
        const std::vector<int>* constraint_ptr = nullptr;
        if (bases_arg != "intact" && bases_arg != "all") {
            std::ifstream in(bases_arg);
            if (!in) throw std::runtime_error("cannot read basis file: " + bases_arg);
            std::string line;
            while (std::getline(in, line)) {
                std::istringstream ls(line);
                std::array<int, 4> q{};
                if (ls >> q[0] >> q[1] >> q[2] >> q[3]) {
                    std::sort(q.begin(), q.end());
                    const int bi = cat.basis_index(Basis{q});
                    if (bi < 0) throw std::runtime_error("unknown basis in file: " + line);
                    constraint.push_back(bi);
                }
            }
            constraint_ptr = &constraint;
        }
        // "intact" and "all" differ only in which bases constrain the subset;
        // with the default semantics the at-least-one-green rule applies to
        // fully surviving bases either way.
        const SolveResult res = solve(sys, subset, constraint_ptr, SolveOptions{node_limit});
        nlohmann::json doc = solve_json(sys, subset, res);
        if (opt_tree && res.status == SolveStatus::Uncolorable) {
            std::vector<int> tree_bases;
            if (constraint_ptr)
                tree_bases = constraint;
            else
                for (std::size_t bi = 0; bi < sys.bases.size(); ++bi)
                    tree_bases.push_back(static_cast<int>(bi));
            const ProofTree tree = proof_tree(sys, subset, tree_bases);
            doc["proof_tree"] = proof_tree_json(sys, *tree.root);
            os << doc.dump(2) << '\n';
            os << proof_tree_text(sys, tree);
        } else {
            os << doc.dump(2) << '\n';
        }
        return res.status == SolveStatus::Colorable ? 0
               : res.status == SolveStatus::Uncolorable ? 1 : 2;
    }

    if (cmd_crit->parsed()) {
        const Catalog& cat = Catalog::get();
        const LineTable lines = LineTable::build(cat);
        const ChainKind kind = crit_size == 30 ? ChainKind::Cycle5 : ChainKind::Bipartite23;
        const auto family = enumerate_critical_sets(kind, lines);
        if (format == "table") {
            const std::uint64_t example = crit_size == 30 ? example_set_30(lines) : example_set_36(lines);
            emit_family_table(os, cat, example,
                              "intact bases of the first " + std::to_string(crit_size) +
                                  "-ray set marked *bold*; other members _italic_");
        }
        nlohmann::json doc;
        doc["size"] = crit_size;
        doc["count"] = family.size();
        if (crit_enumerate) doc["sets"] = critical_family_json(family);
        if (crit_verify || crit_fast) {
            const RaySystem sys = ray_system_of(cat);
            const Group group = Group::generate(cat, threads);
            const auto v = verify_family(family, kind, sys, &group, crit_fast, threads,
                                         SolveOptions{node_limit});
            doc["verified_critical"] = v.critical;
            doc["parity_certificates"] = v.parity_certificates;
            doc["census_matches"] = v.census_matches;
            doc["failures"] = v.failures;
            os << doc.dump(2) << '\n';
            return v.ok() ? 0 : 1;
        }
        if (format != "table") os << doc.dump(2) << '\n';
        return 0;
    }

    if (cmd_peres->parsed()) {
        const PeresCatalog peres = build_peres();
        nlohmann::json doc;
        doc["rays"] = nlohmann::json::array();
        for (int id = 1; id <= 24; ++id)
            doc["rays"].push_back({{"id", id}, {"vec", to_json(peres.vec(id))}});
        doc["bases"] = nlohmann::json::array();
        for (const auto& b : peres.system.bases) doc["bases"].push_back(b);
        if (peres_size == 18) {
            const auto sets = peres_criticals_18(peres);
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& s : sets) arr.push_back(s.ids);
            doc["criticals_18"] = std::move(arr);
        } else if (peres_size == 20) {
            const auto sets = peres_criticals_20(peres, threads);
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& s : sets) arr.push_back(s.ids);
            doc["criticals_20"] = std::move(arr);
            doc["count_20"] = sets.size();
        }
        os << doc.dump(2) << '\n';
        return 0;
    }

    if (cmd_ineq->parsed()) {
        const Catalog& cat = Catalog::get();
        InequalityInstance inst;
        if (instance == "30ray") {
            const LineTable lines = LineTable::build(cat);
            inst = make_instance_30ray(cat, lines);
        } else if (instance == "peres18") {
            inst = make_instance_peres18();
        } else {
            inst = make_instance_full60(cat);
            if (method == "sweep")
                throw std::runtime_error(
                    "the 60-ray instance exceeds the 36-ray sweep budget; use --method bnb");
        }
        const GapReport rep = gap_report(inst, method, threads, node_limit);
        os << gap_json(rep).dump(2) << '\n';
        return 0;
    }

    if (cmd_verify->parsed()) {
        VerifyOptions vo;
        vo.fast = verify_fast;
        vo.threads = threads;
        vo.node_limit = node_limit;
        vo.check_determinism = !skip_det;
        const VerifySummary summary = verify_all(vo);
        os << verify_report(summary);
        for (const auto& c : summary.criteria)
            std::cerr << "criterion " << c.number << ": " << c.seconds << "s\n";
        return summary.all_pass ? 0 : 1;
    }

    if (cmd_explore->parsed()) {
        const Catalog& cat = Catalog::get();
        const RaySystem sys = ray_system_of(cat);
        std::mt19937_64 rng(explore_seed);
        std::uint64_t uncolorable = 0, critical_found = 0;
        nlohmann::json finds = nlohmann::json::array();
        std::vector<int> pool(60);
        for (int i = 0; i < 60; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
        for (std::uint64_t s = 0; s < explore_samples; ++s) {
            for (int i = 0; i < explore_size; ++i) {
                std::uniform_int_distribution<int> pick(i, 59);
                std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
            }
            std::uint64_t subset = 0;
            for (int i = 0; i < explore_size; ++i)
                subset |= std::uint64_t{1} << (pool[static_cast<std::size_t>(i)] - 1);
            if (solve(sys, subset, nullptr, SolveOptions{node_limit}).status !=
                SolveStatus::Uncolorable)
                continue;
            ++uncolorable;
            if (is_critical(sys, subset, nullptr, SolveOptions{node_limit}).kind ==
                CriticalityKind::Critical) {
                ++critical_found;
                finds.push_back(ids_of_mask(subset));
            }
        }
        nlohmann::json doc;
        doc["mode"] = "conjecture exploration (random sampling; no exhaustiveness claim)";
        doc["size"] = explore_size;
        doc["samples"] = explore_samples;
        doc["seed"] = explore_seed;
        doc["uncolorable_samples"] = uncolorable;
        doc["critical_samples"] = critical_found;
        doc["critical_sets"] = finds;
        os << doc.dump(2) << '\n';
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
