#include "specker/coloring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace specker {

RaySystem ray_system_of(const Catalog& cat) {
    RaySystem sys;
    sys.ray_count = 60;
    for (const auto& b : cat.bases()) {
        sys.bases.push_back(b.rays);
        std::uint64_t m = 0;
        for (int id : b.rays) m |= std::uint64_t{1} << (id - 1);
        sys.basis_masks.push_back(m);
    }
    for (int id = 1; id <= 60; ++id) sys.neighbor_masks.push_back(cat.neighbor_mask(id));
    return sys;
}

namespace {

struct NodeLimitExceeded {};

// Backtracking core. Rays are decided in id order, green tried before red,
// with unit propagation on the intact bases; the first witness found is the
// lexicographically least green set under that order.
struct Searcher {
    const RaySystem& sys;
    std::uint64_t subset;
    std::vector<std::uint64_t> intact;
    std::uint64_t node_limit;
    SearchStats stats;

    bool propagate(std::uint64_t& greens, std::uint64_t& reds) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const std::uint64_t bm : intact) {
                if (bm & greens) continue;
                const std::uint64_t undec = bm & ~reds;
                if (undec == 0) return false;  // all four red
                if ((undec & (undec - 1)) == 0) {
                    greens |= undec;
                    const int id = std::countr_zero(undec) + 1;
                    reds |= sys.neighbor_masks[static_cast<std::size_t>(id - 1)] & subset & ~greens;
                    if (greens & reds) return false;
                    changed = true;
                }
            }
        }
        return true;
    }

    bool dfs(std::uint64_t greens, std::uint64_t reds, std::uint64_t depth, std::uint64_t& out) {
        if (++stats.nodes > node_limit) throw NodeLimitExceeded{};
        stats.max_depth = std::max(stats.max_depth, depth);
        if (!propagate(greens, reds)) return false;
        const std::uint64_t undecided = subset & ~greens & ~reds;
        if (undecided == 0) {
            out = greens;
            return true;
        }
        const std::uint64_t bit = undecided & (~undecided + 1);  // lowest id first
        const int id = std::countr_zero(bit) + 1;
        std::uint64_t g2 = greens | bit;
        std::uint64_t r2 = reds | (sys.neighbor_masks[static_cast<std::size_t>(id - 1)] & subset & ~g2);
        if ((g2 & r2) == 0 && dfs(g2, r2, depth + 1, out)) return true;
        return dfs(greens, reds | bit, depth + 1, out);
    }
};

std::vector<std::uint64_t> intact_masks(const RaySystem& sys, std::uint64_t subset,
                                        const std::vector<int>* constraint_bases) {
    std::vector<std::uint64_t> out;
    if (constraint_bases) {
        for (int bi : *constraint_bases) {
            const std::uint64_t bm = sys.basis_masks[static_cast<std::size_t>(bi)];
            if ((bm & subset) == bm) out.push_back(bm);
        }
    } else {
        for (const std::uint64_t bm : sys.basis_masks)
            if ((bm & subset) == bm) out.push_back(bm);
    }
    return out;
}

}  // namespace

SolveResult solve(const RaySystem& sys, std::uint64_t subset,
                  const std::vector<int>* constraint_bases, SolveOptions opts) {
    Searcher s{sys, subset, intact_masks(sys, subset, constraint_bases), opts.node_limit, {}};
    SolveResult res;
    try {
        std::uint64_t witness = 0;
        const bool ok = s.dfs(0, 0, 0, witness);
        res.status = ok ? SolveStatus::Colorable : SolveStatus::Uncolorable;
        res.greens = ok ? witness : 0;
    } catch (const NodeLimitExceeded&) {
        res.status = SolveStatus::Undecided;
    }
    res.stats = s.stats;
    if (res.status == SolveStatus::Uncolorable)
        res.parity = parity_certificate(sys, subset, constraint_bases);
    return res;
}

std::optional<ParityCertificate> parity_certificate(const RaySystem& sys, std::uint64_t subset,
                                                    const std::vector<int>* constraint_bases) {
    std::vector<int> bases;
    std::array<int, 64> mult{};
    auto consider = [&](int bi) {
        const std::uint64_t bm = sys.basis_masks[static_cast<std::size_t>(bi)];
        if ((bm & subset) != bm) return;
        bases.push_back(bi);
        for (int id : sys.bases[static_cast<std::size_t>(bi)]) ++mult[static_cast<std::size_t>(id - 1)];
    };
    if (constraint_bases)
        for (int bi : *constraint_bases) consider(bi);
    else
        for (std::size_t bi = 0; bi < sys.bases.size(); ++bi) consider(static_cast<int>(bi));

    if (bases.empty() || bases.size() % 2 == 0) return std::nullopt;
    ParityCertificate cert;
    cert.bases = std::move(bases);
    for (int id = 1; id <= sys.ray_count; ++id) {
        if (!((subset >> (id - 1)) & 1u)) continue;
        const int m = mult[static_cast<std::size_t>(id - 1)];
        if (m % 2 != 0) return std::nullopt;
        if (m > 0) cert.multiplicity.push_back({id, m});
    }
    return cert;
}

bool witness_valid(const RaySystem& sys, std::uint64_t subset, std::uint64_t greens,
                   const std::vector<int>* constraint_bases) {
    if (greens & ~subset) return false;
    for (int id = 1; id <= sys.ray_count; ++id)
        if (((greens >> (id - 1)) & 1u) &&
            (sys.neighbor_masks[static_cast<std::size_t>(id - 1)] & greens))
            return false;
    for (const std::uint64_t bm : intact_masks(sys, subset, constraint_bases))
        if (!(bm & greens)) return false;
    return true;
}

BasisCensus classify_bases(const RaySystem& sys, std::uint64_t subset) {
    BasisCensus c;
    for (const std::uint64_t bm : sys.basis_masks) {
        switch (std::popcount(bm & subset)) {
            case 4: ++c.intact; break;
            case 3: ++c.almost_intact; break;
            case 2: ++c.half_intact; break;
            case 1: ++c.quarter_intact; break;
            default: ++c.empty; break;
        }
    }
    return c;
}

CriticalityResult is_critical(const RaySystem& sys, std::uint64_t subset,
                              const std::vector<int>* deletion_reps, SolveOptions opts) {
    CriticalityResult res;
    const SolveResult whole = solve(sys, subset, nullptr, opts);
    if (whole.status == SolveStatus::Undecided) throw std::runtime_error("is_critical: node limit hit");
    if (whole.status == SolveStatus::Colorable) {
        res.kind = CriticalityKind::NotUncolorable;
        return res;
    }
    std::vector<int> deletions;
    if (deletion_reps && !deletion_reps->empty())
        deletions = *deletion_reps;
    else
        for (int id = 1; id <= sys.ray_count; ++id)
            if ((subset >> (id - 1)) & 1u) deletions.push_back(id);

    for (int id : deletions) {
        const SolveResult r = solve(sys, subset & ~(std::uint64_t{1} << (id - 1)), nullptr, opts);
        if (r.status == SolveStatus::Undecided) throw std::runtime_error("is_critical: node limit hit");
        if (r.status == SolveStatus::Uncolorable) {
            res.kind = CriticalityKind::Redundant;
            res.redundant_ray = id;
            return res;
        }
        res.witnesses.push_back({id, r.greens});
    }
    res.kind = CriticalityKind::Critical;
    return res;
}

namespace {

// Conflict masks for pairs visible in the listed bases only.
std::vector<std::uint64_t> listed_pair_masks(const RaySystem& sys, std::uint64_t subset,
                                             const std::vector<int>& constraint_bases) {
    std::vector<std::uint64_t> conflict(64, 0);
    for (int bi : constraint_bases) {
        const std::uint64_t surv = sys.basis_masks[static_cast<std::size_t>(bi)] & subset;
        for (int id = 1; id <= sys.ray_count; ++id)
            if ((surv >> (id - 1)) & 1u)
                conflict[static_cast<std::size_t>(id - 1)] |= surv & ~(std::uint64_t{1} << (id - 1));
    }
    return conflict;
}

}  // namespace

ColoringCount count_colorings(const RaySystem& sys, std::uint64_t subset,
                              const std::vector<int>& constraint_bases) {
    std::vector<std::uint64_t> intact;
    for (int bi : constraint_bases) {
        const std::uint64_t bm = sys.basis_masks[static_cast<std::size_t>(bi)];
        if ((bm & subset) == bm) intact.push_back(bm);
    }
    std::sort(intact.begin(), intact.end());
    const auto conflict = listed_pair_masks(sys, subset, constraint_bases);

    // Half/almost-intact survivor masks over the whole system, for overload
    // reporting on each counted coloring.
    std::vector<std::uint64_t> half, almost;
    for (const std::uint64_t bm : sys.basis_masks) {
        const int n = std::popcount(bm & subset);
        if (n == 2) half.push_back(bm & subset);
        if (n == 3) almost.push_back(bm & subset);
    }

    ColoringCount out;
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t greens, std::uint64_t blocked) -> void {
        if (i == intact.size()) {
            ++out.count;
            bool oh = false, oa = false;
            for (const std::uint64_t h : half)
                if (std::popcount(h & greens) >= 2) { oh = true; break; }
            for (const std::uint64_t a : almost)
                if (std::popcount(a & greens) >= 2) { oa = true; break; }
            out.overload_half += oh;
            out.overload_almost += oa;
            out.overload_any += (oh || oa);
            out.colorings.push_back(greens);
            return;
        }
        const std::uint64_t bm = intact[i];
        const std::uint64_t present = bm & greens;
        if (present) {
            if (std::popcount(present) == 1) self(self, i + 1, greens, blocked);
            return;
        }
        std::uint64_t candidates = bm & ~blocked;
        while (candidates) {
            const std::uint64_t bit = candidates & (~candidates + 1);
            candidates &= candidates - 1;
            const int id = std::countr_zero(bit) + 1;
            self(self, i + 1, greens | bit, blocked | conflict[static_cast<std::size_t>(id - 1)]);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

ProofTree proof_tree(const RaySystem& sys, std::uint64_t subset,
                     const std::vector<int>& constraint_bases) {
    const SolveResult check = solve(sys, subset, &constraint_bases);
    if (check.status != SolveStatus::Uncolorable)
        throw std::invalid_argument("proof_tree: subset is not uncolorable under these constraints");

    std::vector<int> intact;
    for (int bi : constraint_bases) {
        const std::uint64_t bm = sys.basis_masks[static_cast<std::size_t>(bi)];
        if ((bm & subset) == bm) intact.push_back(bi);
    }
    std::sort(intact.begin(), intact.end());
    const auto conflict = listed_pair_masks(sys, subset, constraint_bases);

    ProofTree tree;
    // Propagation: greens force conflicting rays red; an intact basis with no
    // green and one undecided ray forces it green; an all-red basis closes a
    // leaf. Returns the all-red basis index or -1.
    auto propagate = [&](std::uint64_t& greens, std::uint64_t& reds,
                         std::vector<int>* forced) -> int {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const int bi : intact) {
                const std::uint64_t bm = sys.basis_masks[static_cast<std::size_t>(bi)];
                if (bm & greens) continue;
                const std::uint64_t undec = bm & ~reds;
                if (undec == 0) return bi;
                if ((undec & (undec - 1)) == 0) {
                    const int id = std::countr_zero(undec) + 1;
                    greens |= undec;
                    if (forced) forced->push_back(id);
                    reds |= conflict[static_cast<std::size_t>(id - 1)] & ~greens;
                    if (greens & reds) throw std::logic_error("proof_tree: green/red collision");
                    changed = true;
                }
            }
        }
        return -1;
    };

    auto build = [&](auto&& self, std::uint64_t greens, std::uint64_t reds,
                     int depth) -> std::unique_ptr<ProofTreeNode> {
        auto node = std::make_unique<ProofTreeNode>();
        tree.depth = std::max(tree.depth, depth);
        // Choose the unsatisfied basis with fewest undecided rays.
        int best = -1, best_undec = 5;
        for (const int bi : intact) {
            const std::uint64_t bm = sys.basis_masks[static_cast<std::size_t>(bi)];
            if (bm & greens) continue;
            const int undec = std::popcount(bm & ~reds);
            if (undec < best_undec) {
                best = bi;
                best_undec = undec;
            }
        }
        if (best == -1) throw std::logic_error("proof_tree: ran out of branching bases");
        node->basis = best;
        std::uint64_t candidates = sys.basis_masks[static_cast<std::size_t>(best)] & ~reds;
        while (candidates) {
            const std::uint64_t bit = candidates & (~candidates + 1);
            candidates &= candidates - 1;
            const int id = std::countr_zero(bit) + 1;
            ProofTreeNode::Branch branch;
            branch.green = id;
            std::uint64_t g = greens | bit;
            std::uint64_t r = reds | (conflict[static_cast<std::size_t>(id - 1)] & ~g);
            const int dead = propagate(g, r, &branch.forced_greens);
            if (dead >= 0) {
                branch.child = std::make_unique<ProofTreeNode>();
                branch.child->all_red_basis = dead;
                ++tree.leaves;
            } else {
                branch.child = self(self, g, r, depth + 1);
            }
            node->branches.push_back(std::move(branch));
        }
        if (node->branches.empty()) throw std::logic_error("proof_tree: branch basis had no candidates");
        return node;
    };

    std::uint64_t greens = 0, reds = 0;
    const int dead = propagate(greens, reds, nullptr);
    if (dead >= 0) {
        tree.root = std::make_unique<ProofTreeNode>();
        tree.root->all_red_basis = dead;
        tree.leaves = 1;
    } else {
        tree.root = build(build, greens, reds, 1);
    }
    return tree;
}

std::string proof_tree_text(const RaySystem& sys, const ProofTree& tree) {
    std::ostringstream os;
    auto basis_str = [&](int bi) {
        std::string s;
        for (int id : sys.bases[static_cast<std::size_t>(bi)]) {
            if (!s.empty()) s += ' ';
            s += std::to_string(id);
        }
        return s;
    };
    auto emit = [&](auto&& self, const ProofTreeNode& node, const std::string& indent) -> void {
        if (node.all_red_basis >= 0) {
            os << indent << "all-red basis *" << basis_str(node.all_red_basis) << "*\n";
            return;
        }
        os << indent << "branch on basis {" << basis_str(node.basis) << "}\n";
        for (const auto& br : node.branches) {
            os << indent << "  green " << br.green;
            if (!br.forced_greens.empty()) {
                os << " (forces";
                for (int id : br.forced_greens) os << ' ' << id;
                os << ')';
            }
            os << '\n';
            self(self, *br.child, indent + "    ");
        }
    };
    emit(emit, *tree.root, "");
    return os.str();
}

}  // namespace specker
