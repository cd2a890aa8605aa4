#include "specker/inequality.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "specker/critical_sets.hpp"
#include "specker/parallel.hpp"
#include "specker/peres.hpp"

namespace specker {

namespace {

// 4x4 matrix over Z[tau] scaled by 2^-exp2.
struct DyadicMat {
    std::array<GoldenInt, 16> m{};
    int exp2 = 0;

    static DyadicMat identity() {
        DyadicMat d;
        for (int i = 0; i < 4; ++i) d.at(i, i) = g_one;
        return d;
    }
    GoldenInt& at(int r, int c) { return m[static_cast<std::size_t>(r * 4 + c)]; }
    const GoldenInt& at(int r, int c) const { return m[static_cast<std::size_t>(r * 4 + c)]; }

    void reduce() {
        while (exp2 > 0) {
            for (const auto& g : m)
                if ((g.a | g.b) & 1) return;
            for (auto& g : m) g = GoldenInt{g.a / 2, g.b / 2};
            --exp2;
        }
    }
};

DyadicMat operator*(const DyadicMat& x, const DyadicMat& y) {
    DyadicMat out;
    out.exp2 = x.exp2 + y.exp2;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            GoldenInt s = g_zero;
            for (int k = 0; k < 4; ++k) s = s + x.at(i, k) * y.at(k, j);
            out.at(i, j) = s;
        }
    out.reduce();
    return out;
}

// I - 2 v v^T / <v,v> with a dyadic norm (4 or 2 for the systems here).
DyadicMat reflection(const GoldenVec4& v) {
    const GoldenInt norm = inner_product(v, v);
    int exp2;
    if (norm == GoldenInt{4, 0}) exp2 = 1;       // (2I - v v^T) / 2
    else if (norm == GoldenInt{2, 0}) exp2 = 0;  // I - v v^T
    else throw std::invalid_argument("reflection: ray norm must be 2 or 4");
    DyadicMat d;
    d.exp2 = exp2;
    const std::int64_t diag = exp2 ? 2 : 1;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d.at(i, j) = g_zero - v[i] * v[j];
    for (int i = 0; i < 4; ++i) d.at(i, i) = d.at(i, i) + GoldenInt{diag, 0};
    d.reduce();
    return d;
}

bool is_minus_identity(const DyadicMat& d) {
    if (d.exp2 != 0) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(d.at(i, j) == (i == j ? GoldenInt{-1, 0} : g_zero))) return false;
    return true;
}

}  // namespace

int quantum_value(const InequalityInstance& inst) {
    for (const auto& basis : inst.bases) {
        DyadicMat prod = DyadicMat::identity();
        for (int r : basis) prod = prod * reflection(inst.vectors[static_cast<std::size_t>(r)]);
        if (!is_minus_identity(prod))
            throw std::runtime_error("quantum_value: context is not a complete orthogonal basis");
    }
    return static_cast<int>(inst.bases.size());
}

int inequality_score(const InequalityInstance& inst, std::uint64_t assignment) {
    int s = 0;
    for (const auto& basis : inst.bases) {
        int ones = 0;
        for (int r : basis) ones += (assignment >> r) & 1;
        s += (ones % 2) ? 1 : -1;
    }
    return s;
}

ClassicalResult classical_max_sweep(const InequalityInstance& inst, int threads) {
    const int n = static_cast<int>(inst.vectors.size());
    if (n > 36)
        throw std::invalid_argument(
            "classical_max_sweep: more than 36 rays; use the branch-and-bound method");
    const std::uint64_t total = std::uint64_t{1} << n;

    std::vector<std::vector<int>> ray_bases(static_cast<std::size_t>(n));
    for (std::size_t bi = 0; bi < inst.bases.size(); ++bi)
        for (int r : inst.bases[bi]) ray_bases[static_cast<std::size_t>(r)].push_back(static_cast<int>(bi));

    const int workers = std::min(resolve_threads(threads), 256);
    const std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) /
                                static_cast<std::uint64_t>(workers);
    std::vector<int> best(static_cast<std::size_t>(workers), INT32_MIN);
    std::vector<std::uint64_t> best_at(static_cast<std::size_t>(workers), 0);

    parallel_for(static_cast<std::size_t>(workers), workers, [&](std::size_t w) {
        const std::uint64_t lo = chunk * w;
        const std::uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) return;

        std::vector<std::int8_t> term(inst.bases.size());
        std::uint64_t assign = lo ^ (lo >> 1);  // Gray code of the first step
        int score = 0;
        for (std::size_t bi = 0; bi < inst.bases.size(); ++bi) {
            int ones = 0;
            for (int r : inst.bases[bi]) ones += (assign >> r) & 1;
            term[bi] = (ones % 2) ? 1 : -1;
            score += term[bi];
        }
        int w_best = score;
        std::uint64_t w_at = assign;
        for (std::uint64_t step = lo + 1; step < hi; ++step) {
            const int flip = std::countr_zero(step);
            assign ^= std::uint64_t{1} << flip;
            for (const int bi : ray_bases[static_cast<std::size_t>(flip)]) {
                score -= 2 * term[static_cast<std::size_t>(bi)];
                term[static_cast<std::size_t>(bi)] = static_cast<std::int8_t>(-term[static_cast<std::size_t>(bi)]);
            }
            if (score > w_best || (score == w_best && assign < w_at)) {
                w_best = score;
                w_at = assign;
            }
        }
        best[w] = w_best;
        best_at[w] = w_at;
    });

    ClassicalResult res;
    res.max = INT32_MIN;
    for (std::size_t w = 0; w < best.size(); ++w) {
        if (best[w] == INT32_MIN) continue;
        if (best[w] > res.max || (best[w] == res.max && best_at[w] < res.witness)) {
            res.max = best[w];
            res.witness = best_at[w];
        }
    }
    res.explored = total;
    if (res.max != inequality_score(inst, res.witness))
        throw std::logic_error("classical_max_sweep: witness score mismatch");
    return res;
}

namespace {

struct BnbState {
    const InequalityInstance& inst;
    std::vector<int> ray_order;                  // decision order
    std::vector<std::vector<int>> ray_bases;     // per ray: incident contexts
    std::vector<int> undecided;                  // per context
    std::vector<std::int8_t> parity;             // per context: parity of decided 1s
    std::vector<int> group_of;                   // per context: parity group or -1
    std::vector<int> group_size;                 // per group
    std::vector<int> group_cap;                  // per group: decided score + undecided
    int decided_score = 0;                       // sum over fully decided contexts
    int ungrouped_undecided = 0;                 // optimistic +1 each
    std::uint64_t nodes = 0, node_limit = 0;
    bool truncated = false;
    int best = INT32_MIN;
    std::uint64_t best_at = 0, assignment = 0;

    int bound() const {
        int b = decided_score + ungrouped_undecided;
        for (std::size_t g = 0; g < group_size.size(); ++g) {
            // Even-multiplicity groups keep an even number of odd contexts,
            // so the group score stays congruent to -size mod 4.
            const int residue = ((-group_size[g]) % 4 + 4) % 4;
            int value = group_cap[g];
            while (((value % 4) + 4) % 4 != residue) --value;
            b += value;
        }
        return b;
    }
};

void bnb_rec(BnbState& st, std::size_t depth) {
    if (st.node_limit && ++st.nodes > st.node_limit) {
        st.truncated = true;
        return;
    }
    if (depth == st.ray_order.size()) {
        if (st.decided_score > st.best ||
            (st.decided_score == st.best && st.assignment < st.best_at)) {
            st.best = st.decided_score;
            st.best_at = st.assignment;
        }
        return;
    }
    if (st.bound() <= st.best) return;
    const int ray = st.ray_order[depth];
    for (int value : {1, 0}) {
        struct Delta {
            int context;
            int score_change;
            int group_cap_change;
        };
        std::array<Delta, 8> deltas;
        std::size_t n_deltas = 0;
        for (const int bi : st.ray_bases[static_cast<std::size_t>(ray)]) {
            Delta d{bi, 0, 0};
            st.parity[static_cast<std::size_t>(bi)] ^= static_cast<std::int8_t>(value);
            if (--st.undecided[static_cast<std::size_t>(bi)] == 0) {
                const int term = st.parity[static_cast<std::size_t>(bi)] ? 1 : -1;
                st.decided_score += term;
                d.score_change = term;
                const int g = st.group_of[static_cast<std::size_t>(bi)];
                if (g >= 0) {
                    st.group_cap[static_cast<std::size_t>(g)] += term - 1;
                    d.group_cap_change = term - 1;
                } else {
                    --st.ungrouped_undecided;
                }
            }
            deltas[n_deltas++] = d;
        }
        if (value) st.assignment |= std::uint64_t{1} << ray;
        bnb_rec(st, depth + 1);
        if (value) st.assignment &= ~(std::uint64_t{1} << ray);
        for (std::size_t k = 0; k < n_deltas; ++k) {
            const Delta& d = deltas[k];
            if (st.undecided[static_cast<std::size_t>(d.context)]++ == 0) {
                st.decided_score -= d.score_change;
                const int g = st.group_of[static_cast<std::size_t>(d.context)];
                if (g >= 0)
                    st.group_cap[static_cast<std::size_t>(g)] -= d.group_cap_change;
                else
                    ++st.ungrouped_undecided;
            }
            st.parity[static_cast<std::size_t>(d.context)] ^= static_cast<std::int8_t>(value);
        }
        if (st.truncated) return;
    }
}

// Greedy packing of disjoint context groups where every ray has even
// multiplicity and the group has odd size (each caps its score at size-2).
std::vector<std::vector<int>> parity_groups(const InequalityInstance& inst) {
    const std::size_t nb = inst.bases.size();
    std::vector<std::vector<int>> groups;
    std::vector<char> used(nb, 0);
    for (std::size_t seed = 0; seed < nb; ++seed) {
        if (used[seed]) continue;
        std::vector<int> group{static_cast<int>(seed)};
        std::vector<char> in_group(nb, 0);
        in_group[seed] = 1;
        std::vector<int> mult(inst.vectors.size(), 0);
        for (int r : inst.bases[seed]) ++mult[static_cast<std::size_t>(r)];
        bool closed = false;
        for (std::size_t rounds = 0; rounds < 2 * nb && !closed; ++rounds) {
            int odd_ray = -1;
            for (std::size_t r = 0; r < mult.size(); ++r)
                if (mult[r] % 2) {
                    odd_ray = static_cast<int>(r);
                    break;
                }
            if (odd_ray < 0) {
                closed = group.size() % 2 == 1;
                break;
            }
            // Among unused contexts on the odd ray, take the one leaving the
            // fewest odd rays behind.
            int pick = -1, pick_odd = INT32_MAX;
            for (std::size_t bi = 0; bi < nb; ++bi) {
                if (used[bi] || in_group[bi]) continue;
                bool covers = false;
                for (int r : inst.bases[bi]) covers = covers || r == odd_ray;
                if (!covers) continue;
                int odd_after = 0;
                for (std::size_t r = 0; r < mult.size(); ++r) {
                    int m = mult[r];
                    for (int br : inst.bases[bi]) m += (static_cast<std::size_t>(br) == r);
                    odd_after += m % 2;
                }
                if (odd_after < pick_odd) {
                    pick_odd = odd_after;
                    pick = static_cast<int>(bi);
                }
            }
            if (pick < 0) break;
            group.push_back(pick);
            in_group[static_cast<std::size_t>(pick)] = 1;
            for (int r : inst.bases[static_cast<std::size_t>(pick)]) ++mult[static_cast<std::size_t>(r)];
        }
        if (closed) {
            for (int bi : group) used[static_cast<std::size_t>(bi)] = 1;
            groups.push_back(std::move(group));
        }
    }
    return groups;
}

// Deterministic hill-climbing warm start: the branch and bound only has to
// certify (or beat) the incumbent it is handed.
std::pair<int, std::uint64_t> local_search_incumbent(const InequalityInstance& inst) {
    const int n = static_cast<int>(inst.vectors.size());
    std::vector<std::vector<int>> ray_bases(static_cast<std::size_t>(n));
    for (std::size_t bi = 0; bi < inst.bases.size(); ++bi)
        for (int r : inst.bases[bi]) ray_bases[static_cast<std::size_t>(r)].push_back(static_cast<int>(bi));
    std::mt19937_64 rng(0x600ce11);
    int best = INT32_MIN;
    std::uint64_t best_at = 0;
    for (int restart = 0; restart < 40; ++restart) {
        std::uint64_t v = rng() & ((n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
        std::vector<std::int8_t> term(inst.bases.size());
        int score = 0;
        for (std::size_t bi = 0; bi < inst.bases.size(); ++bi) {
            int ones = 0;
            for (int r : inst.bases[bi]) ones += (v >> r) & 1;
            term[bi] = (ones % 2) ? 1 : -1;
            score += term[bi];
        }
        bool improved = true;
        while (improved) {
            improved = false;
            for (int r = 0; r < n; ++r) {
                int delta = 0;
                for (const int bi : ray_bases[static_cast<std::size_t>(r)])
                    delta -= 2 * term[static_cast<std::size_t>(bi)];
                if (delta > 0) {
                    v ^= std::uint64_t{1} << r;
                    for (const int bi : ray_bases[static_cast<std::size_t>(r)])
                        term[static_cast<std::size_t>(bi)] =
                            static_cast<std::int8_t>(-term[static_cast<std::size_t>(bi)]);
                    score += delta;
                    improved = true;
                }
            }
        }
        if (score > best || (score == best && v < best_at)) {
            best = score;
            best_at = v;
        }
    }
    return {best, best_at};
}

}  // namespace

ClassicalResult classical_max_bnb(const InequalityInstance& inst, std::uint64_t node_limit) {
    const int n = static_cast<int>(inst.vectors.size());
    BnbState st{inst, {}, {}, {}, {}, {}, {}, {}, 0, 0, 0, node_limit, false, INT32_MIN, 0, 0};
    st.ray_bases.resize(static_cast<std::size_t>(n));
    for (std::size_t bi = 0; bi < inst.bases.size(); ++bi)
        for (int r : inst.bases[bi]) st.ray_bases[static_cast<std::size_t>(r)].push_back(static_cast<int>(bi));
    st.undecided.assign(inst.bases.size(), 4);
    st.parity.assign(inst.bases.size(), 0);

    const auto groups = parity_groups(inst);
    st.group_of.assign(inst.bases.size(), -1);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (int bi : groups[g]) st.group_of[static_cast<std::size_t>(bi)] = static_cast<int>(g);
        st.group_size.push_back(static_cast<int>(groups[g].size()));
        st.group_cap.push_back(static_cast<int>(groups[g].size()));
    }
    for (const int g : st.group_of) st.ungrouped_undecided += (g < 0);

    // Decide rays context by context so contexts complete early.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto& basis : inst.bases)
        for (int r : basis)
            if (!seen[static_cast<std::size_t>(r)]) {
                seen[static_cast<std::size_t>(r)] = 1;
                st.ray_order.push_back(r);
            }
    for (int r = 0; r < n; ++r)
        if (!seen[static_cast<std::size_t>(r)]) st.ray_order.push_back(r);

    const auto [warm_score, warm_at] = local_search_incumbent(inst);
    st.best = warm_score - 1;  // the search must rediscover (and certify) it
    bnb_rec(st, 0);
    if (st.best < warm_score) {
        st.best = warm_score;
        st.best_at = warm_at;
    }

    ClassicalResult res;
    res.max = st.best;
    res.witness = st.best_at;
    res.explored = st.nodes;
    res.exact = !st.truncated;
    if (res.exact && res.max != inequality_score(inst, res.witness))
        throw std::logic_error("classical_max_bnb: witness score mismatch");
    return res;
}

InequalityInstance make_instance_30ray(const Catalog& cat, const LineTable& lines) {
    InequalityInstance inst;
    inst.name = "30ray";
    const std::uint64_t set = example_set_30(lines);
    const auto ids = ids_of_mask(set);
    std::array<int, 64> slot{};
    for (std::size_t i = 0; i < ids.size(); ++i) {
        inst.vectors.push_back(cat.vec(ids[i]));
        slot[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
    }
    for (const auto& b : cat.bases()) {
        std::uint64_t bm = 0;
        for (int id : b.rays) bm |= std::uint64_t{1} << (id - 1);
        if ((bm & set) != bm) continue;
        std::array<int, 4> ctx{};
        for (int i = 0; i < 4; ++i) ctx[static_cast<std::size_t>(i)] = slot[static_cast<std::size_t>(b.rays[static_cast<std::size_t>(i)])];
        std::sort(ctx.begin(), ctx.end());
        inst.bases.push_back(ctx);
    }
    if (inst.bases.size() != 15)
        throw std::logic_error("30-ray instance: expected 15 contexts");
    return inst;
}

InequalityInstance make_instance_peres18() {
    const PeresCatalog peres = build_peres();
    InequalityInstance inst;
    inst.name = "peres18";
    // Remove the dual pair of the lexicographically first line of cell 0.
    const auto& [left, right] = peres.dual_lines.front();
    std::uint64_t drop = 0;
    for (int id : left.pts) drop |= std::uint64_t{1} << (id - 1);
    for (int id : right.pts) drop |= std::uint64_t{1} << (id - 1);
    const std::uint64_t set = peres.system.all_mask() & ~drop;
    const auto ids = ids_of_mask(set);
    std::array<int, 32> slot{};
    for (std::size_t i = 0; i < ids.size(); ++i) {
        inst.vectors.push_back(peres.vec(ids[i]));
        slot[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
    }
    for (std::size_t bi = 0; bi < peres.system.bases.size(); ++bi) {
        if ((peres.system.basis_masks[bi] & set) != peres.system.basis_masks[bi]) continue;
        std::array<int, 4> ctx{};
        for (int i = 0; i < 4; ++i)
            ctx[static_cast<std::size_t>(i)] =
                slot[static_cast<std::size_t>(peres.system.bases[bi][static_cast<std::size_t>(i)])];
        std::sort(ctx.begin(), ctx.end());
        inst.bases.push_back(ctx);
    }
    if (inst.bases.size() != 9) throw std::logic_error("Peres 18-ray instance: expected 9 contexts");
    return inst;
}

InequalityInstance make_instance_full60(const Catalog& cat) {
    InequalityInstance inst;
    inst.name = "full60";
    for (const auto& r : cat.rays()) inst.vectors.push_back(r.vec);
    for (const auto& b : cat.bases()) {
        std::array<int, 4> ctx{};
        for (int i = 0; i < 4; ++i) ctx[static_cast<std::size_t>(i)] = b.rays[static_cast<std::size_t>(i)] - 1;
        inst.bases.push_back(ctx);
    }
    return inst;
}

GapReport gap_report(const InequalityInstance& inst, const std::string& method, int threads,
                     std::uint64_t node_limit) {
    GapReport rep;
    rep.instance = inst.name;
    rep.quantum = quantum_value(inst);
    ClassicalResult cr;
    if (method == "sweep")
        cr = classical_max_sweep(inst, threads);
    else if (method == "bnb")
        cr = classical_max_bnb(inst, node_limit);
    else
        throw std::invalid_argument("gap_report: method must be sweep or bnb");
    rep.classical = cr.max;
    rep.witness = cr.witness;
    rep.classical_exact = cr.exact;
    rep.gap = rep.quantum - rep.classical;
    return rep;
}

}  // namespace specker
