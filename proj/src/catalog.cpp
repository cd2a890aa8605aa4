#include "specker/catalog.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "specker/reference_tables.hpp"

namespace specker {

std::string to_string(CellLabel label) {
    return std::string{label.column} + std::string{label.row} + "'";
}

std::uint64_t mask_of_ids(const std::vector<int>& ids) {
    std::uint64_t m = 0;
    for (int id : ids) m |= std::uint64_t{1} << (id - 1);
    return m;
}

std::vector<int> ids_of_mask(std::uint64_t mask) {
    std::vector<int> ids;
    ids.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for (int id = 1; id <= 64; ++id)
        if ((mask >> (id - 1)) & 1u) ids.push_back(id);
    return ids;
}

std::vector<GoldenVec4> Catalog::generate_vertices() {
    std::vector<GoldenVec4> vs;
    vs.reserve(120);
    for (int pos = 0; pos < 4; ++pos)
        for (int s : {1, -1}) {
            GoldenVec4 v;
            v[pos] = GoldenInt{2 * s, 0};
            vs.push_back(v);
        }
    for (int bits = 0; bits < 16; ++bits) {
        GoldenVec4 v;
        for (int pos = 0; pos < 4; ++pos) v[pos] = GoldenInt{(bits >> pos) & 1 ? -1 : 1, 0};
        vs.push_back(v);
    }
    // Even coordinate permutations of (tau, 1, kappa, 0) with free signs on
    // the nonzero slots.
    static constexpr int even_perms[12][4] = {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2},
                                              {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 3, 2, 0},
                                              {2, 0, 1, 3}, {2, 1, 3, 0}, {2, 3, 0, 1},
                                              {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 2, 1, 0}};
    const GoldenInt base[4] = {g_tau, g_one, g_kappa, g_zero};
    for (const auto& p : even_perms) {
        for (int bits = 0; bits < 8; ++bits) {
            GoldenVec4 v;
            int sign_slot = 0;
            for (int pos = 0; pos < 4; ++pos) {
                GoldenInt c = base[p[pos]];
                if (!is_zero(c)) {
                    if ((bits >> sign_slot) & 1) c = -c;
                    ++sign_slot;
                }
                v[pos] = c;
            }
            vs.push_back(v);
        }
    }
    if (vs.size() != 120) throw CatalogError("vertex generation: expected 120 vertices");
    for (const auto& v : vs)
        if (!(inner_product(v, v) == GoldenInt{4, 0}))
            throw CatalogError("vertex generation: vertex off the radius-2 sphere");
    return vs;
}

namespace {

// Unsigned coordinate pattern of a printed entry; OCR noise garbles signs but
// not symbols, so candidates for a duplicated entry share this pattern.
std::array<GoldenInt, 4> abs_pattern(const GoldenVec4& v) {
    std::array<GoldenInt, 4> p;
    for (int i = 0; i < 4; ++i) p[static_cast<std::size_t>(i)] = real_sign(v[i]) < 0 ? -v[i] : v[i];
    return p;
}

struct NumberingProblem {
    std::vector<GoldenVec4> canon;                       // 60 canonical representatives
    std::vector<std::vector<int>> candidates;            // per id-1: indices into canon
    std::vector<std::array<int, 4>> quads;               // 75 basis constraints (ids)
};

// Backtracking over the ambiguous ids; counts solutions up to `cap`.
struct NumberingSolver {
    const NumberingProblem& prob;
    std::vector<int> assignment;      // id-1 -> canon index, -1 undecided
    std::vector<char> used;           // canon index taken
    std::vector<int> ambiguous;       // ids to decide
    std::vector<std::vector<std::pair<int, int>>> touching;  // per id-1: (quad, slot)
    int solutions = 0;
    std::vector<int> first_solution;

    explicit NumberingSolver(const NumberingProblem& p) : prob(p) {
        assignment.assign(60, -1);
        used.assign(prob.canon.size(), 0);
        touching.resize(60);
        for (std::size_t q = 0; q < prob.quads.size(); ++q)
            for (int s = 0; s < 4; ++s)
                touching[static_cast<std::size_t>(prob.quads[q][static_cast<std::size_t>(s)] - 1)]
                    .push_back({static_cast<int>(q), s});
        for (int id = 1; id <= 60; ++id) {
            const auto& cand = prob.candidates[static_cast<std::size_t>(id - 1)];
            if (cand.size() == 1) {
                assignment[static_cast<std::size_t>(id - 1)] = cand[0];
                if (used[static_cast<std::size_t>(cand[0])])
                    throw CatalogError("numbering: two unambiguous entries share a vector");
                used[static_cast<std::size_t>(cand[0])] = 1;
            } else {
                ambiguous.push_back(id);
            }
        }
    }

    bool consistent(int id) const {
        const int ci = assignment[static_cast<std::size_t>(id - 1)];
        for (const auto& [q, slot] : touching[static_cast<std::size_t>(id - 1)]) {
            for (int s = 0; s < 4; ++s) {
                if (s == slot) continue;
                const int other = prob.quads[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)];
                const int cj = assignment[static_cast<std::size_t>(other - 1)];
                if (cj < 0) continue;
                if (!is_zero(inner_product(prob.canon[static_cast<std::size_t>(ci)],
                                           prob.canon[static_cast<std::size_t>(cj)])))
                    return false;
            }
        }
        return true;
    }

    void run(std::size_t idx, int cap) {
        if (solutions >= cap) return;
        if (idx == ambiguous.size()) {
            ++solutions;
            if (solutions == 1) first_solution = assignment;
            return;
        }
        const int id = ambiguous[idx];
        for (int ci : prob.candidates[static_cast<std::size_t>(id - 1)]) {
            if (used[static_cast<std::size_t>(ci)]) continue;
            assignment[static_cast<std::size_t>(id - 1)] = ci;
            used[static_cast<std::size_t>(ci)] = 1;
            if (consistent(id)) run(idx + 1, cap);
            assignment[static_cast<std::size_t>(id - 1)] = -1;
            used[static_cast<std::size_t>(ci)] = 0;
        }
    }
};

}  // namespace

Catalog Catalog::build() {
    Catalog cat;

    // 60 canonical representatives, one per antipodal pair.
    const auto vertices = generate_vertices();
    std::vector<GoldenVec4> canon;
    {
        std::unordered_map<GoldenVec4, int, GoldenVec4Hash> seen;
        for (const auto& v : vertices) {
            const GoldenVec4 c = canonicalized(v);
            if (seen.emplace(c, 1).second) canon.push_back(c);
        }
    }
    if (canon.size() != 60) throw CatalogError("expected 60 projective rays");

    // Resolve the conventional numbering. Printed entries that collide are
    // ambiguous; their candidates are every canonical vector with the same
    // unsigned coordinate pattern.
    NumberingProblem prob;
    prob.canon = canon;
    std::unordered_map<GoldenVec4, int, GoldenVec4Hash> canon_index;
    for (std::size_t i = 0; i < canon.size(); ++i) canon_index[canon[i]] = static_cast<int>(i);

    const auto& printed = tables::printed_ray_table();
    std::map<std::array<std::array<std::int64_t, 2>, 4>, int> printed_multiplicity;
    auto key_of = [](const GoldenVec4& v) {
        std::array<std::array<std::int64_t, 2>, 4> k;
        for (int i = 0; i < 4; ++i) k[static_cast<std::size_t>(i)] = {v[i].a, v[i].b};
        return k;
    };
    for (const auto& p : printed) ++printed_multiplicity[key_of(p)];

    prob.candidates.resize(60);
    for (int id = 1; id <= 60; ++id) {
        const GoldenVec4& p = printed[static_cast<std::size_t>(id - 1)];
        auto& cand = prob.candidates[static_cast<std::size_t>(id - 1)];
        if (printed_multiplicity[key_of(p)] == 1) {
            auto it = canon_index.find(canonicalized(p));
            if (it == canon_index.end())
                throw CatalogError("printed ray " + std::to_string(id) + " is not a vertex");
            cand.push_back(it->second);
        } else {
            const auto pat = abs_pattern(p);
            for (std::size_t i = 0; i < canon.size(); ++i)
                if (abs_pattern(canon[i]) == pat) cand.push_back(static_cast<int>(i));
        }
    }
    for (const auto& block : tables::basis_table())
        for (const auto& row : block) prob.quads.push_back(row);

    NumberingSolver solver(prob);
    solver.run(0, 2);
    if (solver.solutions == 0) throw CatalogError("numbering: no assignment satisfies the basis table");
    if (solver.solutions > 1) throw CatalogError("numbering: ambiguous entries admit multiple assignments");

    cat.rays_.resize(60);
    for (int id = 1; id <= 60; ++id)
        cat.rays_[static_cast<std::size_t>(id - 1)] = {
            id, canon[static_cast<std::size_t>(solver.first_solution[static_cast<std::size_t>(id - 1)])]};

    // Orthogonality graph.
    cat.neighbor_masks_.assign(60, 0);
    for (int i = 1; i <= 60; ++i)
        for (int j = i + 1; j <= 60; ++j)
            if (is_zero(inner_product(cat.vec(i), cat.vec(j)))) {
                cat.neighbor_masks_[static_cast<std::size_t>(i - 1)] |= std::uint64_t{1} << (j - 1);
                cat.neighbor_masks_[static_cast<std::size_t>(j - 1)] |= std::uint64_t{1} << (i - 1);
            }

    // Bases: exhaustive 4-clique enumeration in id order.
    for (int a = 1; a <= 60; ++a) {
        const std::uint64_t na = cat.neighbor_mask(a);
        for (int b = a + 1; b <= 60; ++b) {
            if (!((na >> (b - 1)) & 1u)) continue;
            const std::uint64_t nab = na & cat.neighbor_mask(b);
            for (int c = b + 1; c <= 60; ++c) {
                if (!((nab >> (c - 1)) & 1u)) continue;
                const std::uint64_t nabc = nab & cat.neighbor_mask(c);
                for (int d = c + 1; d <= 60; ++d)
                    if ((nabc >> (d - 1)) & 1u) cat.bases_.push_back(Basis{{a, b, c, d}});
            }
        }
    }
    std::sort(cat.bases_.begin(), cat.bases_.end());

    // Per-ray basis lists and the pair->basis map.
    cat.ray_bases_.assign(60, {-1, -1, -1, -1, -1});
    cat.pair_basis_.assign(60, [] {
        std::array<int, 60> row;
        row.fill(-1);
        return row;
    }());
    {
        std::vector<int> fill(60, 0);
        for (std::size_t bi = 0; bi < cat.bases_.size(); ++bi) {
            for (int id : cat.bases_[bi].rays) {
                if (fill[static_cast<std::size_t>(id - 1)] >= 5)
                    throw CatalogError("ray in more than 5 bases");
                cat.ray_bases_[static_cast<std::size_t>(id - 1)]
                              [static_cast<std::size_t>(fill[static_cast<std::size_t>(id - 1)]++)] =
                    static_cast<int>(bi);
            }
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    const int x = cat.bases_[bi].rays[static_cast<std::size_t>(i)];
                    const int y = cat.bases_[bi].rays[static_cast<std::size_t>(j)];
                    cat.pair_basis_[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)] =
                        static_cast<int>(bi);
                    cat.pair_basis_[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(x - 1)] =
                        static_cast<int>(bi);
                }
        }
        for (int f : fill)
            if (f != 5) throw CatalogError("ray not in exactly 5 bases");
    }

    // 24-cells: triples of pairwise unbiased bases (disjoint, all cross inner
    // products +-2). Labels come from the basis-table grid.
    {
        const auto unbiased = [&](const Basis& p, const Basis& q) {
            for (int x : p.rays)
                for (int y : q.rays) {
                    if (x == y) return false;
                    const GoldenInt ip = inner_product(cat.vec(x), cat.vec(y));
                    if (!(ip * ip == GoldenInt{4, 0})) return false;
                }
            return true;
        };
        const int nb = static_cast<int>(cat.bases_.size());
        std::vector<std::vector<int>> buddy(static_cast<std::size_t>(nb));
        for (int i = 0; i < nb; ++i)
            for (int j = i + 1; j < nb; ++j)
                if (unbiased(cat.bases_[static_cast<std::size_t>(i)],
                             cat.bases_[static_cast<std::size_t>(j)])) {
                    buddy[static_cast<std::size_t>(i)].push_back(j);
                    buddy[static_cast<std::size_t>(j)].push_back(i);
                }
        std::map<std::array<int, 12>, std::array<int, 3>> found;
        for (int i = 0; i < nb; ++i)
            for (int j : buddy[static_cast<std::size_t>(i)]) {
                if (j < i) continue;
                for (int k : buddy[static_cast<std::size_t>(j)]) {
                    if (k < j) continue;
                    if (std::find(buddy[static_cast<std::size_t>(i)].begin(),
                                  buddy[static_cast<std::size_t>(i)].end(),
                                  k) == buddy[static_cast<std::size_t>(i)].end())
                        continue;
                    std::array<int, 12> rays;
                    int pos = 0;
                    for (int bi : {i, j, k})
                        for (int id : cat.bases_[static_cast<std::size_t>(bi)].rays)
                            rays[static_cast<std::size_t>(pos++)] = id;
                    std::sort(rays.begin(), rays.end());
                    found.emplace(rays, std::array<int, 3>{i, j, k});
                }
            }
        if (found.size() != 25) throw CatalogError("expected 25 24-cells");

        const auto& grid = tables::basis_table();
        for (std::size_t block = 0; block < grid.size(); ++block) {
            std::array<int, 12> rays;
            int pos = 0;
            for (const auto& row : grid[block])
                for (int id : row) rays[static_cast<std::size_t>(pos++)] = id;
            std::sort(rays.begin(), rays.end());
            const auto it = found.find(rays);
            if (it == found.end()) throw CatalogError("basis-table block is not a 24-cell");
            Cell24 cell;
            cell.rays = rays;
            cell.label = {static_cast<char>('A' + block % 5), static_cast<char>('A' + block / 5)};
            cell.bases = it->second;
            cat.cells_.push_back(cell);
        }
    }

    // Decompositions: the ten 5-cell partitions (5 label rows + 5 columns);
    // exhaustive search over disjoint 5-sets confirms there are no others.
    {
        std::vector<std::uint64_t> cell_masks;
        for (const auto& cell : cat.cells_)
            cell_masks.push_back(mask_of_ids({cell.rays.begin(), cell.rays.end()}));
        std::vector<std::array<int, 5>> partitions;
        auto extend = [&](auto&& self, std::array<int, 5>& cur, int depth, int start,
                          std::uint64_t cover) -> void {
            if (depth == 5) {
                partitions.push_back(cur);
                return;
            }
            for (int i = start; i < 25; ++i) {
                if (cell_masks[static_cast<std::size_t>(i)] & cover) continue;
                cur[static_cast<std::size_t>(depth)] = i;
                self(self, cur, depth + 1, i + 1, cover | cell_masks[static_cast<std::size_t>(i)]);
            }
        };
        std::array<int, 5> cur{};
        extend(extend, cur, 0, 0, 0);
        if (partitions.size() != 10) throw CatalogError("expected 10 decompositions");

        for (char letter = 'A'; letter <= 'E'; ++letter) {
            Decomposition row{Decomposition::Kind::Row, letter, {}};
            Decomposition col{Decomposition::Kind::Column, letter, {}};
            int r = 0, c = 0;
            for (int i = 0; i < 25; ++i) {
                if (cat.cells_[static_cast<std::size_t>(i)].label.row == letter)
                    row.cells[static_cast<std::size_t>(r++)] = i;
                if (cat.cells_[static_cast<std::size_t>(i)].label.column == letter)
                    col.cells[static_cast<std::size_t>(c++)] = i;
            }
            cat.decompositions_.push_back(row);
            cat.decompositions_.push_back(col);
        }
        for (const auto& d : cat.decompositions_) {
            std::uint64_t cover = 0;
            for (int ci : d.cells) cover |= cell_masks[static_cast<std::size_t>(ci)];
            if (cover != kAllRays) throw CatalogError("decomposition does not cover all rays");
            std::array<int, 5> sorted = d.cells;
            std::sort(sorted.begin(), sorted.end());
            if (std::find(partitions.begin(), partitions.end(), sorted) == partitions.end())
                throw CatalogError("label decomposition missing from exhaustive search");
        }
    }

    cat.validate();
    return cat;
}

void Catalog::validate() const {
    for (const auto& r : rays_)
        if (!(inner_product(r.vec, r.vec) == GoldenInt{4, 0}))
            throw CatalogError("ray norm is not 4");
    for (std::size_t i = 0; i < rays_.size(); ++i)
        for (std::size_t j = i + 1; j < rays_.size(); ++j)
            if (is_parallel(rays_[i].vec, rays_[j].vec)) throw CatalogError("parallel rays in catalog");
    for (const auto& m : neighbor_masks_)
        if (std::popcount(m) != 15) throw CatalogError("orthogonality graph is not 15-regular");
    if (bases_.size() != 75) throw CatalogError("expected 75 bases");

    // The printed basis table must reappear verbatim as sets.
    for (const auto& block : tables::basis_table())
        for (auto row : block) {
            std::sort(row.begin(), row.end());
            if (basis_index(Basis{row}) < 0) throw CatalogError("printed basis missing from cliques");
        }

    // Any two cells share 0 or 3 rays; every ray lies in exactly 5 cells.
    std::array<int, 60> cell_count{};
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        for (int id : cells_[i].rays) ++cell_count[static_cast<std::size_t>(id - 1)];
        for (std::size_t j = i + 1; j < cells_.size(); ++j) {
            int common = 0;
            for (int x : cells_[i].rays)
                for (int y : cells_[j].rays)
                    if (x == y) ++common;
            if (common != 0 && common != 3) throw CatalogError("cell intersection not 0 or 3");
        }
    }
    for (int c : cell_count)
        if (c != 5) throw CatalogError("ray not in exactly 5 cells");
}

const Catalog& Catalog::get() {
    static const Catalog instance = build();
    return instance;
}

int Catalog::basis_of_pair(int id_a, int id_b) const {
    return pair_basis_[static_cast<std::size_t>(id_a - 1)][static_cast<std::size_t>(id_b - 1)];
}

int Catalog::basis_index(const Basis& b) const {
    const auto it = std::lower_bound(bases_.begin(), bases_.end(), b);
    if (it != bases_.end() && *it == b) return static_cast<int>(it - bases_.begin());
    return -1;
}

int Catalog::cell_index(CellLabel label) const {
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i].label == label) return static_cast<int>(i);
    return -1;
}

NeighborProfile Catalog::neighbor_profile(int id) const {
    NeighborProfile p;
    const GoldenInt two_tau{0, 2}, two{2, 0}, two_kappa{-2, 2};
    for (int j = 1; j <= 60; ++j) {
        if (j == id) continue;
        GoldenInt d = inner_product(vec(id), vec(j));
        if (real_sign(d) < 0) d = -d;
        if (d == two_tau)
            ++p.two_tau;
        else if (d == two)
            ++p.two;
        else if (d == two_kappa)
            ++p.two_kappa;
        else if (is_zero(d))
            ++p.zero;
        else
            throw CatalogError("unexpected inner product shell");
    }
    return p;
}

int Catalog::id_of_vector(const GoldenVec4& v) const {
    const GoldenVec4 c = canonicalized(v);
    for (const auto& r : rays_)
        if (r.vec == c) return r.id;
    return 0;
}

}  // namespace specker
