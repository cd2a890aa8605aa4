#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "specker/catalog.hpp"
#include "specker/reference_tables.hpp"

using namespace specker;

namespace {

GoldenVec4 gv(GoldenInt a, GoldenInt b, GoldenInt c, GoldenInt d) {
    return GoldenVec4{{a, b, c, d}};
}

}  // namespace

TEST_CASE("vertex orbit sizes") {
    const auto vs = Catalog::generate_vertices();
    REQUIRE(vs.size() == 120);
    int axis = 0, diag = 0, golden = 0;
    for (const auto& v : vs) {
        bool has_two = false, all_unit = true;
        for (const auto& c : v.c) {
            if (c == GoldenInt{2, 0} || c == GoldenInt{-2, 0}) has_two = true;
            if (!(c == GoldenInt{1, 0} || c == GoldenInt{-1, 0})) all_unit = false;
        }
        if (has_two) ++axis;
        else if (all_unit) ++diag;
        else ++golden;
    }
    CHECK(axis == 8);
    CHECK(diag == 16);
    CHECK(golden == 96);
    std::set<std::array<std::array<std::int64_t, 2>, 4>> uniq;
    for (const auto& v : vs) {
        std::array<std::array<std::int64_t, 2>, 4> k;
        for (int i = 0; i < 4; ++i) k[static_cast<std::size_t>(i)] = {v[i].a, v[i].b};
        uniq.insert(k);
    }
    CHECK(uniq.size() == 120);
}

TEST_CASE("numbering pins the published entries") {
    const Catalog& cat = Catalog::get();
    CHECK(cat.vec(1) == gv(GoldenInt{2, 0}, g_zero, g_zero, g_zero));
    CHECK(cat.vec(16) == gv(g_one, g_tau, g_zero, g_kappa));
    // the sign layout of the diagonal block recovered by the constraint solve
    const std::array<std::array<int, 4>, 8> expected512 = {{{1, 1, 1, 1},
                                                            {1, 1, -1, -1},
                                                            {1, -1, 1, -1},
                                                            {1, -1, -1, 1},
                                                            {1, -1, -1, -1},
                                                            {1, -1, 1, 1},
                                                            {1, 1, -1, 1},
                                                            {1, 1, 1, -1}}};
    for (int id = 5; id <= 12; ++id) {
        const auto& e = expected512[static_cast<std::size_t>(id - 5)];
        CHECK(cat.vec(id) == gv(GoldenInt{e[0], 0}, GoldenInt{e[1], 0}, GoldenInt{e[2], 0},
                                GoldenInt{e[3], 0}));
    }
    // the duplicated golden-block pair
    CHECK(cat.vec(23) == gv(g_zero, g_tau, -g_kappa, -g_one));
    CHECK(cat.vec(26) == gv(g_zero, g_tau, -g_kappa, g_one));
}

TEST_CASE("numbering is the unique solution (independent exhaustive check)") {
    // Re-derive the ambiguous assignment by brute force, independent of the
    // catalog's backtracking: try all ways to place the eight (1,+-1,+-1,+-1)
    // vectors on ids 5..12 with 5, 10, 12 pinned to their printed values, and
    // both candidates for the duplicated pair {23, 26}; count assignments
    // satisfying the printed basis table.
    const Catalog& cat = Catalog::get();
    std::vector<GoldenVec4> diag;
    for (int bits = 0; bits < 8; ++bits)
        diag.push_back(gv(g_one, GoldenInt{(bits & 1) ? -1 : 1, 0}, GoldenInt{(bits & 2) ? -1 : 1, 0},
                          GoldenInt{(bits & 4) ? -1 : 1, 0}));
    const GoldenVec4 p5 = gv(g_one, g_one, g_one, g_one);
    const GoldenVec4 p10 = gv(g_one, -g_one, g_one, g_one);
    const GoldenVec4 p12 = gv(g_one, g_one, g_one, -g_one);
    const std::array<GoldenVec4, 2> c2326 = {gv(g_zero, g_tau, -g_kappa, -g_one),
                                             gv(g_zero, g_tau, -g_kappa, g_one)};

    std::vector<std::array<int, 4>> quads;
    for (const auto& block : tables::basis_table())
        for (const auto& row : block) quads.push_back(row);

    int solutions = 0;
    std::array<int, 8> perm = {0, 1, 2, 3, 4, 5, 6, 7};
    std::sort(perm.begin(), perm.end());
    do {
        if (!(diag[static_cast<std::size_t>(perm[0])] == p5)) continue;
        if (!(diag[static_cast<std::size_t>(perm[5])] == p10)) continue;
        if (!(diag[static_cast<std::size_t>(perm[7])] == p12)) continue;
        for (int swap2326 = 0; swap2326 < 2; ++swap2326) {
            auto vec_of = [&](int id) -> GoldenVec4 {
                if (id >= 5 && id <= 12) return diag[static_cast<std::size_t>(perm[static_cast<std::size_t>(id - 5)])];
                if (id == 23) return c2326[static_cast<std::size_t>(swap2326)];
                if (id == 26) return c2326[static_cast<std::size_t>(1 - swap2326)];
                return cat.vec(id);
            };
            bool ok = true;
            for (const auto& q : quads) {
                for (int i = 0; i < 4 && ok; ++i)
                    for (int j = i + 1; j < 4; ++j)
                        if (!is_zero(inner_product(vec_of(q[static_cast<std::size_t>(i)]),
                                                   vec_of(q[static_cast<std::size_t>(j)])))) {
                            ok = false;
                            break;
                        }
                if (!ok) break;
            }
            if (ok) {
                ++solutions;
                for (int id = 5; id <= 12; ++id) CHECK(vec_of(id) == cat.vec(id));
                CHECK(vec_of(23) == cat.vec(23));
                CHECK(vec_of(26) == cat.vec(26));
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(solutions == 1);
}

TEST_CASE("bases, cells and decompositions") {
    const Catalog& cat = Catalog::get();
    REQUIRE(cat.bases().size() == 75);
    CHECK(cat.basis_index(Basis{{1, 2, 3, 4}}) >= 0);
    CHECK(cat.basis_index(Basis{{16, 31, 42, 51}}) >= 0);

    REQUIRE(cat.cells().size() == 25);
    const int aa = cat.cell_index({'A', 'A'});
    REQUIRE(aa >= 0);
    const auto& aa_rays = cat.cells()[static_cast<std::size_t>(aa)].rays;
    for (int id = 1; id <= 12; ++id)
        CHECK(std::find(aa_rays.begin(), aa_rays.end(), id) != aa_rays.end());

    int ray1_cells = 0;
    for (const auto& c : cat.cells())
        ray1_cells += std::count(c.rays.begin(), c.rays.end(), 1);
    CHECK(ray1_cells == 5);

    REQUIRE(cat.decompositions().size() == 10);
    int rows = 0, cols = 0;
    for (const auto& d : cat.decompositions()) {
        std::set<int> cover;
        for (int ci : d.cells)
            for (int id : cat.cells()[static_cast<std::size_t>(ci)].rays) cover.insert(id);
        CHECK(cover.size() == 60);
        (d.kind == Decomposition::Kind::Row ? rows : cols) += 1;
    }
    CHECK(rows == 5);
    CHECK(cols == 5);

    // 75 x 4 = 60 x 5: every ray in exactly 5 bases
    for (int id = 1; id <= 60; ++id) {
        const auto& bl = cat.bases_of_ray(id);
        CHECK(std::count_if(bl.begin(), bl.end(), [](int b) { return b >= 0; }) == 5);
    }

    // every orthogonal pair lies in exactly one basis
    int edges = 0;
    for (int i = 1; i <= 60; ++i)
        for (int j = i + 1; j <= 60; ++j)
            if (cat.orthogonal(i, j)) {
                ++edges;
                CHECK(cat.basis_of_pair(i, j) >= 0);
            }
    CHECK(edges == 450);
}

TEST_CASE("printed basis table is recovered verbatim as sets") {
    const Catalog& cat = Catalog::get();
    std::set<std::array<int, 4>> from_table;
    for (const auto& block : tables::basis_table())
        for (auto row : block) {
            std::sort(row.begin(), row.end());
            from_table.insert(row);
        }
    REQUIRE(from_table.size() == 75);
    for (const auto& b : cat.bases()) CHECK(from_table.count(b.rays) == 1);
}

TEST_CASE("neighbor profile shells") {
    const Catalog& cat = Catalog::get();
    const NeighborProfile expected{12, 20, 12, 15};
    CHECK(cat.neighbor_profile(1) == expected);
    for (int id = 2; id <= 60; ++id) CHECK(cat.neighbor_profile(id) == expected);
}

TEST_CASE("parallelism partitions the 120 signed vectors into 60 classes") {
    const auto vs = Catalog::generate_vertices();
    std::vector<GoldenVec4> reps;
    for (const auto& v : vs) {
        bool found = false;
        for (const auto& r : reps)
            if (is_parallel(v, r)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(v);
    }
    CHECK(reps.size() == 60);
}

TEST_CASE("add-12 maps the basis set onto itself") {
    const Catalog& cat = Catalog::get();
    for (const auto& b : cat.bases()) {
        std::array<int, 4> shifted;
        for (int i = 0; i < 4; ++i)
            shifted[static_cast<std::size_t>(i)] = (b.rays[static_cast<std::size_t>(i)] - 1 + 12) % 60 + 1;
        std::sort(shifted.begin(), shifted.end());
        CHECK(cat.basis_index(Basis{shifted}) >= 0);
    }
}

TEST_CASE("unbiasedness of cell bases") {
    const Catalog& cat = Catalog::get();
    for (const auto& cell : cat.cells())
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const auto& b1 = cat.bases()[static_cast<std::size_t>(cell.bases[static_cast<std::size_t>(i)])];
                const auto& b2 = cat.bases()[static_cast<std::size_t>(cell.bases[static_cast<std::size_t>(j)])];
                for (int x : b1.rays)
                    for (int y : b2.rays) {
                        const GoldenInt ip = inner_product(cat.vec(x), cat.vec(y));
                        CHECK(ip * ip == GoldenInt{4, 0});
                    }
            }
}
