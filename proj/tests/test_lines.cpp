#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "specker/lines.hpp"

using namespace specker;

namespace {

const Catalog& cat() { return Catalog::get(); }

const LineTable& table() {
    static const LineTable t = LineTable::build(cat());
    return t;
}

std::set<int> box_ids(std::array<char, 2> rows, std::array<char, 2> cols) {
    const DualPair& p = table().box(rows, cols);
    std::set<int> s(p.left.pts.begin(), p.left.pts.end());
    s.insert(p.right.pts.begin(), p.right.pts.end());
    return s;
}

}  // namespace

TEST_CASE("cell AA' carries the published 16 lines") {
    const auto& ls = table().lines_of_cell(cat().cell_index({'A', 'A'}));
    REQUIRE(ls.size() == 16);
    const std::set<std::array<int, 3>> expected = {
        {1, 5, 9},  {1, 6, 10}, {1, 7, 11}, {1, 8, 12}, {2, 5, 10}, {2, 6, 9},
        {2, 7, 12}, {2, 8, 11}, {3, 5, 11}, {3, 6, 12}, {3, 7, 9},  {3, 8, 10},
        {4, 5, 12}, {4, 6, 11}, {4, 7, 10}, {4, 8, 9}};
    for (const auto& l : ls) CHECK(expected.count(l.pts) == 1);
}

TEST_CASE("200 unique lines, each in exactly two cells") {
    const auto& t = table();
    REQUIRE(t.lines().size() == 200);
    std::map<Line, int> copies;
    for (std::size_t ci = 0; ci < cat().cells().size(); ++ci)
        for (const auto& l : t.lines_of_cell(static_cast<int>(ci))) ++copies[l];
    CHECK(copies.size() == 200);
    for (const auto& [l, n] : copies) CHECK(n == 2);  // 400 with multiplicity
}

TEST_CASE("duality: involution, no fixed points, full cross-orthogonality, rank 4") {
    const auto& t = table();
    for (const auto& l : t.lines()) {
        const Line d = t.dual_of(l);
        CHECK(!(d == l));
        CHECK(t.dual_of(d) == l);
        for (int x : l.pts)
            for (int y : d.pts) CHECK(cat().orthogonal(x, y));
    }
    // left and right of a pair together span all of 4-space: their union
    // contains two orthogonal pairs spanning complementary planes
    for (const auto& p : t.pairs()) {
        // rank check via a basis-free argument: the 3 left rays span a plane,
        // the 3 right rays span the orthogonal plane, so any basis vector has
        // nonzero inner product with one of them. Verified by exact rank on
        // two picked representatives per side.
        const GoldenVec4& a = cat().vec(p.left.pts[0]);
        const GoldenVec4& b = cat().vec(p.left.pts[1]);
        const GoldenVec4& c = cat().vec(p.right.pts[0]);
        const GoldenVec4& d = cat().vec(p.right.pts[1]);
        CHECK(triple_rank(a, b, c) == 3);
        // {a,b} span the left plane; adding d must complete rank 4: check by
        // observing d orthogonal to both a and b but not parallel to c
        CHECK(is_zero(inner_product(a, d)));
        CHECK(is_zero(inner_product(b, d)));
        CHECK_FALSE(is_parallel(c, d));
    }
}

TEST_CASE("published dual pair and grid boxes") {
    const auto& t = table();
    CHECK(t.dual_of(Line{{3, 8, 10}}) == Line{{16, 17, 24}});
    CHECK(box_ids({'A', 'B'}, {'A', 'B'}) == std::set<int>{3, 16, 8, 17, 10, 24});
    // row A'B' as printed
    CHECK(box_ids({'A', 'B'}, {'A', 'C'}) == std::set<int>{2, 13, 7, 18, 12, 22});
    CHECK(box_ids({'A', 'B'}, {'A', 'D'}) == std::set<int>{1, 14, 5, 20, 9, 23});
    CHECK(box_ids({'A', 'B'}, {'A', 'E'}) == std::set<int>{4, 15, 6, 19, 11, 21});
    CHECK(box_ids({'A', 'B'}, {'B', 'C'}) == std::set<int>{25, 28, 45, 47, 51, 50});
    CHECK(box_ids({'A', 'B'}, {'B', 'D'}) == std::set<int>{35, 36, 42, 43, 58, 57});
    CHECK(box_ids({'A', 'B'}, {'B', 'E'}) == std::set<int>{31, 29, 38, 37, 56, 54});
    CHECK(box_ids({'A', 'B'}, {'C', 'D'}) == std::set<int>{32, 30, 39, 40, 55, 53});
    CHECK(box_ids({'A', 'B'}, {'C', 'E'}) == std::set<int>{33, 34, 41, 44, 60, 59});
    CHECK(box_ids({'A', 'B'}, {'D', 'E'}) == std::set<int>{27, 26, 46, 48, 49, 52});
    // two boxes of row A'D'
    CHECK(box_ids({'A', 'D'}, {'A', 'B'}) == std::set<int>{1, 7, 11, 38, 42, 45});
    CHECK(box_ids({'A', 'D'}, {'B', 'E'}) == std::set<int>{24, 35, 51, 21, 34, 52});
}

TEST_CASE("left/right follows the origin-cell rule") {
    const auto& t = table();
    for (const auto& p : t.pairs()) {
        const auto& lo = t.origin_cells(p.left);
        std::set<std::pair<char, char>> labels;
        for (int ci : lo) {
            const CellLabel l = cat().cells()[static_cast<std::size_t>(ci)].label;
            labels.insert({l.column, l.row});
        }
        // left line originates in (upper column, left row) and (lower, right)
        CHECK(labels.count({p.cols[0], p.rows[0]}) == 1);
        CHECK(labels.count({p.cols[1], p.rows[1]}) == 1);
        const auto& ro = t.origin_cells(p.right);
        std::set<std::pair<char, char>> rlabels;
        for (int ci : ro) {
            const CellLabel l = cat().cells()[static_cast<std::size_t>(ci)].label;
            rlabels.insert({l.column, l.row});
        }
        CHECK(rlabels.count({p.cols[0], p.rows[1]}) == 1);
        CHECK(rlabels.count({p.cols[1], p.rows[0]}) == 1);
    }
}

TEST_CASE("grid rows and columns partition the rays") {
    const auto& t = table();
    for (char a = 'A'; a <= 'E'; ++a)
        for (char b = static_cast<char>(a + 1); b <= 'E'; ++b) {
            std::uint64_t row = 0, col = 0;
            int row_total = 0, col_total = 0;
            for (char x = 'A'; x <= 'E'; ++x)
                for (char y = static_cast<char>(x + 1); y <= 'E'; ++y) {
                    row |= t.box_mask({a, b}, {x, y});
                    col |= t.box_mask({x, y}, {a, b});
                    row_total += 6;
                    col_total += 6;
                }
            CHECK(row == kAllRays);
            CHECK(col == kAllRays);
            CHECK(row_total == 60);
            CHECK(col_total == 60);
        }
}
