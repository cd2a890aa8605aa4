#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "specker/coloring.hpp"
#include "specker/lines.hpp"

namespace specker {

// The 24-ray system built on a pair of dual 24-cells with integer
// coordinates: (2,0,0,0)-type axes and (1,+-1,+-1,+-1) diagonals form one
// cell, the (1,+-1,0,0) permutations the other. Ray ids are 1..24 in that
// construction order.
struct PeresCatalog {
    std::vector<GoldenVec4> rays;                 // 24, golden part zero
    RaySystem system;                             // 24 bases, orthogonality masks
    std::array<std::array<int, 12>, 2> cells{};   // ray ids per 24-cell
    std::array<std::vector<Line>, 2> cell_lines;  // 16 lines each
    std::vector<std::pair<Line, Line>> dual_lines;  // line of cell 0 with its dual in cell 1

    const GoldenVec4& vec(int id) const { return rays[static_cast<std::size_t>(id - 1)]; }
};

PeresCatalog build_peres();

struct PeresCritical {
    std::uint64_t rays = 0;
    std::vector<int> ids;
};

// The 16 eighteen-ray sets: drop the six rays of one dual line pair. Each is
// verified critical with a 9-basis parity certificate covering every ray
// twice.
std::vector<PeresCritical> peres_criticals_18(const PeresCatalog& peres);

// Exhaustive scan of all C(24,4) = 10626 four-ray deletions, keeping the
// subsets that are uncolorable and critical.
std::vector<PeresCritical> peres_criticals_20(const PeresCatalog& peres, int threads = 0);

// The 600-cell contains no dual pair of 24-cells: across any two of its 25
// cells at most 4 of the 16 lines have their dual inside the other cell
// (the Peres construction needs all 16).
int max_dual_lines_between_cells(const Catalog& cat, const LineTable& lines);

}  // namespace specker
