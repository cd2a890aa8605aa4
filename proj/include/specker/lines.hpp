#pragma once

#include <array>
#include <vector>

#include "specker/catalog.hpp"

namespace specker {

// Three rays spanning a rank-2 subspace; the "points" of a 24-cell's Reye
// configuration lie three to a line.
struct Line {
    std::array<int, 3> pts{};  // sorted ids
    friend bool operator==(const Line&, const Line&) = default;
    friend auto operator<=>(const Line&, const Line&) = default;
};

// A line and its orthogonal dual, placed in the 10x10 grid indexed by the
// pair of row letters (primed) and the pair of column letters. The left
// line originates in cells {X upper column + U' left row, Y + V'}; the right
// line in the swapped pairing.
struct DualPair {
    Line left;
    Line right;
    std::array<char, 2> rows{};  // sorted primed letters
    std::array<char, 2> cols{};  // sorted column letters
};

class LineTable {
  public:
    static LineTable build(const Catalog& cat);

    const std::vector<Line>& lines() const { return lines_; }        // 200, sorted
    const std::vector<DualPair>& pairs() const { return pairs_; }    // 100

    // The 16 lines inside one 24-cell.
    const std::vector<Line>& lines_of_cell(int cell_index) const {
        return cell_lines_[static_cast<std::size_t>(cell_index)];
    }

    Line dual_of(const Line& l) const;

    // Indices of the two cells a line originates in.
    const std::array<int, 2>& origin_cells(const Line& l) const;

    // Grid box lookup; letters may be given in any order.
    const DualPair& box(std::array<char, 2> rows, std::array<char, 2> cols) const;

    // All six rays of a grid box as a mask.
    std::uint64_t box_mask(std::array<char, 2> rows, std::array<char, 2> cols) const;

  private:
    std::vector<Line> lines_;
    std::vector<DualPair> pairs_;
    std::vector<std::vector<Line>> cell_lines_;
    std::vector<std::array<int, 2>> origins_;    // parallel to lines_
    std::vector<int> dual_index_;                // parallel to lines_
    std::array<std::array<int, 100>, 1> grid_{}; // row-major 10x10 -> pair index

    int line_index(const Line& l) const;
    static int pair_slot(std::array<char, 2> letters);
};

}  // namespace specker
