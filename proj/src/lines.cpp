#include "specker/lines.hpp"

#include <algorithm>
#include <stdexcept>

namespace specker {

namespace {

class LineError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace

int LineTable::pair_slot(std::array<char, 2> letters) {
    if (letters[0] > letters[1]) std::swap(letters[0], letters[1]);
    const int a = letters[0] - 'A', b = letters[1] - 'A';
    if (a < 0 || b > 4 || a >= b) throw std::invalid_argument("grid letters must be a pair from A..E");
    // Pairs in lexicographic order: AB AC AD AE BC BD BE CD CE DE.
    static constexpr int offset[5] = {0, 4, 7, 9, 10};
    return offset[a] + (b - a - 1);
}

LineTable LineTable::build(const Catalog& cat) {
    LineTable t;

    // Rank-2 triples within each 24-cell.
    t.cell_lines_.resize(cat.cells().size());
    for (std::size_t ci = 0; ci < cat.cells().size(); ++ci) {
        const auto& rays = cat.cells()[ci].rays;
        auto& out = t.cell_lines_[ci];
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j)
                for (int k = j + 1; k < 12; ++k) {
                    const Line l{{rays[static_cast<std::size_t>(i)], rays[static_cast<std::size_t>(j)],
                                  rays[static_cast<std::size_t>(k)]}};
                    if (triple_rank(cat.vec(l.pts[0]), cat.vec(l.pts[1]), cat.vec(l.pts[2])) == 2)
                        out.push_back(l);
                }
        if (out.size() != 16) throw LineError("24-cell does not carry 16 lines");
        for (int id : rays) {
            int incid = 0;
            for (const auto& l : out)
                incid += std::count(l.pts.begin(), l.pts.end(), id);
            if (incid != 4) throw LineError("ray not on exactly 4 lines of its cell");
        }
        // Each line must be pairwise non-orthogonal and pick one ray from
        // each of the cell's three bases.
        for (const auto& l : out) {
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (cat.orthogonal(l.pts[static_cast<std::size_t>(i)],
                                       l.pts[static_cast<std::size_t>(j)]))
                        throw LineError("orthogonal rays on a line");
            for (int bi : cat.cells()[ci].bases) {
                int hits = 0;
                for (int id : cat.bases()[static_cast<std::size_t>(bi)].rays)
                    hits += std::count(l.pts.begin(), l.pts.end(), id);
                if (hits != 1) throw LineError("line does not take one ray per cell basis");
            }
        }
    }

    // Dedupe across cells and record the two origin cells of every line.
    for (std::size_t ci = 0; ci < t.cell_lines_.size(); ++ci)
        for (const auto& l : t.cell_lines_[ci]) {
            const auto it = std::lower_bound(t.lines_.begin(), t.lines_.end(), l);
            if (it == t.lines_.end() || !(*it == l)) {
                const auto pos = it - t.lines_.begin();
                t.lines_.insert(it, l);
                t.origins_.insert(t.origins_.begin() + pos, {static_cast<int>(ci), -1});
            } else {
                auto& o = t.origins_[static_cast<std::size_t>(it - t.lines_.begin())];
                if (o[1] != -1) throw LineError("line shared by more than two cells");
                o[1] = static_cast<int>(ci);
            }
        }
    if (t.lines_.size() != 200) throw LineError("expected 200 unique lines");
    for (auto& o : t.origins_) {
        if (o[1] == -1) throw LineError("line not shared by two cells");
        if (o[0] > o[1]) std::swap(o[0], o[1]);
    }

    // Duality: the unique line whose rays are all orthogonal to this one's.
    t.dual_index_.assign(t.lines_.size(), -1);
    for (std::size_t i = 0; i < t.lines_.size(); ++i) {
        std::uint64_t orth = ~std::uint64_t{0};
        for (int id : t.lines_[i].pts) orth &= cat.neighbor_mask(id);
        int found = -1;
        for (std::size_t j = 0; j < t.lines_.size(); ++j) {
            const std::uint64_t jm = mask_of_ids({t.lines_[j].pts.begin(), t.lines_[j].pts.end()});
            if ((jm & orth) == jm) {
                if (found != -1) throw LineError("line with two duals");
                found = static_cast<int>(j);
            }
        }
        if (found < 0 || found == static_cast<int>(i)) throw LineError("line without a proper dual");
        t.dual_index_[i] = found;
    }
    for (std::size_t i = 0; i < t.lines_.size(); ++i)
        if (t.dual_index_[static_cast<std::size_t>(t.dual_index_[i])] != static_cast<int>(i))
            throw LineError("duality is not an involution");

    // Grid placement. A line's two origin cells carry distinct column and
    // distinct row letters; the dual sits in the transposed cells.
    auto& grid = t.grid_[0];
    grid.fill(-1);
    std::vector<char> placed(t.lines_.size(), 0);
    for (std::size_t i = 0; i < t.lines_.size(); ++i) {
        if (placed[i]) continue;
        const std::size_t j = static_cast<std::size_t>(t.dual_index_[i]);
        placed[i] = placed[j] = 1;

        const CellLabel a = cat.cells()[static_cast<std::size_t>(t.origins_[i][0])].label;
        const CellLabel b = cat.cells()[static_cast<std::size_t>(t.origins_[i][1])].label;
        if (a.column == b.column || a.row == b.row) throw LineError("degenerate origin labels");
        std::array<char, 2> rows{a.row, b.row};
        std::array<char, 2> cols{a.column, b.column};
        if (rows[0] > rows[1]) std::swap(rows[0], rows[1]);
        if (cols[0] > cols[1]) std::swap(cols[0], cols[1]);

        // Left line pairs the upper column letter with the left row letter.
        const CellLabel upper_left{cols[0], rows[0]};
        const bool i_is_left = (a == upper_left) || (b == upper_left);

        DualPair p;
        p.rows = rows;
        p.cols = cols;
        p.left = i_is_left ? t.lines_[i] : t.lines_[j];
        p.right = i_is_left ? t.lines_[j] : t.lines_[i];
        const int slot = pair_slot(rows) * 10 + pair_slot(cols);
        if (grid[static_cast<std::size_t>(slot)] != -1) throw LineError("grid box occupied twice");
        grid[static_cast<std::size_t>(slot)] = static_cast<int>(t.pairs_.size());
        t.pairs_.push_back(p);
    }
    if (t.pairs_.size() != 100) throw LineError("expected 100 dual pairs");

    // Every grid row and column partitions the 60 rays.
    for (int r = 0; r < 10; ++r) {
        std::uint64_t row_cover = 0, col_cover = 0;
        for (int c = 0; c < 10; ++c) {
            const auto& pr = t.pairs_[static_cast<std::size_t>(grid[static_cast<std::size_t>(r * 10 + c)])];
            const auto& pc = t.pairs_[static_cast<std::size_t>(grid[static_cast<std::size_t>(c * 10 + r)])];
            for (int id : pr.left.pts) row_cover |= std::uint64_t{1} << (id - 1);
            for (int id : pr.right.pts) row_cover |= std::uint64_t{1} << (id - 1);
            for (int id : pc.left.pts) col_cover |= std::uint64_t{1} << (id - 1);
            for (int id : pc.right.pts) col_cover |= std::uint64_t{1} << (id - 1);
        }
        if (row_cover != kAllRays || col_cover != kAllRays)
            throw LineError("grid row/column does not partition the rays");
    }
    return t;
}

int LineTable::line_index(const Line& l) const {
    const auto it = std::lower_bound(lines_.begin(), lines_.end(), l);
    if (it == lines_.end() || !(*it == l)) throw std::invalid_argument("unknown line");
    return static_cast<int>(it - lines_.begin());
}

Line LineTable::dual_of(const Line& l) const {
    return lines_[static_cast<std::size_t>(dual_index_[static_cast<std::size_t>(line_index(l))])];
}

const std::array<int, 2>& LineTable::origin_cells(const Line& l) const {
    return origins_[static_cast<std::size_t>(line_index(l))];
}

const DualPair& LineTable::box(std::array<char, 2> rows, std::array<char, 2> cols) const {
    const int slot = pair_slot(rows) * 10 + pair_slot(cols);
    return pairs_[static_cast<std::size_t>(grid_[0][static_cast<std::size_t>(slot)])];
}

std::uint64_t LineTable::box_mask(std::array<char, 2> rows, std::array<char, 2> cols) const {
    const DualPair& p = box(rows, cols);
    std::uint64_t m = 0;
    for (int id : p.left.pts) m |= std::uint64_t{1} << (id - 1);
    for (int id : p.right.pts) m |= std::uint64_t{1} << (id - 1);
    return m;
}

}  // namespace specker
