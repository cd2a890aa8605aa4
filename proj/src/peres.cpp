#include "specker/peres.hpp"

#include <algorithm>
#include <bit>

#include "specker/parallel.hpp"

namespace specker {

PeresCatalog build_peres() {
    PeresCatalog p;
    auto push = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        p.rays.push_back(GoldenVec4{{GoldenInt{a, 0}, GoldenInt{b, 0}, GoldenInt{c, 0}, GoldenInt{d, 0}}});
    };
    for (int pos = 0; pos < 4; ++pos) {
        std::int64_t v[4] = {0, 0, 0, 0};
        v[pos] = 2;
        push(v[0], v[1], v[2], v[3]);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int s : {1, -1}) {
                std::int64_t v[4] = {0, 0, 0, 0};
                v[i] = 1;
                v[j] = s;
                push(v[0], v[1], v[2], v[3]);
            }
    for (int bits = 0; bits < 8; ++bits)
        push(1, (bits & 1) ? -1 : 1, (bits & 2) ? -1 : 1, (bits & 4) ? -1 : 1);
    if (p.rays.size() != 24) throw std::logic_error("Peres system: expected 24 rays");

    RaySystem& sys = p.system;
    sys.ray_count = 24;
    sys.neighbor_masks.assign(24, 0);
    for (int i = 1; i <= 24; ++i)
        for (int j = i + 1; j <= 24; ++j)
            if (is_zero(inner_product(p.vec(i), p.vec(j)))) {
                sys.neighbor_masks[static_cast<std::size_t>(i - 1)] |= std::uint64_t{1} << (j - 1);
                sys.neighbor_masks[static_cast<std::size_t>(j - 1)] |= std::uint64_t{1} << (i - 1);
            }
    for (const std::uint64_t m : sys.neighbor_masks)
        if (std::popcount(m) != 9)
            throw std::logic_error("Peres system: every ray must be orthogonal to exactly 9 others");

    for (int a = 1; a <= 24; ++a)
        for (int b = a + 1; b <= 24; ++b) {
            if (!((sys.neighbor_masks[static_cast<std::size_t>(a - 1)] >> (b - 1)) & 1u)) continue;
            const std::uint64_t nab = sys.neighbor_masks[static_cast<std::size_t>(a - 1)] &
                                      sys.neighbor_masks[static_cast<std::size_t>(b - 1)];
            for (int c = b + 1; c <= 24; ++c) {
                if (!((nab >> (c - 1)) & 1u)) continue;
                const std::uint64_t nabc = nab & sys.neighbor_masks[static_cast<std::size_t>(c - 1)];
                for (int d = c + 1; d <= 24; ++d)
                    if ((nabc >> (d - 1)) & 1u) {
                        sys.bases.push_back({a, b, c, d});
                        sys.basis_masks.push_back((std::uint64_t{1} << (a - 1)) |
                                                  (std::uint64_t{1} << (b - 1)) |
                                                  (std::uint64_t{1} << (c - 1)) |
                                                  (std::uint64_t{1} << (d - 1)));
                    }
            }
        }
    if (sys.bases.size() != 24) throw std::logic_error("Peres system: expected 24 bases");

    int slot = 0;
    for (int id = 1; id <= 4; ++id) p.cells[0][static_cast<std::size_t>(slot++)] = id;
    for (int id = 17; id <= 24; ++id) p.cells[0][static_cast<std::size_t>(slot++)] = id;
    for (int id = 5; id <= 16; ++id) p.cells[1][static_cast<std::size_t>(id - 5)] = id;

    for (int c = 0; c < 2; ++c) {
        const auto& cell = p.cells[static_cast<std::size_t>(c)];
        auto& out = p.cell_lines[static_cast<std::size_t>(c)];
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j)
                for (int k = j + 1; k < 12; ++k) {
                    const Line l{{cell[static_cast<std::size_t>(i)], cell[static_cast<std::size_t>(j)],
                                  cell[static_cast<std::size_t>(k)]}};
                    if (triple_rank(p.vec(l.pts[0]), p.vec(l.pts[1]), p.vec(l.pts[2])) == 2)
                        out.push_back(l);
                }
        std::sort(out.begin(), out.end());
        if (out.size() != 16) throw std::logic_error("Peres 24-cell: expected 16 lines");
    }

    for (const Line& l : p.cell_lines[0]) {
        std::uint64_t orth = ~std::uint64_t{0};
        for (int id : l.pts) orth &= sys.neighbor_masks[static_cast<std::size_t>(id - 1)];
        const Line* dual = nullptr;
        for (const Line& m : p.cell_lines[1]) {
            std::uint64_t mm = 0;
            for (int id : m.pts) mm |= std::uint64_t{1} << (id - 1);
            if ((mm & orth) == mm) {
                if (dual) throw std::logic_error("Peres line with two duals");
                dual = &m;
            }
        }
        if (!dual) throw std::logic_error("Peres line without a dual in the other cell");
        p.dual_lines.push_back({l, *dual});
    }
    return p;
}

std::vector<PeresCritical> peres_criticals_18(const PeresCatalog& peres) {
    std::vector<PeresCritical> out;
    const std::uint64_t full = peres.system.all_mask();
    for (const auto& [left, right] : peres.dual_lines) {
        std::uint64_t drop = 0;
        for (int id : left.pts) drop |= std::uint64_t{1} << (id - 1);
        for (int id : right.pts) drop |= std::uint64_t{1} << (id - 1);
        const std::uint64_t rays = full & ~drop;

        const auto cert = parity_certificate(peres.system, rays);
        if (!cert || cert->bases.size() != 9)
            throw std::runtime_error("Peres 18-ray set without a 9-basis parity certificate");
        for (const auto& [id, mult] : cert->multiplicity)
            if (mult != 2) throw std::runtime_error("Peres 18-ray parity multiplicity is not 2");
        if (cert->multiplicity.size() != 18)
            throw std::runtime_error("Peres 18-ray parity certificate does not cover every ray");
        if (is_critical(peres.system, rays).kind != CriticalityKind::Critical)
            throw std::runtime_error("Peres 18-ray set is not critical");
        out.push_back({rays, ids_of_mask(rays)});
    }
    if (out.size() != 16) throw std::runtime_error("expected 16 Peres 18-ray critical sets");
    return out;
}

std::vector<PeresCritical> peres_criticals_20(const PeresCatalog& peres, int threads) {
    std::vector<std::array<int, 4>> deletions;
    for (int a = 1; a <= 24; ++a)
        for (int b = a + 1; b <= 24; ++b)
            for (int c = b + 1; c <= 24; ++c)
                for (int d = c + 1; d <= 24; ++d) deletions.push_back({a, b, c, d});

    const std::uint64_t full = peres.system.all_mask();
    std::vector<char> keep(deletions.size(), 0);
    parallel_for(deletions.size(), threads, [&](std::size_t i) {
        std::uint64_t rays = full;
        for (int id : deletions[i]) rays &= ~(std::uint64_t{1} << (id - 1));
        if (solve(peres.system, rays).status != SolveStatus::Uncolorable) return;
        keep[i] = is_critical(peres.system, rays).kind == CriticalityKind::Critical;
    });

    std::vector<PeresCritical> out;
    for (std::size_t i = 0; i < deletions.size(); ++i) {
        if (!keep[i]) continue;
        std::uint64_t rays = full;
        for (int id : deletions[i]) rays &= ~(std::uint64_t{1} << (id - 1));
        out.push_back({rays, ids_of_mask(rays)});
    }
    return out;
}

int max_dual_lines_between_cells(const Catalog& cat, const LineTable& lines) {
    int worst = 0;
    for (std::size_t c1 = 0; c1 < cat.cells().size(); ++c1) {
        std::array<std::uint64_t, 25> cell_masks{};
        for (std::size_t c2 = 0; c2 < cat.cells().size(); ++c2) {
            const auto& r = cat.cells()[c2].rays;
            cell_masks[c2] = mask_of_ids({r.begin(), r.end()});
        }
        for (const Line& l : lines.lines_of_cell(static_cast<int>(c1))) {
            const Line d = lines.dual_of(l);
            const std::uint64_t dm = mask_of_ids({d.pts.begin(), d.pts.end()});
            for (std::size_t c2 = 0; c2 < cat.cells().size(); ++c2) {
                if (c2 == c1) continue;
                if ((dm & cell_masks[c2]) != dm) continue;
                int count = 0;
                for (const Line& l2 : lines.lines_of_cell(static_cast<int>(c1))) {
                    const Line d2 = lines.dual_of(l2);
                    const std::uint64_t dm2 = mask_of_ids({d2.pts.begin(), d2.pts.end()});
                    count += (dm2 & cell_masks[c2]) == dm2;
                }
                worst = std::max(worst, count);
            }
        }
    }
    return worst;
}

}  // namespace specker
