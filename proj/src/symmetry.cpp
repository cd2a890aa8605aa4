#include "specker/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "specker/parallel.hpp"

namespace specker {

Perm compose(const Perm& f, const Perm& g) {
    Perm out;
    for (int i = 0; i < 60; ++i)
        out[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(g[static_cast<std::size_t>(i)] - 1)];
    return out;
}

Perm inverse(const Perm& p) {
    Perm out;
    for (int i = 0; i < 60; ++i)
        out[static_cast<std::size_t>(p[static_cast<std::size_t>(i)] - 1)] = static_cast<std::uint8_t>(i + 1);
    return out;
}

std::uint64_t apply_perm(const Perm& p, std::uint64_t ray_mask) {
    std::uint64_t out = 0;
    while (ray_mask) {
        const int i = std::countr_zero(ray_mask);
        ray_mask &= ray_mask - 1;
        out |= std::uint64_t{1} << (p[static_cast<std::size_t>(i)] - 1);
    }
    return out;
}

int perm_order(const Perm& p) {
    const Perm id = identity_perm();
    Perm x = p;
    int n = 1;
    while (!(x == id)) {
        x = compose(p, x);
        ++n;
    }
    return n;
}

std::vector<std::vector<int>> cycle_decomposition(const Perm& p) {
    std::vector<std::vector<int>> cycles;
    std::array<bool, 60> seen{};
    for (int s = 1; s <= 60; ++s) {
        if (seen[static_cast<std::size_t>(s - 1)]) continue;
        std::vector<int> cyc{s};
        seen[static_cast<std::size_t>(s - 1)] = true;
        for (int x = p[static_cast<std::size_t>(s - 1)]; x != s; x = p[static_cast<std::size_t>(x - 1)]) {
            cyc.push_back(x);
            seen[static_cast<std::size_t>(x - 1)] = true;
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

namespace {

std::uint32_t key5(const Perm& p) {
    std::uint32_t k = 0;
    for (int i = 0; i < 5; ++i) k = k * 61 + p[static_cast<std::size_t>(i)];
    return k;
}

// Exact image of a catalog vector under the frame map sending ray j (j=1..4,
// vector 2*e_j) to the signed target w_j: 2*M*u = sum_j u_j * w_j. The result
// must be evenly divisible and land on a catalog ray for M to be a symmetry.
std::optional<int> image_ray(const Catalog& cat, const std::array<GoldenVec4, 4>& w, int source_id) {
    const GoldenVec4& u = cat.vec(source_id);
    GoldenVec4 img;
    for (int row = 0; row < 4; ++row) {
        GoldenInt s = g_zero;
        for (int j = 0; j < 4; ++j) s = s + u[j] * w[static_cast<std::size_t>(j)][row];
        if ((s.a | s.b) & 1) return std::nullopt;  // not divisible by 2
        img[row] = GoldenInt{s.a / 2, s.b / 2};
    }
    if (is_zero(img)) return std::nullopt;
    const int id = cat.id_of_vector(img);
    if (id == 0) return std::nullopt;
    return id;
}

}  // namespace

Group Group::generate(const Catalog& cat, int threads) {
    // 75 bases x 24 orderings x 16 sign patterns; exactly half the orderings
    // of each basis preserve the vertex set.
    static constexpr int kPerms[24][4] = {
        {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
        {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
        {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
        {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};

    const std::size_t total = cat.bases().size() * 24 * 16;
    std::vector<std::optional<Perm>> found(total);
    parallel_for(total, threads, [&](std::size_t job) {
        const std::size_t basis_i = job / (24 * 16);
        const int perm_i = static_cast<int>((job / 16) % 24);
        const int signs = static_cast<int>(job % 16);
        const Basis& target = cat.bases()[basis_i];
        std::array<GoldenVec4, 4> w;
        for (int slot = 0; slot < 4; ++slot) {
            GoldenVec4 v = cat.vec(target.rays[static_cast<std::size_t>(kPerms[perm_i][slot])]);
            if ((signs >> slot) & 1) v = -v;
            w[static_cast<std::size_t>(slot)] = v;
        }
        Perm p;
        for (int id = 1; id <= 60; ++id) {
            const auto img = image_ray(cat, w, id);
            if (!img) return;
            p[static_cast<std::size_t>(id - 1)] = static_cast<std::uint8_t>(*img);
        }
        found[job] = p;
    });

    Group g;
    std::vector<Perm> all;
    all.reserve(14400);
    for (const auto& p : found)
        if (p) all.push_back(*p);
    g.signed_maps_ = static_cast<int>(all.size());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    g.elements_ = std::move(all);
    if (g.signed_maps_ != 14400)
        throw std::runtime_error("symmetry generation: expected 14400 signed maps, got " +
                                 std::to_string(g.signed_maps_));
    if (g.elements_.size() != 7200)
        throw std::runtime_error("symmetry generation: expected 7200 projective permutations");

    g.keys_.reserve(g.elements_.size());
    for (const auto& p : g.elements_) g.keys_.push_back(key5(p));
    std::vector<std::uint32_t> sorted_keys = g.keys_;
    std::sort(sorted_keys.begin(), sorted_keys.end());
    if (std::adjacent_find(sorted_keys.begin(), sorted_keys.end()) != sorted_keys.end())
        throw std::runtime_error("symmetry generation: 5-ray key is not unique");
    return g;
}

int Group::index_of(const Perm& p) const {
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it != elements_.end() && *it == p) return static_cast<int>(it - elements_.begin());
    return -1;
}

OrbitResult Group::orbit(std::uint64_t seed) const {
    OrbitResult res;
    std::vector<std::uint64_t> images;
    images.reserve(elements_.size());
    int stab = 0;
    for (const auto& p : elements_) {
        const std::uint64_t img = apply_perm(p, seed);
        images.push_back(img);
        stab += (img == seed);
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    res.members = std::move(images);
    res.stabilizer_order = stab;
    if (res.members.size() * static_cast<std::size_t>(stab) != elements_.size())
        throw std::runtime_error("orbit-stabilizer identity failed");
    return res;
}

std::vector<Perm> Group::stabilizer(std::uint64_t seed) const {
    std::vector<Perm> out;
    for (const auto& p : elements_)
        if (apply_perm(p, seed) == seed) out.push_back(p);
    return out;
}

std::vector<std::vector<int>> Group::ray_orbits(const std::vector<Perm>& elements,
                                                std::uint64_t subset) {
    std::vector<std::vector<int>> orbits;
    std::uint64_t remaining = subset;
    while (remaining) {
        const int id = std::countr_zero(remaining) + 1;
        std::uint64_t orbit_mask = std::uint64_t{1} << (id - 1);
        for (const auto& p : elements)
            orbit_mask |= std::uint64_t{1} << (p[static_cast<std::size_t>(id - 1)] - 1);
        if (orbit_mask & ~subset)
            throw std::runtime_error("ray_orbits: elements do not preserve the subset");
        orbits.push_back(ids_of_mask(orbit_mask));
        remaining &= ~orbit_mask;
    }
    return orbits;
}

bool Group::transitive_on(const std::vector<std::uint64_t>& family) const {
    if (family.empty()) return false;
    const OrbitResult o = orbit(family[0]);
    if (o.members.size() != family.size()) return false;
    std::vector<std::uint64_t> sorted_family = family;
    std::sort(sorted_family.begin(), sorted_family.end());
    return o.members == sorted_family;
}

bool Group::closed_under_composition(int threads) const {
    std::unordered_map<std::uint32_t, int> by_key;
    by_key.reserve(elements_.size() * 2);
    for (std::size_t i = 0; i < elements_.size(); ++i) by_key.emplace(keys_[i], static_cast<int>(i));
    std::atomic<bool> ok{true};
    parallel_for(elements_.size(), threads, [&](std::size_t i) {
        if (!ok.load(std::memory_order_relaxed)) return;
        for (const auto& h : elements_) {
            const Perm c = compose(elements_[i], h);
            const auto it = by_key.find(key5(c));
            if (it == by_key.end() || !(elements_[static_cast<std::size_t>(it->second)] == c)) {
                ok.store(false, std::memory_order_relaxed);
                return;
            }
        }
    });
    return ok.load();
}

std::vector<Perm> Group::with_fiducial_images(int i1, int i2, int i3, int i4) const {
    std::vector<Perm> out;
    for (const auto& p : elements_)
        if (p[0] == i1 && p[1] == i2 && p[2] == i3 && p[3] == i4) out.push_back(p);
    return out;
}

namespace {

bool cell_shift(const Catalog& cat, const Perm& p, bool shift_column) {
    for (const auto& cell : cat.cells()) {
        const std::uint64_t img = apply_perm(p, mask_of_ids({cell.rays.begin(), cell.rays.end()}));
        const char col = shift_column ? static_cast<char>('A' + (cell.label.column - 'A' + 1) % 5)
                                      : cell.label.column;
        const char row = shift_column ? cell.label.row
                                      : static_cast<char>('A' + (cell.label.row - 'A' + 1) % 5);
        const int ci = cat.cell_index({col, row});
        const auto& expect = cat.cells()[static_cast<std::size_t>(ci)].rays;
        if (img != mask_of_ids({expect.begin(), expect.end()})) return false;
    }
    return true;
}

}  // namespace

GeneratorReport Group::verify_period5_generators(const Catalog& cat) const {
    GeneratorReport rep;
    rep.ok = true;
    auto check = [&](bool cond, const std::string& what) {
        rep.notes.push_back(std::string(cond ? "ok: " : "FAIL: ") + what);
        rep.ok = rep.ok && cond;
    };

    Perm add12;
    for (int i = 0; i < 60; ++i) add12[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 12) % 60 + 1);
    check(contains(add12), "row generator (add 12 mod 60) lies in the group");
    check(perm_order(add12) == 5, "row generator has order 5");
    {
        const auto cycles = cycle_decomposition(add12);
        bool twelve5 = cycles.size() == 12;
        for (const auto& c : cycles) twelve5 = twelve5 && c.size() == 5;
        check(twelve5, "row generator decomposes into twelve 5-cycles");
    }
    check(cell_shift(cat, add12, /*shift_column=*/false), "row generator advances every label row");

    const auto candidates = with_fiducial_images(31, 42, 51, 16);
    check(!candidates.empty(), "a group element maps 1,2,3,4 to 31,42,51,16");
    std::vector<Perm> period5;
    for (const auto& p : candidates)
        if (perm_order(p) == 5) period5.push_back(p);
    check(period5.size() == 1, "exactly one such element has order 5");
    if (period5.size() == 1) {
        const Perm& colgen = period5[0];
        const auto cycles = cycle_decomposition(colgen);
        bool twelve5 = cycles.size() == 12;
        for (const auto& c : cycles) twelve5 = twelve5 && c.size() == 5;
        check(twelve5, "column generator decomposes into twelve 5-cycles");
        check(cell_shift(cat, colgen, /*shift_column=*/true),
              "column generator advances every label column");
    }
    return rep;
}

}  // namespace specker
