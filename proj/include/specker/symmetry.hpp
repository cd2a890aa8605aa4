#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specker/catalog.hpp"

namespace specker {

// Projective action of one symmetry on the 60 ray ids: perm[i-1] is the
// image of ray i.
using Perm = std::array<std::uint8_t, 60>;

inline Perm identity_perm() {
    Perm p;
    for (int i = 0; i < 60; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
    return p;
}

// (f after g)(x) = f(g(x)).
Perm compose(const Perm& f, const Perm& g);
Perm inverse(const Perm& p);
std::uint64_t apply_perm(const Perm& p, std::uint64_t ray_mask);
int perm_order(const Perm& p);
std::vector<std::vector<int>> cycle_decomposition(const Perm& p);

struct OrbitResult {
    std::vector<std::uint64_t> members;  // sorted ray masks
    int stabilizer_order = 0;
};

struct GeneratorReport {
    bool ok = false;
    std::vector<std::string> notes;     // one line per failed or verified property
};

// The full projective symmetry group, stored extensionally: all 7200
// permutations, sorted. Generated by mapping the fiducial frame (rays 1..4)
// onto every ordered signed basis frame and keeping the maps that send all 60
// rays back onto the catalog; exactly 14,400 signed maps survive and collapse
// in antipodal pairs onto 7200 ray permutations.
class Group {
  public:
    static Group generate(const Catalog& cat, int threads = 0);

    const std::vector<Perm>& elements() const { return elements_; }
    int signed_map_count() const { return signed_maps_; }

    bool contains(const Perm& p) const { return index_of(p) >= 0; }
    int index_of(const Perm& p) const;

    // Orbit of a set of rays (given as a mask) with the stabilizer order;
    // |orbit| * |stabilizer| always equals 7200.
    OrbitResult orbit(std::uint64_t seed) const;

    std::vector<Perm> stabilizer(std::uint64_t seed) const;

    // Orbits of single rays under an arbitrary element list (used for the
    // one-deletion-per-orbit fast path).
    static std::vector<std::vector<int>> ray_orbits(const std::vector<Perm>& elements,
                                                    std::uint64_t subset);

    // True iff the family of masks forms a single orbit.
    bool transitive_on(const std::vector<std::uint64_t>& family) const;

    // Full closure check: every composition of two stored elements is stored.
    bool closed_under_composition(int threads = 0) const;

    // Elements with prescribed images of rays 1..4 (projective frames leave
    // an 8-fold sign freedom, so several can match).
    std::vector<Perm> with_fiducial_images(int i1, int i2, int i3, int i4) const;

    // The id -> id+12 (mod 60) row-cycling map and the unique period-5
    // column-cycling map with 1->31, 2->42, 3->51, 4->16; both must lie in
    // the group, decompose into twelve 5-cycles, and shift the label grid.
    GeneratorReport verify_period5_generators(const Catalog& cat) const;

  private:
    std::vector<Perm> elements_;
    int signed_maps_ = 0;
    std::vector<std::uint32_t> keys_;  // images of rays 1..5 packed, sorted with elements_
};

}  // namespace specker
