#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "specker/golden.hpp"

namespace specker {

struct Ray {
    int id = 0;  // 1..60, conventional numbering
    GoldenVec4 vec;
};

struct Basis {
    std::array<int, 4> rays{};  // sorted ids
    friend bool operator==(const Basis&, const Basis&) = default;
    friend auto operator<=>(const Basis&, const Basis&) = default;
};

struct CellLabel {
    char column = 'A';  // A..E
    char row = 'A';     // A..E, the primed letter
    friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

// "AA'", "DB'", ...
std::string to_string(CellLabel label);

struct Cell24 {
    std::array<int, 12> rays{};   // sorted ids
    CellLabel label;
    std::array<int, 3> bases{};   // indices into Catalog::bases()
};

struct Decomposition {
    enum class Kind { Row, Column };
    Kind kind = Kind::Row;
    char letter = 'A';            // the shared row or column letter
    std::array<int, 5> cells{};   // indices into Catalog::cells(); ray sets partition 1..60
};

struct NeighborProfile {
    int two_tau = 0;    // |dot| = 2*tau   (nearest shell)
    int two = 0;        // |dot| = 2
    int two_kappa = 0;  // |dot| = 2*kappa
    int zero = 0;       // orthogonal shell
    friend bool operator==(const NeighborProfile&, const NeighborProfile&) = default;
};

class CatalogError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The immutable 60-ray master table with its orthogonality structure, the 75
// bases, 25 labeled 24-cells and 10 decompositions. Built once, then fully
// read-only; all queries are thread-safe.
class Catalog {
  public:
    // Generates the 120 vertices, resolves the conventional numbering against
    // the basis table (ambiguous printed entries are pinned by backtracking
    // over the orthogonality constraints; non-unique resolution throws), then
    // derives and validates bases, cells and decompositions.
    static Catalog build();

    // Shared immutable instance.
    static const Catalog& get();

    // The 120 vertices: (+-2,0,0,0) perms, (+-1,+-1,+-1,+-1), and even
    // permutations of (+-tau,+-1,+-kappa,0); all with squared norm 4.
    static std::vector<GoldenVec4> generate_vertices();

    const std::vector<Ray>& rays() const { return rays_; }
    const std::vector<Basis>& bases() const { return bases_; }
    const std::vector<Cell24>& cells() const { return cells_; }
    const std::vector<Decomposition>& decompositions() const { return decompositions_; }

    const GoldenVec4& vec(int id) const { return rays_[static_cast<std::size_t>(id - 1)].vec; }

    bool orthogonal(int id_a, int id_b) const {
        return (neighbor_masks_[static_cast<std::size_t>(id_a - 1)] >> (id_b - 1)) & 1u;
    }

    // Bit id-1 set for every ray orthogonal to `id`.
    std::uint64_t neighbor_mask(int id) const {
        return neighbor_masks_[static_cast<std::size_t>(id - 1)];
    }

    // Indices into bases() of the 5 bases containing `id`.
    const std::array<int, 5>& bases_of_ray(int id) const {
        return ray_bases_[static_cast<std::size_t>(id - 1)];
    }

    // Index of the unique basis containing both rays, or -1 if not orthogonal.
    int basis_of_pair(int id_a, int id_b) const;

    int basis_index(const Basis& b) const;  // -1 if absent

    int cell_index(CellLabel label) const;

    NeighborProfile neighbor_profile(int id) const;

    // Projective id of a catalog vector (matches up to sign), or 0.
    int id_of_vector(const GoldenVec4& v) const;

  private:
    std::vector<Ray> rays_;
    std::vector<Basis> bases_;
    std::vector<Cell24> cells_;
    std::vector<Decomposition> decompositions_;
    std::vector<std::uint64_t> neighbor_masks_;
    std::vector<std::array<int, 5>> ray_bases_;
    std::vector<std::array<int, 60>> pair_basis_;  // -1 when not orthogonal

    void validate() const;
};

// Mask helpers shared across modules: ray id i <-> bit i-1.
std::uint64_t mask_of_ids(const std::vector<int>& ids);
std::vector<int> ids_of_mask(std::uint64_t mask);
inline constexpr std::uint64_t kAllRays = (std::uint64_t{1} << 60) - 1;

}  // namespace specker
