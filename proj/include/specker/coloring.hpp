#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specker/catalog.hpp"

namespace specker {

// A ray system small enough for 64-bit masks: bit i holds ray id i+1.
// Both the 600-cell catalog (60 rays, 75 bases) and the Peres system
// (24 rays, 24 bases) are presented to the solver in this form.
struct RaySystem {
    int ray_count = 0;
    std::vector<std::array<int, 4>> bases;        // sorted ids per basis
    std::vector<std::uint64_t> basis_masks;       // parallel to bases
    std::vector<std::uint64_t> neighbor_masks;    // per ray id-1

    std::uint64_t all_mask() const {
        return ray_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ray_count) - 1;
    }
};

RaySystem ray_system_of(const Catalog& cat);

enum class SolveStatus { Colorable, Uncolorable, Undecided };

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t max_depth = 0;
};

// Odd number of bases covering every ray an even number of times: no
// assignment can give each basis exactly one green ray, so the subset is
// uncolorable without any search.
struct ParityCertificate {
    std::vector<int> bases;                        // indices into the constraint list's system bases
    std::vector<std::pair<int, int>> multiplicity; // (ray id, occurrences), all even
};

struct SolveOptions {
    std::uint64_t node_limit = 100'000'000;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Undecided;
    std::uint64_t greens = 0;                      // witness when colorable (lex-least in id order)
    SearchStats stats;
    std::optional<ParityCertificate> parity;       // attached when uncolorable and applicable
};

// Constraint semantics on a subset: at least one green in every basis fully
// contained in the subset (restricted to `constraint_bases` when given), and
// no two orthogonal rays both green. The backtracking order is fixed (ray id
// order, green before red), so results are reproducible byte for byte.
SolveResult solve(const RaySystem& sys, std::uint64_t subset,
                  const std::vector<int>* constraint_bases = nullptr, SolveOptions opts = {});

std::optional<ParityCertificate> parity_certificate(const RaySystem& sys, std::uint64_t subset,
                                                    const std::vector<int>* constraint_bases = nullptr);

// Independent witness check: no two greens orthogonal, every intact basis hit.
bool witness_valid(const RaySystem& sys, std::uint64_t subset, std::uint64_t greens,
                   const std::vector<int>* constraint_bases = nullptr);

// Basis census of a subset: how many of the system's bases keep 4, 3, 2, 1
// or 0 of their rays.
struct BasisCensus {
    int intact = 0;
    int almost_intact = 0;
    int half_intact = 0;
    int quarter_intact = 0;
    int empty = 0;
    friend bool operator==(const BasisCensus&, const BasisCensus&) = default;
};
BasisCensus classify_bases(const RaySystem& sys, std::uint64_t subset);

enum class CriticalityKind { Critical, NotUncolorable, Redundant };

struct CriticalityResult {
    CriticalityKind kind = CriticalityKind::NotUncolorable;
    int redundant_ray = 0;                                   // set when kind == Redundant
    std::vector<std::pair<int, std::uint64_t>> witnesses;    // (deleted ray, coloring)
};

// Critical iff the subset is uncolorable and every single-ray deletion is
// colorable. `deletion_reps`, when nonempty, restricts the deletions tested
// (one representative per orbit of the subset's stabilizer); the caller owns
// the symmetry argument for the untested rays.
CriticalityResult is_critical(const RaySystem& sys, std::uint64_t subset,
                              const std::vector<int>* deletion_reps = nullptr,
                              SolveOptions opts = {});

// Counts green assignments with exactly one green per intact basis of the
// given constraint list, forbidding green pairs that co-occur in any listed
// basis. Greens range over the rays of the listed intact bases.
struct ColoringCount {
    std::uint64_t count = 0;
    std::uint64_t overload_half = 0;     // colorings with >=2 greens in some half-intact basis
    std::uint64_t overload_almost = 0;   // >=2 greens among some almost-intact basis' survivors
    std::uint64_t overload_any = 0;      // either of the above
    std::vector<std::uint64_t> colorings;
};
ColoringCount count_colorings(const RaySystem& sys, std::uint64_t subset,
                              const std::vector<int>& constraint_bases);

// Branching transcript of the uncolorability of a subset under a constraint
// list: at every node the intact basis with fewest undecided rays (lowest
// index on ties) branches over its green candidates; forced assignments are
// propagated; every leaf names an all-red basis.
struct ProofTreeNode {
    int basis = -1;                       // branching basis (index into sys.bases), -1 at a leaf
    int all_red_basis = -1;               // leaf: basis whose rays are all red
    struct Branch {
        int green = 0;                    // chosen green ray
        std::vector<int> forced_greens;   // greens forced by propagation after the choice
        std::unique_ptr<ProofTreeNode> child;
    };
    std::vector<Branch> branches;
};

struct ProofTree {
    std::unique_ptr<ProofTreeNode> root;
    int leaves = 0;
    int depth = 0;
};

ProofTree proof_tree(const RaySystem& sys, std::uint64_t subset,
                     const std::vector<int>& constraint_bases);

std::string proof_tree_text(const RaySystem& sys, const ProofTree& tree);

}  // namespace specker
