#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "specker/coloring.hpp"
#include "specker/critical_sets.hpp"
#include "specker/symmetry.hpp"

using namespace specker;

namespace {

const Catalog& cat() { return Catalog::get(); }

const RaySystem& sys() {
    static const RaySystem s = ray_system_of(cat());
    return s;
}

const LineTable& lines() {
    static const LineTable t = LineTable::build(cat());
    return t;
}

std::uint64_t bit(int id) { return std::uint64_t{1} << (id - 1); }

}  // namespace

TEST_CASE("the full 60-ray system is uncolorable") {
    const SolveResult r = solve(sys(), kAllRays);
    CHECK(r.status == SolveStatus::Uncolorable);
    CHECK_FALSE(r.parity.has_value());  // 75 bases is odd but multiplicities are 5
}

TEST_CASE("a single basis is colorable with the least green") {
    const SolveResult r = solve(sys(), mask_of_ids({1, 2, 3, 4}));
    REQUIRE(r.status == SolveStatus::Colorable);
    CHECK(r.greens == bit(1));
}

TEST_CASE("30-ray example set") {
    const std::uint64_t s30 = example_set_30(lines());
    CHECK(std::popcount(s30) == 30);
    CHECK(ids_of_mask(s30) ==
          std::vector<int>{3,  4,  6,  8,  10, 11, 15, 16, 17, 19, 21, 24, 25, 26, 27,
                           28, 30, 32, 39, 40, 45, 46, 47, 48, 49, 50, 51, 52, 53, 55});

    const BasisCensus census = classify_bases(sys(), s30);
    CHECK(census == BasisCensus{15, 0, 45, 0, 15});

    const auto parity = parity_certificate(sys(), s30);
    REQUIRE(parity.has_value());
    CHECK(parity->bases.size() == 15);
    CHECK(parity->multiplicity.size() == 30);
    for (const auto& [id, m] : parity->multiplicity) CHECK(m == 2);

    const SolveResult r = solve(sys(), s30);
    CHECK(r.status == SolveStatus::Uncolorable);

    SUBCASE("deleting ray 3 gives the least witness and validates the published one") {
        const SolveResult del = solve(sys(), s30 & ~bit(3));
        REQUIRE(del.status == SolveStatus::Colorable);
        CHECK(ids_of_mask(del.greens) == std::vector<int>{4, 6, 10, 26, 45, 52, 53});
        CHECK(witness_valid(sys(), s30 & ~bit(3), del.greens));
        CHECK(witness_valid(sys(), s30 & ~bit(3), mask_of_ids({25, 45, 55, 16, 4, 32, 49})));
    }

    SUBCASE("criticality") {
        const CriticalityResult cr = is_critical(sys(), s30);
        CHECK(cr.kind == CriticalityKind::Critical);
        CHECK(cr.witnesses.size() == 30);
        for (const auto& [deleted, greens] : cr.witnesses)
            CHECK(witness_valid(sys(), s30 & ~bit(deleted), greens));
    }
}

TEST_CASE("36-ray example set") {
    const std::uint64_t s36 = example_set_36(lines());
    CHECK(std::popcount(s36) == 36);
    CHECK(ids_of_mask(s36) ==
          std::vector<int>{1,  2,  4,  5,  6,  7,  9,  11, 12, 13, 14, 15, 18, 19, 20, 21, 22, 23,
                           25, 28, 29, 31, 35, 36, 37, 38, 42, 43, 45, 47, 50, 51, 54, 56, 57, 58});

    CHECK(classify_bases(sys(), s36) == BasisCensus{18, 12, 36, 0, 9});
    CHECK_FALSE(parity_certificate(sys(), s36).has_value());

    std::vector<int> restricted;
    for (std::size_t bi = 0; bi < sys().bases.size(); ++bi)
        if (std::popcount(sys().basis_masks[bi] & s36) >= 3) restricted.push_back(static_cast<int>(bi));
    REQUIRE(restricted.size() == 30);
    CHECK(solve(sys(), s36, &restricted).status == SolveStatus::Uncolorable);
    CHECK(solve(sys(), s36).status == SolveStatus::Uncolorable);

    SUBCASE("deleting ray 1: published witness and the 66 involved bases") {
        const std::uint64_t survivors = s36 & ~bit(1);
        const SolveResult del = solve(sys(), survivors);
        REQUIRE(del.status == SolveStatus::Colorable);
        CHECK(ids_of_mask(del.greens) == std::vector<int>{2, 7, 9, 15, 19, 43, 51, 56});
        CHECK(witness_valid(sys(), survivors, mask_of_ids({11, 4, 22, 54, 18, 5, 35, 25})));
        int involved = 0;
        for (const std::uint64_t bm : sys().basis_masks) involved += (bm & survivors) != 0;
        CHECK(involved == 66);
    }

    SUBCASE("criticality") {
        CHECK(is_critical(sys(), s36).kind == CriticalityKind::Critical);
    }
}

TEST_CASE("the full system is uncolorable but redundant") {
    const CriticalityResult cr = is_critical(sys(), kAllRays);
    CHECK(cr.kind == CriticalityKind::Redundant);
    CHECK(cr.redundant_ray == 1);  // deleting ray 1 keeps it uncolorable
    CHECK(solve(sys(), kAllRays & ~bit(1)).status == SolveStatus::Uncolorable);
}

TEST_CASE("count_colorings") {
    SUBCASE("single basis: four choices") {
        std::vector<int> one{0};
        const std::uint64_t subset = sys().basis_masks[0];
        CHECK(count_colorings(sys(), subset, one).count == 4);
    }
    SUBCASE("30-ray set with its 15 intact bases: the parity certificate forbids all") {
        const std::uint64_t s30 = example_set_30(lines());
        std::vector<int> intact;
        for (std::size_t bi = 0; bi < sys().bases.size(); ++bi)
            if ((sys().basis_masks[bi] & s30) == sys().basis_masks[bi])
                intact.push_back(static_cast<int>(bi));
        REQUIRE(intact.size() == 15);
        CHECK(count_colorings(sys(), s30, intact).count == 0);
    }
    SUBCASE("36-ray set: 448 under the 18 intact bases, 0 with the almost-intact pairs") {
        const std::uint64_t s36 = example_set_36(lines());
        std::vector<int> intact, both;
        for (std::size_t bi = 0; bi < sys().bases.size(); ++bi) {
            const int kept = std::popcount(sys().basis_masks[bi] & s36);
            if (kept == 4) intact.push_back(static_cast<int>(bi));
            if (kept >= 3) both.push_back(static_cast<int>(bi));
        }
        const ColoringCount a = count_colorings(sys(), s36, intact);
        CHECK(a.count == 448);
        CHECK(a.overload_any == 448);      // every coloring breaks some surviving pair
        CHECK(a.overload_almost == 448);   // always within an almost-intact basis
        CHECK(a.overload_half == 336);     // and often, not always, a half-intact one
        CHECK(count_colorings(sys(), s36, both).count == 0);
    }
}

TEST_CASE("proof tree for the 36-ray set under its 30 bases") {
    const std::uint64_t s36 = example_set_36(lines());
    std::vector<int> restricted;
    for (std::size_t bi = 0; bi < sys().bases.size(); ++bi)
        if (std::popcount(sys().basis_masks[bi] & s36) >= 3) restricted.push_back(static_cast<int>(bi));
    const ProofTree tree = proof_tree(sys(), s36, restricted);
    CHECK(tree.leaves == 52);
    int leaves = 0;
    auto walk = [&](auto&& self, const ProofTreeNode& n) -> void {
        if (n.all_red_basis >= 0) {
            ++leaves;
            return;
        }
        CHECK(n.basis >= 0);
        CHECK(!n.branches.empty());
        for (const auto& b : n.branches) self(self, *b.child);
    };
    walk(walk, *tree.root);
    CHECK(leaves == tree.leaves);
    const std::string text = proof_tree_text(sys(), tree);
    CHECK(text.find("all-red basis *") != std::string::npos);

    SUBCASE("a colorable subset is rejected") {
        std::vector<int> one{0};
        CHECK_THROWS_AS(proof_tree(sys(), sys().basis_masks[0], one), std::invalid_argument);
    }
}

TEST_CASE("solver equivariance and monotonicity") {
    const Group group = Group::generate(cat());
    const std::uint64_t s30 = example_set_30(lines());
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, group.elements().size() - 1);
    for (int i = 0; i < 12; ++i) {
        const Perm& g = group.elements()[pick(rng)];
        const std::uint64_t image = apply_perm(g, s30);
        CHECK(solve(sys(), image).status == SolveStatus::Uncolorable);
        const std::uint64_t del = s30 & ~(s30 & (~s30 + 1));
        CHECK(solve(sys(), apply_perm(g, del)).status == solve(sys(), del).status);
    }
    // monotonicity: supersets of an uncolorable set stay uncolorable
    std::uniform_int_distribution<int> ray(1, 60);
    std::uint64_t grown = s30;
    for (int i = 0; i < 10; ++i) {
        grown |= std::uint64_t{1} << (ray(rng) - 1);
        CHECK(solve(sys(), grown).status == SolveStatus::Uncolorable);
    }
}

TEST_CASE("node limit produces undecided, never a wrong answer") {
    const SolveResult r = solve(sys(), kAllRays, nullptr, SolveOptions{3});
    CHECK(r.status == SolveStatus::Undecided);
}
