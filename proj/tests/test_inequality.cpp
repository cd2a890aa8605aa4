#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <vector>

#include "specker/critical_sets.hpp"
#include "specker/inequality.hpp"

using namespace specker;

namespace {

const Catalog& cat() { return Catalog::get(); }

const LineTable& lines() {
    static const LineTable t = LineTable::build(cat());
    return t;
}

// Independent oracle: the score of an assignment v is 2w - B where w is the
// number of odd-parity contexts; over GF(2) the reachable parity patterns
// form the column space of the context-incidence matrix, so the exact
// classical maximum is 2*maxweight(column space) - B.
int gf2_classical_max(const InequalityInstance& inst) {
    const int n = static_cast<int>(inst.vectors.size());
    std::vector<std::uint64_t> cols(static_cast<std::size_t>(n), 0);
    for (std::size_t bi = 0; bi < inst.bases.size(); ++bi)
        for (int r : inst.bases[bi]) cols[static_cast<std::size_t>(r)] |= std::uint64_t{1} << bi;
    std::vector<std::uint64_t> basis;
    for (std::uint64_t c : cols) {
        for (const std::uint64_t b : basis) c = std::min(c, c ^ b);
        if (c) basis.push_back(c);
    }
    REQUIRE(basis.size() <= 24);  // keep the enumeration cheap in tests
    int best = 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << basis.size()); ++pick) {
        std::uint64_t word = 0;
        std::uint64_t m = pick;
        std::size_t i = 0;
        while (m) {
            if (m & 1) word ^= basis[i];
            m >>= 1;
            ++i;
        }
        best = std::max(best, std::popcount(word));
    }
    return 2 * best - static_cast<int>(inst.bases.size());
}

InequalityInstance single_basis_instance() {
    InequalityInstance inst;
    inst.name = "one-basis";
    const auto& b = cat().bases()[0];
    for (int id : b.rays) inst.vectors.push_back(cat().vec(id));
    inst.bases.push_back({0, 1, 2, 3});
    return inst;
}

}  // namespace

TEST_CASE("quantum value counts contexts after checking the product identity") {
    CHECK(quantum_value(single_basis_instance()) == 1);
    const auto inst30 = make_instance_30ray(cat(), lines());
    CHECK(inst30.vectors.size() == 30);
    CHECK(inst30.bases.size() == 15);
    CHECK(quantum_value(inst30) == 15);
    const auto inst18 = make_instance_peres18();
    CHECK(inst18.vectors.size() == 18);
    CHECK(quantum_value(inst18) == 9);
    const auto full = make_instance_full60(cat());
    CHECK(quantum_value(full) == 75);

    SUBCASE("a malformed context is rejected") {
        InequalityInstance bad = single_basis_instance();
        bad.bases[0] = {0, 0, 1, 2};
        CHECK_THROWS_AS(quantum_value(bad), std::runtime_error);
    }
}

TEST_CASE("classical maximum by sweep matches the published bounds and the oracle") {
    CHECK(classical_max_sweep(single_basis_instance()).max == 1);

    const auto inst18 = make_instance_peres18();
    const ClassicalResult c18 = classical_max_sweep(inst18);
    CHECK(c18.max == 7);
    CHECK(c18.max == gf2_classical_max(inst18));
    CHECK(inequality_score(inst18, c18.witness) == 7);

    const auto inst30 = make_instance_30ray(cat(), lines());
    // the sweep over 2^30 runs in the acceptance suite; the oracle pins the
    // value here
    CHECK(gf2_classical_max(inst30) == 13);

    SUBCASE("oversized instances are refused") {
        CHECK_THROWS_AS(classical_max_sweep(make_instance_full60(cat())), std::invalid_argument);
    }
}

TEST_CASE("branch and bound agrees with the sweep") {
    const auto inst18 = make_instance_peres18();
    const ClassicalResult bnb = classical_max_bnb(inst18);
    CHECK(bnb.exact);
    CHECK(bnb.max == 7);

    const auto inst30 = make_instance_30ray(cat(), lines());
    const ClassicalResult bnb30 = classical_max_bnb(inst30);
    CHECK(bnb30.exact);
    CHECK(bnb30.max == 13);

    SUBCASE("node limit reports inexact instead of wrong") {
        const ClassicalResult limited = classical_max_bnb(inst30, 10);
        CHECK_FALSE(limited.exact);
        CHECK(limited.max <= 13);
    }
}

TEST_CASE("classical maximum is invariant under instance relabeling") {
    const auto inst18 = make_instance_peres18();
    InequalityInstance relabeled = inst18;
    // reverse the ray numbering
    const int n = static_cast<int>(inst18.vectors.size());
    std::reverse(relabeled.vectors.begin(), relabeled.vectors.end());
    for (auto& b : relabeled.bases) {
        for (int& r : b) r = n - 1 - r;
        std::sort(b.begin(), b.end());
    }
    CHECK(classical_max_sweep(relabeled).max == classical_max_sweep(inst18).max);
}

TEST_CASE("gap reports") {
    const GapReport g18 = gap_report(make_instance_peres18(), "sweep");
    CHECK(g18.quantum == 9);
    CHECK(g18.classical == 7);
    CHECK(g18.gap == 2);
    CHECK_THROWS_AS(gap_report(make_instance_peres18(), "nonsense"), std::invalid_argument);
}

TEST_CASE("score parity within a doubly covering context family") {
    // in the 30-ray instance every ray lies in exactly two contexts, so the
    // number of odd contexts is even for every assignment, capping the score
    // at 13
    const auto inst30 = make_instance_30ray(cat(), lines());
    std::array<int, 30> mult{};
    for (const auto& b : inst30.bases)
        for (int r : b) ++mult[static_cast<std::size_t>(r)];
    for (int m : mult) CHECK(m == 2);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t v = rng() & ((std::uint64_t{1} << 30) - 1);
        const int s = inequality_score(inst30, v);
        CHECK((s - 15) % 2 == 0);
        CHECK(((s + 15) / 2) % 2 == 0);  // odd-context count is even
        CHECK(s <= 13);
    }
}
