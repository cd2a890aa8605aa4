#include <doctest.h>

#include <algorithm>
#include <set>

#include "specker/critical_sets.hpp"

using namespace specker;

namespace {

const Catalog& cat() { return Catalog::get(); }

const LineTable& lines() {
    static const LineTable t = LineTable::build(cat());
    return t;
}

const RaySystem& sys() {
    static const RaySystem s = ray_system_of(cat());
    return s;
}

Chain chain_of(std::initializer_list<const char*> edges, ChainKind kind) {
    Chain c;
    c.kind = kind;
    for (const char* e : edges) {
        std::array<char, 2> pair{e[0], e[1]};
        if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);
        c.edges.push_back(pair);
    }
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

}  // namespace

TEST_CASE("chain enumeration matches the published patterns") {
    const auto cycles = enumerate_chains(ChainKind::Cycle5);
    REQUIRE(cycles.size() == 12);
    // the published 6 complementary chain pairs
    const std::array<std::pair<Chain, Chain>, 6> published = {{
        {chain_of({"AB", "BC", "CD", "DE", "EA"}, ChainKind::Cycle5),
         chain_of({"AC", "CE", "EB", "BD", "DA"}, ChainKind::Cycle5)},
        {chain_of({"AB", "BD", "DC", "CE", "EA"}, ChainKind::Cycle5),
         chain_of({"AC", "CB", "BE", "ED", "DA"}, ChainKind::Cycle5)},
        {chain_of({"AB", "BC", "CE", "ED", "DA"}, ChainKind::Cycle5),
         chain_of({"AC", "CD", "DB", "BE", "EA"}, ChainKind::Cycle5)},
        {chain_of({"AB", "BE", "EC", "CD", "DA"}, ChainKind::Cycle5),
         chain_of({"AC", "CB", "BD", "DE", "EA"}, ChainKind::Cycle5)},
        {chain_of({"AB", "BD", "DE", "EC", "CA"}, ChainKind::Cycle5),
         chain_of({"AD", "DC", "CB", "BE", "EA"}, ChainKind::Cycle5)},
        {chain_of({"AB", "BE", "ED", "DC", "CA"}, ChainKind::Cycle5),
         chain_of({"AD", "DB", "BC", "CE", "EA"}, ChainKind::Cycle5)},
    }};
    std::set<std::vector<std::array<char, 2>>> generated;
    for (const auto& c : cycles) generated.insert(c.edges);
    std::set<std::array<char, 2>> all_edges;
    for (const auto& [a, b] : published) {
        CHECK(generated.count(a.edges) == 1);
        CHECK(generated.count(b.edges) == 1);
        // complementary chains partition the ten letter pairs
        std::set<std::array<char, 2>> uni(a.edges.begin(), a.edges.end());
        uni.insert(b.edges.begin(), b.edges.end());
        CHECK(uni.size() == 10);
    }

    const auto bips = enumerate_chains(ChainKind::Bipartite23);
    REQUIRE(bips.size() == 10);
    const std::array<Chain, 10> published_bips = {{
        chain_of({"AC", "AD", "AE", "BC", "BD", "BE"}, ChainKind::Bipartite23),
        chain_of({"AB", "AD", "AE", "CB", "CD", "CE"}, ChainKind::Bipartite23),
        chain_of({"AB", "AC", "AE", "DB", "DC", "DE"}, ChainKind::Bipartite23),
        chain_of({"AB", "AC", "AD", "EB", "EC", "ED"}, ChainKind::Bipartite23),
        chain_of({"BA", "BD", "BE", "CA", "CD", "CE"}, ChainKind::Bipartite23),
        chain_of({"BA", "BC", "BE", "DA", "DC", "DE"}, ChainKind::Bipartite23),
        chain_of({"BA", "BC", "BD", "EA", "EC", "ED"}, ChainKind::Bipartite23),
        chain_of({"CA", "CB", "CE", "DA", "DB", "DE"}, ChainKind::Bipartite23),
        chain_of({"CA", "CB", "CD", "EA", "EB", "ED"}, ChainKind::Bipartite23),
        chain_of({"DA", "DB", "DC", "EA", "EB", "EC"}, ChainKind::Bipartite23),
    }};
    std::set<std::vector<std::array<char, 2>>> gen_bips;
    for (const auto& c : bips) gen_bips.insert(c.edges);
    for (const auto& c : published_bips) CHECK(gen_bips.count(c.edges) == 1);
}

TEST_CASE("apply_chain reproduces the published example boxes") {
    const Chain c = chain_of({"AB", "BE", "EC", "CD", "DA"}, ChainKind::Cycle5);
    const std::uint64_t set = apply_chain(lines(), c, GridAxis::Row, {'A', 'D'});
    const std::uint64_t box_ab = lines().box_mask({'A', 'D'}, {'A', 'B'});
    const std::uint64_t box_be = lines().box_mask({'A', 'D'}, {'B', 'E'});
    CHECK(box_ab == mask_of_ids({1, 7, 11, 38, 42, 45}));
    CHECK(box_be == mask_of_ids({24, 35, 51, 21, 34, 52}));
    CHECK((set & box_ab) == box_ab);
    CHECK((set & box_be) == box_be);
    CHECK_THROWS_AS(apply_chain(lines(), c, GridAxis::Row, {'A', 'A'}), std::invalid_argument);
}

TEST_CASE("family sizes and provenance multiplicity") {
    const auto f30 = enumerate_critical_sets(ChainKind::Cycle5, lines());
    REQUIRE(f30.size() == 240);
    for (const auto& rec : f30) {
        CHECK(rec.size == 30);
        CHECK(rec.provenance.size() == 1);  // every application yields a fresh set
    }
    const auto f36 = enumerate_critical_sets(ChainKind::Bipartite23, lines());
    REQUIRE(f36.size() == 100);
    for (const auto& rec : f36) {
        CHECK(rec.size == 36);
        // each set arises from exactly one row and the transposed column
        REQUIRE(rec.provenance.size() == 2);
        CHECK(rec.provenance[0].axis != rec.provenance[1].axis);
    }
}

TEST_CASE("row and column applications of bipartite chains transpose into each other") {
    const Chain c = chain_of({"CA", "CB", "CE", "DA", "DB", "DE"}, ChainKind::Bipartite23);
    const Chain t = chain_of({"BA", "BC", "BD", "EA", "EC", "ED"}, ChainKind::Bipartite23);
    // 2-subset {C,D} on row B'E' equals 2-subset {B',E'} on column CD
    CHECK(apply_chain(lines(), c, GridAxis::Row, {'B', 'E'}) ==
          apply_chain(lines(), t, GridAxis::Column, {'C', 'D'}));
}

TEST_CASE("complementary pairs") {
    const auto f30 = enumerate_critical_sets(ChainKind::Cycle5, lines());
    const auto pairs = complementary_pairs(f30);
    CHECK(pairs.size() == 120);
    std::set<int> seen;
    for (const auto& [i, j] : pairs) {
        CHECK((f30[static_cast<std::size_t>(i)].rays & f30[static_cast<std::size_t>(j)].rays) == 0);
        CHECK((f30[static_cast<std::size_t>(i)].rays | f30[static_cast<std::size_t>(j)].rays) == kAllRays);
        seen.insert(i);
        seen.insert(j);
    }
    CHECK(seen.size() == 240);
    // the published complement: first cycle vs its complementary cycle on row 1
    const std::uint64_t a =
        apply_chain(lines(), chain_of({"AB", "BC", "CD", "DE", "EA"}, ChainKind::Cycle5),
                    GridAxis::Row, {'A', 'B'});
    const std::uint64_t b =
        apply_chain(lines(), chain_of({"AC", "CE", "EB", "BD", "DA"}, ChainKind::Cycle5),
                    GridAxis::Row, {'A', 'B'});
    CHECK((a & b) == 0);
    CHECK((a | b) == kAllRays);
}

TEST_CASE("sampled records verify fully; fast mode agrees") {
    const auto f30 = enumerate_critical_sets(ChainKind::Cycle5, lines());
    const auto f36 = enumerate_critical_sets(ChainKind::Bipartite23, lines());
    std::vector<CriticalSetRecord> sample30(f30.begin(), f30.begin() + 12);
    std::vector<CriticalSetRecord> sample36(f36.begin(), f36.begin() + 6);
    const Group group = Group::generate(cat());
    const auto full30 = verify_family(sample30, ChainKind::Cycle5, sys(), &group, false);
    CHECK(full30.ok());
    CHECK(full30.critical == 12);
    CHECK(full30.parity_certificates == 12);
    const auto fast30 = verify_family(sample30, ChainKind::Cycle5, sys(), &group, true);
    CHECK(fast30.ok());
    const auto full36 = verify_family(sample36, ChainKind::Bipartite23, sys(), &group, false);
    CHECK(full36.ok());
    CHECK(full36.critical == 6);
    CHECK(full36.parity_certificates == 0);
    CHECK(full36.census_matches == 6);
}
