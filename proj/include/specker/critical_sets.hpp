#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specker/coloring.hpp"
#include "specker/lines.hpp"
#include "specker/symmetry.hpp"

namespace specker {

enum class ChainKind { Cycle5, Bipartite23 };

// A selection of letter pairs over {A..E}: either the edge set of a 5-cycle
// (five pairs, keeps 30 rays) or the complete bipartite set between a 2-subset
// and its complement (six pairs, keeps 36 rays). The same chain applies to a
// grid row (pairs name columns) or, read primed, to a grid column.
struct Chain {
    ChainKind kind = ChainKind::Cycle5;
    std::vector<std::array<char, 2>> edges;  // sorted pairs, sorted list
    friend bool operator==(const Chain&, const Chain&) = default;
};

std::vector<Chain> enumerate_chains(ChainKind kind);  // 12 cycles, 10 bipartite

enum class GridAxis { Row, Column };

struct Provenance {
    Chain chain;
    GridAxis axis = GridAxis::Row;
    std::array<char, 2> grid_line{};  // the row (primed) or column letters
};

std::string to_string(const Chain& chain);
std::string to_string(const Provenance& prov);

// Union of the six rays in every selected box of one grid line.
std::uint64_t apply_chain(const LineTable& lines, const Chain& chain, GridAxis axis,
                          std::array<char, 2> grid_line);

struct CriticalSetRecord {
    std::uint64_t rays = 0;
    int size = 0;
    std::vector<Provenance> provenance;  // every (chain, grid line) producing this set
};

// All chain applications over the 10 rows and 10 columns, deduplicated by ray
// set and sorted. Cycle5 yields 240 records; Bipartite23 yields 100 (each
// arising once from a row and once from a column).
std::vector<CriticalSetRecord> enumerate_critical_sets(ChainKind kind, const LineTable& lines);

// The canonical examples: the first cycle applied to row A'B' (30 rays) and
// the first bipartite chain applied to the same row (36 rays).
std::uint64_t example_set_30(const LineTable& lines);
std::uint64_t example_set_36(const LineTable& lines);

// Unordered complement pairs within the 30-ray family: disjoint sets whose
// union is all 60 rays. Every record has exactly one complement; 120 pairs.
std::vector<std::pair<int, int>> complementary_pairs(const std::vector<CriticalSetRecord>& family);

struct FamilyVerification {
    int records = 0;
    int critical = 0;
    int parity_certificates = 0;
    int census_matches = 0;
    bool all_uncolorable = false;
    std::vector<std::string> failures;  // provenance + reason per failing record
    bool ok() const { return failures.empty(); }
};

// Verifies every record: expected census, parity certificate present (30-ray)
// or absent (36-ray), solver-confirmed uncolorability, and criticality. Full
// mode tests all |S| deletions; fast mode tests one deletion per orbit of the
// record's stabilizer and transfers the witnesses by symmetry (re-validated).
FamilyVerification verify_family(const std::vector<CriticalSetRecord>& family, ChainKind kind,
                                 const RaySystem& sys, const Group* group, bool fast,
                                 int threads = 0, SolveOptions opts = {});

}  // namespace specker
