#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specker/coloring.hpp"
#include "specker/lines.hpp"

namespace specker {

// State-independent noncontextuality instance: rays with complete 4-ray
// contexts over them. For an assignment v: rays -> {0,1} each context
// contributes s_b(v) = -prod_{r in b}(1 - 2 v_r), i.e. +1 exactly when the
// context holds an odd number of 1s; the score is the sum over contexts.
struct InequalityInstance {
    std::string name;
    std::vector<GoldenVec4> vectors;          // one per ray, index 0..n-1
    std::vector<std::array<int, 4>> bases;    // ray indices, 0-based
};

InequalityInstance make_instance_30ray(const Catalog& cat, const LineTable& lines);
InequalityInstance make_instance_peres18();
InequalityInstance make_instance_full60(const Catalog& cat);

// Verifies the operator identity prod_{r in b}(I - 2 P_r) = -I for every
// context in exact dyadic golden arithmetic (P_r the projector onto the ray)
// and returns the number of contexts: every context term equals +1 on any
// quantum state. Throws when a context is not a complete orthogonal basis.
int quantum_value(const InequalityInstance& inst);

struct ClassicalResult {
    int max = 0;
    std::uint64_t witness = 0;   // bit r set: ray r assigned 1
    std::uint64_t explored = 0;  // assignments visited (sweep) or nodes (bnb)
    bool exact = true;
};

// Exact maximum of the score over all 2^n assignments by Gray-code sweep
// with O(1) incremental updates. Refuses n > 36; use the branch-and-bound
// for larger instances.
ClassicalResult classical_max_sweep(const InequalityInstance& inst, int threads = 0);

// Branch and bound over rays. Disjoint groups of contexts in which every ray
// appears an even number of times cap the group score at group size - 2,
// which prunes aggressively on parity-rich instances; groups are found
// greedily from the instance itself. node_limit == 0 means unlimited.
ClassicalResult classical_max_bnb(const InequalityInstance& inst, std::uint64_t node_limit = 0);

struct GapReport {
    std::string instance;
    int classical = 0;
    int quantum = 0;
    int gap = 0;
    std::uint64_t witness = 0;
    bool classical_exact = true;
};

GapReport gap_report(const InequalityInstance& inst, const std::string& method = "sweep",
                     int threads = 0, std::uint64_t node_limit = 0);

// Score of one assignment, for witnesses and tests.
int inequality_score(const InequalityInstance& inst, std::uint64_t assignment);

}  // namespace specker
