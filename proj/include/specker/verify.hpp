#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace specker {

struct VerifyOptions {
    bool fast = false;          // sampled criticality (one deletion per stabilizer orbit)
    int threads = 0;            // 0: SPECKER600_THREADS or hardware
    std::uint64_t node_limit = 100'000'000;
    bool check_determinism = true;  // criterion 11 re-runs the pipeline
};

struct CheckLine {
    bool pass = false;
    bool informational = false;  // "note:" lines never fail a criterion
    std::string text;
};

struct CriterionResult {
    int number = 0;
    std::string title;
    bool pass = false;
    std::vector<CheckLine> lines;
    double seconds = 0.0;  // reported on stderr only, never in content output
};

struct VerifySummary {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
};

// Runs the whole pipeline (catalog, lines, symmetry group, chain families,
// coloring verification, Peres, inequality) and evaluates every acceptance
// criterion. Content output is fully deterministic for a fixed configuration.
VerifySummary verify_all(const VerifyOptions& opts = {});

// Deterministic rendering: one PASS/FAIL line per criterion plus its checks.
std::string verify_report(const VerifySummary& summary);

}  // namespace specker
