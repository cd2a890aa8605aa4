// Exercises the command-line surface end to end: spawns the real binary,
// checks exit codes, parses emitted JSON, and confirms byte-identical output
// across repeated runs.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

void expect(bool cond, const std::string& what) {
    if (!cond) {
        ++failures;
        std::cerr << "[FAIL] " << what << "\n";
    } else {
        std::cout << "[ok] " << what << "\n";
    }
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(SPECKER600_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WEXITSTATUS(status);
    return res;
}

}  // namespace

int main() {
    using nlohmann::json;

    {
        const RunResult r = run("catalog --format json");
        expect(r.exit_code == 0, "catalog exits 0");
        const json doc = json::parse(r.out, nullptr, false);
        expect(!doc.is_discarded(), "catalog emits valid JSON");
        expect(doc["rays"].size() == 60, "catalog lists 60 rays");
        expect(doc["bases"].size() == 75, "catalog lists 75 bases");
        expect(doc["cells"].size() == 25, "catalog lists 25 cells");
        expect(doc["decompositions"].size() == 10, "catalog lists 10 decompositions");
        expect(doc["rays"][0]["vec"][0][0] == 2, "ray 1 starts with coordinate 2");
        const RunResult again = run("catalog --format json");
        expect(r.out == again.out, "catalog output is byte-identical across runs");
    }
    {
        const RunResult r = run("catalog --format table");
        expect(r.exit_code == 0, "catalog table exits 0");
        expect(r.out.find("1 = 2 0 0 0") != std::string::npos, "table shows ray 1");
    }
    {
        const RunResult r = run("lines --format json");
        expect(r.exit_code == 0, "lines exits 0");
        const json doc = json::parse(r.out, nullptr, false);
        expect(doc["dual_pairs"].size() == 100, "lines lists 100 dual pairs");
    }
    {
        const RunResult r = run("solve --rays 1,2,3,4");
        expect(r.exit_code == 0, "a single basis is colorable (exit 0)");
        const json doc = json::parse(r.out, nullptr, false);
        expect(doc["status"] == "colorable", "solve reports colorable");
        expect(doc["greens"].size() == 1 && doc["greens"][0] == 1, "lex-least witness {1}");
    }
    {
        std::string all;
        for (int i = 1; i <= 60; ++i) all += std::to_string(i) + (i < 60 ? "," : "");
        const RunResult r = run("solve --rays " + all);
        expect(r.exit_code == 1, "the full system is uncolorable (exit 1)");
    }
    {
        const RunResult r = run("solve --rays 1,2,3,4 --node-limit 1");
        expect(r.exit_code == 2, "node limit yields undecided (exit 2)");
    }
    {
        const RunResult r = run("critical --size 30");
        const json doc = json::parse(r.out, nullptr, false);
        expect(doc["count"] == 240, "240 thirty-ray sets");
    }
    {
        const RunResult r = run("critical --size 36");
        const json doc = json::parse(r.out, nullptr, false);
        expect(doc["count"] == 100, "100 distinct thirty-six-ray sets");
    }
    {
        const RunResult r = run("peres --criticals 18");
        const json doc = json::parse(r.out, nullptr, false);
        expect(doc["criticals_18"].size() == 16, "16 Peres 18-ray criticals");
    }
    {
        const RunResult r = run("inequality --instance peres18 --method sweep");
        const json doc = json::parse(r.out, nullptr, false);
        expect(doc["classical"] == 7 && doc["quantum"] == 9 && doc["gap"] == 2,
               "Peres-18 inequality report");
    }
    {
        const RunResult r = run("symmetry --order");
        const json doc = json::parse(r.out, nullptr, false);
        expect(doc["projective_order"] == 7200, "group order 7200");
    }
    {
        const RunResult r = run("explore --size 20 --samples 50 --seed 7");
        expect(r.exit_code == 0, "explore exits 0");
        const json doc = json::parse(r.out, nullptr, false);
        expect(doc["critical_samples"] == 0, "random 20-ray samples yield no critical sets");
    }

    if (failures) {
        std::cerr << failures << " CLI check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
