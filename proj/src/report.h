#pragma once

#include "oracles.h"

#include <optional>
#include <string>
#include <vector>

namespace rp {

struct AnalyzeOptions {
    bool oracle = true;       // run the brute-force optimum
    int oracle_kmax = -1;
    long budget = -1;         // sequence cap, -1 for oracle_budget()
    bool tamper = false;      // report k one too high, to show checks catch it
    Exec exec = Exec::Serial;
};

struct CheckLine {
    std::string name;
    bool pass = true;
    std::string detail;
};

// one solved instance with its cross-checks
struct RunReport {
    static constexpr int version = 1;
    std::string name;
    int n = 0;
    int eaves = 0;
    bool has_path = false;
    int k = -1;
    std::optional<int> drp;
    int mlp_links = -1;
    std::string oracle = "skipped";  // oracle status text
    int oracle_k = -1;
    std::vector<int> layer_sizes;
    std::vector<CheckLine> checks;
    std::vector<std::pair<std::string, double>> timings;  // stage -> milliseconds
    std::optional<ReflectionPath> path;

    bool ok() const;
    // single line of JSON; timings only when asked
    std::string json(bool with_timings) const;
};

RunReport analyze(const Instance& inst, const AnalyzeOptions& opt);

// bound checks on their own, for reuse by the acceptance run
CheckLine sandwich_check(int k, int drp, int eaves);
CheckLine link_check(int k, int mlp_links, int eaves);

}  // namespace rp
