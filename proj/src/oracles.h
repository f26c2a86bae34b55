#pragma once

#include "path.h"

#include <optional>
#include <vector>

namespace rp {

// Per-edge parameters first lit after exactly j reflections, j = 0, 1, ...
struct IlluminationFronts {
    std::vector<std::vector<IntervalSet>> fronts;  // fronts[j][edge]
    std::optional<int> reach;  // first j whose front sees t
    bool saturated = false;    // a front came out empty before reaching t
};

// BFS over all edges of the domain, links obeying the host-edge rule
IlluminationFronts illuminate(const VisDomain& dom, const Point& s, const Point& t, int kmax, Exec exec);

// minimal number of diffuse reflections s -> t, no constraints
std::optional<int> drp_opt(const Instance& inst, int kmax = -1, Exec exec = Exec::Serial);

// lower bound on cdrp turns: reflections inside the walled domain, ignoring
// simplicity, order and turn direction; nullopt means provably no cdrp
struct RelaxedBound {
    std::optional<int> turns;
    bool certified_none = false;
};
RelaxedBound cdrp_relaxed(const Region& region, int kmax = -1, Exec exec = Exec::Serial);

enum class OracleStatus { Found, NoCdrp, BudgetExceeded };
const char* to_string(OracleStatus s);

struct OracleResult {
    OracleStatus status = OracleStatus::NoCdrp;
    int k = -1;              // Found: optimal turn count
    int lower_bound = 0;     // every cdrp has at least this many turns
    std::vector<Point> witness;
    long sequences = 0;      // edge sequences explored
};

// default sequence cap, overridden by REFLECTPATH_ORACLE_BUDGET
long oracle_budget();

// Brute force over reflecting-edge sequences up to kmax with exact interval
// propagation; a length counts only once a witness passes validate_path.
OracleResult cdrp_opt(const Region& region, int kmax = -1, long budget = -1);

// minimum-link path anywhere in closure(P), by greedy windows
struct LinkPath {
    std::vector<Point> points;
    int links() const { return static_cast<int>(points.size()) - 1; }
};
LinkPath minimum_link_path(const Instance& inst);
// upper bound by BFS over a sampled visibility graph (testing only)
int sampled_link_distance(const Instance& inst, int grid);

}  // namespace rp
