#pragma once

#include "region.h"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rp {

class LayerCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// plain mirrors, M' on the exit side of an eave, M'' reached across an eave
enum class MirrorSide { Plain, Primed, DoublePrimed };
const char* to_string(MirrorSide s);

struct Mirror {
    int id = -1;
    int layer = 0;
    int cell = 0, piece = 0, edge = -1;
    Interval lambda;             // parameters on the edge
    ChainPosition lo, hi;        // chain-order extent
    std::vector<int> parents;    // mirror ids of the previous layer; empty for layer 1 (source s)
    std::optional<BoundaryPoint> a_foot, b_foot;  // span feet a', b'
    unsigned zones = 0;          // ZoneTag bits at an interior point
    MirrorSide side = MirrorSide::Plain;
};

struct LayerTrace {
    int layer = 0;
    int spans = 0;       // mirrors of the previous layer processed
    int exclusions = 0;  // projections trimmed by already covered or claimed parts
    std::map<int, int> revisits;     // edge -> later stages so far that landed on an already used edge
    std::map<int, int> source_layers;  // edge -> distinct layers holding mirrors on it so far
};

enum class Termination { Direct, TargetVisible, Exhausted };
const char* to_string(Termination t);

struct MirrorSystem {
    std::vector<std::vector<int>> layers;  // mirror ids per layer, layer i at index i-1, chain order
    std::vector<Mirror> mirrors;           // by id
    std::map<std::pair<int, int>, IntervalSet> covered;  // (cell, piece) -> reached parameters
    Termination termination = Termination::Exhausted;
    int k = -1;                 // turns of an optimal path, -1 when Exhausted
    int witness = -1;           // mirror of layer k that sees t
    std::vector<LayerTrace> traces;

    const Mirror& mirror(int id) const { return mirrors[static_cast<size_t>(id)]; }
    size_t mirror_count() const { return mirrors.size(); }
    std::string dump() const;
};

// mirrors reached from s with one reflection
void initial_layer(const Region& region, MirrorSystem& sys, Exec exec);
// builds layer i+1 from layer i; returns false if it is empty
bool next_layer(const Region& region, MirrorSystem& sys, Exec exec);
// parameters of mirror m from which t is visible
IntervalSet target_visible_from(const Region& region, const Mirror& m);

MirrorSystem run(const Region& region, Exec exec);
MirrorSystem run(const Region& region);
// every layer until none is new, ignoring t (scaling study)
MirrorSystem run_exhaustive(const Region& region, Exec exec);

// structural checks on a finished system
struct LayerChecks {
    bool order_ok = true;          // no-eave instances: all of M1 before all of M2
    int invisibility_violations = 0;  // sampled pairs of layers i, j with j <= i-2 that see each other forward
    int backward_sightings = 0;    // same, against chain order (not excluded by the construction)
    bool partition_ok = true;      // no parameter in two mirrors
    bool coverage_monotone = true;
    std::vector<std::string> notes;
};
LayerChecks check_layers(const Region& region, const MirrorSystem& sys);

}  // namespace rp
