#pragma once

#include "instance.h"

#include <cstdint>

namespace rp {

struct RandomSpec {
    int n = 10;
    uint64_t seed = 1;
    int coord_range = 100;       // vertices drawn from [0, range)^2
    int untangle_budget = 20000; // 2-opt moves before a retry
};

// random points + 2-opt untangling; s,t at half-integer interior points
Instance gen_random_simple(const RandomSpec& cfg);
Instance gen_random_simple(int n, uint64_t seed);

// convex polygon (points on a circle-ish lattice hull)
Instance gen_convex(int n, uint64_t seed);

// one convex chain and one reflex chain; s,t at the chain ends
Instance gen_spiral(int n);
// winding spiral for the scaling study (several turns, interior endpoints)
Instance gen_winding_spiral(int n);

// zig-zag corridor whose shortest path has exactly `eaves` eaves
Instance gen_corridor(int eaves);

class GenerationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rp
