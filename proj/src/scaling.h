#pragma once

#include "instance.h"

#include <string>
#include <vector>

namespace rp {

struct ScalingRecord {
    std::string cls;
    int n = 0;
    int rep = 0;
    size_t mirrors = 0;      // built until t is seen
    size_t mirrors_all = 0;  // every layer, ignoring t
    int layers = 0;
    int k = -1;
    int max_revisits = 0;  // most later stages landing on one edge
    double seconds = 0;
};

struct ScalingFit {
    std::string cls;
    double exponent = 0;      // slope of log(mirrors) against log(n)
    double exponent_all = 0;  // same for mirrors_all
    int points = 0;
};

struct ScalingPlan {
    std::vector<std::string> classes = {"convex", "random", "spiral", "winding"};
    std::vector<int> sizes = {10, 14, 20, 28, 40};
    int reps = 3;
};

// convex, random and winding take the repetition as seed; spirals ignore it
Instance scaling_instance(const std::string& cls, int n, int rep);
// parallel over instances; records come back in plan order
std::vector<ScalingRecord> run_scaling(const ScalingPlan& plan);
std::vector<ScalingFit> fit_exponents(const std::vector<ScalingRecord>& records);

std::string scaling_table(const std::vector<ScalingRecord>& records, bool with_time);

}  // namespace rp
