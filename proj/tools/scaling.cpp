#include "scaling.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace rp;

int main(int argc, char** argv)
{
    CLI::App app{"mirror-count scaling study"};
    ScalingPlan plan;
    std::string out;
    bool timings = false;
    app.add_option("--classes", plan.classes, "instance classes");
    app.add_option("--sizes", plan.sizes, "vertex counts");
    app.add_option("--reps", plan.reps, "instances per class and size");
    app.add_option("--out", out, "results table (tab separated)");
    app.add_flag("--timings", timings, "include wall time");
    CLI11_PARSE(app, argc, argv);

    std::vector<ScalingRecord> recs;
    try {
        recs = run_scaling(plan);
    } catch (const std::exception& e) {
        std::cerr << "scaling: " << e.what() << "\n";
        return 1;
    }
    std::string table = scaling_table(recs, timings);
    if (out.empty()) {
        std::cout << table;
    } else {
        std::ofstream f(out);
        f << table;
    }
    for (auto& fit : fit_exponents(recs))
        std::cout << "fit " << fit.cls << " exponent " << fit.exponent << " exhaustive " << fit.exponent_all << " over " << fit.points << " sizes\n";
    return 0;
}
