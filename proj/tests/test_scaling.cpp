#include <doctest.h>

#include "scaling.h"

using namespace rp;

TEST_CASE("scaling runs reproduce")
{
    ScalingPlan plan;
    plan.sizes = {8, 12};
    plan.reps = 2;
    auto a = run_scaling(plan), b = run_scaling(plan);
    REQUIRE(a.size() == plan.classes.size() * 4);
    CHECK(scaling_table(a, false) == scaling_table(b, false));
    for (auto& r : a)
        CHECK(r.mirrors <= r.mirrors_all);
}

TEST_CASE("log-log fit recovers a power law")
{
    std::vector<ScalingRecord> recs;
    for (int n : {10, 20, 40, 80}) {
        ScalingRecord r;
        r.cls = "square";
        r.n = n;
        r.mirrors = static_cast<size_t>(n * n);
        r.mirrors_all = static_cast<size_t>(3 * n);
        recs.push_back(r);
    }
    auto fits = fit_exponents(recs);
    REQUIRE(fits.size() == 1);
    CHECK(fits[0].exponent == doctest::Approx(2.0));
    CHECK(fits[0].exponent_all == doctest::Approx(1.0));
    CHECK(fits[0].points == 4);
}

TEST_CASE("unknown class is rejected")
{
    CHECK_THROWS(scaling_instance("hexagonal", 10, 0));
}
