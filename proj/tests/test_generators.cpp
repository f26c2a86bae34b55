#include <doctest.h>

#include "generators.h"
#include "shortest_path.h"

using namespace rp;

TEST_CASE("random generator is valid and deterministic")
{
    for (int n = 4; n <= 12; ++n)
        for (uint64_t seed = 1; seed <= 10; ++seed) {
            Instance a = gen_random_simple(n, seed);
            CHECK(a.polygon.size() == n);
            CHECK(validate_instance(a).ok());
            Instance b = gen_random_simple(n, seed);
            CHECK(serialize_instance(a) == serialize_instance(b));
        }
    CHECK(serialize_instance(gen_random_simple(10, 1)) != serialize_instance(gen_random_simple(10, 2)));
}

TEST_CASE("convex generator")
{
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Instance c = gen_convex(10, seed);
        CHECK(validate_instance(c).ok());
        CHECK(c.polygon.blockers().empty());
    }
}

TEST_CASE("spiral generator has one convex and one reflex chain")
{
    for (int n = 6; n <= 24; n += 2) {
        Instance s = gen_spiral(n);
        CHECK(s.polygon.size() == n);
        CHECK(validate_instance(s).ok());
        int half = (n - 2) / 2;
        for (int j = 1; j <= half; ++j) {
            CHECK(s.polygon.kind(j) == VertexKind::Convex);
            CHECK(s.polygon.reflex(half + 1 + j));
        }
        ShortestPath sp = shortest_path(s);
        CHECK(sp.eaves.empty());
    }
    for (int n = 6; n <= 60; n += 6)
        CHECK(validate_instance(gen_winding_spiral(n)).ok());
}

TEST_CASE("corridor generator produces the requested eaves")
{
    for (int e = 0; e <= 5; ++e) {
        Instance c = gen_corridor(e);
        CHECK(validate_instance(c).ok());
        CHECK(shortest_path(c).eaves.size() == static_cast<size_t>(e));
    }
}
