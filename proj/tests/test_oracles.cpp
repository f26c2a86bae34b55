#include <doctest.h>

#include "generators.h"
#include "oracles.h"
#include "support.h"

using namespace rp;
using rp::test::fixture;

TEST_CASE("unconstrained reflections on fixtures")
{
    CHECK(drp_opt(fixture("fix_sq")) == 0);
    CHECK(drp_opt(fixture("fix_l")) == 1);
    CHECK(drp_opt(fixture("fix_z")) == 2);
    CHECK(drp_opt(fixture("fix_nocdrp")) == 1);
}

TEST_CASE("illumination fronts are first-reach")
{
    Instance inst = gen_random_simple(14, 3);
    Region r(inst);
    IlluminationFronts f = illuminate(r.plain(), inst.source, inst.target, 8, Exec::Serial);
    REQUIRE(!f.fronts.empty());
    const Polygon& P = inst.polygon;
    for (int e = 0; e < P.size(); ++e) {
        IntervalSet seen;
        for (auto& front : f.fronts) {
            const IntervalSet& here = front[static_cast<size_t>(e)];
            CHECK(here.intersected(seen).empty());
            seen.unite(here);
        }
    }
    IlluminationFronts g = illuminate(r.plain(), inst.source, inst.target, 8, Exec::Parallel);
    REQUIRE(g.fronts.size() == f.fronts.size());
    for (size_t j = 0; j < f.fronts.size(); ++j)
        CHECK(g.fronts[j] == f.fronts[j]);
    CHECK(g.reach == f.reach);
}

TEST_CASE("constrained brute force on fixtures")
{
    OracleResult l = cdrp_opt(Region(fixture("fix_l")));
    CHECK(l.status == OracleStatus::Found);
    CHECK(l.k == 1);
    OracleResult z = cdrp_opt(Region(fixture("fix_z")));
    CHECK(z.status == OracleStatus::Found);
    CHECK(z.k == 2);
    Region zr(fixture("fix_z"));
    CHECK(validate_path(cdrp_opt(zr).witness, zr).ok());
    OracleResult sq = cdrp_opt(Region(fixture("fix_sq")));
    CHECK(sq.k == 0);

    Region nc(fixture("fix_nocdrp"));
    RelaxedBound rb = cdrp_relaxed(nc);
    CHECK(rb.certified_none);
    CHECK(!rb.turns);
    CHECK(cdrp_opt(nc).status == OracleStatus::NoCdrp);
}

TEST_CASE("relaxed bound never exceeds the optimum")
{
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Instance inst = gen_random_simple(10, seed);
        Region r(inst);
        OracleResult o = cdrp_opt(r, 6);
        RelaxedBound rb = cdrp_relaxed(r);
        CAPTURE(inst.name);
        if (o.status == OracleStatus::Found) {
            REQUIRE(rb.turns);
            CHECK(*rb.turns <= o.k);
            CHECK(validate_path(o.witness, r).ok());
            CHECK(static_cast<int>(o.witness.size()) - 2 == o.k);
        }
        if (rb.certified_none)
            CHECK(o.status == OracleStatus::NoCdrp);
    }
}

TEST_CASE("budget is reported, not guessed")
{
    Region r(fixture("fix_z"));
    OracleResult o = cdrp_opt(r, 6, 1);
    CHECK(o.status == OracleStatus::BudgetExceeded);
    CHECK(o.lower_bound <= 2);
}

TEST_CASE("minimum link paths on fixtures")
{
    CHECK(minimum_link_path(fixture("fix_sq")).links() == 1);
    LinkPath l = minimum_link_path(fixture("fix_l"));
    CHECK(l.links() == 2);
    CHECK(minimum_link_path(fixture("fix_z")).links() == 3);
    Instance inst = fixture("fix_l");
    CHECK(l.points.front() == inst.source);
    CHECK(l.points.back() == inst.target);
}

TEST_CASE("minimum link paths are feasible and no longer than sampled ones")
{
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Instance inst = gen_random_simple(8 + static_cast<int>(seed % 10), seed);
        Region r(inst);
        LinkPath m = minimum_link_path(inst);
        CAPTURE(inst.name);
        REQUIRE(m.points.size() >= 2);
        CHECK(m.points.front() == inst.source);
        CHECK(m.points.back() == inst.target);
        for (size_t i = 0; i + 1 < m.points.size(); ++i)
            CHECK(r.plain().segment_in_closure(m.points[i], m.points[i + 1]));
        CHECK(m.links() <= sampled_link_distance(inst, 8));
    }
}

TEST_CASE("engine matches the brute force on small polygons")
{
    for (uint64_t seed = 500; seed < 540; ++seed) {
        Instance inst = gen_random_simple(9, seed);
        Region r(inst);
        OracleResult o = cdrp_opt(r, 6);
        if (o.status == OracleStatus::BudgetExceeded)
            continue;
        CAPTURE(inst.name);
        CHECK(run(r, Exec::Serial).k == (o.status == OracleStatus::Found ? o.k : -1));
    }
}
