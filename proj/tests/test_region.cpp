#include <doctest.h>

#include "generators.h"
#include "region.h"
#include "support.h"

using namespace rp;
using rp::test::fixture;
using rp::test::P;

namespace {

bool bcv_touches_edge(const Region& r, int e)
{
    for (auto& bi : r.bcv().intervals)
        if (bi.edge == e)
            return true;
    return false;
}

}  // namespace

TEST_CASE("boundary walk")
{
    Instance sq = fixture("fix_sq");
    const Polygon& poly = sq.polygon;
    BoundaryPoint a = boundary_point_at_vertex(poly, 0), b = boundary_point_at_vertex(poly, 2);
    auto cw = boundary_walk(poly, a, b, true);
    REQUIRE(cw.size() == 2);
    CHECK(cw[0].edge == 3);
    CHECK(cw[1].edge == 2);
    auto ccw = boundary_walk(poly, a, b, false);
    REQUIRE(ccw.size() == 2);
    CHECK(ccw[0].edge == 0);
    CHECK(ccw[1].edge == 1);

    BoundaryPoint m = boundary_point(poly, 1, ratio(1, 2));
    auto same = boundary_walk(poly, boundary_point(poly, 1, ratio(1, 4)), m, false);
    REQUIRE(same.size() == 1);
    CHECK(same[0].from == ratio(1, 4));
    CHECK(same[0].to == ratio(1, 2));
    CHECK_THROWS_AS(boundary_walk(poly, m, m, true), AnchorUndefined);
}

TEST_CASE("chains partition the boundary")
{
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Instance inst = gen_random_simple(12, seed);
        Region r(inst);
        BoundaryChains bc = boundary_chains(r);
        // the perimeter parameter mass of the two chains is one full turn
        Scalar total = 0;
        std::vector<Scalar> per_edge(static_cast<size_t>(inst.polygon.size()));
        for (auto* ch : {&bc.clockwise, &bc.counterclockwise})
            for (auto& pc : *ch) {
                Scalar d = pc.to - pc.from;
                per_edge[static_cast<size_t>(pc.edge)] += d < 0 ? Scalar(-d) : d;
            }
        for (auto& v : per_edge)
            CHECK(v == 1);
    }
}

TEST_CASE("FIX-L region")
{
    Region r(fixture("fix_l"));
    REQUIRE(r.cells().size() == 1);
    const Cell& c = r.cells()[0];
    CHECK(c.turn == Orientation::Left);
    CHECK_FALSE(c.clockwise);
    CHECK(r.anchor_s().point == P("0", "2/5"));
    CHECK(r.anchor_t().point == P("18/5", "4"));
    REQUIRE(c.pieces.size() == 4);
    CHECK(c.pieces[0].edge == 5);
    CHECK(c.pieces[1].edge == 0);
    CHECK(c.pieces[2].edge == 1);
    CHECK(c.pieces[3].edge == 2);
    CHECK(bcv_touches_edge(r, 1));
    CHECK(bcv_touches_edge(r, 2));
    // the right wall is in the region everywhere
    CHECK(r.ecv(0, 2) == IntervalSet(Interval::open(0, 1)));
    CHECK(r.zones_at(0, 2, ratio(1, 4)) == ZoneMiddle);
    for (auto& mc : r.membership_checks())
        CHECK(mc.by_tangents == mc.by_trees);
}

TEST_CASE("FIX-Z region")
{
    Region r(fixture("fix_z"));
    CHECK(r.anchor_s().point == P("0", "1/3"));
    CHECK(r.anchor_t().point == P("10", "20/3"));
    REQUIRE(r.eaves().size() == 1);
    const EaveInfo& ev = r.eaves()[0];
    CHECK(ev.a == Point(4, 3));
    CHECK(ev.b == Point(6, 4));
    CHECK(ev.foot_a.point == Point(0, 1));
    CHECK(ev.foot_b.point == Point(10, 6));

    REQUIRE(r.cells().size() == 2);
    const Cell& c0 = r.cells()[0];
    const Cell& c1 = r.cells()[1];
    CHECK(c0.turn == Orientation::Right);
    CHECK(c0.clockwise);
    CHECK(c1.turn == Orientation::Left);
    CHECK_FALSE(c1.clockwise);
    CHECK(c0.start.point == P("0", "1/3"));
    CHECK(c0.end.point == Point(6, 4));
    CHECK(c1.start.point == Point(4, 3));
    CHECK(c1.end.point == P("10", "20/3"));
    // left wall then top edge, and bottom step then right wall
    REQUIRE(c0.pieces.size() == 2);
    CHECK(c0.pieces[0].edge == 7);
    CHECK(c0.pieces[1].edge == 6);
    REQUIRE(c1.pieces.size() == 2);
    CHECK(c1.pieces[0].edge == 2);
    CHECK(c1.pieces[1].edge == 3);

    REQUIRE(c0.exit_limit);
    CHECK(r.point_at(*c0.exit_limit) == Point(0, 1));
    REQUIRE(c1.entry_limit);
    CHECK(r.point_at(*c1.entry_limit) == Point(10, 6));

    // chain-order keys follow the traversal
    auto p1 = r.position(P("0", "1/2"));
    auto p2 = r.position(Point(0, 3));
    auto p3 = r.position(Point(5, 4));
    REQUIRE((p1 && p2 && p3));
    CHECK(*p1 < *p2);
    CHECK(*p2 < *p3);
    CHECK(r.point_at(*p3) == Point(5, 4));

    // pieces of both chains reflect
    bool cell0 = false, cell1 = false;
    for (auto& bi : r.bcv().intervals) {
        cell0 |= bi.cell == 0;
        cell1 |= bi.cell == 1;
    }
    CHECK(cell0);
    CHECK(cell1);
    for (size_t i = 1; i < r.bcv().intervals.size(); ++i)
        CHECK(r.bcv().intervals[i - 1].hi <= r.bcv().intervals[i].lo);
}

TEST_CASE("walls")
{
    Region r(fixture("fix_z"));
    // eave is free, other SP edges are walls
    LinkEnd a{P("5", "31/10"), -1, false}, b{P("5", "39/10"), -1, false};
    CHECK(r.walled().admissible(a, b));
    LinkEnd c{P("1/2", "1"), -1, false}, d{Point(3, 1), -1, false};
    CHECK_FALSE(r.walled().admissible(c, d));
    CHECK(r.plain().admissible(c, d));
    // s may be touched as a path end
    LinkEnd s{Point(1, 1), -1, true}, e{P("1/2", "3"), -1, false};
    CHECK(r.walled().admissible(s, e));
}

TEST_CASE("membership tests agree")
{
    for (const char* name : {"fix_sq", "fix_l", "fix_z"}) {
        Region r(fixture(name));
        for (auto& mc : r.membership_checks()) {
            INFO(name << " vertex " << mc.vertex);
            CHECK(mc.by_tangents == mc.by_trees);
        }
    }
    int checked = 0;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        Instance inst = gen_random_simple(14, seed);
        Region r(inst);
        for (auto& mc : r.membership_checks()) {
            INFO(inst.name << " vertex " << mc.vertex);
            CHECK(mc.by_tangents == mc.by_trees);
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("region pointwise agrees with intervals")
{
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Instance inst = gen_random_simple(10, seed);
        Region r(inst);
        for (auto& c : r.cells())
            for (int k = 0; k < static_cast<int>(c.pieces.size()); ++k) {
                const ChainPiece& pc = c.pieces[static_cast<size_t>(k)];
                for (int i = 1; i < 16; ++i) {
                    Scalar lam = pc.lambda_at(ratio(i, 16));
                    INFO(inst.name << " cell " << c.index << " piece " << k << " i " << i);
                    CHECK((r.zones_at(c.index, k, lam) != 0) == r.ecv(c.index, k).contains(lam));
                }
            }
    }
}
