#include <doctest.h>

#include "generators.h"
#include "shortest_path.h"
#include "support.h"
#include "visibility.h"

#include <random>

using namespace rp;
using rp::test::fixture;

namespace {

IntervalSet on_edge(const VisDomain& dom, const Polygon& poly, int e, const Point& from)
{
    return weak_visible(dom, Carrier::point(from), closed_unit(), Carrier::segment(poly.edge_start(e), poly.edge_end(e)),
                        closed_unit());
}

Point grid_point(std::mt19937_64& rng, int range, int den)
{
    return Point(ratio(static_cast<long>(rng() % static_cast<uint64_t>(range * den)), den),
                 ratio(static_cast<long>(rng() % static_cast<uint64_t>(range * den)), den));
}

}  // namespace

TEST_CASE("ray hits")
{
    Instance sq = fixture("fix_sq");
    CHECK(ray_first_boundary_hit(sq.polygon, Point(1, 1), Point(2, 2)).point == Point(4, 4));
    BoundaryPoint h = ray_first_boundary_hit(sq.polygon, Point(1, 1), Point(3, 1));
    CHECK(h.point == Point(4, 1));
    CHECK(h.edge == 1);

    Instance l = fixture("fix_l");
    BoundaryPoint r = ray_first_boundary_hit(l.polygon, l.source, Point(3, 1));
    CHECK(r.point == Point(Scalar(4), Scalar(6, 5)));
    CHECK(r.edge == 1);

    Instance z = fixture("fix_z");
    // eave extensions
    CHECK(ray_first_boundary_hit(z.polygon, Point(6, 4), Point(4, 3)).point == Point(0, 1));
    CHECK(ray_first_boundary_hit(z.polygon, Point(4, 3), Point(6, 4)).point == Point(10, 6));
    // a ray that leaves through the through point
    CHECK_THROWS_AS(ray_first_boundary_hit(l.polygon, Point(Scalar(7, 2), Scalar(1, 2)), Point(3, 1)), NoHit);
}

TEST_CASE("visibility polygon fixtures")
{
    Instance sq = fixture("fix_sq");
    VisibilityRegion v = visibility_polygon(sq.polygon, Point(1, 1));
    CHECK(ring_area2(v.ring) == sq.polygon.signed_area2());

    Instance l = fixture("fix_l");
    VisDomain dl(l.polygon);
    CHECK(on_edge(dl, l.polygon, 1, l.source) == IntervalSet(Interval::closed(0, Scalar(3, 10))));

    Instance z = fixture("fix_z");
    VisDomain dz(z.polygon);
    // top edge (6,4)->(0,4): parameter 1/12 is x = 11/2, seen past (4,3) by a grazing sightline
    IntervalSet top = on_edge(dz, z.polygon, 6, z.source);
    CHECK(top == IntervalSet(Interval::closed(Scalar(1, 12), 1)));
    IntervalSet bottom = on_edge(dz, z.polygon, 2, z.source);
    CHECK(bottom.intersected(Interval::open(0, 1)).empty());
}

TEST_CASE("visibility polygon agrees with point sampling and weak visibility")
{
    std::mt19937_64 rng(23);
    int checked = 0;
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        Instance inst = gen_random_simple(4 + static_cast<int>(seed % 9), seed);
        const Polygon& poly = inst.polygon;
        VisDomain dom(poly);
        VisibilityRegion vr = visibility_polygon(poly, inst.source);
        // boundary part
        for (int e = 0; e < poly.size(); ++e) {
            IntervalSet wv = on_edge(dom, poly, e, inst.source);
            for (auto& part : wv.parts()) {
                Point m = lerp(poly.edge_start(e), poly.edge_end(e), part.interior_point());
                CHECK(ring_contains(vr.ring, m));
            }
            IntervalSet hidden = closed_unit().minus(wv);
            for (auto& part : hidden.parts()) {
                Point m = lerp(poly.edge_start(e), poly.edge_end(e), part.interior_point());
                CHECK(!ring_contains(vr.ring, m));
            }
        }
        // interior samples
        for (int k = 0; k < 30; ++k) {
            Point x = grid_point(rng, 100, 7);
            if (locate(poly, x).kind != LocationKind::Inside)
                continue;
            CHECK(ring_contains(vr.ring, x) == dom.segment_in_closure(inst.source, x));
            ++checked;
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("visibility is symmetric on sampled pairs")
{
    std::mt19937_64 rng(3);
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        Instance inst = gen_random_simple(10, seed);
        VisDomain dom(inst.polygon);
        std::vector<Point> pts{inst.source, inst.target};
        for (int i = 0; i < inst.polygon.size(); ++i)
            pts.push_back(inst.polygon[i]);
        for (int k = 0; k < 20; ++k) {
            Point x = grid_point(rng, 100, 2);
            if (locate(inst.polygon, x).in_closure())
                pts.push_back(x);
        }
        for (auto& a : pts)
            for (auto& b : pts)
                if (a != b)
                    CHECK(dom.segment_in_closure(a, b) == dom.segment_in_closure(b, a));
    }
}

TEST_CASE("weak visibility examples")
{
    Instance sq = fixture("fix_sq");
    VisDomain ds(sq.polygon);
    // bottom edge sees the open top edge
    IntervalSet top = weak_visible(ds, Carrier::edge(sq.polygon, 0), open_unit(), Carrier::edge(sq.polygon, 2), open_unit());
    CHECK(top == open_unit());
    // nothing along the same edge
    CHECK(weak_visible(ds, Carrier::edge(sq.polygon, 0), IntervalSet(Interval::open(0, Scalar(1, 2))),
                       Carrier::edge(sq.polygon, 0), IntervalSet(Interval::open(Scalar(1, 2), 1)))
              .empty());

    Instance l = fixture("fix_l");
    VisDomain dl(l.polygon);
    IntervalSet src(Interval::open(0, Scalar(3, 10)));
    IntervalSet topl = weak_visible(dl, Carrier::edge(l.polygon, 1), src, Carrier::edge(l.polygon, 2), open_unit());
    CHECK(!topl.empty());
    CHECK(topl == open_unit());
}

TEST_CASE("weak visibility witnesses, completeness and monotonicity")
{
    std::mt19937_64 rng(77);
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        Instance inst = gen_random_simple(5 + static_cast<int>(seed % 6), seed);
        const Polygon& poly = inst.polygon;
        VisDomain dom(poly);
        int n = poly.size();
        int es = static_cast<int>(rng() % static_cast<uint64_t>(n));
        int et = static_cast<int>(rng() % static_cast<uint64_t>(n));
        Scalar a = ratio(static_cast<long>(rng() % 8), 8);
        Scalar b = a + ratio(static_cast<long>(1 + rng() % 4), 8);
        if (b > 1)
            b = 1;
        IntervalSet small(Interval::open(a, b));
        Carrier S = Carrier::edge(poly, es), T = Carrier::edge(poly, et);
        IntervalSet res = weak_visible(dom, S, small, T, open_unit());
        IntervalSet big = weak_visible(dom, S, open_unit(), T, open_unit());
        CHECK(big.covers(res));
        if (!big.covers(res))
            MESSAGE(serialize_instance(inst) << " es=" << es << " et=" << et << " small=" << small.str() << " res=" << res.str() << " big=" << big.str());
        for (auto& part : res.parts()) {
            Scalar mid = part.interior_point();
            auto w = witness_on(dom, T.end_at(mid), S, small);
            REQUIRE(w.has_value());
            CHECK(small.contains(*w));
            CHECK(dom.admissible(S.end_at(*w), T.end_at(mid)));
        }
        // dense sampling never finds a visible point outside the result
        for (int i = 1; i < 24; ++i) {
            Scalar mu = ratio(i, 24);
            if (res.contains(mu))
                continue;
            for (int j = 0; j <= 16; ++j) {
                Scalar lam = a + (b - a) * ratio(j, 16);
                if (!small.contains(lam))
                    continue;
                CHECK(!dom.admissible(S.end_at(lam), T.end_at(mu)));
            }
        }
    }
}

TEST_CASE("serial and parallel weak visibility agree")
{
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Instance inst = gen_random_simple(10, seed);
        VisDomain dom(inst.polygon);
        for (int e = 0; e < inst.polygon.size(); e += 3)
            for (int f = 0; f < inst.polygon.size(); ++f) {
                Carrier S = Carrier::edge(inst.polygon, e), T = Carrier::edge(inst.polygon, f);
                CHECK(weak_visible(dom, S, open_unit(), T, open_unit(), Exec::Serial) ==
                      weak_visible(dom, S, open_unit(), T, open_unit(), Exec::Parallel));
            }
    }
}

TEST_CASE("tangents to a chain")
{
    Instance l = fixture("fix_l");
    std::vector<Point> chain{l.source, Point(3, 1), l.target};
    TangentPair tp = tangents_to_chain(Point(4, 1), chain, l.polygon);
    REQUIRE(tp.left);
    REQUIRE(tp.right);
    CHECK(tp.left->touch == l.target);
    CHECK(tp.right->touch == l.source);
    CHECK(tp.left->inside);
    CHECK(tp.right->inside);

    Instance c = gen_convex(8, 2);
    TangentPair tc = tangents_to_chain(c.polygon[3], {c.source, c.target}, c.polygon);
    bool touches_end = (tc.left && (tc.left->index == 0 || tc.left->index == 1)) ||
                       (tc.right && (tc.right->index == 0 || tc.right->index == 1));
    CHECK(touches_end);

    CHECK_THROWS_AS(tangents_to_chain(Point(3, 1), chain, l.polygon), NoTangent);
    CHECK_THROWS_AS(tangents_to_chain(midpoint(l.source, Point(3, 1)), chain, l.polygon), NoTangent);
}
