#include <doctest.h>

#include "generators.h"
#include "instance.h"
#include "intervals.h"
#include "support.h"

#include <random>

using namespace rp;
using rp::test::fixture;

static bool has_issue(const ValidationReport& r, const std::string& code)
{
    for (auto& i : r.issues)
        if (i.code == code)
            return true;
    return false;
}

TEST_CASE("validate examples")
{
    CHECK(validate(Polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}})).ok());
    CHECK(has_issue(validate(Polygon({{0, 0}, {0, 4}, {4, 4}, {4, 0}})), "orientation"));
    CHECK(has_issue(validate(Polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}})), "self-intersection"));
    CHECK(has_issue(validate(Polygon({{0, 0}, {4, 0}, {4, 4}, {4, 0}, {0, 4}})), "repeated-vertex"));
    CHECK(has_issue(validate(Polygon({{0, 0}, {4, 0}})), "too-few-vertices"));
}

TEST_CASE("vertex kinds of the L fixture")
{
    Instance l = fixture("fix_l");
    const Polygon& p = l.polygon;
    CHECK(p.size() == 6);
    CHECK(p.reflex(4));
    for (int i : {0, 1, 2, 3, 5})
        CHECK(p.kind(i) == VertexKind::Convex);
    CHECK(p.blockers() == std::vector<int>{4});
}

TEST_CASE("locate and boundary points")
{
    Polygon sq({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    CHECK(locate(sq, Point(1, 1)).kind == LocationKind::Inside);
    CHECK(locate(sq, Point(5, 1)).kind == LocationKind::Outside);
    Location on = locate(sq, Point(4, 1));
    CHECK(on.kind == LocationKind::OnEdge);
    CHECK(on.index == 1);
    CHECK(on.lambda == Scalar(1, 4));
    CHECK(locate(sq, Point(4, 4)).kind == LocationKind::OnVertex);

    BoundaryPoint b = boundary_point(sq, 0, Scalar(1));
    CHECK(b.edge == 1);
    CHECK(b.lambda == 0);
    CHECK(b.point == Point(4, 0));
    BoundaryPoint c = boundary_point_of(sq, Point(2, 4));
    CHECK(c.edge == 2);
    CHECK(c.lambda == Scalar(1, 2));
}

TEST_CASE("interval algebra examples")
{
    auto q = [](long a, long b) { return ratio(a, b); };
    IntervalSet u = interval_union({Interval::closed(q(2, 10), q(5, 10)), Interval::closed(q(4, 10), q(9, 10))});
    CHECK(u == IntervalSet(Interval::closed(q(2, 10), q(9, 10))));

    IntervalSet d = interval_subtract(Interval::closed(q(2, 10), q(9, 10)), Interval::closed(q(3, 10), q(6, 10)));
    REQUIRE(d.size() == 2);
    CHECK(d.parts()[0] == Interval{q(2, 10), q(3, 10), true, false});
    CHECK(d.parts()[1] == Interval{q(6, 10), q(9, 10), false, true});

    IntervalSet o = interval_union({Interval::open(0, q(1, 2)), Interval::open(q(1, 2), 1)});
    CHECK(o.size() == 2);
    CHECK(!o.contains(q(1, 2)));
    // closing the gap merges
    o.add(Interval::point(q(1, 2)));
    CHECK(o == IntervalSet(Interval::open(0, 1)));
}

TEST_CASE("interval algebra properties on random sets")
{
    std::mt19937_64 rng(5);
    auto rnd_iv = [&] {
        long a = static_cast<long>(rng() % 40), b = static_cast<long>(rng() % 40);
        if (a > b)
            std::swap(a, b);
        return Interval{ratio(a, 4), ratio(b, 4), rng() % 2 == 0, rng() % 2 == 0};
    };
    for (int round = 0; round < 300; ++round) {
        IntervalSet a, b;
        for (int i = 0; i < 4; ++i) {
            a.add(rnd_iv());
            b.add(rnd_iv());
        }
        for (const IntervalSet* s : {&a, &b}) {
            auto& ps = s->parts();
            for (size_t i = 0; i + 1 < ps.size(); ++i) {
                CHECK(ps[i].hi <= ps[i + 1].lo);
                // a shared endpoint must be excluded by both
                if (ps[i].hi == ps[i + 1].lo)
                    CHECK((!ps[i].hi_closed && !ps[i + 1].lo_closed));
            }
        }
        IntervalSet u = a.united(b), i = a.intersected(b), d = a.minus(b);
        CHECK(u.measure() + i.measure() == a.measure() + b.measure());
        CHECK(d.measure() + i.measure() == a.measure());
        CHECK(d.intersected(b).empty());
        CHECK(u.covers(a));
        CHECK(u.covers(b));
        for (long k = 0; k <= 40; ++k) {
            Scalar v = ratio(k, 4);
            CHECK(u.contains(v) == (a.contains(v) || b.contains(v)));
            CHECK(d.contains(v) == (a.contains(v) && !b.contains(v)));
        }
    }
}

TEST_CASE("instance parsing")
{
    Instance sq = fixture("fix_sq");
    CHECK(sq.polygon.size() == 4);
    CHECK(sq.name == "FIX-SQ");

    Instance l = fixture("fix_l");
    CHECK(l.source == Point(Scalar(1, 2), Scalar(1, 2)));

    const char* third = R"({"vertices": [[0,0],[1,0],[1,1],["1/3",1]], "source": ["1/2","1/2"], "target": [0.75, "0.5"]})";
    Instance t = parse_instance(third);
    CHECK(t.polygon[3].x() == Scalar(1, 3));
    CHECK(t.target.x() == Scalar(3, 4));
    std::string text = serialize_instance(t);
    CHECK(text.find("\"1/3\"") != std::string::npos);
    CHECK(serialize_instance(parse_instance(text)) == text);

    CHECK_THROWS_AS(parse_instance(R"({"vertices": [[0,0],[1,0],[1,0],[0,1]], "source": [0.1,0.1], "target": [0.2,0.2]})"),
                    InvalidInstance);
    CHECK_THROWS_AS(parse_instance(R"({"vertices": [[0,0],[1,0],[0,1]], "source": [5,5], "target": [0.2,0.2]})"),
                    InvalidInstance);
    CHECK_THROWS_AS(parse_instance(R"({"vertices": [[0,0],[1,0],[0,1]], "source": [0.1,0.1], "target": [0.1,0.1]})"),
                    InvalidInstance);
    try {
        parse_instance("{\n  \"vertices\": [[0,0],\n  [1,0]]],\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column > 0);
    }
}

TEST_CASE("serialization round-trips generated instances")
{
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Instance inst = gen_random_simple(8 + static_cast<int>(seed % 5), seed);
        std::string text = serialize_instance(inst);
        Instance back = parse_instance(text);
        CHECK(back.polygon.vertices() == inst.polygon.vertices());
        CHECK(back.source == inst.source);
        CHECK(back.target == inst.target);
        CHECK(serialize_instance(back) == text);
    }
}
