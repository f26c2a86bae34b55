#include <doctest.h>

#include "geom.h"

#include <random>

using namespace rp;

static Point P(const char* x, const char* y) { return Point(parse_scalar(x), parse_scalar(y)); }

TEST_CASE("orientation examples")
{
    CHECK(orientation(Point(0, 0), Point(1, 0), Point(0, 1)) == Orientation::Left);
    CHECK(orientation(Point(0, 0), Point(1, 0), Point(2, 0)) == Orientation::Collinear);
    CHECK(orientation(Point(0, 0), Point(0, 1), Point(1, 0)) == Orientation::Right);
}

TEST_CASE("orientation is antisymmetric and cyclic on random rationals")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
    auto rnd = [&] { return Point(Scalar(num(rng), den(rng)), Scalar(num(rng), den(rng))); };
    for (int i = 0; i < 1000; ++i) {
        Point p = rnd(), q = rnd(), r = rnd();
        CHECK(orientation(p, q, r) == flip(orientation(p, r, q)));
        CHECK(orientation(p, q, r) == orientation(q, r, p));
    }
}

TEST_CASE("orientation stays exact near degeneracy")
{
    mpz_class two64 = mpz_class(1) << 64;
    Scalar eps(1, two64);
    Point a(0, 0), b(1, 1);
    CHECK(orientation(a, b, Point(Scalar(2), Scalar(2) + eps)) == Orientation::Left);
    CHECK(orientation(a, b, Point(Scalar(2), Scalar(2) - eps)) == Orientation::Right);
    CHECK(orientation(a, b, Point(Scalar(2), Scalar(2))) == Orientation::Collinear);
    // large coordinates with a tiny offset
    Scalar big = Scalar(mpz_class(1) << 80);
    CHECK(orientation(Point(big, big), Point(big + 1, big + 1), Point(big + 2, big + 2 + eps)) == Orientation::Left);
}

TEST_CASE("segment intersection classification")
{
    auto r = segment_intersection({Point(0, 0), Point(2, 2)}, {Point(0, 2), Point(2, 0)});
    CHECK(r.kind == IntersectionKind::ProperPoint);
    CHECK(r.point == Point(1, 1));
    CHECK(segment_intersection({Point(0, 0), Point(1, 0)}, {Point(2, 0), Point(3, 0)}).kind == IntersectionKind::None);
    r = segment_intersection({Point(0, 0), Point(2, 0)}, {Point(1, 0), Point(3, 0)});
    REQUIRE(r.kind == IntersectionKind::Overlap);
    CHECK(r.overlap.a == Point(1, 0));
    CHECK(r.overlap.b == Point(2, 0));
    r = segment_intersection({Point(0, 0), Point(2, 0)}, {Point(1, 0), Point(1, 5)});
    CHECK(r.kind == IntersectionKind::Touch);
    CHECK(r.point == Point(1, 0));
}

TEST_CASE("segment intersection is symmetric")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> c(0, 4);
    for (int i = 0; i < 2000; ++i) {
        Segment s1{Point(c(rng), c(rng)), Point(c(rng), c(rng))};
        Segment s2{Point(c(rng), c(rng)), Point(c(rng), c(rng))};
        if (s1.degenerate() || s2.degenerate())
            continue;
        auto a = segment_intersection(s1, s2), b = segment_intersection(s2, s1);
        CHECK(a.kind == b.kind);
        if (a.kind == IntersectionKind::ProperPoint || a.kind == IntersectionKind::Touch)
            CHECK(a.point == b.point);
        if (a.kind == IntersectionKind::Overlap) {
            bool same = (a.overlap.a == b.overlap.a && a.overlap.b == b.overlap.b) ||
                        (a.overlap.a == b.overlap.b && a.overlap.b == b.overlap.a);
            CHECK(same);
        }
        CHECK(segments_meet(s1.a, s1.b, s2.a, s2.b) == (a.kind != IntersectionKind::None));
    }
}

TEST_CASE("exact decimal parsing")
{
    CHECK(parse_scalar("0.5") == Scalar(1, 2));
    CHECK(parse_scalar("-1.25") == Scalar(-5, 4));
    CHECK(parse_scalar("1/3") == Scalar(1, 3));
    CHECK(parse_scalar("2/-4") == Scalar(-1, 2));
    CHECK(parse_scalar("3e2") == Scalar(300));
    CHECK(parse_scalar("1.5E-1") == Scalar(3, 20));
    CHECK(parse_scalar("0.1") + parse_scalar("0.2") == parse_scalar("0.3"));
    CHECK_THROWS(parse_scalar("abc"));
    CHECK_THROWS(parse_scalar("1/0"));
    CHECK(format_scalar(Scalar(6, 4)) == "3/2");
    CHECK(P("1/3", "7").x() == Scalar(1, 3));
}
