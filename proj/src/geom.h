#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rp {

using Scalar = mpq_class;

// canonical n/d; mpq_class(n, d) alone does not reduce
inline Scalar ratio(long n, long d)
{
    Scalar v(n, d);
    v.canonicalize();
    return v;
}

// Exact point. The double copies are only used to short-circuit predicates
// whose sign is already certain in floating point.
class Point {
public:
    Point() = default;
    Point(Scalar x, Scalar y);
    Point(long x, long y) : Point(Scalar(x), Scalar(y)) {}

    const Scalar& x() const { return x_; }
    const Scalar& y() const { return y_; }
    double fx() const { return fx_; }
    double fy() const { return fy_; }

    bool operator==(const Point& o) const { return x_ == o.x_ && y_ == o.y_; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    // lexicographic, for use as map keys
    bool operator<(const Point& o) const;

private:
    Scalar x_, y_;
    double fx_ = 0.0, fy_ = 0.0;
};

struct Segment {
    Point a, b;
    bool degenerate() const { return a == b; }
};

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

Orientation orientation(const Point& p, const Point& q, const Point& r);
int orient_sign(const Point& p, const Point& q, const Point& r);
inline Orientation flip(Orientation o) { return static_cast<Orientation>(-static_cast<int>(o)); }
const char* to_string(Orientation o);

Scalar cross(const Point& o, const Point& a, const Point& b);  // (a-o) x (b-o)
Scalar dot(const Point& o, const Point& a, const Point& b);    // (a-o) . (b-o)
Scalar dist2(const Point& a, const Point& b);
double length(const Point& a, const Point& b);

// (1-t)a + tb
Point lerp(const Point& a, const Point& b, const Scalar& t);
Point midpoint(const Point& a, const Point& b);

// p on the closed segment ab (ab may be degenerate)
bool on_segment(const Point& p, const Point& a, const Point& b);
// p strictly between a and b on the segment
bool strictly_inside_segment(const Point& p, const Point& a, const Point& b);
// parameter t with p = a + t(b-a); requires p on line(a,b), a != b
Scalar param_on(const Point& p, const Point& a, const Point& b);

enum class IntersectionKind { None, ProperPoint, Touch, Overlap };

struct IntersectionResult {
    IntersectionKind kind = IntersectionKind::None;
    Point point;           // ProperPoint / Touch
    Segment overlap;       // Overlap
    // Touch: which endpoints lie on the other segment (bit0: s1.a, bit1: s1.b,
    // bit2: s2.a, bit3: s2.b)
    unsigned touching = 0;
};

IntersectionResult segment_intersection(const Segment& s1, const Segment& s2);
// cheap yes/no version of segment_intersection(...).kind != None
bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d);
// interiors cross transversally at a single point
bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d);

// Parameter t along a->b where line(p,q) meets it, if the lines are not parallel.
std::optional<Scalar> line_param(const Point& a, const Point& b, const Point& p, const Point& q);
std::optional<Point> line_intersection(const Point& a, const Point& b, const Point& p, const Point& q);

// decimal / integer / "p/q" text to exact rational
Scalar parse_scalar(const std::string& text);
std::string format_scalar(const Scalar& v);    // "p/q" or integer, canonical
std::string decimal_string(const Scalar& v, int digits = 20);
double to_double(const Scalar& v);

std::ostream& operator<<(std::ostream& os, const Point& p);

}  // namespace rp
