#include "geom.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace rp {

Point::Point(Scalar x, Scalar y) : x_(std::move(x)), y_(std::move(y))
{
    x_.canonicalize();
    y_.canonicalize();
    fx_ = x_.get_d();
    fy_ = y_.get_d();
}

bool Point::operator<(const Point& o) const
{
    int c = cmp(x_, o.x_);
    if (c != 0)
        return c < 0;
    return y_ < o.y_;
}

int orient_sign(const Point& p, const Point& q, const Point& r)
{
    double ax = q.fx() - p.fx(), ay = q.fy() - p.fy();
    double bx = r.fx() - p.fx(), by = r.fy() - p.fy();
    double det = ax * by - ay * bx;
    double m = std::max({std::fabs(p.fx()), std::fabs(p.fy()), std::fabs(q.fx()),
                         std::fabs(q.fy()), std::fabs(r.fx()), std::fabs(r.fy())});
    // inputs are rounded once from exact values; 2e-14 m^2 covers that plus
    // the arithmetic above with room to spare
    double bound = 2e-14 * m * m;
    if (det > bound)
        return 1;
    if (det < -bound)
        return -1;
    if (m == 0.0)
        return 0;
    Scalar l = (q.x() - p.x()) * (r.y() - p.y());
    Scalar rr = (q.y() - p.y()) * (r.x() - p.x());
    int c = cmp(l, rr);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

Orientation orientation(const Point& p, const Point& q, const Point& r)
{
    return static_cast<Orientation>(orient_sign(p, q, r));
}

const char* to_string(Orientation o)
{
    switch (o) {
    case Orientation::Left: return "L";
    case Orientation::Right: return "R";
    default: return "C";
    }
}

Scalar cross(const Point& o, const Point& a, const Point& b)
{
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

Scalar dot(const Point& o, const Point& a, const Point& b)
{
    return (a.x() - o.x()) * (b.x() - o.x()) + (a.y() - o.y()) * (b.y() - o.y());
}

Scalar dist2(const Point& a, const Point& b)
{
    Scalar dx = a.x() - b.x(), dy = a.y() - b.y();
    return dx * dx + dy * dy;
}

double length(const Point& a, const Point& b)
{
    return std::hypot(a.fx() - b.fx(), a.fy() - b.fy());
}

Point lerp(const Point& a, const Point& b, const Scalar& t)
{
    if (t == 0)
        return a;
    if (t == 1)
        return b;
    return Point(a.x() + t * (b.x() - a.x()), a.y() + t * (b.y() - a.y()));
}

Point midpoint(const Point& a, const Point& b)
{
    return Point((a.x() + b.x()) / 2, (a.y() + b.y()) / 2);
}

static bool in_box(const Point& p, const Point& a, const Point& b)
{
    const Scalar& lx = a.x() < b.x() ? a.x() : b.x();
    const Scalar& hx = a.x() < b.x() ? b.x() : a.x();
    const Scalar& ly = a.y() < b.y() ? a.y() : b.y();
    const Scalar& hy = a.y() < b.y() ? b.y() : a.y();
    return lx <= p.x() && p.x() <= hx && ly <= p.y() && p.y() <= hy;
}

bool on_segment(const Point& p, const Point& a, const Point& b)
{
    if (a == b)
        return p == a;
    return orient_sign(a, b, p) == 0 && in_box(p, a, b);
}

bool strictly_inside_segment(const Point& p, const Point& a, const Point& b)
{
    return p != a && p != b && on_segment(p, a, b);
}

Scalar param_on(const Point& p, const Point& a, const Point& b)
{
    if (a.x() != b.x())
        return (p.x() - a.x()) / (b.x() - a.x());
    return (p.y() - a.y()) / (b.y() - a.y());
}

bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d)
{
    int o1 = orient_sign(a, b, c), o2 = orient_sign(a, b, d);
    if (o1 == 0 || o2 == 0 || o1 == o2)
        return false;
    int o3 = orient_sign(c, d, a), o4 = orient_sign(c, d, b);
    return o3 != 0 && o4 != 0 && o3 != o4;
}

bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d)
{
    // bounding boxes first, in floating point with slack
    const double eps = 1e-9;
    auto lo = [](double u, double v) { return std::min(u, v); };
    auto hi = [](double u, double v) { return std::max(u, v); };
    double m = 1.0 + std::max({std::fabs(a.fx()), std::fabs(a.fy()), std::fabs(b.fx()),
                               std::fabs(b.fy()), std::fabs(c.fx()), std::fabs(c.fy()),
                               std::fabs(d.fx()), std::fabs(d.fy())});
    double slack = eps * m;
    if (hi(a.fx(), b.fx()) + slack < lo(c.fx(), d.fx()) || hi(c.fx(), d.fx()) + slack < lo(a.fx(), b.fx()) ||
        hi(a.fy(), b.fy()) + slack < lo(c.fy(), d.fy()) || hi(c.fy(), d.fy()) + slack < lo(a.fy(), b.fy()))
        return false;
    int o1 = orient_sign(a, b, c), o2 = orient_sign(a, b, d);
    int o3 = orient_sign(c, d, a), o4 = orient_sign(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0)
        return true;
    if (o1 == 0 && on_segment(c, a, b))
        return true;
    if (o2 == 0 && on_segment(d, a, b))
        return true;
    if (o3 == 0 && on_segment(a, c, d))
        return true;
    if (o4 == 0 && on_segment(b, c, d))
        return true;
    return false;
}

IntersectionResult segment_intersection(const Segment& s1, const Segment& s2)
{
    IntersectionResult res;
    const Point &a = s1.a, &b = s1.b, &c = s2.a, &d = s2.b;
    int o1 = orient_sign(a, b, c), o2 = orient_sign(a, b, d);
    int o3 = orient_sign(c, d, a), o4 = orient_sign(c, d, b);

    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0 && !(s1.degenerate() && s2.degenerate())) {
        // collinear: project on the longer direction
        const Point& p = s1.degenerate() ? c : a;
        const Point& q = s1.degenerate() ? d : b;
        auto t = [&](const Point& x) { return param_on(x, p, q); };
        Scalar ta = t(a), tb = t(b), tc = t(c), td = t(d);
        auto mn = [](const Scalar& u, const Scalar& v) { return u < v ? u : v; };
        auto mx = [](const Scalar& u, const Scalar& v) { return u < v ? v : u; };
        Scalar lo = mx(mn(ta, tb), mn(tc, td)), hi = mn(mx(ta, tb), mx(tc, td));
        if (lo > hi)
            return res;
        Point pl = lerp(p, q, lo), ph = lerp(p, q, hi);
        if (lo == hi) {
            res.kind = IntersectionKind::Touch;
            res.point = pl;
        } else {
            res.kind = IntersectionKind::Overlap;
            res.overlap = {pl, ph};
        }
        if (on_segment(a, c, d)) res.touching |= 1u;
        if (on_segment(b, c, d)) res.touching |= 2u;
        if (on_segment(c, a, b)) res.touching |= 4u;
        if (on_segment(d, a, b)) res.touching |= 8u;
        return res;
    }
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        res.kind = IntersectionKind::ProperPoint;
        res.point = *line_intersection(a, b, c, d);
        return res;
    }
    if (o3 == 0 && on_segment(a, c, d)) { res.touching |= 1u; res.point = a; }
    if (o4 == 0 && on_segment(b, c, d)) { res.touching |= 2u; res.point = b; }
    if (o1 == 0 && on_segment(c, a, b)) { res.touching |= 4u; res.point = c; }
    if (o2 == 0 && on_segment(d, a, b)) { res.touching |= 8u; res.point = d; }
    if (res.touching)
        res.kind = IntersectionKind::Touch;
    return res;
}

std::optional<Scalar> line_param(const Point& a, const Point& b, const Point& p, const Point& q)
{
    // a + t(b-a) on line(p,q):  cross(q-p, a-p) + t cross(q-p, b-a) = 0
    Scalar qx = q.x() - p.x(), qy = q.y() - p.y();
    Scalar den = qx * (b.y() - a.y()) - qy * (b.x() - a.x());
    if (den == 0)
        return std::nullopt;
    Scalar num = qx * (a.y() - p.y()) - qy * (a.x() - p.x());
    Scalar t = -num / den;
    return t;
}

std::optional<Point> line_intersection(const Point& a, const Point& b, const Point& p, const Point& q)
{
    auto t = line_param(a, b, p, q);
    if (!t)
        return std::nullopt;
    return lerp(a, b, *t);
}

Scalar parse_scalar(const std::string& raw)
{
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s.empty())
        throw std::invalid_argument("empty number");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Scalar num = parse_scalar(s.substr(0, slash));
        Scalar den = parse_scalar(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + raw + "'");
        Scalar v = num / den;
        v.canonicalize();
        return v;
    }
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long scale = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            seen_digit = true;
            if (seen_dot)
                --scale;
        } else if (ch == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!seen_digit)
        throw std::invalid_argument("not a number: '" + raw + "'");
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E')
            throw std::invalid_argument("not a number: '" + raw + "'");
        std::string ex = s.substr(i + 1);
        if (ex.empty())
            throw std::invalid_argument("bad exponent in '" + raw + "'");
        size_t used = 0;
        long e = std::stol(ex, &used);
        if (used != ex.size())
            throw std::invalid_argument("bad exponent in '" + raw + "'");
        scale += e;
    }
    mpz_class n(digits, 10);
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Scalar v = scale >= 0 ? Scalar(n * p10) : Scalar(n, p10);
    v.canonicalize();
    return neg ? Scalar(-v) : v;
}

std::string format_scalar(const Scalar& v)
{
    Scalar c = v;
    c.canonicalize();
    return c.get_str();
}

std::string decimal_string(const Scalar& v, int digits)
{
    mpf_class f(v, 512);
    char* buf = nullptr;
    gmp_asprintf(&buf, "%.*Fg", digits, f.get_mpf_t());
    std::string out(buf);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(buf, out.size() + 1);
    return out;
}

double to_double(const Scalar& v) { return v.get_d(); }

std::ostream& operator<<(std::ostream& os, const Point& p)
{
    return os << "(" << format_scalar(p.x()) << ", " << format_scalar(p.y()) << ")";
}

}  // namespace rp
