#include "visibility.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>

namespace rp {

namespace {

std::atomic<int> g_exec{static_cast<int>(Exec::Serial)};

struct Box {
    double x0, y0, x1, y1;
};

Box box_of(const Point& a, const Point& b)
{
    double m = 1e-9 * (1.0 + std::max({std::fabs(a.fx()), std::fabs(a.fy()), std::fabs(b.fx()), std::fabs(b.fy())}));
    return {std::min(a.fx(), b.fx()) - m, std::min(a.fy(), b.fy()) - m, std::max(a.fx(), b.fx()) + m,
            std::max(a.fy(), b.fy()) + m};
}

bool box_hits(const Box& b, const std::array<double, 4>& e)
{
    return !(e[2] < b.x0 || e[0] > b.x1 || e[3] < b.y0 || e[1] > b.y1);
}

bool box_holds(const Box& b, const Point& p)
{
    return p.fx() >= b.x0 && p.fx() <= b.x1 && p.fy() >= b.y0 && p.fy() <= b.y1;
}

// direction from vertex i towards r lies in the closed interior cone at i
bool in_cone(const Polygon& poly, int i, const Point& r)
{
    const Point& u = poly[poly.prev(i)];
    const Point& v = poly[i];
    const Point& w = poly[poly.next(i)];
    int s1 = orient_sign(v, w, r);
    int s2 = orient_sign(u, v, r);
    switch (poly.kind(i)) {
    case VertexKind::Convex: return s1 >= 0 && s2 >= 0;
    case VertexKind::Reflex: return s1 >= 0 || s2 >= 0;
    default: return s1 >= 0;
    }
}

}  // namespace

void set_default_exec(Exec e) { g_exec = static_cast<int>(e); }
Exec default_exec() { return static_cast<Exec>(g_exec.load()); }

VisDomain::VisDomain(const Polygon& poly) : poly_(&poly) { init(); }

VisDomain::VisDomain(const Polygon& poly, std::vector<Segment> walls) : poly_(&poly), walls_(std::move(walls))
{
    init();
}

void VisDomain::init()
{
    std::set<Point> seen;
    for (int i : poly_->blockers())
        if (seen.insert((*poly_)[i]).second)
            blockers_.push_back((*poly_)[i]);
    for (auto& w : walls_) {
        if (seen.insert(w.a).second)
            blockers_.push_back(w.a);
        if (seen.insert(w.b).second)
            blockers_.push_back(w.b);
    }
    for (size_t i = 0; i < blockers_.size(); ++i)
        for (size_t j = i + 1; j < blockers_.size(); ++j)
            lines_.push_back({blockers_[i], blockers_[j]});
}

bool VisDomain::segment_in_closure(const Point& a, const Point& b) const
{
    const Polygon& P = *poly_;
    Box bx = box_of(a, b);
    int n = P.size();
    for (int e = 0; e < n; ++e) {
        if (!box_hits(bx, P.edge_box(e)))
            continue;
        const Point& p = P.edge_start(e);
        const Point& q = P.edge_end(e);
        int o1 = orient_sign(a, b, p), o2 = orient_sign(a, b, q);
        int o3 = orient_sign(p, q, a), o4 = orient_sign(p, q, b);
        if (o1 * o2 < 0 && o3 * o4 < 0)
            return false;
        // vertex p on the segment
        if (o1 == 0 && box_holds(bx, p) && on_segment(p, a, b)) {
            if (p != a && !in_cone(P, e, a))
                return false;
            if (p != b && !in_cone(P, e, b))
                return false;
        }
        // an endpoint in the relative interior of edge e
        if (o3 == 0 && strictly_inside_segment(a, p, q) && o4 < 0)
            return false;
        if (o4 == 0 && strictly_inside_segment(b, p, q) && o3 < 0)
            return false;
    }
    return true;
}

bool VisDomain::clear_of_walls(const LinkEnd& x, const LinkEnd& y) const
{
    for (auto& w : walls_) {
        if (!segments_meet(x.p, y.p, w.a, w.b))
            continue;
        auto r = segment_intersection({x.p, y.p}, w);
        if (r.kind != IntersectionKind::Touch)
            return false;
        if ((r.point == x.p && x.may_touch_walls) || (r.point == y.p && y.may_touch_walls))
            continue;
        return false;
    }
    return true;
}

bool VisDomain::admissible(const LinkEnd& x, const LinkEnd& y) const
{
    if (x.p == y.p)
        return false;
    if (x.host >= 0 && orient_sign(poly_->edge_start(x.host), poly_->edge_end(x.host), y.p) <= 0)
        return false;
    if (y.host >= 0 && orient_sign(poly_->edge_start(y.host), poly_->edge_end(y.host), x.p) <= 0)
        return false;
    if (!walls_.empty() && !clear_of_walls(x, y))
        return false;
    return segment_in_closure(x.p, y.p);
}

IntervalSet open_unit() { return IntervalSet(Interval::open(0, 1)); }
IntervalSet closed_unit() { return IntervalSet(Interval::closed(0, 1)); }

namespace {

void push_unique_sorted(std::vector<Scalar>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// candidate parameters on S where the visible set from y can change
std::vector<Scalar> inner_breaks(const VisDomain& dom, const LinkEnd& y, const Carrier& S, const Interval& part)
{
    std::vector<Scalar> ts;
    auto add = [&](const Point& p, const Point& q) {
        if (p == q)
            return;
        auto t = line_param(S.a, S.b, p, q);
        if (t && part.lo <= *t && *t <= part.hi)
            ts.push_back(*t);
    };
    for (auto& k : dom.blockers())
        add(y.p, k);
    if (y.host >= 0)
        add(dom.polygon().edge_start(y.host), dom.polygon().edge_end(y.host));
    for (auto& w : dom.walls())
        add(w.a, w.b);
    ts.push_back(part.lo);
    ts.push_back(part.hi);
    push_unique_sorted(ts);
    return ts;
}

}  // namespace

std::optional<Scalar> witness_on(const VisDomain& dom, const LinkEnd& y, const Carrier& S, const IntervalSet& source)
{
    for (auto& part : source.parts()) {
        if (S.degenerate()) {
            if (dom.admissible(S.end_at(0), y))
                return Scalar(0);
            continue;
        }
        Scalar mid = part.interior_point();
        if (part.contains(mid) && dom.admissible(S.end_at(mid), y))
            return mid;
        auto ts = inner_breaks(dom, y, S, part);
        for (size_t i = 0; i + 1 < ts.size(); ++i) {
            Scalar m = (ts[i] + ts[i + 1]) / 2;
            if (dom.admissible(S.end_at(m), y))
                return m;
        }
        for (auto& t : ts)
            if (part.contains(t) && dom.admissible(S.end_at(t), y))
                return t;
    }
    return std::nullopt;
}

IntervalSet visible_from_point(const VisDomain& dom, const LinkEnd& y, const Carrier& S, const IntervalSet& source)
{
    IntervalSet out;
    for (auto& part : source.parts()) {
        if (S.degenerate()) {
            if (dom.admissible(S.end_at(0), y))
                out.add(Interval::point(0));
            continue;
        }
        auto ts = inner_breaks(dom, y, S, part);
        for (size_t i = 0; i < ts.size(); ++i) {
            if (part.contains(ts[i]) && dom.admissible(S.end_at(ts[i]), y))
                out.add(Interval::point(ts[i]));
            if (i + 1 < ts.size()) {
                Scalar m = (ts[i] + ts[i + 1]) / 2;
                if (dom.admissible(S.end_at(m), y))
                    out.add(Interval::open(ts[i], ts[i + 1]));
            }
        }
    }
    return out;
}

namespace {

// sign of orientation of both segment ends against a line: can the line meet it?
bool line_meets(const Point& p, const Point& q, const Point& u, const Point& v)
{
    int a = orient_sign(p, q, u);
    if (a == 0)
        return true;
    int b = orient_sign(p, q, v);
    return a * b <= 0;
}

IntervalSet weak_visible_part(const VisDomain& dom, const Carrier& S, const Interval& spart, const Carrier& T,
                              const Interval& tpart, Exec exec)
{
    const Polygon& P = dom.polygon();
    IntervalSet single_source(spart);
    Point s0 = S.at(spart.lo), s1 = S.at(spart.hi);
    Point t0 = T.at(tpart.lo), t1 = T.at(tpart.hi);

    // quick rejections from the host-edge rules
    if (S.host >= 0) {
        const Point &hp = P.edge_start(S.host), &hq = P.edge_end(S.host);
        if (orient_sign(hp, hq, t0) <= 0 && orient_sign(hp, hq, t1) <= 0)
            return {};
    }
    if (T.host >= 0) {
        const Point &hp = P.edge_start(T.host), &hq = P.edge_end(T.host);
        if (orient_sign(hp, hq, s0) <= 0 && orient_sign(hp, hq, s1) <= 0)
            return {};
    }

    auto status = [&](const Scalar& mu) {
        return witness_on(dom, T.end_at(mu), S, single_source).has_value();
    };

    if (T.degenerate()) {
        IntervalSet out;
        if (tpart.contains(Scalar(0)) && status(Scalar(0)))
            out.add(Interval::point(0));
        return out;
    }

    // fixed points on S that act like blockers for the outer sweep
    std::vector<Point> anchors{s0};
    if (s1 != s0)
        anchors.push_back(s1);
    auto add_anchor_on_S = [&](const Point& p, const Point& q) {
        if (S.degenerate())
            return;
        auto t = line_param(S.a, S.b, p, q);
        if (t && spart.lo <= *t && *t <= spart.hi)
            anchors.push_back(S.at(*t));
    };
    if (T.host >= 0)
        add_anchor_on_S(P.edge_start(T.host), P.edge_end(T.host));
    for (auto& w : dom.walls())
        if (w.a != w.b)
            add_anchor_on_S(w.a, w.b);

    std::vector<Scalar> mus{tpart.lo, tpart.hi};
    auto consider = [&](const Point& p, const Point& q) {
        if (p == q)
            return;
        if (!line_meets(p, q, s0, s1) || !line_meets(p, q, t0, t1))
            return;
        auto mu = line_param(T.a, T.b, p, q);
        if (mu && tpart.lo <= *mu && *mu <= tpart.hi)
            mus.push_back(*mu);
    };
    for (auto& ln : dom.blocker_lines())
        consider(ln.p, ln.q);
    for (auto& k : dom.blockers())
        for (auto& a : anchors)
            consider(k, a);
    for (size_t i = 0; i < anchors.size(); ++i)
        for (size_t j = i + 1; j < anchors.size(); ++j)
            consider(anchors[i], anchors[j]);
    if (!S.degenerate())
        consider(S.a, S.b);
    for (auto& w : dom.walls())
        if (w.a != w.b)
            consider(w.a, w.b);
    push_unique_sorted(mus);

    // evaluation sites: each critical value and each open gap
    size_t m = mus.size();
    std::vector<Scalar> sites;
    sites.reserve(2 * m);
    for (size_t i = 0; i < m; ++i) {
        sites.push_back(mus[i]);
        if (i + 1 < m)
            sites.push_back((mus[i] + mus[i + 1]) / 2);
    }
    std::vector<char> ok(sites.size(), 0);
    long count = static_cast<long>(sites.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i) {
            size_t k = static_cast<size_t>(i);
            bool at_crit = (k % 2) == 0;
            if (at_crit && !tpart.contains(sites[k]))
                continue;
            ok[k] = status(sites[k]) ? 1 : 0;
        }
    } else {
        for (long i = 0; i < count; ++i) {
            size_t k = static_cast<size_t>(i);
            bool at_crit = (k % 2) == 0;
            if (at_crit && !tpart.contains(sites[k]))
                continue;
            ok[k] = status(sites[k]) ? 1 : 0;
        }
    }
    IntervalSet out;
    for (size_t i = 0; i < m; ++i) {
        if (ok[2 * i])
            out.add(Interval::point(mus[i]));
        if (i + 1 < m && ok[2 * i + 1])
            out.add(Interval::open(mus[i], mus[i + 1]));
    }
    return out;
}

}  // namespace

IntervalSet weak_visible(const VisDomain& dom, const Carrier& S, const IntervalSet& source, const Carrier& T,
                         const IntervalSet& range, Exec exec)
{
    IntervalSet out;
    for (auto& sp : source.parts())
        for (auto& tp : range.parts()) {
            IntervalSet rest = IntervalSet(tp).minus(out);
            for (auto& tq : rest.parts())
                out.unite(weak_visible_part(dom, S, sp, T, tq, exec));
        }
    return out;
}

IntervalSet weak_visible(const VisDomain& dom, const Carrier& S, const IntervalSet& source, const Carrier& T,
                         const IntervalSet& range)
{
    return weak_visible(dom, S, source, T, range, default_exec());
}

}  // namespace rp
