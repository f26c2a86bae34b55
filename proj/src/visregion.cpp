#include "visibility.h"

#include <algorithm>
#include <map>

namespace rp {

BoundaryPoint ray_first_boundary_hit(const Polygon& poly, const Point& origin, const Point& through,
                                     const std::vector<int>& skip_edges)
{
    if (origin == through)
        throw NoHit("ray direction is undefined");
    int n = poly.size();
    // parameters along origin->through where the ray meets the boundary
    std::vector<Scalar> ts;
    for (int e = 0; e < n; ++e) {
        if (std::find(skip_edges.begin(), skip_edges.end(), e) != skip_edges.end())
            continue;
        const Point &p = poly.edge_start(e), &q = poly.edge_end(e);
        int op = orient_sign(origin, through, p), oq = orient_sign(origin, through, q);
        if (op == 0 && oq == 0) {
            ts.push_back(param_on(p, origin, through));
            ts.push_back(param_on(q, origin, through));
            continue;
        }
        if (op * oq > 0)
            continue;
        if (auto t = line_param(origin, through, p, q))
            ts.push_back(*t);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    ts.erase(ts.begin(), std::upper_bound(ts.begin(), ts.end(), Scalar(1)));
    if (ts.empty())
        throw NoHit("ray meets no boundary beyond the through point");
    auto inside = [&](const Scalar& t) { return locate(poly, lerp(origin, through, t)).in_closure(); };
    if (!inside((Scalar(1) + ts.front()) / 2))
        throw NoHit("ray leaves the polygon at the through point");
    for (size_t i = 0; i < ts.size(); ++i) {
        bool leaves = i + 1 == ts.size() || !inside((ts[i] + ts[i + 1]) / 2);
        if (leaves)
            return boundary_point_of(poly, lerp(origin, through, ts[i]));
    }
    throw NoHit("unreachable");
}

namespace {

// exact angular order around f starting from direction d (counterclockwise)
struct AngleLess {
    Point f, d;
    int half(const Point& p) const
    {
        int c = orient_sign(f, d, p);
        if (c > 0)
            return 0;
        if (c < 0)
            return 1;
        return dot(f, d, p) > 0 ? 0 : 1;
    }
    bool same_direction(const Point& a, const Point& b) const
    {
        return half(a) == half(b) && orient_sign(f, a, b) == 0 && dot(f, a, b) > 0;
    }
    bool operator()(const Point& a, const Point& b) const
    {
        int ha = half(a), hb = half(b);
        if (ha != hb)
            return ha < hb;
        return orient_sign(f, a, b) > 0;
    }
};

}  // namespace

VisibilityRegion visibility_polygon(const Polygon& poly, const Point& from)
{
    VisDomain dom(poly);
    Location loc = locate(poly, from);
    if (!loc.in_closure())
        throw std::invalid_argument("visibility_polygon: point outside the polygon");
    int n = poly.size();

    struct Info {
        bool in = false, out = false;
    };
    std::map<Point, Info> pts;
    Point ref(from.x() + 1, from.y());
    if (loc.on_boundary()) {
        int e = loc.index;
        ref = loc.kind == LocationKind::OnVertex ? poly[poly.next(e)] : poly.edge_end(e);
    }
    AngleLess less{from, ref};
    for (int e = 0; e < n; ++e) {
        Carrier c = Carrier::segment(poly.edge_start(e), poly.edge_end(e));
        IntervalSet vis = visible_from_point(dom, LinkEnd{from, -1, false}, c, closed_unit());
        for (auto& part : vis.parts()) {
            Point a = c.at(part.lo), b = c.at(part.hi);
            for (const Point* x : {&a, &b}) {
                if (*x == from)
                    continue;
                const Point& other = x == &a ? b : a;
                Info& info = pts[*x];
                if (other == *x || other == from)
                    continue;
                int o = orient_sign(from, *x, other);
                if (o > 0)
                    info.out = true;
                else if (o < 0)
                    info.in = true;
            }
        }
    }
    std::vector<Point> order;
    for (auto& [p, info] : pts)
        order.push_back(p);
    std::sort(order.begin(), order.end(), less);

    VisibilityRegion vr;
    vr.kernel = from;
    if (loc.on_boundary())
        vr.ring.push_back(from);
    for (size_t i = 0; i < order.size();) {
        size_t j = i;
        while (j < order.size() && less.same_direction(order[i], order[j]))
            ++j;
        std::vector<Point> group(order.begin() + static_cast<long>(i), order.begin() + static_cast<long>(j));
        auto d2 = [&](const Point& p) { return dist2(from, p); };
        bool first = i == 0, last = j == order.size();
        std::sort(group.begin(), group.end(), [&](const Point& a, const Point& b) { return d2(a) < d2(b); });
        if (loc.on_boundary() && (first || last)) {
            // the sweep starts and ends along the boundary through `from`
            if (last && !first)
                std::reverse(group.begin(), group.end());
            vr.ring.insert(vr.ring.end(), group.begin(), group.end());
        } else {
            std::optional<Point> in, out;
            for (auto& p : group) {
                if (pts[p].in && !in)
                    in = p;
                if (pts[p].out)
                    out = p;
            }
            if (in && out) {
                if (d2(*in) > d2(*out))
                    std::reverse(group.begin(), group.end());
                bool on = false;
                for (auto& p : group) {
                    on = on || p == *in;
                    if (on)
                        vr.ring.push_back(p);
                    if (p == *out)
                        break;
                }
            } else if (in || out) {
                vr.ring.push_back(in ? *in : *out);
            }
        }
        i = j;
    }
    vr.ring.erase(std::unique(vr.ring.begin(), vr.ring.end()), vr.ring.end());
    return vr;
}

TangentPair tangents_to_chain(const Point& p, const std::vector<Point>& chain, const Polygon& poly)
{
    VisDomain dom(poly);
    return tangents_to_chain(p, chain, dom);
}

TangentPair tangents_to_chain(const Point& p, const std::vector<Point>& chain, const VisDomain& dom)
{
    if (chain.size() < 2)
        throw NoTangent("chain needs two points");
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (on_segment(p, chain[i], chain[i + 1]))
            throw NoTangent("point lies on the chain");
    TangentPair tp;
    int m = static_cast<int>(chain.size());
    for (int i = 0; i < m; ++i) {
        const Point& u = chain[static_cast<size_t>(i)];
        bool left = true, right = true;
        for (int k : {i - 1, i + 1}) {
            if (k < 0 || k >= m)
                continue;
            const Point& w = chain[static_cast<size_t>(k)];
            int o = orient_sign(p, u, w);
            if (o == 0)
                continue;
            left = left && o > 0;
            right = right && o < 0;
        }
        if (!left && !right)
            continue;
        Tangent t{i, u, dom.segment_in_closure(p, u)};
        if (left) {
            if (!tp.left)
                tp.left = t;
            tp.all_left.push_back(t);
        }
        if (right) {
            if (!tp.right)
                tp.right = t;
            tp.all_right.push_back(t);
        }
    }
    if (!tp.left && !tp.right)
        throw NoTangent("no tangent from this point");
    return tp;
}

}  // namespace rp
