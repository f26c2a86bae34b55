#include "polygon.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rp {

std::string ValidationReport::summary() const
{
    std::ostringstream os;
    for (size_t i = 0; i < issues.size(); ++i) {
        if (i)
            os << "; ";
        os << issues[i].code << ": " << issues[i].message;
    }
    return os.str();
}

Polygon::Polygon(std::vector<Point> vertices) : v_(std::move(vertices))
{
    int n = size();
    kind_.resize(v_.size(), VertexKind::Convex);
    box_.resize(v_.size());
    if (n < 3)
        return;
    for (int i = 0; i < n; ++i) {
        int o = orient_sign(v_[static_cast<size_t>(prev(i))], v_[static_cast<size_t>(i)], v_[static_cast<size_t>(next(i))]);
        kind_[static_cast<size_t>(i)] = o > 0 ? VertexKind::Convex : (o < 0 ? VertexKind::Reflex : VertexKind::Flat);
        if (o <= 0)
            blockers_.push_back(i);
        const Point &a = edge_start(i), &b = edge_end(i);
        box_[static_cast<size_t>(i)] = {std::min(a.fx(), b.fx()), std::min(a.fy(), b.fy()),
                                        std::max(a.fx(), b.fx()), std::max(a.fy(), b.fy())};
    }
}

Scalar Polygon::signed_area2() const { return ring_area2(v_); }

Scalar ring_area2(const std::vector<Point>& ring)
{
    Scalar s = 0;
    size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) {
        const Point &a = ring[i], &b = ring[(i + 1) % n];
        s += a.x() * b.y() - a.y() * b.x();
    }
    return s;
}

ValidationReport validate(const Polygon& poly)
{
    ValidationReport rep;
    int n = poly.size();
    if (n < 3) {
        rep.issues.push_back({"too-few-vertices", {}, "need at least 3 vertices, got " + std::to_string(n)});
        return rep;
    }
    std::map<Point, int> seen;
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = seen.emplace(poly[i], i);
        if (!fresh)
            rep.issues.push_back({"repeated-vertex", {it->second, i},
                                  "vertices " + std::to_string(it->second) + " and " + std::to_string(i) + " coincide"});
    }
    if (!rep.ok())
        return rep;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool adjacent = poly.next(i) == j || poly.next(j) == i;
            auto r = segment_intersection(poly.edge(i), poly.edge(j));
            if (r.kind == IntersectionKind::None)
                continue;
            if (adjacent && r.kind == IntersectionKind::Touch)
                continue;  // the shared vertex
            rep.issues.push_back({"self-intersection", {i, j},
                                  "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect"});
        }
    }
    if (!rep.ok())
        return rep;
    if (poly.signed_area2() <= 0)
        rep.issues.push_back({"orientation", {}, "vertices must be listed counterclockwise"});
    return rep;
}

bool ring_contains(const std::vector<Point>& ring, const Point& p)
{
    size_t n = ring.size();
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const Point &a = ring[i], &b = ring[(i + 1) % n];
        if (on_segment(p, a, b))
            return true;
        bool a_above = a.y() > p.y(), b_above = b.y() > p.y();
        if (a_above != b_above) {
            // x-coordinate of the crossing compared with p.x
            int o = orient_sign(a, b, p);
            if ((b.y() > a.y()) ? o > 0 : o < 0)
                inside = !inside;
        }
    }
    return inside;
}

Location locate(const Polygon& poly, const Point& p)
{
    Location loc;
    int n = poly.size();
    for (int i = 0; i < n; ++i) {
        if (poly[i] == p) {
            loc.kind = LocationKind::OnVertex;
            loc.index = i;
            loc.lambda = 0;
            return loc;
        }
    }
    for (int e = 0; e < n; ++e) {
        if (on_segment(p, poly.edge_start(e), poly.edge_end(e))) {
            loc.kind = LocationKind::OnEdge;
            loc.index = e;
            loc.lambda = param_on(p, poly.edge_start(e), poly.edge_end(e));
            return loc;
        }
    }
    loc.kind = ring_contains(poly.vertices(), p) ? LocationKind::Inside : LocationKind::Outside;
    return loc;
}

BoundaryPoint boundary_point(const Polygon& poly, int edge, const Scalar& lambda)
{
    if (lambda < 0 || lambda > 1)
        throw std::out_of_range("boundary parameter outside [0,1]");
    BoundaryPoint bp;
    if (lambda == 1) {
        bp.edge = poly.next(edge);
        bp.lambda = 0;
    } else {
        bp.edge = edge;
        bp.lambda = lambda;
    }
    bp.point = lerp(poly.edge_start(bp.edge), poly.edge_end(bp.edge), bp.lambda);
    return bp;
}

BoundaryPoint boundary_point_at_vertex(const Polygon& poly, int vertex)
{
    return boundary_point(poly, vertex, Scalar(0));
}

BoundaryPoint boundary_point_of(const Polygon& poly, const Point& p)
{
    Location loc = locate(poly, p);
    if (loc.kind == LocationKind::OnVertex)
        return boundary_point_at_vertex(poly, loc.index);
    if (loc.kind == LocationKind::OnEdge)
        return boundary_point(poly, loc.index, loc.lambda);
    throw std::invalid_argument("point is not on the polygon boundary");
}

}  // namespace rp
