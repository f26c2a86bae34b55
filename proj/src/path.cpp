#include "path.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace rp {

const char* to_string(PathIssue issue)
{
    switch (issue) {
    case PathIssue::Degenerate: return "degenerate";
    case PathIssue::EndpointMismatch: return "endpoint-mismatch";
    case PathIssue::TurnNotOnBoundary: return "turn-not-on-boundary";
    case PathIssue::TurnAtVertex: return "turn-at-vertex";
    case PathIssue::LinkOutsidePolygon: return "link-outside-polygon";
    case PathIssue::AlongEdge: return "along-edge";
    case PathIssue::NonEaveCrossing: return "non-eave-crossing";
    case PathIssue::EaveCrossCount: return "eave-cross-count";
    case PathIssue::SelfIntersection: return "self-intersection";
    case PathIssue::TurnDirection: return "turn-direction";
    case PathIssue::Order: return "order";
    }
    return "?";
}

bool ValidityReport::has(PathIssue issue) const
{
    return std::any_of(entries.begin(), entries.end(), [&](const Entry& e) { return e.issue == issue; });
}

std::string ValidityReport::summary() const
{
    if (ok())
        return "valid";
    std::ostringstream os;
    for (size_t i = 0; i < entries.size(); ++i)
        os << (i ? "; " : "") << to_string(entries[i].issue) << ": " << entries[i].detail;
    return os.str();
}

double ReflectionPath::length() const
{
    double total = 0;
    for (size_t i = 0; i + 1 < points.size(); ++i)
        total += rp::length(points[i], points[i + 1]);
    return total;
}

std::string ReflectionPath::str() const
{
    std::ostringstream os;
    os << "turns " << turn_count() << "\n";
    for (auto& p : points)
        os << "point " << format_scalar(p.x()) << " " << format_scalar(p.y()) << "\n";
    for (size_t i = 0; i < turns.size(); ++i) {
        os << "turn " << i + 1 << " edge " << turns[i].edge << " lambda " << format_scalar(turns[i].lambda) << " "
           << to_string(turn_dir[i]);
        if (i < layer.size())
            os << " layer " << layer[i];
        os << "\n";
    }
    for (auto& c : crossings)
        os << "crossing eave " << c.eave << " link " << c.link << " at " << format_scalar(c.point.x()) << " "
           << format_scalar(c.point.y()) << "\n";
    return os.str();
}

namespace {

std::string at(size_t i) { return "at point " + std::to_string(i); }

// eaves properly crossed by link i
std::vector<int> crossed_eaves(const Region& region, const Point& a, const Point& b)
{
    std::vector<int> out;
    const auto& eaves = region.eaves();
    for (size_t e = 0; e < eaves.size(); ++e)
        if (segments_cross_properly(a, b, eaves[e].a, eaves[e].b))
            out.push_back(static_cast<int>(e));
    return out;
}

}  // namespace

ValidityReport validate_path(const std::vector<Point>& pts, const Region& region)
{
    ValidityReport rep;
    auto add = [&](PathIssue i, std::string d) { rep.entries.push_back({i, std::move(d)}); };
    const Polygon& P = region.polygon();
    const Instance& inst = region.instance();
    if (pts.size() < 2) {
        add(PathIssue::Degenerate, "fewer than two points");
        return rep;
    }
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i] == pts[i + 1]) {
            add(PathIssue::Degenerate, "zero-length link " + std::to_string(i));
            return rep;
        }
    if (pts.front() != inst.source || pts.back() != inst.target)
        add(PathIssue::EndpointMismatch, "path must run from s to t");

    size_t last = pts.size() - 1;
    std::vector<int> host(pts.size(), -1);
    for (size_t i = 1; i < last; ++i) {
        Location loc = locate(P, pts[i]);
        if (loc.kind == LocationKind::OnVertex)
            add(PathIssue::TurnAtVertex, at(i));
        else if (loc.kind != LocationKind::OnEdge)
            add(PathIssue::TurnNotOnBoundary, at(i));
        else
            host[i] = loc.index;
    }

    std::vector<int> crossings_before(pts.size(), 0);
    std::vector<int> per_eave(region.eaves().size(), 0);
    for (size_t i = 0; i < last; ++i) {
        LinkEnd a{pts[i], host[i], i == 0}, b{pts[i + 1], host[i + 1], i + 1 == last};
        std::string link = "link " + std::to_string(i);
        if (!region.plain().segment_in_closure(a.p, b.p)) {
            add(PathIssue::LinkOutsidePolygon, link);
        } else {
            bool along = (a.host >= 0 && orient_sign(P.edge_start(a.host), P.edge_end(a.host), b.p) <= 0) ||
                         (b.host >= 0 && orient_sign(P.edge_start(b.host), P.edge_end(b.host), a.p) <= 0);
            if (along)
                add(PathIssue::AlongEdge, link);
        }
        // a turn-free path is SP(s,t) itself
        if (pts.size() > 2 && !region.walled().clear_of_walls(a, b))
            add(PathIssue::NonEaveCrossing, link);
        auto crossed = crossed_eaves(region, a.p, b.p);
        for (int e : crossed)
            ++per_eave[static_cast<size_t>(e)];
        crossings_before[i + 1] = crossings_before[i] + static_cast<int>(crossed.size());
    }
    for (size_t e = 0; e < per_eave.size(); ++e)
        if (per_eave[e] != 1)
            add(PathIssue::EaveCrossCount, "eave " + std::to_string(e) + " crossed " + std::to_string(per_eave[e]) + " times");

    for (size_t i = 0; i < last; ++i)
        for (size_t j = i + 1; j < last; ++j) {
            Segment si{pts[i], pts[i + 1]}, sj{pts[j], pts[j + 1]};
            if (j == i + 1) {
                auto r = segment_intersection(si, sj);
                if (r.kind == IntersectionKind::Overlap)
                    add(PathIssue::SelfIntersection, "links " + std::to_string(i) + " and " + std::to_string(j) + " fold back");
            } else if (segments_meet(si.a, si.b, sj.a, sj.b)) {
                add(PathIssue::SelfIntersection, "links " + std::to_string(i) + " and " + std::to_string(j));
            }
        }

    const auto& cells = region.cells();
    std::optional<ChainPosition> prev;
    for (size_t i = 1; i < last; ++i) {
        int c = std::min(crossings_before[i], static_cast<int>(cells.size()) - 1);
        Orientation o = orientation(pts[i - 1], pts[i], pts[i + 1]);
        if (o != cells[static_cast<size_t>(c)].turn)
            add(PathIssue::TurnDirection, at(i) + " turns " + to_string(o));
        if (host[i] < 0)
            continue;
        auto pos = region.position_on(c, pts[i]);
        if (!pos) {
            add(PathIssue::Order, at(i) + " is off the chain of stretch " + std::to_string(c));
            continue;
        }
        if (prev && !(*prev < *pos))
            add(PathIssue::Order, at(i) + " precedes the previous turn");
        prev = pos;
    }
    return rep;
}

ReflectionPath annotate_path(const std::vector<Point>& pts, const Region& region)
{
    ReflectionPath path;
    path.points = pts;
    const Polygon& P = region.polygon();
    for (size_t i = 1; i + 1 < pts.size(); ++i) {
        path.turns.push_back(boundary_point_of(P, pts[i]));
        path.turn_dir.push_back(orientation(pts[i - 1], pts[i], pts[i + 1]));
    }
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        for (int e : crossed_eaves(region, pts[i], pts[i + 1])) {
            const EaveInfo& ev = region.eaves()[static_cast<size_t>(e)];
            auto r = segment_intersection({pts[i], pts[i + 1]}, {ev.a, ev.b});
            path.crossings.push_back({e, static_cast<int>(i), r.point});
        }
    return path;
}

namespace {

// candidate parameters on a mirror, most preferred first
std::vector<Scalar> candidates(const IntervalSet& feasible, const std::optional<Scalar>& ray, int bisections)
{
    std::vector<Scalar> out;
    auto push = [&](const Scalar& v) {
        if (feasible.contains(v) && v != 0 && v != 1 && std::find(out.begin(), out.end(), v) == out.end())
            out.push_back(v);
    };
    if (ray)
        push(*ray);
    // closest feasible point to the ray hit, then bisection towards it
    std::vector<Interval> parts = feasible.parts();
    if (ray)
        std::stable_sort(parts.begin(), parts.end(), [&](const Interval& a, const Interval& b) {
            auto d = [&](const Interval& iv) -> Scalar {
                if (*ray < iv.lo)
                    return iv.lo - *ray;
                if (*ray > iv.hi)
                    return *ray - iv.hi;
                return 0;
            };
            return d(a) < d(b);
        });
    for (auto& iv : parts) {
        if (iv.is_point()) {
            push(iv.lo);
            continue;
        }
        bool toward_lo = !ray || *ray <= (iv.lo + iv.hi) / 2;
        if (toward_lo && iv.lo_closed)
            push(iv.lo);
        if (!toward_lo && iv.hi_closed)
            push(iv.hi);
        Scalar mid = (iv.lo + iv.hi) / 2;
        push(mid);
        Scalar near = toward_lo ? iv.lo : iv.hi;
        Scalar cur = mid;
        for (int b = 0; b < bisections; ++b) {
            cur = (cur + near) / 2;
            push(cur);
        }
        push(iv.lo + (iv.hi - iv.lo) / 4);
        push(iv.lo + (iv.hi - iv.lo) * 3 / 4);
    }
    return out;
}

// parameter where the ray from `from` through the first bend of SP(from, v)
// meets the mirror edge
std::optional<Scalar> ray_rule(const Region& region, const Point& from, const Mirror& m)
{
    const Polygon& P = region.polygon();
    const Point &A = P.edge_start(m.edge), &B = P.edge_end(m.edge);
    Point v = lerp(A, B, m.lambda.interior_point());
    ShortestPath sp = shortest_path(P, region.triangulation(), from, v);
    const Point& next = sp.pts[1].p;
    if (next == from)
        return std::nullopt;
    auto lam = line_param(A, B, from, next);
    if (!lam)
        return std::nullopt;
    // the hit must lie beyond `next` on the ray
    Point hit = lerp(A, B, *lam);
    if (dot(from, next, hit) <= 0)
        return std::nullopt;
    return lam;
}

}  // namespace

ReflectionPath extract_path(const Region& region, const MirrorSystem& sys)
{
    const Instance& inst = region.instance();
    const Polygon& P = region.polygon();
    if (sys.termination == Termination::Direct) {
        ReflectionPath path = annotate_path({inst.source, inst.target}, region);
        return path;
    }
    if (sys.termination != Termination::TargetVisible)
        throw ExtractionFailed("the mirror system did not reach t");
    int k = sys.k;
    int n = P.size();
    long budget = 20000;

    // points from z_j to t, built backwards
    std::vector<Point> tail{inst.target};
    std::vector<int> tail_host{-1};
    std::vector<int> tail_layer;
    std::vector<ChainPosition> tail_pos;

    std::function<bool(int)> step = [&](int j) -> bool {
        if (j == 0) {
            std::vector<Point> pts{inst.source};
            pts.insert(pts.end(), tail.rbegin(), tail.rend());
            return validate_path(pts, region).ok();
        }
        const Point& next = tail.back();
        LinkEnd y{next, tail_host.back(), tail.size() == 1};
        std::vector<int> order(sys.layers[static_cast<size_t>(j - 1)].rbegin(), sys.layers[static_cast<size_t>(j - 1)].rend());
        if (j == k && sys.witness >= 0) {
            order.erase(std::remove(order.begin(), order.end(), sys.witness), order.end());
            order.insert(order.begin(), sys.witness);
        }
        for (int id : order) {
            const Mirror& m = sys.mirror(id);
            if (!tail_pos.empty() && !(m.lo < tail_pos.back()))
                continue;
            IntervalSet feasible = visible_from_point(region.walled(), y, Carrier::edge(P, m.edge), IntervalSet(m.lambda));
            if (j == 1)
                feasible = feasible.intersected(visible_from_point(region.walled(), LinkEnd{inst.source, -1, true},
                                                                   Carrier::edge(P, m.edge), IntervalSet(m.lambda)));
            if (feasible.empty())
                continue;
            std::optional<Scalar> ray;
            try {
                ray = ray_rule(region, next, m);
            } catch (const std::exception&) {
            }
            for (const Scalar& lam : candidates(feasible, ray, n)) {
                if (--budget < 0)
                    return false;
                Point z = lerp(P.edge_start(m.edge), P.edge_end(m.edge), lam);
                ChainPosition pos{m.cell, m.piece, region.piece(m.cell, m.piece).tau(lam)};
                if (!tail_pos.empty() && !(pos < tail_pos.back()))
                    continue;
                // turn at the previous point must match its stretch
                if (tail.size() >= 2) {
                    const Point& after = tail[tail.size() - 2];
                    int cell = tail_pos.back().cell;
                    if (orientation(z, next, after) != region.cells()[static_cast<size_t>(cell)].turn)
                        continue;
                }
                // new link may not meet the rest of the tail
                bool meets = false;
                for (size_t i = 0; i + 2 < tail.size() && !meets; ++i)
                    meets = segments_meet(z, next, tail[i], tail[i + 1]);
                if (meets)
                    continue;
                tail.push_back(z);
                tail_host.push_back(m.edge);
                tail_layer.push_back(j);
                tail_pos.push_back(pos);
                if (step(j - 1))
                    return true;
                tail.pop_back();
                tail_host.pop_back();
                tail_layer.pop_back();
                tail_pos.pop_back();
            }
        }
        return false;
    };
    if (!step(k))
        throw ExtractionFailed(budget < 0 ? "candidate budget exhausted" : "no feasible turning point sequence");
    std::vector<Point> pts{inst.source};
    pts.insert(pts.end(), tail.rbegin(), tail.rend());
    ReflectionPath path = annotate_path(pts, region);
    path.layer.assign(tail_layer.rbegin(), tail_layer.rend());
    return path;
}

}  // namespace rp
