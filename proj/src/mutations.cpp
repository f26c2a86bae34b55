#include "mutations.h"

namespace rp {

namespace {

using Path = std::vector<Point>;
using Result = std::optional<Path>;

// quarter points of every edge
std::vector<Point> boundary_samples(const Polygon& P)
{
    std::vector<Point> out;
    for (int e = 0; e < P.size(); ++e)
        for (int q = 1; q <= 3; ++q)
            out.push_back(lerp(P.edge_start(e), P.edge_end(e), ratio(q, 4)));
    return out;
}

bool crosses_an_edge(const Polygon& P, const Point& a, const Point& b)
{
    for (int e = 0; e < P.size(); ++e)
        if (segments_cross_properly(a, b, P.edge_start(e), P.edge_end(e)))
            return true;
    return false;
}

int eave_crossings(const Path& p, const EaveInfo& ev)
{
    int n = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (segments_cross_properly(p[i], p[i + 1], ev.a, ev.b))
            ++n;
    return n;
}

int host_edge(const Polygon& P, const Point& z)
{
    Location loc = locate(P, z);
    return loc.kind == LocationKind::OnEdge ? loc.index : -1;
}

Result vertex_snap(const Path& p, const Region& r)
{
    if (p.size() < 3)
        return std::nullopt;
    int e = host_edge(r.polygon(), p[1]);
    if (e < 0)
        return std::nullopt;
    Path q = p;
    q[1] = r.polygon().edge_end(e);
    if (q[1] == q[2] || q[1] == q[0])
        q[1] = r.polygon().edge_start(e);
    return q;
}

Result off_boundary(const Path& p, const Region& r)
{
    for (size_t i = 1; i + 1 < p.size(); ++i) {
        Point m = midpoint(p[i - 1], p[i]);
        if (locate(r.polygon(), m).kind == LocationKind::Inside) {
            Path q = p;
            q[i] = m;
            return q;
        }
    }
    return std::nullopt;
}

Result drop_target(const Path& p, const Region&)
{
    if (p.size() < 3)
        return std::nullopt;
    return Path(p.begin(), p.end() - 1);
}

Result reverse_path(const Path& p, const Region&) { return Path(p.rbegin(), p.rend()); }

Result duplicate_turn(const Path& p, const Region&)
{
    if (p.size() < 3)
        return std::nullopt;
    Path q = p;
    q.insert(q.begin() + 1, p[1]);
    return q;
}

// second turning point on the same edge: the link between them runs along it
Result collinear_link(const Path& p, const Region& r)
{
    const Polygon& P = r.polygon();
    for (size_t i = 1; i + 1 < p.size(); ++i) {
        int e = host_edge(P, p[i]);
        if (e < 0)
            continue;
        Path q = p;
        q.insert(q.begin() + static_cast<long>(i) + 1, midpoint(p[i], P.edge_end(e)));
        return q;
    }
    return std::nullopt;
}

Result outside_link(const Path& p, const Region& r)
{
    const Polygon& P = r.polygon();
    for (size_t i = 1; i + 1 < p.size(); ++i)
        for (const Point& z : boundary_samples(P))
            if (crosses_an_edge(P, p[i - 1], z)) {
                Path q = p;
                q[i] = z;
                return q;
            }
    return std::nullopt;
}

bool cuts_a_wall(const Region& r, const Point& a, const Point& b)
{
    for (const Segment& w : r.walls())
        if (segments_cross_properly(a, b, w.a, w.b))
            return true;
    return false;
}

// turning points whose links stay in P while one link cuts a wall
Result sp_edge_cross(const Path& p, const Region& r)
{
    const Polygon& P = r.polygon();
    std::vector<Point> zs = boundary_samples(P);
    auto inside = [&](const Point& a, const Point& b) { return a != b && r.plain().segment_in_closure(a, b); };
    for (size_t i = 1; i + 1 < p.size(); ++i)
        for (const Point& z : zs)
            if (inside(p[i - 1], z) && inside(z, p[i + 1]) && (cuts_a_wall(r, p[i - 1], z) || cuts_a_wall(r, z, p[i + 1]))) {
                Path q = p;
                q[i] = z;
                return q;
            }
    // a detour through two boundary points
    for (size_t i = 1; i + 1 < p.size(); ++i)
        for (const Point& a : zs) {
            if (!inside(p[i - 1], a))
                continue;
            for (const Point& b : zs)
                if (inside(a, b) && inside(b, p[i + 1]) && cuts_a_wall(r, a, b)) {
                    Path q = p;
                    q[i] = a;
                    q.insert(q.begin() + static_cast<long>(i) + 1, b);
                    return q;
                }
        }
    return std::nullopt;
}

// run the eave-crossing link back and forth once more
Result eave_double_cross(const Path& p, const Region& r)
{
    for (const EaveInfo& ev : r.eaves())
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (segments_cross_properly(p[i], p[i + 1], ev.a, ev.b)) {
                Path q = p;
                q.insert(q.begin() + static_cast<long>(i) + 2, {p[i], p[i + 1]});
                if (eave_crossings(q, ev) == 3)
                    return q;
            }
    return std::nullopt;
}

// zig-zag over a link between two turning points: the outer links form an X
Result self_cross(const Path& p, const Region& r)
{
    const Polygon& P = r.polygon();
    for (size_t i = 1; i + 2 < p.size(); ++i) {
        int e1 = host_edge(P, p[i]), e2 = host_edge(P, p[i + 1]);
        if (e1 < 0 || e2 < 0)
            continue;
        for (const Point& end1 : {P.edge_start(e1), P.edge_end(e1)})
            for (const Point& end2 : {P.edge_start(e2), P.edge_end(e2)}) {
                Point a = midpoint(p[i], end1), b = midpoint(p[i + 1], end2);
                if (!segments_cross_properly(p[i], p[i + 1], a, b))
                    continue;
                Path q = p;
                q.insert(q.begin() + static_cast<long>(i) + 2, {a, b});
                return q;
            }
    }
    return std::nullopt;
}

// a single turn to the wrong side
Result turn_reversal(const Path& p, const Region& r)
{
    if (p.size() != 3)
        return std::nullopt;
    Orientation want = r.cells().front().turn;
    for (const Point& z : boundary_samples(r.polygon())) {
        Orientation o = orientation(p[0], z, p[2]);
        if (o != Orientation::Collinear && o != want)
            return Path{p[0], z, p[2]};
    }
    return std::nullopt;
}

// two consecutive turns of one stretch in reverse chain order
Result order_swap(const Path& p, const Region& r)
{
    for (size_t i = 1; i + 2 < p.size(); ++i) {
        auto a = r.position(p[i]), b = r.position(p[i + 1]);
        if (!a || !b || a->cell != b->cell)
            continue;
        Path q = p;
        std::swap(q[i], q[i + 1]);
        return q;
    }
    return std::nullopt;
}

}  // namespace

const std::vector<Mutation>& mutation_operators()
{
    static const std::vector<Mutation> ops = {
        {"vertex-snap", PathIssue::TurnAtVertex, vertex_snap},
        {"off-boundary", PathIssue::TurnNotOnBoundary, off_boundary},
        {"drop-target", PathIssue::EndpointMismatch, drop_target},
        {"reverse-path", PathIssue::EndpointMismatch, reverse_path},
        {"duplicate-turn", PathIssue::Degenerate, duplicate_turn},
        {"collinear-link", PathIssue::AlongEdge, collinear_link},
        {"outside-link", PathIssue::LinkOutsidePolygon, outside_link},
        {"sp-edge-cross", PathIssue::NonEaveCrossing, sp_edge_cross},
        {"eave-double-cross", PathIssue::EaveCrossCount, eave_double_cross},
        {"self-cross", PathIssue::SelfIntersection, self_cross},
        {"turn-reversal", PathIssue::TurnDirection, turn_reversal},
        {"order-swap", PathIssue::Order, order_swap},
    };
    return ops;
}

std::vector<MutationTally> run_mutations(const std::vector<std::pair<const Region*, std::vector<Point>>>& corpus)
{
    std::vector<MutationTally> out;
    for (const Mutation& m : mutation_operators()) {
        MutationTally t;
        t.name = m.name;
        for (auto& [region, path] : corpus) {
            auto q = m.apply(path, *region);
            if (!q)
                continue;
            ++t.applied;
            if (validate_path(*q, *region).has(m.expected))
                ++t.killed;
            else
                t.escapes.push_back(region->instance().name);
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace rp
