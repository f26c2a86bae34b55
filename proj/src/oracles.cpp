#include "oracles.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>

namespace rp {

const char* to_string(OracleStatus s)
{
    switch (s) {
    case OracleStatus::Found: return "found";
    case OracleStatus::NoCdrp: return "no-cdrp";
    case OracleStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

bool sees_t(const VisDomain& dom, const Point& t, const std::vector<IntervalSet>& front)
{
    const Polygon& P = dom.polygon();
    for (int e = 0; e < P.size(); ++e)
        if (!front[static_cast<size_t>(e)].empty() &&
            witness_on(dom, LinkEnd{t, -1, true}, Carrier::edge(P, e), front[static_cast<size_t>(e)]))
            return true;
    return false;
}

}  // namespace

IlluminationFronts illuminate(const VisDomain& dom, const Point& s, const Point& t, int kmax, Exec exec)
{
    const Polygon& P = dom.polygon();
    int n = P.size();
    if (kmax < 0)
        kmax = n;
    IlluminationFronts out;
    std::vector<IntervalSet> lit(static_cast<size_t>(n));
    std::vector<IntervalSet> front(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (int e = 0; e < n; ++e)
        front[static_cast<size_t>(e)] =
            weak_visible(dom, Carrier::point(s, -1, true), closed_unit(), Carrier::edge(P, e), open_unit(), Exec::Serial);
    for (int j = 0;; ++j) {
        bool any = false;
        for (int e = 0; e < n; ++e) {
            lit[static_cast<size_t>(e)].unite(front[static_cast<size_t>(e)]);
            any = any || !front[static_cast<size_t>(e)].empty();
        }
        if (!any) {
            out.saturated = true;
            return out;
        }
        out.fronts.push_back(front);
        if (sees_t(dom, t, front)) {
            out.reach = j + 1;
            return out;
        }
        if (j + 1 >= kmax)
            return out;
        std::vector<IntervalSet> next(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
        for (int e = 0; e < n; ++e) {
            IntervalSet avail = open_unit().minus(lit[static_cast<size_t>(e)]);
            IntervalSet acc;
            for (int f = 0; f < n && !avail.empty(); ++f) {
                if (f == e || front[static_cast<size_t>(f)].empty())
                    continue;
                IntervalSet got = weak_visible(dom, Carrier::edge(P, f), front[static_cast<size_t>(f)], Carrier::edge(P, e),
                                               avail, Exec::Serial);
                acc.unite(got);
                avail = avail.minus(got);
            }
            next[static_cast<size_t>(e)] = acc;
        }
        front = std::move(next);
    }
}

std::optional<int> drp_opt(const Instance& inst, int kmax, Exec exec)
{
    VisDomain dom(inst.polygon);
    if (dom.admissible(LinkEnd{inst.source, -1, true}, LinkEnd{inst.target, -1, true}))
        return 0;
    return illuminate(dom, inst.source, inst.target, kmax, exec).reach;
}

RelaxedBound cdrp_relaxed(const Region& region, int kmax, Exec exec)
{
    RelaxedBound rb;
    const Instance& inst = region.instance();
    if (region.plain().admissible(LinkEnd{inst.source, -1, true}, LinkEnd{inst.target, -1, true})) {
        rb.turns = 0;
        return rb;
    }
    IlluminationFronts f = illuminate(region.walled(), inst.source, inst.target, kmax, exec);
    rb.turns = f.reach;
    rb.certified_none = f.saturated;
    return rb;
}

long oracle_budget()
{
    if (const char* env = std::getenv("REFLECTPATH_ORACLE_BUDGET")) {
        long v = std::atol(env);
        if (v > 0)
            return v;
    }
    return 200000;
}

namespace {

// sample parameters of a feasible set: interior points, biased to both ends
std::vector<Scalar> samples_of(const IntervalSet& set)
{
    std::vector<Scalar> out;
    auto push = [&](const Scalar& v) {
        if (v != 0 && v != 1 && set.contains(v) && std::find(out.begin(), out.end(), v) == out.end())
            out.push_back(v);
    };
    for (auto& iv : set.parts()) {
        if (iv.is_point()) {
            push(iv.lo);
            continue;
        }
        Scalar w = iv.hi - iv.lo;
        push(iv.lo + w / 2);
        push(iv.lo + w / 4);
        push(iv.lo + w * 3 / 4);
        if (iv.lo_closed)
            push(iv.lo);
        if (iv.hi_closed)
            push(iv.hi);
        push(iv.lo + w / 64);
        push(iv.hi - w / 64);
    }
    return out;
}

struct Enumerator {
    const Region& region;
    const Polygon& P;
    const Point& s;
    const Point& t;
    long budget;
    long used = 0;
    bool exhausted = false;
    std::vector<int> seq;
    std::vector<IntervalSet> sets;
    std::vector<Point> witness;

    Enumerator(const Region& r, long b)
        : region(r), P(r.polygon()), s(r.instance().source), t(r.instance().target), budget(b) {}

    // eaves crossed by the open segment ab
    int crossings(const Point& a, const Point& b, std::vector<int>& per_eave) const
    {
        int c = 0;
        const auto& ev = region.eaves();
        for (size_t e = 0; e < ev.size(); ++e)
            if (segments_cross_properly(a, b, ev[e].a, ev[e].b)) {
                ++per_eave[e];
                ++c;
            }
        return c;
    }

    // backward witness search over the sets of the current sequence
    bool reconstruct()
    {
        int p = static_cast<int>(seq.size());
        int total_eaves = static_cast<int>(region.eaves().size());
        std::vector<Point> tail{t};
        std::vector<int> per_eave(static_cast<size_t>(total_eaves), 0);
        int crossed_after = 0;  // eaves crossed between the newest tail point and t
        long tries = 0;
        std::function<bool(int)> back = [&](int j) -> bool {
            if (++tries > 4000)
                return false;
            const Point& next = tail.back();
            if (j < 0) {
                std::vector<Point> pts{s};
                pts.insert(pts.end(), tail.rbegin(), tail.rend());
                if (validate_path(pts, region).ok()) {
                    witness = pts;
                    return true;
                }
                return false;
            }
            int e = seq[static_cast<size_t>(j)];
            LinkEnd y{next, j + 1 < p ? seq[static_cast<size_t>(j + 1)] : -1, tail.size() == 1};
            IntervalSet feas = visible_from_point(region.walled(), y, Carrier::edge(P, e), sets[static_cast<size_t>(j)]);
            if (j == 0)
                feas = feas.intersected(
                    visible_from_point(region.walled(), LinkEnd{s, -1, true}, Carrier::edge(P, e), feas));
            for (const Scalar& lam : samples_of(feas)) {
                Point z = lerp(P.edge_start(e), P.edge_end(e), lam);
                std::vector<int> pe = per_eave;
                int c = crossings(z, next, pe);
                if (std::any_of(pe.begin(), pe.end(), [](int v) { return v > 1; }))
                    continue;
                // the turn at `next` belongs to the stretch after crossed_after eaves from t
                if (tail.size() >= 2) {
                    int cell = std::max(0, total_eaves - crossed_after);
                    const Point& after = tail[tail.size() - 2];
                    if (orientation(z, next, after) != region.cells()[static_cast<size_t>(cell)].turn)
                        continue;
                }
                bool meets = false;
                for (size_t i = 0; i + 2 < tail.size() && !meets; ++i)
                    meets = segments_meet(z, next, tail[i], tail[i + 1]);
                if (meets)
                    continue;
                auto saved = per_eave;
                int saved_after = crossed_after;
                per_eave = pe;
                crossed_after += c;
                tail.push_back(z);
                if (back(j - 1))
                    return true;
                tail.pop_back();
                per_eave = saved;
                crossed_after = saved_after;
            }
            return false;
        };
        return back(p - 1);
    }

    bool dfs(int depth, int p)
    {
        for (int e = 0; e < P.size(); ++e) {
            if (!seq.empty() && seq.back() == e)
                continue;
            if (++used > budget) {
                exhausted = true;
                return false;
            }
            IntervalSet r = seq.empty() ? weak_visible(region.walled(), Carrier::point(s, -1, true), closed_unit(),
                                                       Carrier::edge(P, e), open_unit(), Exec::Serial)
                                        : weak_visible(region.walled(), Carrier::edge(P, seq.back()), sets.back(),
                                                       Carrier::edge(P, e), open_unit(), Exec::Serial);
            if (r.empty())
                continue;
            seq.push_back(e);
            sets.push_back(r);
            bool found = false;
            if (depth + 1 == p) {
                if (witness_on(region.walled(), LinkEnd{t, -1, true}, Carrier::edge(P, e), r))
                    found = reconstruct();
            } else {
                found = dfs(depth + 1, p);
            }
            seq.pop_back();
            sets.pop_back();
            if (found || exhausted)
                return found;
        }
        return false;
    }
};

}  // namespace

OracleResult cdrp_opt(const Region& region, int kmax, long budget)
{
    OracleResult res;
    const Instance& inst = region.instance();
    int n = region.polygon().size();
    if (kmax < 0)
        kmax = n;
    if (budget < 0)
        budget = oracle_budget();
    if (region.plain().admissible(LinkEnd{inst.source, -1, true}, LinkEnd{inst.target, -1, true})) {
        res.status = OracleStatus::Found;
        res.k = 0;
        res.witness = {inst.source, inst.target};
        return res;
    }
    RelaxedBound rb = cdrp_relaxed(region, kmax);
    if (!rb.turns) {
        // either provably unreachable or beyond kmax
        res.status = OracleStatus::NoCdrp;
        res.lower_bound = kmax + 1;
        return res;
    }
    res.lower_bound = *rb.turns;
    Enumerator en(region, budget);
    for (int p = *rb.turns; p <= kmax; ++p) {
        bool found = en.dfs(0, p);
        res.sequences = en.used;
        if (found) {
            res.status = OracleStatus::Found;
            res.k = p;
            res.witness = en.witness;
            return res;
        }
        if (en.exhausted) {
            res.status = OracleStatus::BudgetExceeded;
            return res;
        }
        res.lower_bound = p + 1;
    }
    res.status = OracleStatus::NoCdrp;
    return res;
}

namespace {

struct Chord {
    Point a, b;  // a: supporting vertex, b: boundary hit
    int vertex;
    BoundaryPoint hit;
};

// ring of the part of P cut off by chord on the side containing t
std::vector<Point> pocket(const Polygon& P, const Chord& c, const Point& t, const Point& behind, bool& ok)
{
    std::vector<Point> r1{c.b}, r2;
    for (int i = P.next(c.hit.edge);; i = P.next(i)) {
        r1.push_back(P[i]);
        if (i == c.vertex)
            break;
    }
    for (int i = c.vertex;; i = P.next(i)) {
        r2.push_back(P[i]);
        if (i == c.hit.edge)
            break;
    }
    r2.push_back(c.b);
    auto dedupe = [](std::vector<Point>& r) {
        std::vector<Point> out;
        for (auto& p : r)
            if (out.empty() || out.back() != p)
                out.push_back(p);
        while (out.size() > 1 && out.front() == out.back())
            out.pop_back();
        r = out;
    };
    dedupe(r1);
    dedupe(r2);
    ok = true;
    if (r1.size() < 3 || r2.size() < 3 || ring_area2(r1) == 0 || ring_area2(r2) == 0) {
        ok = false;
        return {};
    }
    bool t1 = ring_contains(r1, t), t2 = ring_contains(r2, t);
    bool b1 = ring_contains(r1, behind), b2 = ring_contains(r2, behind);
    if (t1 && !b1)
        return r1;
    if (t2 && !b2)
        return r2;
    ok = false;
    return {};
}

std::optional<Chord> chord_from(const VisDomain& dom, const Point& p, int v)
{
    const Polygon& P = dom.polygon();
    const Point& q = P[v];
    if (p == q || !dom.segment_in_closure(p, q))
        return std::nullopt;
    try {
        BoundaryPoint h = ray_first_boundary_hit(P, p, q);
        if (h.point == q)
            return std::nullopt;
        return Chord{q, h.point, v, h};
    } catch (const NoHit&) {
        return std::nullopt;
    }
}

}  // namespace

LinkPath minimum_link_path(const Instance& inst)
{
    const Polygon& P = inst.polygon;
    VisDomain dom(P);
    const Point &s = inst.source, &t = inst.target;
    if (dom.segment_in_closure(s, t))
        return {{s, t}};
    const auto& blockers = P.blockers();
    std::vector<Segment> windows;
    Point behind = s;
    int n = P.size();
    for (int step = 0; step <= n; ++step) {
        std::vector<Chord> cands;
        if (windows.empty()) {
            for (int v : blockers)
                if (auto c = chord_from(dom, s, v))
                    cands.push_back(*c);
        } else {
            const Segment& w = windows.back();
            std::vector<std::pair<Point, Point>> lines;
            for (int v : blockers) {
                lines.push_back({w.a, P[v]});
                lines.push_back({w.b, P[v]});
                for (int u : blockers)
                    if (u != v)
                        lines.push_back({P[u], P[v]});
            }
            for (auto& [q1, q2] : lines) {
                if (q1 == q2 || (orient_sign(w.a, w.b, q1) == 0 && orient_sign(w.a, w.b, q2) == 0))
                    continue;
                auto lam = line_param(w.a, w.b, q1, q2);
                if (!lam || *lam < 0 || *lam > 1)
                    continue;
                Point p = lerp(w.a, w.b, *lam);
                for (int v : blockers)
                    if (orient_sign(q1, q2, P[v]) == 0)
                        if (auto c = chord_from(dom, p, v))
                            cands.push_back(*c);
            }
        }
        std::optional<std::vector<Point>> best;
        Chord chosen{};
        Scalar best_area;
        for (auto& c : cands) {
            bool ok = false;
            auto ring = pocket(P, c, t, behind, ok);
            if (!ok)
                continue;
            Scalar area = abs(ring_area2(ring));
            if (!best || area < best_area) {
                best = ring;
                best_area = area;
                chosen = c;
            }
        }
        if (!best)
            break;
        Segment w{chosen.a, chosen.b};
        windows.push_back(w);
        // the next window must cut t off from this one
        behind = midpoint(w.a, w.b);
        if (!visible_from_point(dom, LinkEnd{t, -1, false}, Carrier::segment(w.a, w.b), closed_unit()).empty())
            break;
    }
    if (windows.empty())
        return {};
    // walk back from t choosing a point on each window
    std::vector<Point> rev{t};
    for (size_t i = windows.size(); i-- > 0;) {
        const Segment& w = windows[i];
        IntervalSet vis = visible_from_point(dom, LinkEnd{rev.back(), -1, false}, Carrier::segment(w.a, w.b), closed_unit());
        if (vis.empty())
            return {};
        rev.push_back(lerp(w.a, w.b, vis.parts().front().interior_point()));
    }
    rev.push_back(s);
    std::reverse(rev.begin(), rev.end());
    for (size_t i = 0; i + 1 < rev.size(); ++i)
        if (!dom.segment_in_closure(rev[i], rev[i + 1]))
            return {};
    return {rev};
}

int sampled_link_distance(const Instance& inst, int grid)
{
    const Polygon& P = inst.polygon;
    VisDomain dom(P);
    std::vector<Point> pts{inst.source, inst.target};
    for (int i = 0; i < P.size(); ++i) {
        pts.push_back(P[i]);
        pts.push_back(midpoint(P[i], P[P.next(i)]));
    }
    Scalar x0 = P[0].x(), x1 = x0, y0 = P[0].y(), y1 = y0;
    for (auto& v : P.vertices()) {
        x0 = std::min(x0, v.x());
        x1 = std::max(x1, v.x());
        y0 = std::min(y0, v.y());
        y1 = std::max(y1, v.y());
    }
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j <= grid; ++j) {
            Point q(x0 + (x1 - x0) * ratio(2 * i + 1, 2 * grid + 2), y0 + (y1 - y0) * ratio(2 * j + 1, 2 * grid + 2));
            if (locate(P, q).in_closure())
                pts.push_back(q);
        }
    size_t m = pts.size();
    std::vector<int> dist(m, -1);
    std::deque<size_t> q{0};
    dist[0] = 0;
    while (!q.empty()) {
        size_t u = q.front();
        q.pop_front();
        if (u == 1)
            return dist[1];
        for (size_t v = 0; v < m; ++v)
            if (dist[v] < 0 && dom.segment_in_closure(pts[u], pts[v])) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return -1;
}

}  // namespace rp
