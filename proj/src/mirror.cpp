#include "mirror.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace rp {

const char* to_string(MirrorSide s)
{
    switch (s) {
    case MirrorSide::Plain: return "plain";
    case MirrorSide::Primed: return "primed";
    case MirrorSide::DoublePrimed: return "double-primed";
    }
    return "?";
}

const char* to_string(Termination t)
{
    switch (t) {
    case Termination::Direct: return "direct";
    case Termination::TargetVisible: return "target-visible";
    case Termination::Exhausted: return "exhausted";
    }
    return "?";
}

namespace {

struct Target {
    int cell, piece, edge;
};

std::vector<Target> targets(const Region& region)
{
    std::vector<Target> out;
    for (auto& c : region.cells())
        for (int k = 0; k < static_cast<int>(c.pieces.size()); ++k)
            if (!region.ecv(c.index, k).empty())
                out.push_back({c.index, k, c.pieces[static_cast<size_t>(k)].edge});
    return out;
}

LinkEnd source_end(const Region& r) { return {r.instance().source, -1, true}; }
LinkEnd target_end(const Region& r) { return {r.instance().target, -1, true}; }

IntervalSet available(const Region& region, const MirrorSystem& sys, const Target& t)
{
    IntervalSet avail = region.ecv(t.cell, t.piece);
    auto it = sys.covered.find({t.cell, t.piece});
    if (it != sys.covered.end())
        avail = avail.minus(it->second);
    return avail;
}

// tangent from p touching the cell's SP stretch on the forward side
std::optional<Point> forward_touch(const Region& region, const Cell& c, const Point& p)
{
    if (c.sp_chain.size() == 1)
        return c.sp_chain[0];
    TangentPair tp;
    try {
        tp = tangents_to_chain(p, c.sp_chain, region.plain());
    } catch (const NoTangent&) {
        return std::nullopt;
    }
    const auto& all = c.turn == Orientation::Right ? tp.all_right : tp.all_left;
    for (auto& t : all)
        if (t.inside && t.index != 0)
            return t.touch;
    return std::nullopt;
}

void fill_feet(const Region& region, Mirror& m)
{
    const Polygon& P = region.polygon();
    const Cell& c = region.cells()[static_cast<size_t>(m.cell)];
    Point b = region.point_at(m.hi), a = region.point_at(m.lo);
    if (auto touch = forward_touch(region, c, b)) {
        try {
            m.b_foot = ray_first_boundary_hit(P, b, *touch);
        } catch (const NoHit&) {
        }
    }
    // first later chain point visible from a
    bool past = false;
    for (auto& cc : region.cells()) {
        for (int k = 0; k < static_cast<int>(cc.pieces.size()) && !m.a_foot; ++k) {
            if (cc.index == m.cell && k == m.piece) {
                past = true;
                continue;
            }
            if (!past)
                continue;
            const ChainPiece& pc = cc.pieces[static_cast<size_t>(k)];
            IntervalSet vis = weak_visible(region.walled(), Carrier::point(a, m.edge), closed_unit(),
                                           Carrier::edge(P, pc.edge), region.ecv(cc.index, k), Exec::Serial);
            if (vis.empty())
                continue;
            Scalar lam = pc.forward() ? vis.parts().front().lo : vis.parts().back().hi;
            m.a_foot = boundary_point(P, pc.edge, lam);
        }
        if (m.a_foot)
            break;
    }
}

Mirror make_mirror(const Region& region, int layer, const Target& t, const Interval& lam, int parent_cell)
{
    Mirror m;
    m.layer = layer;
    m.cell = t.cell;
    m.piece = t.piece;
    m.edge = t.edge;
    m.lambda = lam;
    const ChainPiece& pc = region.piece(t.cell, t.piece);
    Scalar t0 = pc.tau(lam.lo), t1 = pc.tau(lam.hi);
    m.lo = {t.cell, t.piece, std::min(t0, t1)};
    m.hi = {t.cell, t.piece, std::max(t0, t1)};
    m.zones = region.zones_at(t.cell, t.piece, lam.interior_point());
    const Cell& c = region.cells()[static_cast<size_t>(t.cell)];
    if (parent_cell < t.cell)
        m.side = MirrorSide::DoublePrimed;
    else if ((m.zones & ZoneExit) && c.exit_eave >= 0)
        m.side = MirrorSide::Primed;
    fill_feet(region, m);
    return m;
}

void add_layer(MirrorSystem& sys, std::vector<Mirror> fresh, LayerTrace trace)
{
    std::sort(fresh.begin(), fresh.end(), [](const Mirror& x, const Mirror& y) { return x.lo < y.lo; });
    std::vector<int> ids;
    std::map<int, std::set<int>> layers_on_edge;
    for (auto& m : sys.mirrors)
        layers_on_edge[m.edge].insert(m.layer);
    // revisits accumulate over builds: one per later stage landing on a used edge
    if (!sys.traces.empty())
        trace.revisits = sys.traces.back().revisits;
    std::set<int> revisited;
    for (auto& m : fresh) {
        m.id = static_cast<int>(sys.mirrors.size());
        ids.push_back(m.id);
        if (layers_on_edge.count(m.edge) && revisited.insert(m.edge).second)
            ++trace.revisits[m.edge];
        sys.covered[{m.cell, m.piece}].add(m.lambda);
        sys.mirrors.push_back(m);
    }
    for (auto& m : sys.mirrors)
        layers_on_edge[m.edge].insert(m.layer);
    for (auto& [e, ls] : layers_on_edge)
        trace.source_layers[e] = static_cast<int>(ls.size());
    sys.layers.push_back(std::move(ids));
    sys.traces.push_back(std::move(trace));
}

}  // namespace

void initial_layer(const Region& region, MirrorSystem& sys, Exec exec)
{
    const Polygon& P = region.polygon();
    std::vector<Target> ts = targets(region);
    std::vector<IntervalSet> vis(ts.size());
    LinkEnd s = source_end(region);
    Carrier src = Carrier::point(s.p, -1, true);
    int count = static_cast<int>(ts.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (int i = 0; i < count; ++i) {
        const Target& t = ts[static_cast<size_t>(i)];
        vis[static_cast<size_t>(i)] = weak_visible(region.walled(), src, closed_unit(), Carrier::edge(P, t.edge),
                                                   region.ecv(t.cell, t.piece), Exec::Serial);
    }
    std::vector<Mirror> fresh;
    for (size_t i = 0; i < ts.size(); ++i)
        for (auto& part : vis[i].parts())
            fresh.push_back(make_mirror(region, 1, ts[i], part, 0));
    LayerTrace trace;
    trace.layer = 1;
    add_layer(sys, std::move(fresh), trace);
}

bool next_layer(const Region& region, MirrorSystem& sys, Exec exec)
{
    const Polygon& P = region.polygon();
    int layer = static_cast<int>(sys.layers.size()) + 1;
    const std::vector<int>& prev = sys.layers.back();
    std::vector<Target> ts = targets(region);
    std::vector<IntervalSet> avail;
    for (auto& t : ts)
        avail.push_back(available(region, sys, t));

    // projections of every previous mirror onto every later piece
    struct Job {
        int parent;
        size_t target;
    };
    std::vector<Job> jobs;
    for (int id : prev) {
        const Mirror& m = sys.mirror(id);
        for (size_t i = 0; i < ts.size(); ++i) {
            const Target& t = ts[i];
            if (std::pair(t.cell, t.piece) <= std::pair(m.cell, m.piece) || avail[i].empty())
                continue;
            jobs.push_back({id, i});
        }
    }
    std::vector<IntervalSet> vis(jobs.size());
    int count = static_cast<int>(jobs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (int j = 0; j < count; ++j) {
        const Job& job = jobs[static_cast<size_t>(j)];
        const Mirror& m = sys.mirror(job.parent);
        const Target& t = ts[job.target];
        vis[static_cast<size_t>(j)] = weak_visible(region.walled(), Carrier::edge(P, m.edge), IntervalSet(m.lambda),
                                                   Carrier::edge(P, t.edge), avail[job.target], Exec::Serial);
    }

    LayerTrace trace;
    trace.layer = layer;
    trace.spans = static_cast<int>(prev.size());
    std::vector<IntervalSet> claimed(ts.size());
    std::vector<Mirror> fresh;
    // jobs are grouped by parent in chain order, so the first parent claims
    for (size_t j = 0; j < jobs.size(); ++j) {
        if (vis[j].empty())
            continue;
        const Job& job = jobs[j];
        const Target& t = ts[job.target];
        IntervalSet fresh_part = vis[j].minus(claimed[job.target]);
        auto cov = sys.covered.find({t.cell, t.piece});
        bool trimmed = fresh_part != vis[j] ||
                       (cov != sys.covered.end() && !cov->second.intersected(region.ecv(t.cell, t.piece)).empty());
        if (trimmed)
            ++trace.exclusions;
        claimed[job.target].unite(fresh_part);
        for (auto& part : fresh_part.parts()) {
            Mirror m = make_mirror(region, layer, t, part, sys.mirror(job.parent).cell);
            m.parents.push_back(job.parent);
            fresh.push_back(std::move(m));
        }
    }
    if (fresh.empty())
        return false;
    add_layer(sys, std::move(fresh), trace);
    return true;
}

IntervalSet target_visible_from(const Region& region, const Mirror& m)
{
    return visible_from_point(region.walled(), target_end(region), Carrier::edge(region.polygon(), m.edge),
                              IntervalSet(m.lambda));
}

MirrorSystem run(const Region& region, Exec exec)
{
    MirrorSystem sys;
    if (region.plain().admissible(source_end(region), target_end(region))) {
        sys.termination = Termination::Direct;
        sys.k = 0;
        return sys;
    }
    int n = region.polygon().size();
    int cap = n * (n + 1);
    initial_layer(region, sys, exec);
    if (sys.layers.back().empty()) {
        sys.layers.pop_back();
        sys.traces.pop_back();
        return sys;
    }
    for (;;) {
        const auto& last = sys.layers.back();
        // scan from t back towards s
        for (auto it = last.rbegin(); it != last.rend(); ++it)
            if (!target_visible_from(region, sys.mirror(*it)).empty()) {
                sys.termination = Termination::TargetVisible;
                sys.k = static_cast<int>(sys.layers.size());
                sys.witness = *it;
                return sys;
            }
        if (static_cast<int>(sys.layers.size()) >= cap)
            throw LayerCapExceeded("layer cap " + std::to_string(cap) + " reached");
        if (!next_layer(region, sys, exec))
            return sys;
    }
}

MirrorSystem run(const Region& region) { return run(region, default_exec()); }

MirrorSystem run_exhaustive(const Region& region, Exec exec)
{
    MirrorSystem sys;
    int n = region.polygon().size();
    int cap = n * (n + 1);
    initial_layer(region, sys, exec);
    if (sys.layers.back().empty()) {
        sys.layers.pop_back();
        sys.traces.pop_back();
        return sys;
    }
    while (next_layer(region, sys, exec))
        if (static_cast<int>(sys.layers.size()) > cap)
            throw LayerCapExceeded("layer cap " + std::to_string(cap) + " reached");
    return sys;
}

std::string MirrorSystem::dump() const
{
    std::ostringstream os;
    os << "termination " << to_string(termination) << " k " << k << " mirrors " << mirrors.size() << "\n";
    for (size_t i = 0; i < layers.size(); ++i) {
        os << "layer " << i + 1 << "\n";
        for (int id : layers[i]) {
            const Mirror& m = mirror(id);
            os << "  m" << id << " cell " << m.cell << " edge " << m.edge << " " << m.lambda.str() << " "
               << to_string(m.side);
            if (!m.parents.empty())
                os << " from m" << m.parents.front();
            os << "\n";
        }
    }
    return os.str();
}

namespace {

std::vector<Scalar> samples(const Mirror& m)
{
    std::vector<Scalar> out;
    const Scalar& lo = m.lambda.lo;
    const Scalar& hi = m.lambda.hi;
    if (m.lambda.is_point())
        return {lo};
    if (m.lambda.lo_closed && lo != 0)
        out.push_back(lo);
    for (long num : {1L, 4L, 7L})
        out.push_back(lo + (hi - lo) * ratio(num, 8));
    if (m.lambda.hi_closed && hi != 1)
        out.push_back(hi);
    return out;
}

}  // namespace

LayerChecks check_layers(const Region& region, const MirrorSystem& sys)
{
    LayerChecks lc;
    const Polygon& P = region.polygon();
    if (region.eaves().empty() && sys.layers.size() >= 2) {
        ChainPosition hi1 = sys.mirror(sys.layers[0].front()).hi, lo2 = sys.mirror(sys.layers[1].front()).lo;
        for (int id : sys.layers[0])
            hi1 = std::max(hi1, sys.mirror(id).hi);
        for (int id : sys.layers[1])
            lo2 = std::min(lo2, sys.mirror(id).lo);
        if (lo2 < hi1) {
            lc.order_ok = false;
            lc.notes.push_back("M2 starts at " + lo2.str() + " before M1 ends at " + hi1.str());
        }
    }
    for (size_t i = 0; i < sys.mirrors.size(); ++i)
        for (size_t j = i + 1; j < sys.mirrors.size(); ++j) {
            const Mirror &a = sys.mirrors[i], &b = sys.mirrors[j];
            if (a.cell == b.cell && a.piece == b.piece && !IntervalSet(a.lambda).intersected(b.lambda).empty()) {
                lc.partition_ok = false;
                lc.notes.push_back("mirrors m" + std::to_string(a.id) + " and m" + std::to_string(b.id) + " overlap");
            }
        }
    std::map<std::pair<int, int>, IntervalSet> cov;
    for (auto& layer : sys.layers) {
        auto before = cov;
        for (int id : layer) {
            const Mirror& m = sys.mirror(id);
            cov[{m.cell, m.piece}].add(m.lambda);
        }
        bool grew = false;
        for (auto& [key, set] : cov) {
            auto it = before.find(key);
            if (it == before.end() ? !set.empty() : set != it->second) {
                grew = true;
                if (it != before.end() && !set.covers(it->second))
                    lc.coverage_monotone = false;
            }
        }
        if (!grew)
            lc.coverage_monotone = false;
    }
    for (size_t i = 2; i < sys.layers.size(); ++i)
        for (size_t j = 0; j + 2 <= i; ++j)
            for (int hi_id : sys.layers[i])
                for (int lo_id : sys.layers[j]) {
                    const Mirror &mi = sys.mirror(hi_id), &mj = sys.mirror(lo_id);
                    for (auto& li : samples(mi))
                        for (auto& lj : samples(mj)) {
                            LinkEnd q{lerp(P.edge_start(mi.edge), P.edge_end(mi.edge), li), mi.edge, false};
                            LinkEnd p{lerp(P.edge_start(mj.edge), P.edge_end(mj.edge), lj), mj.edge, false};
                            if (!region.walled().admissible(p, q))
                                continue;
                            if (std::pair(mj.cell, mj.piece) < std::pair(mi.cell, mi.piece)) {
                                ++lc.invisibility_violations;
                                lc.notes.push_back("m" + std::to_string(lo_id) + " sees m" + std::to_string(hi_id));
                            } else {
                                ++lc.backward_sightings;
                            }
                        }
                }
    return lc;
}

}  // namespace rp
