#include "region.h"

#include <algorithm>
#include <sstream>

namespace rp {

IntervalSet ChainPiece::range() const
{
    return IntervalSet(Interval::open(std::min(from, to), std::max(from, to)));
}

Scalar ChainPiece::tau(const Scalar& lambda) const { return (lambda - from) / (to - from); }
Scalar ChainPiece::lambda_at(const Scalar& t) const { return from + t * (to - from); }

std::string ChainPosition::str() const
{
    std::ostringstream os;
    os << "(" << cell << "," << piece << "," << format_scalar(tau) << ")";
    return os.str();
}

std::vector<ChainPiece> boundary_walk(const Polygon& poly, const BoundaryPoint& a, const BoundaryPoint& b, bool clockwise)
{
    if (a == b)
        throw AnchorUndefined("chain endpoints coincide");
    std::vector<ChainPiece> out;
    auto push = [&](int e, const Scalar& f, const Scalar& t) {
        if (f != t)
            out.push_back({e, f, t});
    };
    if (!clockwise) {
        if (a.edge == b.edge && a.lambda < b.lambda) {
            push(a.edge, a.lambda, b.lambda);
            return out;
        }
        push(a.edge, a.lambda, 1);
        for (int e = poly.next(a.edge); e != b.edge; e = poly.next(e))
            push(e, 0, 1);
        push(b.edge, 0, b.lambda);
        return out;
    }
    if (a.edge == b.edge && b.lambda < a.lambda) {
        push(a.edge, a.lambda, b.lambda);
        return out;
    }
    push(a.edge, a.lambda, 0);
    for (int e = poly.prev(a.edge); e != b.edge; e = poly.prev(e))
        push(e, 1, 0);
    push(b.edge, 1, b.lambda);
    return out;
}

Region::Region(const Instance& inst) : inst_(inst)
{
    if (inst_.source == inst_.target)
        throw AnchorUndefined("s and t coincide");
    tri_ = triangulate(inst_.polygon);
    sp_ = shortest_path(inst_.polygon, tri_, inst_.source, inst_.target);
    plain_ = std::make_unique<VisDomain>(inst_.polygon);
    build_anchors();
    build_walls();
    build_cells();
    build_ecv();
}

void Region::build_anchors()
{
    const Polygon& P = inst_.polygon;
    const auto& pts = sp_.pts;
    const Point& s = pts.front().p;
    const Point& t = pts.back().p;
    if (locate(P, s).on_boundary())
        anchor_s_ = boundary_point_of(P, s);
    else
        anchor_s_ = ray_first_boundary_hit(P, pts[1].p, s);
    if (locate(P, t).on_boundary())
        anchor_t_ = boundary_point_of(P, t);
    else
        anchor_t_ = ray_first_boundary_hit(P, pts[pts.size() - 2].p, t);
}

void Region::build_walls()
{
    const auto& pts = sp_.pts;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (!sp_.is_eave(static_cast<int>(i)))
            walls_.push_back({pts[i].p, pts[i + 1].p});
    for (auto& w : pts)
        walls_.push_back({w.p, w.p});
    if (anchor_s_.point != pts.front().p)
        walls_.push_back({anchor_s_.point, pts.front().p});
    if (anchor_t_.point != pts.back().p)
        walls_.push_back({pts.back().p, anchor_t_.point});
    walled_ = std::make_unique<VisDomain>(inst_.polygon, walls_);
}

void Region::build_cells()
{
    const Polygon& P = inst_.polygon;
    const auto& pts = sp_.pts;
    int m = static_cast<int>(pts.size());
    const auto& E = sp_.eaves;
    for (int i : E) {
        EaveInfo ev;
        ev.sp_index = i;
        ev.a = pts[static_cast<size_t>(i)].p;
        ev.b = pts[static_cast<size_t>(i + 1)].p;
        ev.foot_a = ray_first_boundary_hit(P, ev.b, ev.a);
        ev.foot_b = ray_first_boundary_hit(P, ev.a, ev.b);
        eaves_.push_back(ev);
    }
    int ncells = static_cast<int>(E.size()) + 1;
    for (int j = 0; j < ncells; ++j) {
        Cell c;
        c.index = j;
        int lo = j == 0 ? 0 : E[static_cast<size_t>(j - 1)] + 1;
        int hi = j + 1 == ncells ? m - 1 : E[static_cast<size_t>(j)];
        for (int k = lo; k <= hi; ++k)
            c.sp_chain.push_back(pts[static_cast<size_t>(k)].p);
        int first_turn = std::max(lo, 1);
        c.turn = first_turn <= std::min(hi, m - 2) ? sp_.turn[static_cast<size_t>(first_turn)] : Orientation::Right;
        c.clockwise = c.turn == Orientation::Right;
        c.start = j == 0 ? anchor_s_ : boundary_point_of(P, pts[static_cast<size_t>(E[static_cast<size_t>(j - 1)])].p);
        c.end = j + 1 == ncells ? anchor_t_ : boundary_point_of(P, pts[static_cast<size_t>(E[static_cast<size_t>(j)] + 1)].p);
        c.pieces = boundary_walk(P, c.start, c.end, c.clockwise);
        c.entry_eave = j > 0 ? j - 1 : -1;
        c.exit_eave = j + 1 < ncells ? j : -1;
        cells_.push_back(std::move(c));
    }
    for (auto& c : cells_) {
        if (c.entry_eave >= 0) {
            auto pos = position_on(c.index, eaves_[static_cast<size_t>(c.entry_eave)].foot_b.point);
            // a foot off the chain leaves the whole chain in the entry zone
            c.entry_limit = pos ? *pos : ChainPosition{c.index, static_cast<int>(c.pieces.size()), Scalar(0)};
        }
        if (c.exit_eave >= 0) {
            auto pos = position_on(c.index, eaves_[static_cast<size_t>(c.exit_eave)].foot_a.point);
            c.exit_limit = pos ? *pos : ChainPosition{c.index, -1, Scalar(0)};
        }
    }
}

std::optional<ChainPosition> Region::position_on(int cell, const Point& p) const
{
    const Cell& c = cells_[static_cast<size_t>(cell)];
    const Polygon& P = inst_.polygon;
    for (int k = 0; k < static_cast<int>(c.pieces.size()); ++k) {
        const ChainPiece& pc = c.pieces[static_cast<size_t>(k)];
        const Point &a = P.edge_start(pc.edge), &b = P.edge_end(pc.edge);
        if (!on_segment(p, a, b))
            continue;
        Scalar lam = param_on(p, a, b);
        if (lam < std::min(pc.from, pc.to) || lam > std::max(pc.from, pc.to))
            continue;
        return ChainPosition{cell, k, pc.tau(lam)};
    }
    return std::nullopt;
}

std::optional<ChainPosition> Region::position(const Point& p) const
{
    for (int j = 0; j < static_cast<int>(cells_.size()); ++j)
        if (auto pos = position_on(j, p))
            return pos;
    return std::nullopt;
}

Point Region::point_at(const ChainPosition& pos) const
{
    const ChainPiece& pc = piece(pos.cell, pos.piece);
    return lerp(inst_.polygon.edge_start(pc.edge), inst_.polygon.edge_end(pc.edge), pc.lambda_at(pos.tau));
}

bool Region::tangent_ok(const Cell& c, const Point& z, bool forward) const
{
    if (c.sp_chain.size() == 1)
        return z != c.sp_chain[0] && plain_->segment_in_closure(z, c.sp_chain[0]);
    TangentPair tp;
    try {
        tp = tangents_to_chain(z, c.sp_chain, *plain_);
    } catch (const NoTangent&) {
        return false;
    }
    // forward tangent: right for right-turning stretches, left otherwise. It
    // never touches the first chain point, the backward one never the last. A
    // spiralling chain can offer several candidates; one inside P suffices.
    bool want_right = forward == (c.turn == Orientation::Right);
    const auto& all = want_right ? tp.all_right : tp.all_left;
    int banned = forward ? 0 : static_cast<int>(c.sp_chain.size()) - 1;
    return std::any_of(all.begin(), all.end(), [&](const Tangent& t) { return t.inside && t.index != banned; });
}

bool Region::both_tangents_ok(const Cell& c, const Point& z) const
{
    return tangent_ok(c, z, true) && tangent_ok(c, z, false);
}

unsigned Region::zones_at(int cell, int pc, const Scalar& lambda) const
{
    const Cell& c = cells_[static_cast<size_t>(cell)];
    const ChainPiece& piece = c.pieces[static_cast<size_t>(pc)];
    if (!piece.range().contains(lambda))
        return 0;
    const Polygon& P = inst_.polygon;
    Point z = lerp(P.edge_start(piece.edge), P.edge_end(piece.edge), lambda);
    ChainPosition pos{cell, pc, piece.tau(lambda)};
    bool has_entry = c.entry_eave >= 0, has_exit = c.exit_eave >= 0;
    bool in_entry = has_entry && pos <= *c.entry_limit;
    bool in_exit = has_exit && pos >= *c.exit_limit;
    bool in_middle = !(has_entry && pos < *c.entry_limit) && !(has_exit && pos > *c.exit_limit);
    unsigned zones = 0;
    if (in_middle && both_tangents_ok(c, z))
        zones |= ZoneMiddle;
    if (in_entry && tangent_ok(c, z, true)) {
        const EaveInfo& ev = eaves_[static_cast<size_t>(c.entry_eave)];
        if (witness_on(*plain_, LinkEnd{z, piece.edge, false}, Carrier::segment(ev.a, ev.b), closed_unit()))
            zones |= ZoneEntry;
    }
    if (in_exit && tangent_ok(c, z, false)) {
        const EaveInfo& ev = eaves_[static_cast<size_t>(c.exit_eave)];
        if (witness_on(*plain_, LinkEnd{z, piece.edge, false}, Carrier::segment(ev.a, ev.b), closed_unit()))
            zones |= ZoneExit;
    }
    return zones;
}

void Region::build_ecv()
{
    const Polygon& P = inst_.polygon;
    std::vector<Point> blockers;
    for (int i : P.blockers())
        blockers.push_back(P[i]);
    ecv_.assign(cells_.size(), {});
    for (auto& c : cells_) {
        auto& out = ecv_[static_cast<size_t>(c.index)];
        for (int k = 0; k < static_cast<int>(c.pieces.size()); ++k) {
            const ChainPiece& pc = c.pieces[static_cast<size_t>(k)];
            const Point &A = P.edge_start(pc.edge), &B = P.edge_end(pc.edge);
            IntervalSet range = pc.range();
            Scalar lo = std::min(pc.from, pc.to), hi = std::max(pc.from, pc.to);
            std::vector<Scalar> crit{lo, hi};
            auto add_line = [&](const Point& p, const Point& q) {
                if (p == q)
                    return;
                auto t = line_param(A, B, p, q);
                if (t && lo <= *t && *t <= hi)
                    crit.push_back(*t);
            };
            const auto& C = c.sp_chain;
            for (size_t i = 0; i + 1 < C.size(); ++i)
                add_line(C[i], C[i + 1]);
            for (auto& u : C)
                for (auto& v : blockers)
                    add_line(u, v);
            for (const auto& lim : {c.entry_limit, c.exit_limit})
                if (lim && lim->piece == k)
                    crit.push_back(pc.lambda_at(lim->tau));
            std::sort(crit.begin(), crit.end());
            crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

            IntervalSet eave_entry, eave_exit;
            if (c.entry_eave >= 0) {
                const EaveInfo& ev = eaves_[static_cast<size_t>(c.entry_eave)];
                eave_entry = weak_visible(*plain_, Carrier::segment(ev.a, ev.b), closed_unit(), Carrier::edge(P, pc.edge), range);
            }
            if (c.exit_eave >= 0) {
                const EaveInfo& ev = eaves_[static_cast<size_t>(c.exit_eave)];
                eave_exit = weak_visible(*plain_, Carrier::segment(ev.a, ev.b), closed_unit(), Carrier::edge(P, pc.edge), range);
            }

            IntervalSet mid, ent, ext;
            auto classify = [&](const Interval& iv, const Scalar& rep) {
                if (!range.contains(rep))
                    return;
                Point z = lerp(A, B, rep);
                ChainPosition pos{c.index, k, pc.tau(rep)};
                bool has_entry = c.entry_eave >= 0, has_exit = c.exit_eave >= 0;
                bool in_entry = has_entry && pos <= *c.entry_limit;
                bool in_exit = has_exit && pos >= *c.exit_limit;
                bool in_middle = !(has_entry && pos < *c.entry_limit) && !(has_exit && pos > *c.exit_limit);
                if (in_middle && both_tangents_ok(c, z))
                    mid.add(iv);
                if (in_entry && tangent_ok(c, z, true))
                    ent.unite(eave_entry.intersected(iv));
                if (in_exit && tangent_ok(c, z, false))
                    ext.unite(eave_exit.intersected(iv));
            };
            for (size_t i = 0; i < crit.size(); ++i) {
                classify(Interval::point(crit[i]), crit[i]);
                if (i + 1 < crit.size())
                    classify(Interval::open(crit[i], crit[i + 1]), (crit[i] + crit[i + 1]) / 2);
            }
            IntervalSet all = mid.united(ent).united(ext);
            out.push_back(all);
            std::vector<BcvInterval> local;
            for (auto& part : all.parts()) {
                BcvInterval bi;
                bi.cell = c.index;
                bi.piece = k;
                bi.edge = pc.edge;
                bi.lambda = part;
                Scalar rep = part.interior_point();
                bi.zones = (mid.contains(rep) ? ZoneMiddle : 0u) | (ent.contains(rep) ? ZoneEntry : 0u) |
                           (ext.contains(rep) ? ZoneExit : 0u);
                Scalar t0 = pc.tau(part.lo), t1 = pc.tau(part.hi);
                bi.lo = {c.index, k, std::min(t0, t1)};
                bi.hi = {c.index, k, std::max(t0, t1)};
                local.push_back(bi);
            }
            if (!pc.forward())
                std::reverse(local.begin(), local.end());
            bcv_.intervals.insert(bcv_.intervals.end(), local.begin(), local.end());
        }
    }
}

const IntervalSet& Region::ecv(int cell, int piece) const
{
    return ecv_[static_cast<size_t>(cell)][static_cast<size_t>(piece)];
}

std::vector<Region::MembershipCheck> Region::membership_checks() const
{
    std::vector<MembershipCheck> out;
    if (!eaves_.empty() || sp_.interior_count() == 0)
        return out;
    const Polygon& P = inst_.polygon;
    const Cell& c = cells_.front();
    std::vector<int> on_sp;
    for (auto& w : sp_.pts)
        if (w.vertex >= 0)
            on_sp.push_back(w.vertex);
    auto in_sp = [&](int v) { return v < 0 || std::find(on_sp.begin(), on_sp.end(), v) != on_sp.end(); };
    ShortestPathTree ts = shortest_path_tree(P, tri_, inst_.source);
    ShortestPathTree tt = shortest_path_tree(P, tri_, inst_.target);
    for (size_t k = 0; k + 1 < c.pieces.size(); ++k) {
        const ChainPiece& pc = c.pieces[k];
        int v = pc.forward() ? P.next(pc.edge) : pc.edge;
        if (std::find(on_sp.begin(), on_sp.end(), v) != on_sp.end())
            continue;
        // vertices touched by SP(s,t) itself lie on the region boundary
        bool on_path = false;
        for (size_t i = 0; i + 1 < sp_.pts.size(); ++i)
            on_path = on_path || on_segment(P[v], sp_.pts[i].p, sp_.pts[i + 1].p);
        if (on_path)
            continue;
        MembershipCheck mc;
        mc.vertex = v;
        mc.by_tangents = both_tangents_ok(c, P[v]);
        mc.by_trees = in_sp(ts.parent[static_cast<size_t>(v)]) && in_sp(tt.parent[static_cast<size_t>(v)]);
        out.push_back(mc);
    }
    return out;
}

BoundaryChains boundary_chains(const Region& region)
{
    BoundaryChains bc;
    const Polygon& P = region.polygon();
    bc.clockwise = boundary_walk(P, region.anchor_s(), region.anchor_t(), true);
    bc.counterclockwise = boundary_walk(P, region.anchor_s(), region.anchor_t(), false);
    return bc;
}

}  // namespace rp
