#pragma once

#include "intervals.h"
#include "polygon.h"

#include <optional>
#include <stdexcept>
#include <vector>

namespace rp {

// One end of a link. A turning point carries its host edge: the link must
// leave strictly into the interior side of that edge.
struct LinkEnd {
    Point p;
    int host = -1;
    bool may_touch_walls = false;  // s or t: walls may be touched at this point only
};

// Closure of a polygon, optionally with extra walls (segments or points)
// that links may not touch.
class VisDomain {
public:
    explicit VisDomain(const Polygon& poly);
    VisDomain(const Polygon& poly, std::vector<Segment> walls);

    const Polygon& polygon() const { return *poly_; }
    const std::vector<Segment>& walls() const { return walls_; }
    // reflex/flat vertices and wall endpoints
    const std::vector<Point>& blockers() const { return blockers_; }

    // closed segment ab inside closure(P); a, b are assumed in closure(P)
    bool segment_in_closure(const Point& a, const Point& b) const;
    // segment avoids all walls except at ends flagged may_touch_walls
    bool clear_of_walls(const LinkEnd& x, const LinkEnd& y) const;
    // full link rule: distinct ends, inside closure(P), walls, host-edge rules
    bool admissible(const LinkEnd& x, const LinkEnd& y) const;

    struct Line {
        Point p, q;
    };
    // lines through pairs of blockers, used as critical sightlines
    const std::vector<Line>& blocker_lines() const { return lines_; }

private:
    const Polygon* poly_;
    std::vector<Segment> walls_;
    std::vector<Point> blockers_;
    std::vector<Line> lines_;
    void init();
};

// A straight carrier for a set of candidate points: a polygon edge (points
// are turning points hosted by it), a free segment, or a single point.
struct Carrier {
    Point a, b;
    int host = -1;
    bool may_touch_walls = false;

    static Carrier edge(const Polygon& poly, int e) { return {poly.edge_start(e), poly.edge_end(e), e, false}; }
    static Carrier segment(const Point& a, const Point& b) { return {a, b, -1, false}; }
    static Carrier point(const Point& p, int host = -1, bool may_touch = false) { return {p, p, host, may_touch}; }

    bool degenerate() const { return a == b; }
    Point at(const Scalar& t) const { return lerp(a, b, t); }
    LinkEnd end_at(const Scalar& t) const { return {at(t), host, may_touch_walls}; }
};

enum class Exec { Serial, Parallel };
void set_default_exec(Exec e);
Exec default_exec();

// Parameters t in `range` (on target carrier T) such that some point of
// `source` (parameters on carrier S) has an admissible link to T(t).
IntervalSet weak_visible(const VisDomain& dom, const Carrier& S, const IntervalSet& source, const Carrier& T,
                         const IntervalSet& range);
IntervalSet weak_visible(const VisDomain& dom, const Carrier& S, const IntervalSet& source, const Carrier& T,
                         const IntervalSet& range, Exec exec);

// Parameters on S from which the point y is reachable by an admissible link.
IntervalSet visible_from_point(const VisDomain& dom, const LinkEnd& y, const Carrier& S, const IntervalSet& source);
// Just a witness parameter, if any.
std::optional<Scalar> witness_on(const VisDomain& dom, const LinkEnd& y, const Carrier& S, const IntervalSet& source);

class NoHit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Where the ray from origin through `through` leaves closure(P): the first
// boundary point strictly beyond `through` past which the ray is outside.
// Grazing contacts that keep the ray in the closure are passed over. Edges
// listed in skip_edges are ignored.
BoundaryPoint ray_first_boundary_hit(const Polygon& poly, const Point& origin, const Point& through,
                                     const std::vector<int>& skip_edges = {});

struct VisibilityRegion {
    Point kernel;
    std::vector<Point> ring;  // counterclockwise, may contain collinear points
};

VisibilityRegion visibility_polygon(const Polygon& poly, const Point& from);

class NoTangent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Tangent {
    int index = -1;      // chain position touched
    Point touch;
    bool inside = false;  // segment from the point to `touch` lies in closure(P)
};

struct TangentPair {
    std::optional<Tangent> left, right;       // first candidate along the chain
    std::vector<Tangent> all_left, all_right;  // every candidate, in chain order
};

// Tangents from p to the chain u_0..u_m: pu_i is a left (right) tangent when
// the chain neighbours of u_i lie strictly left (right) of the ray p->u_i.
// A neighbour on the line p u_i is tolerated (the ray grazes that chain edge).
TangentPair tangents_to_chain(const Point& p, const std::vector<Point>& chain, const Polygon& poly);
// same, reusing a prepared domain (walls are ignored for the inside test)
TangentPair tangents_to_chain(const Point& p, const std::vector<Point>& chain, const VisDomain& dom);

// parameters of the open interior of edge e, i.e. (0,1)
IntervalSet open_unit();
IntervalSet closed_unit();

}  // namespace rp
