#pragma once

#include "shortest_path.h"
#include "visibility.h"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rp {

class AnchorUndefined : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Portion of one polygon edge on a chain, in traversal order.
struct ChainPiece {
    int edge = -1;
    Scalar from, to;  // edge parameters at the start and end of the piece
    // open range of turning-point parameters (absorbed at vertices and anchors)
    IntervalSet range() const;
    // chain-order key of an edge parameter inside the piece, in [0,1]
    Scalar tau(const Scalar& lambda) const;
    Scalar lambda_at(const Scalar& tau) const;
    bool forward() const { return from < to; }
};

// Total order along the reflecting chains: cell, then piece, then position.
struct ChainPosition {
    int cell = 0;
    int piece = 0;
    Scalar tau;
    auto operator<=>(const ChainPosition& o) const
    {
        if (cell != o.cell)
            return cell <=> o.cell;
        if (piece != o.piece)
            return piece <=> o.piece;
        int c = cmp(tau, o.tau);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    bool operator==(const ChainPosition& o) const { return cell == o.cell && piece == o.piece && tau == o.tau; }
    std::string str() const;
};

struct EaveInfo {
    int sp_index = -1;  // eave is SP edge pts[i] pts[i+1]
    Point a, b;         // a = pts[i], b = pts[i+1]
    BoundaryPoint foot_a;  // extension beyond a
    BoundaryPoint foot_b;  // extension beyond b
};

// One eave-free stretch of SP(s,t) and the chain its turning points use.
struct Cell {
    int index = 0;
    Orientation turn = Orientation::Right;  // direction of SP turns, and of every cdrp turn here
    bool clockwise = true;                  // chain is bd_c (clockwise) or bd_cc
    std::vector<Point> sp_chain;            // SP sub-chain used for tangents
    BoundaryPoint start, end;
    std::vector<ChainPiece> pieces;
    int entry_eave = -1;  // eave crossed to enter this cell
    int exit_eave = -1;   // eave crossed to leave it
    // zone limits along the chain (feet of the eave extensions)
    std::optional<ChainPosition> entry_limit, exit_limit;
};

enum ZoneTag : unsigned { ZoneMiddle = 1, ZoneEntry = 2, ZoneExit = 4 };

struct BcvInterval {
    int cell = 0, piece = 0, edge = -1;
    Interval lambda;
    unsigned zones = 0;  // ZoneTag bits whose conditions hold here
    ChainPosition lo, hi;
};

struct Bcv {
    std::vector<BcvInterval> intervals;  // in chain order
    bool empty() const { return intervals.empty(); }
};

// The constrained domain of an instance: SP(s,t), eaves, walls, anchors and
// the reflecting chains, with the complete-visibility restriction per piece.
class Region {
public:
    explicit Region(const Instance& inst);
    Region(const Region&) = delete;
    Region& operator=(const Region&) = delete;

    const Instance& instance() const { return inst_; }
    const Polygon& polygon() const { return inst_.polygon; }
    const ShortestPath& sp() const { return sp_; }
    const Triangulation& triangulation() const { return tri_; }
    const std::vector<EaveInfo>& eaves() const { return eaves_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const BoundaryPoint& anchor_s() const { return anchor_s_; }
    const BoundaryPoint& anchor_t() const { return anchor_t_; }

    // polygon plus walls: non-eave SP edges, SP vertices, s/t extensions
    const VisDomain& walled() const { return *walled_; }
    // polygon alone
    const VisDomain& plain() const { return *plain_; }
    const std::vector<Segment>& walls() const { return walls_; }

    // position of a boundary point on the chains, if it lies on one
    std::optional<ChainPosition> position(const Point& p) const;
    std::optional<ChainPosition> position_on(int cell, const Point& p) const;
    Point point_at(const ChainPosition& pos) const;
    const ChainPiece& piece(int cell, int piece) const { return cells_[static_cast<size_t>(cell)].pieces[static_cast<size_t>(piece)]; }

    // membership of a boundary point in the extended complete-visibility region
    unsigned zones_at(int cell, int piece, const Scalar& lambda) const;
    // per piece: parameters of the piece inside ECV
    const IntervalSet& ecv(int cell, int piece) const;
    const Bcv& bcv() const { return bcv_; }

    struct MembershipCheck {
        int vertex;
        bool by_tangents, by_trees;
    };
    // vertex membership in CV by the tangent test and by shortest-path-tree
    // parents (no-eave instances); both results per chain vertex
    std::vector<MembershipCheck> membership_checks() const;

private:
    Instance inst_;
    Triangulation tri_;
    ShortestPath sp_;
    std::vector<EaveInfo> eaves_;
    std::vector<Cell> cells_;
    BoundaryPoint anchor_s_, anchor_t_;
    std::vector<Segment> walls_;
    std::unique_ptr<VisDomain> walled_, plain_;
    std::vector<std::vector<IntervalSet>> ecv_;
    Bcv bcv_;

    void build_anchors();
    void build_cells();
    void build_walls();
    void build_ecv();
    bool tangent_ok(const Cell& c, const Point& z, bool forward) const;
    bool both_tangents_ok(const Cell& c, const Point& z) const;
};

// walk bd(P) from a to b, clockwise or counterclockwise, as edge pieces
std::vector<ChainPiece> boundary_walk(const Polygon& poly, const BoundaryPoint& a, const BoundaryPoint& b, bool clockwise);

// bd_c and bd_cc between the anchors of the instance
struct BoundaryChains {
    std::vector<ChainPiece> clockwise, counterclockwise;
};
BoundaryChains boundary_chains(const Region& region);

}  // namespace rp
