#pragma once

#include "geom.h"

#include <array>
#include <string>
#include <vector>

namespace rp {

enum class VertexKind { Convex, Reflex, Flat };

struct ValidationIssue {
    std::string code;   // "too-few-vertices", "orientation", "self-intersection", "repeated-vertex"
    std::vector<int> indices;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

class Polygon {
public:
    Polygon() = default;
    explicit Polygon(std::vector<Point> vertices);

    int size() const { return static_cast<int>(v_.size()); }
    const Point& operator[](int i) const { return v_[static_cast<size_t>(i)]; }
    const std::vector<Point>& vertices() const { return v_; }
    int next(int i) const { return i + 1 == size() ? 0 : i + 1; }
    int prev(int i) const { return i == 0 ? size() - 1 : i - 1; }

    // edge i runs from vertex i to vertex i+1
    const Point& edge_start(int e) const { return v_[static_cast<size_t>(e)]; }
    const Point& edge_end(int e) const { return v_[static_cast<size_t>(next(e))]; }
    Segment edge(int e) const { return {edge_start(e), edge_end(e)}; }

    VertexKind kind(int i) const { return kind_[static_cast<size_t>(i)]; }
    bool reflex(int i) const { return kind(i) == VertexKind::Reflex; }
    // reflex or flat: the vertices a sightline can wrap around
    const std::vector<int>& blockers() const { return blockers_; }

    Scalar signed_area2() const;

    // bounding box of edge e in doubles
    const std::array<double, 4>& edge_box(int e) const { return box_[static_cast<size_t>(e)]; }

private:
    std::vector<Point> v_;
    std::vector<VertexKind> kind_;
    std::vector<int> blockers_;
    std::vector<std::array<double, 4>> box_;
};

ValidationReport validate(const Polygon& poly);

enum class LocationKind { Outside, Inside, OnEdge, OnVertex };

struct Location {
    LocationKind kind = LocationKind::Outside;
    int index = -1;   // edge for OnEdge, vertex for OnVertex
    Scalar lambda;    // OnEdge only
    bool in_closure() const { return kind != LocationKind::Outside; }
    bool on_boundary() const { return kind == LocationKind::OnEdge || kind == LocationKind::OnVertex; }
};

Location locate(const Polygon& poly, const Point& p);
// closed point-in-polygon for an arbitrary ring (any orientation)
bool ring_contains(const std::vector<Point>& ring, const Point& p);
Scalar ring_area2(const std::vector<Point>& ring);

// Exact position on the boundary; lambda in [0,1) after normalization.
struct BoundaryPoint {
    int edge = -1;
    Scalar lambda;
    Point point;

    bool at_vertex() const { return lambda == 0; }
    bool operator==(const BoundaryPoint& o) const { return edge == o.edge && lambda == o.lambda; }
};

BoundaryPoint boundary_point(const Polygon& poly, int edge, const Scalar& lambda);
BoundaryPoint boundary_point_at_vertex(const Polygon& poly, int vertex);
// p must lie on bd(P)
BoundaryPoint boundary_point_of(const Polygon& poly, const Point& p);

}  // namespace rp
