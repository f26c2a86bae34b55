#pragma once

#include "instance.h"

#include <array>
#include <stdexcept>
#include <vector>

namespace rp {

struct Triangle {
    std::array<int, 3> v;    // counterclockwise polygon vertex indices
    std::array<int, 3> nbr;  // triangle across edge (v[i], v[i+1]), or -1
};

struct Triangulation {
    std::vector<Triangle> tris;
};

Triangulation triangulate(const Polygon& poly);

class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Waypoint {
    Point p;
    int vertex = -1;  // polygon vertex index, if any
};

struct ShortestPath {
    std::vector<Waypoint> pts;        // s, u_1..u_m, t
    std::vector<Orientation> turn;    // turn[i] at pts[i]; Collinear at the two ends
    std::vector<int> eaves;           // i such that pts[i] pts[i+1] is an eave

    int interior_count() const { return static_cast<int>(pts.size()) - 2; }
    bool is_eave(int i) const;
    double length() const;
};

ShortestPath shortest_path(const Polygon& poly, const Triangulation& tri, const Point& s, const Point& t);
ShortestPath shortest_path(const Instance& inst);

struct ShortestPathTree {
    Point root;
    std::vector<int> parent;                // -1 means the root itself
    std::vector<std::vector<int>> chain;    // vertex indices from root (exclusive) to v (inclusive)
};

ShortestPathTree shortest_path_tree(const Polygon& poly, const Triangulation& tri, const Point& root);
ShortestPathTree shortest_path_tree(const Polygon& poly, const Point& root);

// Both eave tests, cross-checked. Throws InternalInconsistency on disagreement.
std::vector<int> detect_eaves(const ShortestPath& sp, const Polygon& poly);
// diagonal u_i u_{i+1} splits P with s and t on different sides
bool separates(const Polygon& poly, int a, int b, const Point& s, const Point& t);

}  // namespace rp
