#pragma once

#include "mirror.h"

#include <stdexcept>
#include <string>
#include <vector>

namespace rp {

enum class PathIssue {
    Degenerate,          // fewer than two points or a zero-length link
    EndpointMismatch,    // does not run from s to t
    TurnNotOnBoundary,
    TurnAtVertex,
    LinkOutsidePolygon,
    AlongEdge,           // link leaves a turning point along or outside its edge
    NonEaveCrossing,     // meets a non-eave SP edge, an SP vertex or an extension wall
    EaveCrossCount,      // some eave not crossed exactly once
    SelfIntersection,
    TurnDirection,       // turn does not match its stretch of SP(s,t)
    Order,               // turning points not on the reflecting chains in chain order
};
const char* to_string(PathIssue issue);

struct ValidityReport {
    struct Entry {
        PathIssue issue;
        std::string detail;
    };
    std::vector<Entry> entries;
    bool ok() const { return entries.empty(); }
    bool has(PathIssue issue) const;
    std::string summary() const;
};

struct EaveCrossing {
    int eave = -1;
    int link = -1;  // link i joins points i and i+1
    Point point;
};

struct ReflectionPath {
    std::vector<Point> points;          // s, z_1 .. z_p, t
    std::vector<BoundaryPoint> turns;   // z_1 .. z_p
    std::vector<Orientation> turn_dir;  // at z_1 .. z_p
    std::vector<EaveCrossing> crossings;
    std::vector<int> layer;             // mirror layer of each turn, when extracted

    int turn_count() const { return static_cast<int>(points.size()) - 2; }
    double length() const;
    // exact text listing, one item per line
    std::string str() const;
};

ValidityReport validate_path(const std::vector<Point>& points, const Region& region);
// fills turns, directions and eave crossings; turning points must be on bd(P)
ReflectionPath annotate_path(const std::vector<Point>& points, const Region& region);

class ExtractionFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Backward scan from t over layers k..1 of a system that reached t.
ReflectionPath extract_path(const Region& region, const MirrorSystem& sys);

}  // namespace rp
