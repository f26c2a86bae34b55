#include "svg.h"

#include <sstream>

namespace rp {

namespace {

const char* layer_colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf"};

// fixed decimal text of exact coordinates; y is flipped by the outer group
std::string xy(const Point& p) { return decimal_string(p.x()) + "," + decimal_string(p.y()); }

std::string line(const Point& a, const Point& b, const std::string& style)
{
    return "<line x1=\"" + decimal_string(a.x()) + "\" y1=\"" + decimal_string(a.y()) + "\" x2=\"" + decimal_string(b.x()) +
           "\" y2=\"" + decimal_string(b.y()) + "\" " + style + "/>";
}

}  // namespace

std::string render_svg(const Region& region, const MirrorSystem& sys, const std::optional<ReflectionPath>& path)
{
    const Polygon& P = region.polygon();
    double x0 = to_double(P[0].x()), x1 = x0, y0 = to_double(P[0].y()), y1 = y0;
    for (auto& v : P.vertices()) {
        x0 = std::min(x0, to_double(v.x()));
        x1 = std::max(x1, to_double(v.x()));
        y0 = std::min(y0, to_double(v.y()));
        y1 = std::max(y1, to_double(v.y()));
    }
    double w = x1 - x0, h = y1 - y0, pad = 0.05 * std::max(w, h);
    double stroke = 0.004 * std::max(w, h);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 - pad << " " << -(y1 + pad) << " " << w + 2 * pad << " "
       << h + 2 * pad << "\" width=\"800\" height=\"" << static_cast<int>(800 * (h + 2 * pad) / (w + 2 * pad)) << "\">\n";
    os << "<g transform=\"scale(1,-1)\" stroke-width=\"" << stroke << "\" fill=\"none\">\n";

    os << "<g id=\"polygon\"><polygon points=\"";
    for (int i = 0; i < P.size(); ++i)
        os << (i ? " " : "") << xy(P[i]);
    os << "\" fill=\"#f4f4f4\" stroke=\"#000000\"/></g>\n";

    os << "<g id=\"shortest-path\">\n";
    const auto& sp = region.sp();
    for (size_t i = 0; i + 1 < sp.pts.size(); ++i) {
        bool eave = sp.is_eave(static_cast<int>(i));
        os << line(sp.pts[i].p, sp.pts[i + 1].p,
                   eave ? "stroke=\"#e00000\" stroke-dasharray=\"" + std::to_string(4 * stroke) + "\" class=\"eave\""
                        : std::string("stroke=\"#888888\""))
           << "\n";
    }
    os << "</g>\n";

    for (size_t L = 0; L < sys.layers.size(); ++L) {
        const char* color = layer_colors[L % (sizeof layer_colors / sizeof *layer_colors)];
        os << "<g id=\"layer-" << L + 1 << "\" class=\"mirror-layer\" stroke=\"" << color << "\" stroke-width=\"" << 3 * stroke
           << "\">\n";
        for (int id : sys.layers[L]) {
            const Mirror& m = sys.mirror(id);
            Point a = lerp(P.edge_start(m.edge), P.edge_end(m.edge), m.lambda.lo);
            Point b = lerp(P.edge_start(m.edge), P.edge_end(m.edge), m.lambda.hi);
            os << line(a, b, "") << "\n";
        }
        os << "</g>\n";
    }

    if (path) {
        os << "<g id=\"path\" stroke=\"#000000\"><polyline points=\"";
        for (size_t i = 0; i < path->points.size(); ++i)
            os << (i ? " " : "") << xy(path->points[i]);
        os << "\"/></g>\n";
    }
    const Instance& inst = region.instance();
    os << "<g id=\"endpoints\" stroke=\"none\">";
    for (auto* p : {&inst.source, &inst.target})
        os << "<circle cx=\"" << decimal_string(p->x()) << "\" cy=\"" << decimal_string(p->y()) << "\" r=\"" << 3 * stroke
           << "\" fill=\"" << (p == &inst.source ? "#008000" : "#c00000") << "\"/>";
    os << "</g>\n</g>\n</svg>\n";
    return os.str();
}

}  // namespace rp
