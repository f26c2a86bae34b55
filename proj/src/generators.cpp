#include "generators.h"

#include "shortest_path.h"
#include "visibility.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace rp {

namespace {

// portable draws; std distributions differ between standard libraries
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    long below(long n) { return static_cast<long>(eng() % static_cast<uint64_t>(n)); }
};

bool untangle(std::vector<Point>& pts, int budget)
{
    int n = static_cast<int>(pts.size());
    for (int step = 0; step < budget; ++step) {
        bool moved = false;
        for (int i = 0; i < n && !moved; ++i) {
            for (int j = i + 2; j < n && !moved; ++j) {
                if (i == 0 && j == n - 1)
                    continue;
                const Point &a = pts[static_cast<size_t>(i)], &b = pts[static_cast<size_t>(i + 1)];
                const Point &c = pts[static_cast<size_t>(j)], &d = pts[static_cast<size_t>((j + 1) % n)];
                if (segments_meet(a, b, c, d)) {
                    std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
                    moved = true;
                }
            }
        }
        if (!moved)
            return true;
    }
    return false;
}

Point half_point(Rng& rng, int range)
{
    return Point(Scalar(2 * rng.below(range) + 1, 2), Scalar(2 * rng.below(range) + 1, 2));
}

}  // namespace

Instance gen_random_simple(const RandomSpec& cfg)
{
    if (cfg.n < 3)
        throw GenerationFailure("random polygon needs n >= 3");
    Rng rng(cfg.seed * 0x9E3779B97F4A7C15ULL + 17);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::set<std::pair<long, long>> used;
        std::vector<Point> pts;
        while (static_cast<int>(pts.size()) < cfg.n) {
            long x = rng.below(cfg.coord_range), y = rng.below(cfg.coord_range);
            if (used.insert({x, y}).second)
                pts.emplace_back(x, y);
        }
        if (!untangle(pts, cfg.untangle_budget))
            continue;
        if (ring_area2(pts) < 0)
            std::reverse(pts.begin(), pts.end());
        Polygon poly(pts);
        if (!validate(poly).ok())
            continue;
        VisDomain dom(poly);
        Instance inst;
        inst.polygon = poly;
        bool found = false;
        Point s, t;
        for (int tries = 0; tries < 400 && !found; ++tries) {
            Point a = half_point(rng, cfg.coord_range), b = half_point(rng, cfg.coord_range);
            if (a == b || locate(poly, a).kind != LocationKind::Inside || locate(poly, b).kind != LocationKind::Inside)
                continue;
            s = a;
            t = b;
            // prefer endpoints that do not see each other
            if (!dom.segment_in_closure(a, b) || tries > 300)
                found = true;
        }
        if (!found)
            continue;
        inst.source = s;
        inst.target = t;
        inst.name = "random-n" + std::to_string(cfg.n) + "-s" + std::to_string(cfg.seed);
        return inst;
    }
    throw GenerationFailure("random polygon generation exhausted its retries");
}

Instance gen_random_simple(int n, uint64_t seed)
{
    RandomSpec cfg;
    cfg.n = n;
    cfg.seed = seed;
    return gen_random_simple(cfg);
}

Instance gen_convex(int n, uint64_t seed)
{
    Rng rng(seed + 99);
    // vertices of a convex polygon from sorted random edge vectors
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<std::pair<long, long>> vecs;
        long sx = 0, sy = 0;
        for (int i = 0; i < n - 1; ++i) {
            long dx = rng.below(41) - 20, dy = rng.below(41) - 20;
            if (dx == 0 && dy == 0)
                dx = 1;
            vecs.push_back({dx, dy});
            sx += dx;
            sy += dy;
        }
        vecs.push_back({-sx, -sy});
        if (vecs.back().first == 0 && vecs.back().second == 0)
            continue;
        auto angle_less = [](const std::pair<long, long>& a, const std::pair<long, long>& b) {
            auto half = [](const std::pair<long, long>& v) { return v.second < 0 || (v.second == 0 && v.first < 0); };
            bool ha = half(a), hb = half(b);
            if (ha != hb)
                return !ha;
            return a.first * b.second - a.second * b.first > 0;
        };
        std::sort(vecs.begin(), vecs.end(), angle_less);
        std::vector<Point> pts;
        long x = 0, y = 0;
        for (auto& v : vecs) {
            pts.emplace_back(x, y);
            x += v.first;
            y += v.second;
        }
        Polygon poly(pts);
        if (!validate(poly).ok() || !poly.blockers().empty())
            continue;
        Instance inst;
        inst.polygon = poly;
        // endpoints: centroid-ish interior points
        Scalar cx = 0, cy = 0;
        for (auto& p : pts) {
            cx += p.x();
            cy += p.y();
        }
        cx /= n;
        cy /= n;
        Point c(cx, cy);
        inst.source = midpoint(c, pts[0]);
        inst.target = midpoint(c, pts[static_cast<size_t>(n / 2)]);
        if (inst.source == inst.target)
            continue;
        inst.name = "convex-n" + std::to_string(n) + "-s" + std::to_string(seed);
        return inst;
    }
    throw GenerationFailure("convex generation failed");
}

namespace {

// tip, outer convex chain, tip, inner reflex chain; angles in degrees
std::vector<Point> spiral_ring(int per_chain, double step_deg, double inner_ratio, double growth, double scale)
{
    const double pi = 3.14159265358979323846;
    auto at = [&](double deg, double radius) {
        double th = deg * pi / 180.0;
        double r = scale * radius * std::exp(growth * th);
        return Point(std::lround(r * std::cos(th)), std::lround(r * std::sin(th)));
    };
    double mid = (1.0 + inner_ratio) / 2;
    std::vector<Point> ring;
    ring.push_back(at(0, mid));
    for (int j = 1; j <= per_chain; ++j)
        ring.push_back(at(j * step_deg, 1.0));
    ring.push_back(at((per_chain + 1) * step_deg, mid));
    for (int j = per_chain; j >= 1; --j)
        ring.push_back(at(j * step_deg, inner_ratio));
    return ring;
}

bool spiral_shape_ok(const Polygon& poly, int per_chain)
{
    if (!validate(poly).ok())
        return false;
    for (int j = 1; j <= per_chain; ++j)
        if (poly.kind(j) != VertexKind::Convex || !poly.reflex(per_chain + 1 + j))
            return false;
    return poly.kind(0) == VertexKind::Convex && poly.kind(per_chain + 1) == VertexKind::Convex;
}

}  // namespace

Instance gen_spiral(int n)
{
    if (n < 6 || n % 2 != 0)
        throw GenerationFailure("spiral needs an even n >= 6");
    int per_chain = (n - 2) / 2;
    // a wide band while the spiral is short, narrow once it winds, so each
    // link clears only a little more than one reflex vertex
    double inner = n <= 8 ? 0.75 : 0.82;
    std::vector<Point> ring = spiral_ring(per_chain, 45.0, inner, 0.05, 1000.0);
    Polygon poly(ring);
    if (!spiral_shape_ok(poly, per_chain))
        throw GenerationFailure("spiral rounding broke the chain shape");
    Instance inst;
    inst.name = "spiral-n" + std::to_string(n);
    inst.polygon = poly;
    inst.source = ring[0];
    inst.target = ring[static_cast<size_t>(per_chain + 1)];
    return inst;
}

Instance gen_winding_spiral(int n)
{
    if (n < 6 || n % 2 != 0)
        throw GenerationFailure("winding spiral needs an even n >= 6");
    int per_chain = (n - 2) / 2;
    std::vector<Point> ring = spiral_ring(per_chain, 40.0, 0.85, 0.05, 4000.0);
    Polygon poly(ring);
    if (!spiral_shape_ok(poly, per_chain))
        throw GenerationFailure("spiral rounding broke the chain shape");
    Instance inst;
    inst.name = "winding-spiral-n" + std::to_string(n);
    inst.polygon = poly;
    // interior endpoints just inside the two tips
    inst.source = midpoint(ring[0], midpoint(ring[1], ring.back()));
    inst.target = midpoint(ring[static_cast<size_t>(per_chain + 1)],
                           midpoint(ring[static_cast<size_t>(per_chain)], ring[static_cast<size_t>(per_chain + 2)]));
    return inst;
}

Instance gen_corridor(int eaves)
{
    if (eaves < 0)
        throw GenerationFailure("corridor needs eaves >= 0");
    const long L = 10, h = 2;
    int corners = eaves + 1;
    // staircase spine: right, up, right, up, ...
    std::vector<std::pair<long, long>> spine{{0, 0}};
    for (int i = 0; i <= corners; ++i) {
        auto [x, y] = spine.back();
        spine.push_back(i % 2 == 0 ? std::make_pair(x + L, y) : std::make_pair(x, y + L));
    }
    bool last_horizontal = corners % 2 == 0;
    std::vector<Point> lower, upper;
    lower.emplace_back(0, -h);
    upper.emplace_back(0, h);
    for (int i = 1; i <= corners; ++i) {
        auto [x, y] = spine[static_cast<size_t>(i)];
        lower.emplace_back(x + h, y - h);
        upper.emplace_back(x - h, y + h);
    }
    auto [ex, ey] = spine.back();
    if (last_horizontal) {
        lower.emplace_back(ex, ey - h);
        upper.emplace_back(ex, ey + h);
    } else {
        lower.emplace_back(ex + h, ey);
        upper.emplace_back(ex - h, ey);
    }
    std::vector<Point> ring = lower;
    ring.insert(ring.end(), upper.rbegin(), upper.rend());
    Instance inst;
    inst.name = "corridor-e" + std::to_string(eaves);
    inst.polygon = Polygon(ring);
    inst.source = Point(1, 0);
    inst.target = last_horizontal ? Point(ex - 1, ey) : Point(ex, ey - 1);
    if (!validate_instance(inst).ok())
        throw GenerationFailure("corridor construction invalid");
    return inst;
}

}  // namespace rp
