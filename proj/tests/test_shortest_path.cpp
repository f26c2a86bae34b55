#include <doctest.h>

#include "generators.h"
#include "shortest_path.h"
#include "support.h"
#include "visibility.h"

#include <cmath>
#include <queue>

using namespace rp;
using rp::test::fixture;

namespace {

// Dijkstra over the visibility graph of s, t and the reflex vertices
double oracle_length(const Polygon& poly, const Point& s, const Point& t)
{
    VisDomain dom(poly);
    std::vector<Point> nodes{s, t};
    for (int i = 0; i < poly.size(); ++i)
        if (poly.reflex(i))
            nodes.push_back(poly[i]);
    size_t m = nodes.size();
    std::vector<double> dist(m, INFINITY);
    using Item = std::pair<double, size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[0] = 0;
    pq.push({0, 0});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u])
            continue;
        for (size_t v = 0; v < m; ++v) {
            if (v == u || nodes[u] == nodes[v] || !dom.segment_in_closure(nodes[u], nodes[v]))
                continue;
            double nd = d + length(nodes[u], nodes[v]);
            if (nd < dist[v]) {
                dist[v] = nd;
                pq.push({nd, v});
            }
        }
    }
    return dist[1];
}

std::vector<Point> points_of(const ShortestPath& sp)
{
    std::vector<Point> out;
    for (auto& w : sp.pts)
        out.push_back(w.p);
    return out;
}

}  // namespace

TEST_CASE("triangulation sizes")
{
    CHECK(triangulate(fixture("fix_sq").polygon).tris.size() == 2);
    CHECK(triangulate(fixture("fix_l").polygon).tris.size() == 4);
    Instance c = gen_convex(10, 3);
    CHECK(triangulate(c.polygon).tris.size() == 8);
}

TEST_CASE("triangulation partitions the polygon and its dual is a tree")
{
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        Instance inst = gen_random_simple(12, seed);
        Triangulation tri = triangulate(inst.polygon);
        REQUIRE(tri.tris.size() == static_cast<size_t>(inst.polygon.size() - 2));
        Scalar area = 0;
        int links = 0;
        for (auto& t : tri.tris) {
            Scalar a = cross(inst.polygon[t.v[0]], inst.polygon[t.v[1]], inst.polygon[t.v[2]]);
            CHECK(a > 0);
            area += a;
            for (int k : t.nbr)
                links += k >= 0;
        }
        CHECK(area == inst.polygon.signed_area2());
        CHECK(links == 2 * (static_cast<int>(tri.tris.size()) - 1));
    }
}

TEST_CASE("shortest path fixtures")
{
    ShortestPath sq = shortest_path(fixture("fix_sq"));
    CHECK(sq.pts.size() == 2);

    ShortestPath l = shortest_path(fixture("fix_l"));
    REQUIRE(l.pts.size() == 3);
    CHECK(l.pts[1].p == Point(3, 1));
    CHECK(l.pts[1].vertex == 4);
    // counterclockwise polygon: the path bends left around (3,1)
    CHECK(l.turn[1] == Orientation::Left);
    CHECK(l.eaves.empty());

    ShortestPath z = shortest_path(fixture("fix_z"));
    REQUIRE(z.pts.size() == 4);
    CHECK(z.pts[1].p == Point(4, 3));
    CHECK(z.pts[2].p == Point(6, 4));
    CHECK(z.turn[1] == Orientation::Right);
    CHECK(z.turn[2] == Orientation::Left);
    CHECK(z.eaves == std::vector<int>{1});
    CHECK(separates(fixture("fix_z").polygon, 2, 6, Point(1, 1), Point(9, 6)));
}

TEST_CASE("shortest path matches the visibility graph oracle")
{
    for (int n = 4; n <= 12; ++n)
        for (uint64_t seed = 1; seed <= 25; ++seed) {
            Instance inst = gen_random_simple(n, seed);
            ShortestPath sp = shortest_path(inst);
            double want = oracle_length(inst.polygon, inst.source, inst.target);
            CHECK(sp.length() == doctest::Approx(want).epsilon(1e-9));
            VisDomain dom(inst.polygon);
            for (size_t i = 0; i + 1 < sp.pts.size(); ++i)
                CHECK(dom.segment_in_closure(sp.pts[i].p, sp.pts[i + 1].p));
            for (int i = 1; i + 1 < static_cast<int>(sp.pts.size()); ++i) {
                REQUIRE(sp.pts[static_cast<size_t>(i)].vertex >= 0);
                CHECK(inst.polygon.reflex(sp.pts[static_cast<size_t>(i)].vertex));
                CHECK(sp.turn[static_cast<size_t>(i)] != Orientation::Collinear);
            }
        }
}

TEST_CASE("eaves are exactly the turn reversals")
{
    for (uint64_t seed = 1; seed <= 200; ++seed) {
        Instance inst = gen_random_simple(12, seed);
        ShortestPath sp = shortest_path(inst);
        std::vector<int> rev;
        for (int i = 1; i + 2 < static_cast<int>(sp.pts.size()); ++i)
            if (sp.turn[static_cast<size_t>(i)] != sp.turn[static_cast<size_t>(i + 1)])
                rev.push_back(i);
        CHECK(sp.eaves == rev);
    }
}

TEST_CASE("shortest path tree agrees with per-vertex paths")
{
    Instance z = fixture("fix_z");
    ShortestPathTree tz = shortest_path_tree(z.polygon, z.source);
    CHECK(tz.parent[4] == 6);  // (10,7) hangs off (6,4)

    Instance c = gen_convex(9, 4);
    ShortestPathTree tc = shortest_path_tree(c.polygon, c.source);
    for (int p : tc.parent)
        CHECK(p == -1);

    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Instance inst = gen_random_simple(11, seed);
        ShortestPathTree tree = shortest_path_tree(inst.polygon, inst.source);
        VisDomain dom(inst.polygon);
        for (int v = 0; v < inst.polygon.size(); ++v) {
            ShortestPath sp = shortest_path(Instance{"", inst.polygon, inst.source, inst.polygon[v]});
            auto& ch = tree.chain[static_cast<size_t>(v)];
            REQUIRE(ch.size() + 1 == sp.pts.size());
            for (size_t i = 0; i < ch.size(); ++i)
                CHECK(inst.polygon[ch[i]] == sp.pts[i + 1].p);
            Point par = tree.parent[static_cast<size_t>(v)] < 0 ? inst.source : inst.polygon[tree.parent[static_cast<size_t>(v)]];
            CHECK(dom.segment_in_closure(par, inst.polygon[v]));
        }
    }
}

TEST_CASE("shortest path lengths satisfy the triangle inequality through interior points")
{
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        Instance inst = gen_random_simple(10, seed);
        Instance probe = gen_random_simple(10, seed);  // same polygon, fresh endpoints below
        double st = shortest_path(inst).length();
        for (const Point& x : {probe.source, probe.target, midpoint(inst.source, inst.target)}) {
            if (locate(inst.polygon, x).kind != LocationKind::Inside || x == inst.source || x == inst.target)
                continue;
            double a = shortest_path(Instance{"", inst.polygon, inst.source, x}).length();
            double b = shortest_path(Instance{"", inst.polygon, x, inst.target}).length();
            CHECK(st <= a + b + 1e-9);
        }
    }
}

TEST_CASE("endpoints on vertices and edges")
{
    Instance l = fixture("fix_l");
    ShortestPath a = shortest_path(Instance{"", l.polygon, Point(0, 0), Point(4, 4)});
    REQUIRE(a.pts.size() == 3);
    CHECK(a.pts[1].p == Point(3, 1));
    ShortestPath b = shortest_path(Instance{"", l.polygon, Point(0, 1), Point(3, 4)});
    CHECK(b.length() == doctest::Approx(oracle_length(l.polygon, Point(0, 1), Point(3, 4))));
    ShortestPath c = shortest_path(Instance{"", l.polygon, Point(2, 1), Point(3, 2)});
    CHECK(c.length() == doctest::Approx(oracle_length(l.polygon, Point(2, 1), Point(3, 2))));
}
