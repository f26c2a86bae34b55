#include "shortest_path.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <queue>

namespace rp {

Triangulation triangulate(const Polygon& poly)
{
    Triangulation out;
    int n = poly.size();
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        idx[static_cast<size_t>(i)] = i;

    auto is_ear = [&](size_t k) {
        size_t m = idx.size();
        int a = idx[(k + m - 1) % m], b = idx[k], c = idx[(k + 1) % m];
        if (orient_sign(poly[a], poly[b], poly[c]) <= 0)
            return false;
        for (size_t j = 0; j < m; ++j) {
            int v = idx[j];
            if (v == a || v == b || v == c)
                continue;
            const Point& p = poly[v];
            if (orient_sign(poly[a], poly[b], p) >= 0 && orient_sign(poly[b], poly[c], p) >= 0 &&
                orient_sign(poly[c], poly[a], p) >= 0)
                return false;
        }
        return true;
    };

    while (idx.size() > 3) {
        bool clipped = false;
        for (size_t k = 0; k < idx.size(); ++k) {
            if (!is_ear(k))
                continue;
            size_t m = idx.size();
            out.tris.push_back({{idx[(k + m - 1) % m], idx[k], idx[(k + 1) % m]}, {-1, -1, -1}});
            idx.erase(idx.begin() + static_cast<long>(k));
            clipped = true;
            break;
        }
        if (!clipped)
            throw InternalInconsistency("ear clipping found no ear");
    }
    out.tris.push_back({{idx[0], idx[1], idx[2]}, {-1, -1, -1}});

    std::map<std::pair<int, int>, std::pair<int, int>> edge_owner;
    for (int t = 0; t < static_cast<int>(out.tris.size()); ++t) {
        for (int k = 0; k < 3; ++k) {
            int a = out.tris[static_cast<size_t>(t)].v[static_cast<size_t>(k)];
            int b = out.tris[static_cast<size_t>(t)].v[static_cast<size_t>((k + 1) % 3)];
            auto key = std::minmax(a, b);
            auto it = edge_owner.find(key);
            if (it == edge_owner.end()) {
                edge_owner[key] = {t, k};
            } else {
                auto [t2, k2] = it->second;
                out.tris[static_cast<size_t>(t)].nbr[static_cast<size_t>(k)] = t2;
                out.tris[static_cast<size_t>(t2)].nbr[static_cast<size_t>(k2)] = t;
            }
        }
    }
    return out;
}

bool ShortestPath::is_eave(int i) const { return std::find(eaves.begin(), eaves.end(), i) != eaves.end(); }

double ShortestPath::length() const
{
    double L = 0;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        L += rp::length(pts[i].p, pts[i + 1].p);
    return L;
}

namespace {

bool tri_contains(const Polygon& poly, const Triangle& tr, const Point& p)
{
    return orient_sign(poly[tr.v[0]], poly[tr.v[1]], p) >= 0 && orient_sign(poly[tr.v[1]], poly[tr.v[2]], p) >= 0 &&
           orient_sign(poly[tr.v[2]], poly[tr.v[0]], p) >= 0;
}

std::vector<int> containing(const Polygon& poly, const Triangulation& tri, const Point& p)
{
    std::vector<int> r;
    for (int t = 0; t < static_cast<int>(tri.tris.size()); ++t)
        if (tri_contains(poly, tri.tris[static_cast<size_t>(t)], p))
            r.push_back(t);
    return r;
}

// shortest triangle sequence from any of `from` to any of `to`
std::vector<int> sleeve(const Triangulation& tri, const std::vector<int>& from, const std::vector<int>& to)
{
    size_t nt = tri.tris.size();
    std::vector<int> dist(nt, -1), par(nt, -1);
    std::deque<int> q;
    for (int t : to) {
        dist[static_cast<size_t>(t)] = 0;
        q.push_back(t);
    }
    while (!q.empty()) {
        int t = q.front();
        q.pop_front();
        for (int nb : tri.tris[static_cast<size_t>(t)].nbr)
            if (nb >= 0 && dist[static_cast<size_t>(nb)] < 0) {
                dist[static_cast<size_t>(nb)] = dist[static_cast<size_t>(t)] + 1;
                par[static_cast<size_t>(nb)] = t;
                q.push_back(nb);
            }
    }
    int best = -1;
    for (int t : from)
        if (dist[static_cast<size_t>(t)] >= 0 && (best < 0 || dist[static_cast<size_t>(t)] < dist[static_cast<size_t>(best)]))
            best = t;
    if (best < 0)
        throw InternalInconsistency("dual tree is disconnected");
    std::vector<int> path{best};
    while (dist[static_cast<size_t>(path.back())] > 0)
        path.push_back(par[static_cast<size_t>(path.back())]);
    return path;
}

struct Portal {
    Point left, right;
    int lv = -1, rv = -1;
};

}  // namespace

ShortestPath shortest_path(const Polygon& poly, const Triangulation& tri, const Point& s, const Point& t)
{
    auto ts = containing(poly, tri, s);
    auto tt = containing(poly, tri, t);
    if (ts.empty() || tt.empty())
        throw std::invalid_argument("shortest_path: endpoint outside polygon");
    auto seq = sleeve(tri, ts, tt);

    int sv = -1, tv = -1;
    for (int i = 0; i < poly.size(); ++i) {
        if (poly[i] == s)
            sv = i;
        if (poly[i] == t)
            tv = i;
    }

    std::vector<Portal> portals;
    portals.push_back({s, s, sv, sv});
    for (size_t k = 0; k + 1 < seq.size(); ++k) {
        const Triangle& a = tri.tris[static_cast<size_t>(seq[k])];
        int side = -1;
        for (int j = 0; j < 3; ++j)
            if (a.nbr[static_cast<size_t>(j)] == seq[k + 1])
                side = j;
        int x = a.v[static_cast<size_t>(side)], y = a.v[static_cast<size_t>((side + 1) % 3)];
        portals.push_back({poly[y], poly[x], y, x});
    }
    portals.push_back({t, t, tv, tv});

    std::vector<Waypoint> path{{s, sv}};
    Point apex = s, L = s, R = s;
    int av = sv, lvx = sv, rvx = sv;
    size_t apex_i = 0, left_i = 0, right_i = 0;
    for (size_t i = 1; i < portals.size(); ++i) {
        const Portal& pt = portals[i];
        // right side
        if (orient_sign(apex, R, pt.right) >= 0) {
            if (apex == R || apex == L || orient_sign(apex, L, pt.right) < 0) {
                R = pt.right;
                rvx = pt.rv;
                right_i = i;
            } else {
                path.push_back({L, lvx});
                apex = L;
                av = lvx;
                apex_i = left_i;
                R = L = apex;
                rvx = lvx = av;
                right_i = left_i = apex_i;
                i = apex_i;
                continue;
            }
        }
        // left side
        if (orient_sign(apex, L, pt.left) <= 0) {
            if (apex == L || apex == R || orient_sign(apex, R, pt.left) > 0) {
                L = pt.left;
                lvx = pt.lv;
                left_i = i;
            } else {
                path.push_back({R, rvx});
                apex = R;
                av = rvx;
                apex_i = right_i;
                R = L = apex;
                rvx = lvx = av;
                right_i = left_i = apex_i;
                i = apex_i;
                continue;
            }
        }
    }
    if (path.back().p != t)
        path.push_back({t, tv});

    // drop waypoints the path passes straight through
    std::vector<Waypoint> clean{path.front()};
    for (size_t i = 1; i + 1 < path.size(); ++i) {
        if (orient_sign(clean.back().p, path[i].p, path[i + 1].p) == 0)
            continue;
        clean.push_back(path[i]);
    }
    if (path.size() > 1)
        clean.push_back(path.back());

    ShortestPath sp;
    sp.pts = std::move(clean);
    sp.turn.assign(sp.pts.size(), Orientation::Collinear);
    for (size_t i = 1; i + 1 < sp.pts.size(); ++i)
        sp.turn[i] = orientation(sp.pts[i - 1].p, sp.pts[i].p, sp.pts[i + 1].p);
    sp.eaves = detect_eaves(sp, poly);
    return sp;
}

ShortestPath shortest_path(const Instance& inst)
{
    Triangulation tri = triangulate(inst.polygon);
    return shortest_path(inst.polygon, tri, inst.source, inst.target);
}

ShortestPathTree shortest_path_tree(const Polygon& poly, const Triangulation& tri, const Point& root)
{
    ShortestPathTree tree;
    tree.root = root;
    int n = poly.size();
    tree.parent.assign(static_cast<size_t>(n), -1);
    tree.chain.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (poly[v] == root)
            continue;
        ShortestPath sp = shortest_path(poly, tri, root, poly[v]);
        std::vector<int> ch;
        for (size_t i = 1; i < sp.pts.size(); ++i)
            ch.push_back(i + 1 == sp.pts.size() ? v : sp.pts[i].vertex);
        tree.chain[static_cast<size_t>(v)] = ch;
        tree.parent[static_cast<size_t>(v)] = ch.size() >= 2 ? ch[ch.size() - 2] : -1;
    }
    return tree;
}

ShortestPathTree shortest_path_tree(const Polygon& poly, const Point& root)
{
    return shortest_path_tree(poly, triangulate(poly), root);
}

bool separates(const Polygon& poly, int a, int b, const Point& s, const Point& t)
{
    std::vector<Point> ring;
    for (int i = a;; i = poly.next(i)) {
        ring.push_back(poly[i]);
        if (i == b)
            break;
    }
    bool s_in = ring_contains(ring, s);
    bool t_in = ring_contains(ring, t);
    return s_in != t_in;
}

std::vector<int> detect_eaves(const ShortestPath& sp, const Polygon& poly)
{
    std::vector<int> out;
    int last = static_cast<int>(sp.pts.size()) - 1;
    const Point& s = sp.pts.front().p;
    const Point& t = sp.pts.back().p;
    for (int i = 1; i + 1 < last; ++i) {
        bool reversal = sp.turn[static_cast<size_t>(i)] != sp.turn[static_cast<size_t>(i + 1)];
        int a = sp.pts[static_cast<size_t>(i)].vertex, b = sp.pts[static_cast<size_t>(i + 1)].vertex;
        bool diagonal = a >= 0 && b >= 0 && poly.next(a) != b && poly.next(b) != a;
        bool cut = diagonal && separates(poly, a, b, s, t);
        if (reversal != cut)
            throw InternalInconsistency("eave tests disagree at shortest-path edge " + std::to_string(i));
        if (cut)
            out.push_back(i);
    }
    return out;
}

}  // namespace rp
