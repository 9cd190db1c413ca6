#pragma once

// Combinatorial polyhedra: closed oriented 2-sphere complexes given by faces
// with cyclic vertex lists. Every edge appears in exactly two faces with
// opposite traversal; that single convention drives the pairing engine, the
// truncation generator, and the layout code.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spaceform/linalg.hpp"

namespace spaceform {

struct Face {
    std::string id;
    std::vector<int> cycle;
};

struct CombinatorialPolyhedron {
    std::string name;
    std::vector<int> vertices;
    std::vector<Face> faces;
    std::map<std::string, std::string> face_labels;

    const Face& face(const std::string& id) const {
        for (const auto& f : faces)
            if (f.id == id) return f;
        throw std::out_of_range("unknown face id '" + id + "'");
    }

    bool has_face(const std::string& id) const {
        for (const auto& f : faces)
            if (f.id == id) return true;
        return false;
    }

    // face containing the directed edge (u, v), if any
    std::optional<std::string> face_with_edge(int u, int v) const {
        for (const auto& f : faces) {
            size_t n = f.cycle.size();
            for (size_t i = 0; i < n; ++i)
                if (f.cycle[i] == u && f.cycle[(i + 1) % n] == v) return f.id;
        }
        return std::nullopt;
    }

    std::vector<std::pair<int, int>> undirected_edges() const {
        std::set<std::pair<int, int>> s;
        for (const auto& f : faces) {
            size_t n = f.cycle.size();
            for (size_t i = 0; i < n; ++i) {
                int u = f.cycle[i], v = f.cycle[(i + 1) % n];
                s.insert({std::min(u, v), std::max(u, v)});
            }
        }
        return {s.begin(), s.end()};
    }

    size_t edge_count() const { return undirected_edges().size(); }
};

struct ValidationIssue {
    std::string what;
};

struct ValidationReport {
    bool closed = true;        // every directed edge has its reverse somewhere
    bool oriented = true;      // each directed edge appears exactly once
    bool connected = true;
    bool euler_ok = true;
    long euler = 0;
    std::vector<ValidationIssue> issues;
    bool ok() const { return closed && oriented && connected && euler_ok; }
};

inline ValidationReport validate(const CombinatorialPolyhedron& p) {
    ValidationReport r;
    std::map<std::pair<int, int>, int> directed;
    for (const auto& f : p.faces) {
        size_t n = f.cycle.size();
        if (n < 3) r.issues.push_back({"face " + f.id + " has fewer than 3 vertices"});
        for (size_t i = 0; i < n; ++i) {
            int u = f.cycle[i], v = f.cycle[(i + 1) % n];
            if (u == v) r.issues.push_back({"degenerate edge in face " + f.id});
            ++directed[{u, v}];
        }
    }
    for (const auto& [e, count] : directed) {
        if (count > 1) {
            r.oriented = false;
            r.issues.push_back({"directed edge (" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + ") appears " +
                                std::to_string(count) + " times"});
        }
        if (!directed.count({e.second, e.first})) {
            r.closed = false;
            r.issues.push_back({"edge (" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + ") has no reverse"});
        }
    }
    // connectivity over the vertex-edge graph
    if (!p.vertices.empty()) {
        std::map<int, std::vector<int>> adj;
        for (const auto& [e, c] : directed) adj[e.first].push_back(e.second);
        std::set<int> seen;
        std::vector<int> stack = {p.vertices.front()};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (!seen.insert(v).second) continue;
            for (int w : adj[v]) stack.push_back(w);
        }
        r.connected = seen.size() == p.vertices.size();
        if (!r.connected) r.issues.push_back({"complex is not connected"});
    }
    long v = static_cast<long>(p.vertices.size());
    long e = static_cast<long>(directed.size() / 2);
    long f = static_cast<long>(p.faces.size());
    r.euler = v - e + f;
    r.euler_ok = r.euler == 2;
    if (!r.euler_ok)
        r.issues.push_back({"euler characteristic " + std::to_string(r.euler) + " != 2"});
    return r;
}

// ---------------------------------------------------------------------------
// catalog

namespace detail {

// faces of a coordinate-backed solid, oriented outward against the origin
inline void orient_outward(std::vector<Face>& faces, const std::vector<Vec>& coords) {
    for (auto& f : faces) {
        Vec c(3, 0.0);
        for (int v : f.cycle) c = vadd(c, coords[v]);
        c = vscale(1.0 / f.cycle.size(), c);
        const Vec& p0 = coords[f.cycle[0]];
        const Vec& p1 = coords[f.cycle[1]];
        Vec e1 = vsub(p1, p0), e2 = vsub(coords[f.cycle[2]], p1);
        Vec n = {e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
                 e1[0] * e2[1] - e1[1] * e2[0]};
        if (dot(n, c) < 0.0) std::reverse(f.cycle.begin(), f.cycle.end());
    }
}

// cyclic order of the vertices of a planar face around its centroid
inline std::vector<int> sort_face_cycle(const std::vector<int>& verts,
                                        const std::vector<Vec>& coords, const Vec& normal) {
    Vec c(3, 0.0);
    for (int v : verts) c = vadd(c, coords[v]);
    c = vscale(1.0 / verts.size(), c);
    // basis in the face plane
    Vec a = vsub(coords[verts[0]], c);
    a = vscale(1.0 / norm2(a), a);
    Vec b = {normal[1] * a[2] - normal[2] * a[1], normal[2] * a[0] - normal[0] * a[2],
             normal[0] * a[1] - normal[1] * a[0]};
    b = vscale(1.0 / norm2(b), b);
    std::vector<std::pair<double, int>> ang;
    for (int v : verts) {
        Vec d = vsub(coords[v], c);
        ang.push_back({std::atan2(dot(d, b), dot(d, a)), v});
    }
    std::sort(ang.begin(), ang.end());
    std::vector<int> cycle;
    for (auto& [t, v] : ang) cycle.push_back(v);
    return cycle;
}

inline CombinatorialPolyhedron cube() {
    CombinatorialPolyhedron p;
    p.name = "cube";
    for (int i = 0; i < 8; ++i) p.vertices.push_back(i);
    // vertex i has coordinates (bit2, bit1, bit0) mapped to -1/+1
    auto v = [](int x, int y, int z) { return ((x > 0) << 2) | ((y > 0) << 1) | (z > 0); };
    p.faces = {
        {"x-", {v(-1, -1, -1), v(-1, -1, 1), v(-1, 1, 1), v(-1, 1, -1)}},
        {"x+", {v(1, -1, -1), v(1, 1, -1), v(1, 1, 1), v(1, -1, 1)}},
        {"y-", {v(-1, -1, -1), v(1, -1, -1), v(1, -1, 1), v(-1, -1, 1)}},
        {"y+", {v(-1, 1, -1), v(-1, 1, 1), v(1, 1, 1), v(1, 1, -1)}},
        {"z-", {v(-1, -1, -1), v(-1, 1, -1), v(1, 1, -1), v(1, -1, -1)}},
        {"z+", {v(-1, -1, 1), v(1, -1, 1), v(1, 1, 1), v(-1, 1, 1)}},
    };
    return p;
}

inline std::vector<Vec> cube_coords() {
    std::vector<Vec> c(8);
    for (int i = 0; i < 8; ++i)
        c[i] = {i & 4 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 1 ? 1.0 : -1.0};
    return c;
}

inline std::pair<CombinatorialPolyhedron, std::vector<Vec>> octahedron() {
    CombinatorialPolyhedron p;
    p.name = "octahedron";
    std::vector<Vec> coords;
    for (int axis = 0; axis < 3; ++axis)
        for (int s : {1, -1}) {
            Vec v(3, 0.0);
            v[axis] = s;
            coords.push_back(v);
            p.vertices.push_back(static_cast<int>(coords.size()) - 1);
        }
    // faces: one per octant
    int id = 0;
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int sz : {1, -1}) {
                int vx = sx > 0 ? 0 : 1, vy = sy > 0 ? 2 : 3, vz = sz > 0 ? 4 : 5;
                p.faces.push_back({"f" + std::to_string(id++), {vx, vy, vz}});
            }
    orient_outward(p.faces, coords);
    return {p, coords};
}

inline std::pair<CombinatorialPolyhedron, std::vector<Vec>> icosahedron() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec> coords;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            coords.push_back({0.0, s1 * 1.0, s2 * phi});
            coords.push_back({s1 * 1.0, s2 * phi, 0.0});
            coords.push_back({s2 * phi, 0.0, s1 * 1.0});
        }
    CombinatorialPolyhedron p;
    p.name = "icosahedron";
    for (int i = 0; i < 12; ++i) p.vertices.push_back(i);
    // edges at the minimal distance 2
    auto adjacent = [&](int i, int j) {
        return std::fabs(norm2(vsub(coords[i], coords[j])) - 2.0) < 1e-9;
    };
    int id = 0;
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j)
            for (int k = j + 1; k < 12; ++k)
                if (adjacent(i, j) && adjacent(j, k) && adjacent(i, k))
                    p.faces.push_back({"f" + std::to_string(id++), {i, j, k}});
    orient_outward(p.faces, coords);
    return {p, coords};
}

inline std::pair<CombinatorialPolyhedron, std::vector<Vec>> dodecahedron_with_coords() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec> coords;
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int sz : {1, -1}) coords.push_back({1.0 * sx, 1.0 * sy, 1.0 * sz});
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            coords.push_back({0.0, s1 / phi, s2 * phi});
            coords.push_back({s1 / phi, s2 * phi, 0.0});
            coords.push_back({s2 * phi, 0.0, s1 / phi});
        }
    CombinatorialPolyhedron p;
    p.name = "dodecahedron";
    for (int i = 0; i < 20; ++i) p.vertices.push_back(i);
    // face normals for this coordinate family: (0, +-phi, +-1) cyclic
    std::vector<Vec> normals;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            normals.push_back({0.0, s1 * phi, s2 * 1.0});
            normals.push_back({s1 * phi, s2 * 1.0, 0.0});
            normals.push_back({s2 * 1.0, 0.0, s1 * phi});
        }
    int id = 0;
    for (const auto& n : normals) {
        double best = -1e9;
        for (const auto& c : coords) best = std::max(best, dot(n, c));
        std::vector<int> verts;
        for (int i = 0; i < 20; ++i)
            if (dot(n, coords[i]) > best - 1e-9) verts.push_back(i);
        p.faces.push_back({"f" + std::to_string(id++), sort_face_cycle(verts, coords, n)});
    }
    orient_outward(p.faces, coords);
    return {p, coords};
}

} // namespace detail

// Combinatorial truncation: every vertex becomes a polygon, every k-gon face
// a 2k-gon. New vertex (u -> v) is the corner of the old face near u on the
// directed edge u -> v.
inline CombinatorialPolyhedron truncate_solid(const CombinatorialPolyhedron& parent,
                                              const std::string& name) {
    CombinatorialPolyhedron t;
    t.name = name;
    std::map<std::pair<int, int>, int> corner; // directed edge -> new vertex id
    auto corner_id = [&](int u, int v) {
        auto it = corner.find({u, v});
        if (it != corner.end()) return it->second;
        int id = static_cast<int>(corner.size());
        corner[{u, v}] = id;
        t.vertices.push_back(id);
        return id;
    };
    // doubled face cycles
    for (const auto& f : parent.faces) {
        std::vector<int> cyc;
        size_t n = f.cycle.size();
        for (size_t i = 0; i < n; ++i) {
            int u = f.cycle[i], v = f.cycle[(i + 1) % n];
            cyc.push_back(corner_id(u, v));
            cyc.push_back(corner_id(v, u));
        }
        t.faces.push_back({"f_" + f.id, cyc});
    }
    // vertex polygons: walk the rotation around each old vertex. In an
    // oriented complex the edge after (u, w) around u is (u, x) where (x, u)
    // precedes (u, w) in the face containing that corner.
    std::map<std::pair<int, int>, int> next_around;
    for (const auto& f : parent.faces) {
        size_t n = f.cycle.size();
        for (size_t i = 0; i < n; ++i) {
            int x = f.cycle[i], u = f.cycle[(i + 1) % n], w = f.cycle[(i + 2) % n];
            next_around[{u, w}] = x; // corner (x, u, w): after edge (u,w) comes (u,x)
        }
    }
    std::map<int, std::vector<int>> out_edges;
    for (const auto& [e, id] : corner) out_edges[e.first].push_back(e.second);
    for (const auto& [u, outs] : out_edges) {
        std::vector<int> cyc;
        int w = outs.front();
        for (size_t steps = 0; steps < outs.size(); ++steps) {
            cyc.push_back(corner_id(u, w));
            w = next_around.at({u, w});
        }
        t.faces.push_back({"v" + std::to_string(u), cyc});
    }
    return t;
}

// Cobweb solid Cw(2z, 2z, 2z): two 4z-gonal base faces, a ring of 2z
// hexagons, and 8z deltoids, all with the 2z-fold cyclic symmetry. The 2z
// vertical edges between adjacent hexagons carry degree-4 endpoints; every
// other vertex is trivalent.
//
// Vertex layout (k runs mod 2z):
//   u_k, l_k     top / bottom midpoint of hexagon k
//   at_k, ab_k   top / bottom endpoint of the vertical edge between
//                hexagons k-1 and k
//   ft_k, et_k   top base ring, alternating; fb_k, eb_k the bottom ring
inline CombinatorialPolyhedron cobweb_solid(int z) {
    if (z < 3 || z % 2 == 0)
        throw std::invalid_argument(
            "cobweb solids need odd z >= 3; even rings stay an open problem");
    const int m = 2 * z;
    CombinatorialPolyhedron p;
    p.name = "cobweb:" + std::to_string(z);
    auto u = [&](int k) { return ((k % m) + m) % m; };
    auto l = [&](int k) { return m + u(k); };
    auto at = [&](int k) { return 2 * m + u(k); };
    auto ab = [&](int k) { return 3 * m + u(k); };
    auto ft = [&](int k) { return 4 * m + u(k); };
    auto et = [&](int k) { return 5 * m + u(k); };
    auto fb = [&](int k) { return 6 * m + u(k); };
    auto eb = [&](int k) { return 7 * m + u(k); };
    for (int i = 0; i < 8 * m; ++i) p.vertices.push_back(i);

    for (int k = 0; k < m; ++k) {
        // hexagon k between vertical edges k and k+1
        p.faces.push_back({"h" + std::to_string(k),
                           {u(k), at(k), ab(k), l(k), ab(k + 1), at(k + 1)}});
        // two top deltoids over hexagon k
        p.faces.push_back({"t" + std::to_string(k) + "a",
                           {at(k), et(k - 1), ft(k), u(k)}});
        p.faces.push_back({"t" + std::to_string(k) + "b",
                           {u(k), ft(k), et(k), at(k + 1)}});
        // two bottom deltoids
        p.faces.push_back({"b" + std::to_string(k) + "a",
                           {ab(k), l(k), fb(k), eb(k - 1)}});
        p.faces.push_back({"b" + std::to_string(k) + "b",
                           {l(k), ab(k + 1), eb(k), fb(k)}});
    }
    std::vector<int> top, bottom;
    for (int k = 0; k < m; ++k) {
        top.push_back(ft(k));
        top.push_back(et(k));
        bottom.push_back(fb(k));
        bottom.push_back(eb(k));
    }
    p.faces.push_back({"base+", top});
    p.faces.push_back({"base-", bottom});

    // fix orientations by propagation from hexagon 0
    std::map<std::pair<int, int>, int> owner; // directed edge -> face index
    std::vector<int> state(p.faces.size(), 0); // 0 unseen, 1 keep, -1 flip
    auto edges_of = [&](int fi, bool flipped) {
        std::vector<std::pair<int, int>> es;
        const auto& c = p.faces[fi].cycle;
        size_t n = c.size();
        for (size_t i = 0; i < n; ++i) {
            int a = c[i], b = c[(i + 1) % n];
            if (flipped) std::swap(a, b);
            es.push_back({a, b});
        }
        return es;
    };
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (size_t fi = 0; fi < p.faces.size(); ++fi) {
        const auto& c = p.faces[fi].cycle;
        for (size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            edge_faces[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(fi));
        }
    }
    std::vector<int> stack = {0};
    state[0] = 1;
    while (!stack.empty()) {
        int fi = stack.back();
        stack.pop_back();
        for (auto [a, b] : edges_of(fi, state[fi] < 0)) {
            auto& nbrs = edge_faces[{std::min(a, b), std::max(a, b)}];
            for (int nj : nbrs) {
                if (nj == fi || state[nj] != 0) continue;
                // neighbour must traverse (b, a); find its current direction
                bool has_same = false;
                const auto& c = p.faces[nj].cycle;
                for (size_t i = 0; i < c.size(); ++i)
                    if (c[i] == a && c[(i + 1) % c.size()] == b) has_same = true;
                state[nj] = has_same ? -1 : 1;
                stack.push_back(nj);
            }
        }
    }
    for (size_t fi = 0; fi < p.faces.size(); ++fi)
        if (state[fi] < 0)
            std::reverse(p.faces[fi].cycle.begin(), p.faces[fi].cycle.end());
    return p;
}

inline CombinatorialPolyhedron build_catalog(const std::string& name) {
    if (name == "cube") return detail::cube();
    if (name == "dodecahedron") return detail::dodecahedron_with_coords().first;
    if (name == "octahedron") return detail::octahedron().first;
    if (name == "icosahedron") return detail::icosahedron().first;
    if (name == "truncated_octahedron")
        return truncate_solid(detail::octahedron().first, "truncated_octahedron");
    if (name == "truncated_icosahedron")
        return truncate_solid(detail::icosahedron().first, "truncated_icosahedron");
    if (name.rfind("cobweb:", 0) == 0) return cobweb_solid(std::stoi(name.substr(7)));
    throw std::invalid_argument("unknown catalog solid '" + name + "'");
}

// ---------------------------------------------------------------------------
// oriented flag isomorphism

// A flag is a face index plus a position in its cycle (a directed edge with
// its left face). Two oriented trivalent-ish complexes are isomorphic iff
// some starting flag propagates to a full correspondence; the rotation
// structure determines everything else.
struct FlagIso {
    std::map<int, int> vertex_map;        // a-vertex -> b-vertex
    std::map<std::string, std::string> face_map;
};

namespace detail {

struct EdgeKey {
    int u, v;
    bool operator<(const EdgeKey& o) const { return std::tie(u, v) < std::tie(o.u, o.v); }
};

struct FlagTables {
    std::map<EdgeKey, std::pair<int, int>> at; // directed edge -> (face idx, pos)
    const CombinatorialPolyhedron* poly;
};

inline FlagTables tables(const CombinatorialPolyhedron& p) {
    FlagTables t;
    t.poly = &p;
    for (size_t fi = 0; fi < p.faces.size(); ++fi) {
        const auto& c = p.faces[fi].cycle;
        for (size_t i = 0; i < c.size(); ++i)
            t.at[{c[i], c[(i + 1) % c.size()]}] = {static_cast<int>(fi),
                                                   static_cast<int>(i)};
    }
    return t;
}

} // namespace detail

inline std::optional<FlagIso> flag_isomorphism(const CombinatorialPolyhedron& a,
                                               const CombinatorialPolyhedron& b) {
    if (a.vertices.size() != b.vertices.size() || a.faces.size() != b.faces.size())
        return std::nullopt;
    auto ta = detail::tables(a), tb = detail::tables(b);
    if (a.faces.empty()) return std::nullopt;
    // anchor flag in a: face 0, position 0
    const auto& fa = a.faces[0].cycle;
    std::pair<int, int> ea = {fa[0], fa[1]};

    for (const auto& fb : b.faces) {
        if (fb.cycle.size() != fa.size()) continue;
        for (size_t off = 0; off < fb.cycle.size(); ++off) {
            // attempt the correspondence seeded by mapping the a-anchor onto
            // this directed edge of b
            std::map<int, int> vmap;
            std::map<int, int> fmap; // face idx -> face idx
            bool ok = true;
            std::vector<std::pair<detail::EdgeKey, detail::EdgeKey>> stack;
            stack.push_back({{ea.first, ea.second},
                             {fb.cycle[off], fb.cycle[(off + 1) % fb.cycle.size()]}});
            std::set<std::pair<int, int>> visited;
            while (ok && !stack.empty()) {
                auto [ka, kb] = stack.back();
                stack.pop_back();
                if (!visited.insert({ka.u, ka.v}).second) continue;
                auto ita = ta.at.find(ka);
                auto itb = tb.at.find(kb);
                if (ita == ta.at.end() || itb == tb.at.end()) {
                    ok = false;
                    break;
                }
                auto [fia, pa] = ita->second;
                auto [fib, pb] = itb->second;
                const auto& ca = a.faces[fia].cycle;
                const auto& cb = b.faces[fib].cycle;
                if (ca.size() != cb.size()) {
                    ok = false;
                    break;
                }
                auto bind_face = fmap.emplace(fia, fib);
                if (!bind_face.second && bind_face.first->second != fib) {
                    ok = false;
                    break;
                }
                // bind all vertices of the two cycles in step
                size_t n = ca.size();
                for (size_t i = 0; i < n; ++i) {
                    int va = ca[(pa + i) % n];
                    int vb = cb[(pb + i) % n];
                    auto bind = vmap.emplace(va, vb);
                    if (!bind.second && bind.first->second != vb) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
                // push the reversed edges of this face (its neighbours),
                // aligned by the common offset from the anchor position
                for (size_t i = 0; i < n; ++i) {
                    size_t shift = (i + n - pa) % n;
                    size_t ib = (pb + shift) % n;
                    detail::EdgeKey na = {ca[(i + 1) % n], ca[i]};
                    detail::EdgeKey nb = {cb[(ib + 1) % n], cb[ib]};
                    stack.push_back({na, nb});
                }
            }
            if (ok && vmap.size() == a.vertices.size()) {
                FlagIso iso;
                iso.vertex_map = vmap;
                for (auto [fia, fib] : fmap)
                    iso.face_map[a.faces[fia].id] = b.faces[fib].id;
                if (iso.face_map.size() == a.faces.size()) return iso;
            }
        }
    }
    return std::nullopt;
}

} // namespace spaceform
