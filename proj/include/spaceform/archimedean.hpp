#pragma once

// Metric polyhedra: coordinate realizations of the Archimedean cells keyed
// to catalog combinatorics, dihedral angles, flag-determined isometries, and
// the extraction of combinatorial pairing seeds from isometry matrices.

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spaceform/isometry.hpp"
#include "spaceform/orthoscheme.hpp"
#include "spaceform/pairing.hpp"
#include "spaceform/polyhedron.hpp"
#include "spaceform/projective.hpp"

namespace spaceform {

struct MetricPolyhedron {
    CombinatorialPolyhedron combi;           // catalog-labeled complex
    std::map<int, Vec> vertex_coords;        // normalized representatives
    std::map<std::string, Vec> face_forms;   // inward: form(interior) > 0
    bool euclidean = false;
    std::optional<SpaceContext> ctx;         // set for the hyperbolic cells
    Vec interior;                            // a deep interior point

    double alpha = 0.0; // dihedral at the mixed-size edge type
    double beta = 0.0;  // dihedral at the equal-size edge type
    double edge_type_discrepancy = 0.0; // construction diagnostic
};

// interior dihedral angle along the edge shared by faces fa, fb
inline double dihedral_angle(const MetricPolyhedron& p, const std::string& fa,
                             const std::string& fb) {
    const Vec& u = p.face_forms.at(fa);
    const Vec& v = p.face_forms.at(fb);
    double raw = p.euclidean ? affine_plane_angle(u, v) : angle(*p.ctx, u, v).raw;
    return std::numbers::pi - raw;
}

// dihedral angle data for the verification step, keyed by face-size pairs;
// throws if two edges with the same size pair disagree
inline MetricAngles metric_angles(const MetricPolyhedron& p, double tol = 1e-9) {
    MetricAngles a;
    for (auto [x, y] : p.combi.undirected_edges()) {
        auto fa = p.combi.face_with_edge(x, y);
        auto fb = p.combi.face_with_edge(y, x);
        if (!fa || !fb) throw std::runtime_error("metric_angles: open edge");
        int sa = static_cast<int>(p.combi.face(*fa).cycle.size());
        int sb = static_cast<int>(p.combi.face(*fb).cycle.size());
        std::pair<int, int> key{std::min(sa, sb), std::max(sa, sb)};
        double d = dihedral_angle(p, *fa, *fb);
        auto [it, fresh] = a.by_face_sizes.emplace(key, d);
        if (!fresh && std::fabs(it->second - d) > tol)
            throw std::runtime_error("metric_angles: edges of one type disagree");
    }
    return a;
}

namespace metricdetail {

// face cycles of a coordinate-backed solid from a known face->vertex-set
// incidence: walk the edge graph restricted to the face
inline std::vector<int> cycle_from_adjacency(const std::vector<int>& verts,
                                             const std::map<int, std::set<int>>& adj) {
    std::set<int> inset(verts.begin(), verts.end());
    std::vector<int> cycle = {verts.front()};
    int prev = -1;
    while (cycle.size() < verts.size()) {
        int cur = cycle.back();
        bool advanced = false;
        for (int n : adj.at(cur)) {
            if (!inset.count(n) || n == prev) continue;
            if (cycle.size() > 1 && n == cycle.front()) continue;
            cycle.push_back(n);
            prev = cur;
            advanced = true;
            break;
        }
        if (!advanced) throw std::runtime_error("face cycle walk failed");
    }
    return cycle;
}

inline void orient_consistently(std::vector<Face>& faces) {
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (size_t fi = 0; fi < faces.size(); ++fi)
        for (size_t i = 0; i < faces[fi].cycle.size(); ++i) {
            int a = faces[fi].cycle[i],
                b = faces[fi].cycle[(i + 1) % faces[fi].cycle.size()];
            edge_faces[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(fi));
        }
    std::vector<int> state(faces.size(), 0);
    std::vector<int> stack = {0};
    state[0] = 1;
    while (!stack.empty()) {
        int fi = stack.back();
        stack.pop_back();
        const auto& c = faces[fi].cycle;
        for (size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            if (state[fi] < 0) std::swap(a, b);
            for (int nj : edge_faces[{std::min(a, b), std::max(a, b)}]) {
                if (nj == fi || state[nj] != 0) continue;
                bool same = false;
                const auto& cn = faces[nj].cycle;
                for (size_t k = 0; k < cn.size(); ++k)
                    if (cn[k] == a && cn[(k + 1) % cn.size()] == b) same = true;
                state[nj] = same ? -1 : 1;
                stack.push_back(nj);
            }
        }
    }
    for (size_t fi = 0; fi < faces.size(); ++fi)
        if (state[fi] < 0) std::reverse(faces[fi].cycle.begin(), faces[fi].cycle.end());
}

// relabel a freshly built complex (and its metric data) onto the catalog solid
inline void relabel_to_catalog(MetricPolyhedron& p, const CombinatorialPolyhedron& catalog) {
    auto iso = flag_isomorphism(catalog, p.combi);
    if (!iso)
        throw std::runtime_error("metric cell does not match the catalog combinatorics");
    std::map<int, Vec> coords;
    for (auto [cv, pv] : iso->vertex_map) coords[cv] = p.vertex_coords.at(pv);
    std::map<std::string, Vec> forms;
    for (auto& [cf, pf] : iso->face_map) forms[cf] = p.face_forms.at(pf);
    p.combi = catalog;
    p.vertex_coords = std::move(coords);
    p.face_forms = std::move(forms);
}

} // namespace metricdetail

// ---------------------------------------------------------------------------
// the euclidean cell {4,6,6}

// Truncated octahedron with vertices at the permutations of (0, ±1, ±2):
// the orbit of the standard sphenoid's centroid under the 24 symmetries
// fixing its A_3 corner. Dihedral angles arccos(-1/sqrt(3)) and arccos(-1/3).
inline MetricPolyhedron archimedean_466() {
    AffineOrthoscheme sph = sphenoid_standard();
    std::vector<std::pair<std::string, Mat>> gens;
    for (int i = 0; i < 3; ++i)
        gens.push_back({"m" + std::to_string(i), affine_reflection(sph.planes[i])});
    auto grp = group_closure(gens, 100, 1e-8, /*projective=*/false);
    Vec centroid(4, 0.0);
    for (const auto& v : sph.vertices) centroid = vadd(centroid, vscale(0.25, v));
    auto orbit = orbit_point(centroid, grp, 1e-8);
    if (orbit.size() != 24)
        throw std::runtime_error("sphenoid centroid orbit is not the 24-vertex class");

    MetricPolyhedron p;
    p.euclidean = true;
    p.interior = {0.0, 0.0, 0.0, 1.0};
    CombinatorialPolyhedron raw;
    raw.name = "raw466";
    for (int i = 0; i < 24; ++i) {
        raw.vertices.push_back(i);
        p.vertex_coords[i] = orbit[i];
    }
    // edges: minimal distance sqrt(2)
    std::map<int, std::set<int>> adj;
    for (int i = 0; i < 24; ++i)
        for (int j = i + 1; j < 24; ++j) {
            Vec d = vsub(orbit[i], orbit[j]);
            d.resize(3);
            if (std::fabs(norm2(d) - std::sqrt(2.0)) < 1e-9) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    // squares on the coordinate planes c = +-2, hexagons on s.(x,y,z) = 3
    int fid = 0;
    auto add_face = [&](const Vec& n, double rhs) {
        std::vector<int> verts;
        for (int i = 0; i < 24; ++i) {
            double s = n[0] * orbit[i][0] + n[1] * orbit[i][1] + n[2] * orbit[i][2];
            if (std::fabs(s - rhs) < 1e-9) verts.push_back(i);
        }
        Face f;
        f.id = "f" + std::to_string(fid++);
        f.cycle = metricdetail::cycle_from_adjacency(verts, adj);
        raw.faces.push_back(f);
        p.face_forms[f.id] = {-n[0], -n[1], -n[2], rhs}; // inward: rhs - n.x >= 0
    };
    for (int axis = 0; axis < 3; ++axis)
        for (int s : {1, -1}) {
            Vec n(3, 0.0);
            n[axis] = s;
            add_face(n, 2.0);
        }
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int sz : {1, -1}) add_face({double(sx), double(sy), double(sz)}, 3.0);
    metricdetail::orient_consistently(raw.faces);
    p.combi = raw;
    metricdetail::relabel_to_catalog(p, build_catalog("truncated_octahedron"));

    // the two dihedral types
    p.alpha = std::acos(-1.0 / std::sqrt(3.0));
    p.beta = std::acos(-1.0 / 3.0);
    auto angles = metric_angles(p);
    if (std::fabs(angles.by_face_sizes.at({4, 6}) - p.alpha) > 1e-9 ||
        std::fabs(angles.by_face_sizes.at({6, 6}) - p.beta) > 1e-9)
        throw std::runtime_error("466 dihedral angles drifted from the coordinate values");
    return p;
}

// metric cube (+-1), the control fixture's cell
inline MetricPolyhedron metric_cube() {
    MetricPolyhedron p;
    p.euclidean = true;
    p.interior = {0.0, 0.0, 0.0, 1.0};
    p.combi = build_catalog("cube");
    for (int i = 0; i < 8; ++i)
        p.vertex_coords[i] = {i & 4 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 1 ? 1.0 : -1.0,
                              1.0};
    p.face_forms["x-"] = {1, 0, 0, 1};
    p.face_forms["x+"] = {-1, 0, 0, 1};
    p.face_forms["y-"] = {0, 1, 0, 1};
    p.face_forms["y+"] = {0, -1, 0, 1};
    p.face_forms["z-"] = {0, 0, 1, 1};
    p.face_forms["z+"] = {0, 0, -1, 1};
    return p;
}

// ---------------------------------------------------------------------------
// the hyperbolic cell {5,6,6}

// The truncated icosahedron over the 5,3,5 orthoscheme: the vertex is the
// point of the A_1 A_2 segment whose orbit polyhedron has equal edge lengths,
// solved by bisection. The diagram's halving symmetry fixes that point, so
// the halving midpoint lands on the same spot; the discrepancy is recorded.
inline MetricPolyhedron archimedean_566() {
    Orthoscheme o = realize("5,3,5");
    const SpaceContext& ctx = o.ctx;
    Vec a1 = o.vertices[1], a2 = o.vertices[2];

    auto point_at = [&](double t) {
        Vec x = vadd(vscale(1.0 - t, a2), vscale(t, a1));
        return normalize_point(ctx, x);
    };
    auto edge_gap = [&](double t) {
        Vec v = point_at(t);
        Vec v1 = reflect_point(ctx, o.planes[1], v);
        Vec v2 = reflect_point(ctx, o.planes[2], v);
        return distance(ctx, v, v1) - distance(ctx, v, v2);
    };
    double lo = 1e-6, hi = 1.0 - 1e-6;
    if (edge_gap(lo) > 0.0 || edge_gap(hi) < 0.0)
        throw std::runtime_error("566 vertex solve: no sign change on the segment");
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        double mid = 0.5 * (lo + hi);
        (edge_gap(mid) <= 0.0 ? lo : hi) = mid;
    }
    Vec vert = point_at(0.5 * (lo + hi));

    // halving alternative: the hyperbolic midpoint of A_1 A_2
    Vec halving = normalize_point(ctx, vadd(a1, a2));
    double disc = distance(ctx, vert, halving);

    auto c3 = group_closure({{"m0", o.reflection(0)}, {"m1", o.reflection(1)},
                             {"m2", o.reflection(2)}});
    if (c3.order() != 120) throw std::runtime_error("566: stabilizer closure is not 120");

    // orbit with cone-consistent normalized representatives
    Vec center = o.vertices[3];
    std::vector<Vec> pts;
    for (const auto& g : c3.elements) {
        Vec y = normalize_point(ctx, mul(g, vert));
        if (bilinear_point(ctx, y, center) > 0.0) y = vscale(-1.0, y);
        bool seen = false;
        for (const auto& z : pts)
            if (norm_inf(vsub(y, z)) < 1e-7) {
                seen = true;
                break;
            }
        if (!seen) pts.push_back(y);
    }
    if (pts.size() != 60)
        throw std::runtime_error("566: vertex orbit has size " + std::to_string(pts.size()));

    MetricPolyhedron p;
    p.euclidean = false;
    p.ctx = ctx;
    p.interior = center;
    p.edge_type_discrepancy = disc;

    CombinatorialPolyhedron raw;
    raw.name = "raw566";
    for (int i = 0; i < 60; ++i) {
        raw.vertices.push_back(i);
        p.vertex_coords[i] = pts[i];
    }
    // edges at the common minimal distance
    double dmin = 1e9;
    for (int j = 1; j < 60; ++j) dmin = std::min(dmin, distance(ctx, pts[0], pts[j]));
    std::map<int, std::set<int>> adj;
    for (int i = 0; i < 60; ++i)
        for (int j = i + 1; j < 60; ++j)
            if (distance(ctx, pts[i], pts[j]) < dmin + 1e-7) {
                adj[i].insert(j);
                adj[j].insert(i);
            }

    // base faces: pentagon around the A_2 axis, hexagon around A_0 A_3
    auto plane_through = [&](const Vec& x, const Vec& y, const Vec& z) {
        Mat sys(3, 4);
        for (int j = 0; j < 4; ++j) {
            sys(0, j) = x[j];
            sys(1, j) = y[j];
            sys(2, j) = z[j];
        }
        // null space by fixing the largest-pivot free column
        // solve the 3x3 subsystem for each choice until well-conditioned
        for (int free_col = 3; free_col >= 0; --free_col) {
            Mat a(3, 3);
            Vec rhs(3);
            int cc = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == free_col) continue;
                for (int i = 0; i < 3; ++i) a(i, cc) = sys(i, j);
                ++cc;
            }
            for (int i = 0; i < 3; ++i) rhs[i] = -sys(i, free_col);
            if (std::fabs(determinant(a)) < 1e-8) continue;
            Vec sol = solve(a, rhs);
            Vec u(4);
            cc = 0;
            for (int j = 0; j < 4; ++j) u[j] = (j == free_col) ? 1.0 : sol[cc++];
            return u;
        }
        throw std::runtime_error("degenerate plane fit");
    };
    auto orbit_face = [&](const std::vector<std::pair<std::string, Mat>>& stab_gens) {
        auto stab = group_closure(stab_gens, 200, 1e-8);
        auto cyc = orbit_point(vert, stab, 1e-8);
        std::vector<Vec> norm;
        for (auto& x : cyc) {
            Vec y = normalize_point(ctx, x);
            if (bilinear_point(ctx, y, center) > 0.0) y = vscale(-1.0, y);
            norm.push_back(y);
        }
        return norm;
    };
    auto pent_pts = orbit_face({{"m0", o.reflection(0)}, {"m1", o.reflection(1)}});
    auto hex_pts = orbit_face({{"m1", o.reflection(1)}, {"m2", o.reflection(2)}});
    if (pent_pts.size() != 5 || hex_pts.size() != 6)
        throw std::runtime_error("566: base face orbits have wrong sizes");

    auto inward = [&](Vec u) {
        if (pair_eval(u, center) < 0.0) u = vscale(-1.0, u);
        return normalize_plane(ctx, u);
    };
    Vec pent_plane = inward(plane_through(pent_pts[0], pent_pts[1], pent_pts[2]));
    Vec hex_plane = inward(plane_through(hex_pts[0], hex_pts[1], hex_pts[2]));

    // plane orbits give the 12 + 20 faces
    std::vector<Vec> planes;
    std::vector<char> kinds;
    auto push_planes = [&](const Vec& base, char kind) {
        for (const auto& g : c3.elements) {
            Vec u = inward(mul_row(base, inverse(g)));
            bool seen = false;
            for (size_t k = 0; k < planes.size(); ++k)
                if (norm_inf(vsub(planes[k], u)) < 1e-7) {
                    seen = true;
                    break;
                }
            if (!seen) {
                planes.push_back(u);
                kinds.push_back(kind);
            }
        }
    };
    push_planes(pent_plane, 'p');
    push_planes(hex_plane, 'h');
    int pc = 0, hc = 0;
    for (char k : kinds) (k == 'p' ? pc : hc)++;
    if (pc != 12 || hc != 20)
        throw std::runtime_error("566: face plane orbits are not 12 + 20");

    int fid = 0;
    for (size_t k = 0; k < planes.size(); ++k) {
        std::vector<int> verts;
        for (int i = 0; i < 60; ++i)
            if (std::fabs(pair_eval(planes[k], pts[i])) < 1e-7) verts.push_back(i);
        if ((kinds[k] == 'p' && verts.size() != 5) || (kinds[k] == 'h' && verts.size() != 6))
            throw std::runtime_error("566: face incidence count is off");
        Face f;
        f.id = "f" + std::to_string(fid++);
        f.cycle = metricdetail::cycle_from_adjacency(verts, adj);
        raw.faces.push_back(f);
        p.face_forms[f.id] = planes[k];
    }
    metricdetail::orient_consistently(raw.faces);
    p.combi = raw;
    metricdetail::relabel_to_catalog(p, build_catalog("truncated_icosahedron"));

    auto angles = metric_angles(p, 1e-7);
    p.alpha = angles.by_face_sizes.at({5, 6});
    p.beta = angles.by_face_sizes.at({6, 6});
    return p;
}

// ---------------------------------------------------------------------------
// flags and isometries

struct FaceFlag {
    int vertex = 0;
    int next = 0; // edge (vertex, next) on the face boundary, either direction
    std::string face;
};

namespace metricdetail {

// third frame point: continue past `next` in the direction the edge induces
inline int third_vertex(const CombinatorialPolyhedron& poly, const FaceFlag& f) {
    const Face& face = poly.face(f.face);
    size_t n = face.cycle.size();
    for (size_t i = 0; i < n; ++i) {
        if (face.cycle[i] == f.vertex && face.cycle[(i + 1) % n] == f.next)
            return face.cycle[(i + 2) % n]; // coherent: walk forward
        if (face.cycle[i] == f.next && face.cycle[(i + 1) % n] == f.vertex)
            return face.cycle[(i + n - 1) % n]; // incoherent: walk backward
    }
    throw std::invalid_argument("flag edge is not on the face boundary");
}

} // namespace metricdetail

// The unique isometry carrying the src flag to the dst flag. With
// across=false the two inward sides correspond (symmetries of the cell);
// with across=true the image cell lies on the far side of the dst face,
// which is the face-pairing convention.
inline Mat isometry_from_flags(const MetricPolyhedron& p, const FaceFlag& src,
                               const FaceFlag& dst, bool across, double tol = 1e-7) {
    auto frame = [&](const FaceFlag& f, double side) {
        Vec p1 = p.vertex_coords.at(f.vertex);
        Vec p2 = p.vertex_coords.at(f.next);
        Vec p3 = p.vertex_coords.at(metricdetail::third_vertex(p.combi, f));
        Vec q;
        if (p.euclidean) {
            const Vec& u = p.face_forms.at(f.face);
            double nn = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
            q = {p1[0] + side * u[0] / nn, p1[1] + side * u[1] / nn,
                 p1[2] + side * u[2] / nn, 1.0};
        } else {
            q = pole(*p.ctx, p.face_forms.at(f.face));
            q = vscale(side / std::sqrt(std::fabs(bilinear_point(*p.ctx, q, q))), q);
        }
        Mat m(4, 4);
        for (int i = 0; i < 4; ++i) {
            m(i, 0) = p1[i];
            m(i, 1) = p2[i];
            m(i, 2) = p3[i];
            m(i, 3) = q[i];
        }
        return m;
    };
    Mat fs = frame(src, 1.0);
    Mat fd = frame(dst, across ? -1.0 : 1.0);
    Mat m = fd * inverse(fs);
    bool ok = p.euclidean ? is_euclidean_isometry(m, tol) : is_isometry(*p.ctx, m, tol);
    if (!ok) throw std::domain_error("isometry_from_flags: incompatible flags");
    return m;
}

// euclidean isometry classification from the rotation part and the
// translation component along its axis
inline IsometryClassification classify_affine_isometry(const Mat& g, double tol = 1e-9) {
    if (!is_euclidean_isometry(g, 1e-7))
        throw std::domain_error("classify_affine_isometry: not a rigid motion");
    IsometryClassification c;
    Mat rot(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rot(i, j) = g(i, j);
    Vec t = {g(0, 3), g(1, 3), g(2, 3)};
    c.det = determinant(rot);
    double tr = rot(0, 0) + rot(1, 1) + rot(2, 2);
    if (norm_inf(rot - Mat::identity(3)) < tol) {
        if (norm2(t) < tol) {
            c.kind = IsometryKind::Identity;
        } else {
            c.kind = IsometryKind::Screw; // pure translation: trivial rotation
            c.translation_length = norm2(t);
        }
        return c;
    }
    if (c.det < 0.0) {
        bool involution = norm_inf(g * g - Mat::identity(4)) < 1e-7;
        c.kind = involution && std::fabs(tr - 1.0) < 1e-7 ? IsometryKind::Reflection
                                                          : IsometryKind::Other;
        return c;
    }
    c.rotation_angle = std::acos(std::clamp((tr - 1.0) / 2.0, -1.0, 1.0));
    // rotation axis from (R - I) row cross products
    Mat n = rot - Mat::identity(3);
    Vec axis(3, 0.0);
    for (int i = 0; i < 3 && norm2(axis) < 1e-9; ++i)
        for (int j = i + 1; j < 3 && norm2(axis) < 1e-9; ++j) {
            Vec r1 = {n(i, 0), n(i, 1), n(i, 2)};
            Vec r2 = {n(j, 0), n(j, 1), n(j, 2)};
            axis = {r1[1] * r2[2] - r1[2] * r2[1], r1[2] * r2[0] - r1[0] * r2[2],
                    r1[0] * r2[1] - r1[1] * r2[0]};
        }
    double along = norm2(axis) > 1e-9 ? std::fabs(dot(t, axis)) / norm2(axis) : 0.0;
    c.translation_length = along;
    if (along > tol)
        c.kind = IsometryKind::Screw;
    else
        c.kind = std::fabs(c.rotation_angle - std::numbers::pi) < 1e-7
                     ? IsometryKind::HalfTurn
                     : IsometryKind::Rotation;
    return c;
}

// Recognize which two faces an isometry pairs: g maps the source face (to be
// labeled g^{-1}) onto the target, and the seed records the induced edge
// correspondence, anchored at the source's first boundary edge.
inline PairingSeed derive_pairing_seed(const MetricPolyhedron& p, const Mat& g,
                                       const std::string& name, double tol = 1e-6) {
    auto match_vertex = [&](const Vec& x) -> int {
        for (const auto& [id, c] : p.vertex_coords) {
            if (p.euclidean) {
                if (norm_inf(vsub(x, c)) < tol) return id;
            } else {
                Vec a = normalize_point(*p.ctx, x);
                if (bilinear_point(*p.ctx, a, p.interior) > 0.0) a = vscale(-1.0, a);
                if (norm_inf(vsub(a, c)) < tol) return id;
            }
        }
        return -1;
    };
    for (const auto& f : p.combi.faces) {
        std::map<int, int> img;
        bool all = true;
        for (int v : f.cycle) {
            int w = match_vertex(mul(g, p.vertex_coords.at(v)));
            if (w < 0) {
                all = false;
                break;
            }
            img[v] = w;
        }
        if (!all) continue;
        // the image vertices must fill exactly one face
        std::set<int> image_set;
        for (auto [a, b] : img) image_set.insert(b);
        for (const auto& f2 : p.combi.faces) {
            if (f2.cycle.size() != f.cycle.size()) continue;
            std::set<int> s2(f2.cycle.begin(), f2.cycle.end());
            if (s2 != image_set) continue;
            PairingSeed seed;
            seed.name = name;
            seed.source = f.id;
            seed.target = f2.id;
            seed.src_edge = {f.cycle[0], f.cycle[1]};
            seed.dst_edge = {img.at(f.cycle[0]), img.at(f.cycle[1])};
            return seed;
        }
    }
    throw std::runtime_error("isometry does not pair faces of the cell");
}

} // namespace spaceform
