#pragma once

// Characteristic simplices realized in a metric context: vertices on the
// dual basis, mirror planes on the form basis, plus the affine path for
// euclidean (singular) Gram matrices and polar truncation of outer vertices.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "spaceform/gram.hpp"
#include "spaceform/isometry.hpp"
#include "spaceform/linalg.hpp"
#include "spaceform/projective.hpp"

namespace spaceform {

struct Orthoscheme {
    SpaceContext ctx;
    std::vector<Vec> vertices; // A_0..A_{n-1} over the vertex basis, normalized
    std::vector<Vec> planes;   // b^0..b^{n-1}: the standard form basis

    Vec mirror(int i) const { return planes.at(i); }

    Mat reflection(int i) const { return reflection_matrix(ctx, planes.at(i)); }

    // F = { x : x.b^j >= 0 for all j }
    bool contains(const Vec& x, double tol = 1e-12) const {
        for (const auto& u : planes)
            if (pair_eval(u, x) < -tol) return false;
        return true;
    }

    Vec interior_point() const {
        Vec c(ctx.order, 1.0);
        return c;
    }
};

// Nonsingular (spherical or hyperbolic-signature) realization: A_i is the
// i-th dual basis vector, scaled to <x;x> = -1 when proper.
inline Orthoscheme realize(const GramMatrix& g, double tol = 1e-9) {
    Orthoscheme o;
    o.ctx = make_context(g, tol);
    for (int i = 0; i < g.order; ++i) {
        Vec v(g.order, 0.0);
        v[i] = 1.0;
        o.vertices.push_back(normalize_point(o.ctx, v));
        Vec u(g.order, 0.0);
        u[i] = 1.0;
        o.planes.push_back(u);
    }
    return o;
}

inline Orthoscheme realize(const std::string& symbol, double tol = 1e-9) {
    return realize(build_gram(symbol), tol);
}

// ---------------------------------------------------------------------------
// Euclidean (affine) realization.
//
// Points are homogeneous (x, y, z, 1); plane forms are (n, -d) acting by the
// plain pairing; isometries are 4x4 matrices with orthogonal linear part and
// last row (0,0,0,1). Only the form-space product survives the degeneration:
// <u;v> is the dot product of the normal parts.

struct AffineOrthoscheme {
    std::vector<Vec> vertices; // homogeneous, weight 1
    std::vector<Vec> planes;   // inward: plane(x) >= 0 on the simplex
};

inline double affine_plane_angle(const Vec& u, const Vec& v) {
    double nu = 0.0, nv = 0.0, nuv = 0.0;
    for (int i = 0; i < 3; ++i) {
        nu += u[i] * u[i];
        nv += v[i] * v[i];
        nuv += u[i] * v[i];
    }
    return std::acos(std::clamp(nuv / std::sqrt(nu * nv), -1.0, 1.0));
}

inline bool is_euclidean_isometry(const Mat& m, double tol = 1e-9) {
    if (m.rows != 4 || m.cols != 4) return false;
    for (int j = 0; j < 3; ++j)
        if (std::fabs(m(3, j)) > tol) return false;
    if (std::fabs(m(3, 3) - 1.0) > tol) return false;
    Mat r(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = m(i, j);
    return norm_inf(transpose(r) * r - Mat::identity(3)) <= tol;
}

// Generic singular-Gram embedding: factor B = N^T N with N the 3x4 matrix of
// unit plane normals, put three planes through the origin and offset the
// last. Dihedral angles reproduce arccos(-b^{ij}) by construction.
inline AffineOrthoscheme realize_euclidean(const GramMatrix& g, double tol = 1e-9) {
    if (g.order != 4) throw std::invalid_argument("affine realization needs a rank-4 Gram");
    GeometryClass geo = classify_geometry(g, tol);
    if (geo.kind != GeometryKind::Euclidean)
        throw std::invalid_argument("realize_euclidean: Gram matrix is not euclidean");

    // eigen-decompose B by Jacobi with vectors: run the rotation loop again,
    // accumulating the orthogonal factor
    Mat m = g.b;
    Mat q = Mat::identity(4);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) off += m(i, j) * m(i, j);
        if (off < 1e-28) break;
        for (int p = 0; p < 4; ++p)
            for (int r = p + 1; r < 4; ++r) {
                if (std::fabs(m(p, r)) < 1e-300) continue;
                double theta = (m(r, r) - m(p, p)) / (2.0 * m(p, r));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int kk = 0; kk < 4; ++kk) {
                    double mkp = m(kk, p), mkr = m(kk, r);
                    m(kk, p) = c * mkp - s * mkr;
                    m(kk, r) = s * mkp + c * mkr;
                }
                for (int kk = 0; kk < 4; ++kk) {
                    double mpk = m(p, kk), mrk = m(r, kk);
                    m(p, kk) = c * mpk - s * mrk;
                    m(r, kk) = s * mpk + c * mrk;
                    double qpk = q(p, kk), qrk = q(r, kk);
                    q(p, kk) = c * qpk - s * qrk;
                    q(r, kk) = s * qpk + c * qrk;
                }
            }
    }
    // B = Q^T diag(lam) Q with rows of Q the eigenvectors; normals from the
    // three positive eigenvalues
    std::vector<std::pair<double, int>> lam;
    for (int i = 0; i < 4; ++i) lam.push_back({m(i, i), i});
    std::sort(lam.rbegin(), lam.rend());
    if (lam[3].first > tol || lam[2].first < tol)
        throw std::runtime_error("realize_euclidean: unexpected eigenvalue pattern");
    Mat n(3, 4); // column j = normal of plane b^j
    for (int r = 0; r < 3; ++r) {
        double s = std::sqrt(std::max(lam[r].first, 0.0));
        for (int j = 0; j < 4; ++j) n(r, j) = s * q(lam[r].second, j);
    }

    AffineOrthoscheme a;
    // planes: b^0..b^2 through the origin, b^3 offset by 1
    for (int j = 0; j < 4; ++j) {
        Vec u = {n(0, j), n(1, j), n(2, j), j == 3 ? -1.0 : 0.0};
        a.planes.push_back(u);
    }
    // vertex A_i solves the three plane equations j != i
    for (int i = 0; i < 4; ++i) {
        Mat sys(3, 3);
        Vec rhs(3, 0.0);
        int row = 0;
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            for (int cc = 0; cc < 3; ++cc) sys(row, cc) = a.planes[j][cc];
            rhs[row] = -a.planes[j][3];
            ++row;
        }
        Vec x = solve(sys, rhs);
        a.vertices.push_back({x[0], x[1], x[2], 1.0});
    }
    // orient every plane inward against the centroid
    Vec c(4, 0.0);
    for (const auto& v : a.vertices) c = vadd(c, vscale(0.25, v));
    for (auto& u : a.planes)
        if (pair_eval(u, c) < 0.0) u = vscale(-1.0, u);
    return a;
}

// The standard integer-coordinate sphenoid. Its mirror arrangement
// reproduces the 4-cycle of pi/3 branch angles with orthogonal diagonals,
// and the orbit of its centroid under the A_3 stabilizer is the vertex set
// of the truncated octahedron (0,+-1,+-2).
inline AffineOrthoscheme sphenoid_standard() {
    AffineOrthoscheme a;
    a.vertices = {
        {2.0, 2.0, 2.0, 1.0},  // A_0
        {4.0, 0.0, 0.0, 1.0},  // A_1
        {2.0, 2.0, -2.0, 1.0}, // A_2
        {0.0, 0.0, 0.0, 1.0},  // A_3
    };
    const double s = 1.0 / std::sqrt(2.0);
    a.planes = {
        {0.0, s, s, 0.0},    // b^0 through A_1 A_2 A_3
        {s, -s, 0.0, 0.0},   // b^1 through A_0 A_2 A_3
        {0.0, s, -s, 0.0},   // b^2 through A_0 A_1 A_3
        {-s, -s, 0.0, 4.0 * s}, // b^3 through A_0 A_1 A_2
    };
    return a;
}

inline Mat affine_reflection(const Vec& plane) {
    // x -> x - 2 (n.x - d) n / |n|^2 with plane = (n, -d)
    double nn = plane[0] * plane[0] + plane[1] * plane[1] + plane[2] * plane[2];
    Mat m = Mat::identity(4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) -= 2.0 * plane[i] * plane[j] / nn;
    return m;
}

// ---------------------------------------------------------------------------
// Polar truncation of outer vertices.

struct TruncatedOrthoscheme {
    Orthoscheme base;
    std::vector<int> truncated;        // indices of the outer vertices cut away
    std::vector<Vec> polar_planes;     // polar plane per truncated vertex
    std::vector<Vec> vertices;         // all proper vertices of the compact domain
};

struct NothingToTruncateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline TruncatedOrthoscheme truncate(const Orthoscheme& o, double tol = 1e-9) {
    TruncatedOrthoscheme t;
    t.base = o;
    const int n = o.ctx.order;
    std::vector<bool> outer(n, false);
    for (int i = 0; i < n; ++i)
        outer[i] = classify_point(o.ctx, o.vertices[i], tol) == ElementClass::Outer;
    for (int i = 0; i < n; ++i)
        if (outer[i]) {
            t.truncated.push_back(i);
            t.polar_planes.push_back(polar(o.ctx, o.vertices[i]));
        }
    if (t.truncated.empty())
        throw NothingToTruncateError("truncate: no outer vertex, the domain is already compact");

    const Mat& a = o.ctx.vertex.a;
    for (int i = 0; i < n; ++i) {
        if (!outer[i]) {
            t.vertices.push_back(o.vertices[i]);
            continue;
        }
        // the polar plane of A_i meets edge A_i A_j at a_{ij} A_i - a_{ii} A_j
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            Vec cut(n, 0.0);
            cut[i] = a(i, j);
            cut[j] = -a(i, i);
            if (classify_point(o.ctx, cut, tol) != ElementClass::Proper) continue;
            // orient toward the simplex interior (all coordinates >= 0)
            bool neg = false;
            for (double c : cut)
                if (c < -tol) neg = true;
            if (neg) cut = vscale(-1.0, cut);
            t.vertices.push_back(normalize_point(o.ctx, cut));
        }
    }
    return t;
}

} // namespace spaceform
