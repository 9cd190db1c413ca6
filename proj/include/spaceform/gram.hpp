#pragma once

// Coxeter-Schläfli Gram matrices b^{ij} = cos(pi - beta^{ij}) and the
// classification of the geometry they define.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "spaceform/linalg.hpp"
#include "spaceform/schlafli.hpp"

namespace spaceform {

struct GramMatrix {
    int order = 0;
    Mat b; // symmetric, unit diagonal, b^{ij} in (-1, 0] off the diagonal

    double operator()(int i, int j) const { return b(i, j); }

    // dihedral angle beta^{ij} = pi - arccos(b^{ij})
    double branch_angle(int i, int j) const { return std::numbers::pi - std::acos(b(i, j)); }
};

inline GramMatrix build_gram(const SchlafliSymbol& s) {
    const int n = s.order();
    GramMatrix g;
    g.order = n;
    g.b = Mat::identity(n);
    if (s.has_branches()) {
        for (auto& [ij, f] : s.branches) {
            double beta = std::numbers::pi * static_cast<double>(f.num) / f.den;
            double v = -std::cos(beta); // cos(pi - beta)
            g.b(ij.first, ij.second) = v;
            g.b(ij.second, ij.first) = v;
        }
    } else {
        for (size_t i = 0; i < s.entries.size(); ++i) {
            double v = -std::cos(std::numbers::pi / s.entries[i]);
            g.b(static_cast<int>(i), static_cast<int>(i) + 1) = v;
            g.b(static_cast<int>(i) + 1, static_cast<int>(i)) = v;
        }
    }
    return g;
}

inline GramMatrix build_gram(const std::string& symbol) { return build_gram(parse_symbol(symbol)); }

enum class GeometryKind { Spherical, Euclidean, HyperbolicCompact, HyperbolicOther };

inline const char* to_string(GeometryKind k) {
    switch (k) {
        case GeometryKind::Spherical: return "spherical";
        case GeometryKind::Euclidean: return "euclidean";
        case GeometryKind::HyperbolicCompact: return "hyperbolic-compact";
        case GeometryKind::HyperbolicOther: return "hyperbolic-other";
    }
    return "?";
}

struct Signature {
    int plus = 0, minus = 0, zero = 0;
};

struct GeometryClass {
    GeometryKind kind = GeometryKind::Spherical;
    double determinant = 0.0;
    std::vector<double> leading_minors; // orders 1..n
    Signature signature;
    std::vector<int> failing_minors; // 1-based orders of non-positive proper minors
};

// Leading principal minor of order k.
inline double leading_minor(const Mat& m, int k) {
    Mat sub(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = m(i, j);
    return determinant(sub);
}

// Signature by symmetric diagonalization; eigenvalues within `tol` of zero
// count as zero. The entries are O(1) cosines, so 1e-9 cleanly separates a
// degenerate form from double roundoff.
inline GeometryClass classify_geometry(const GramMatrix& g, double tol = 1e-9) {
    GeometryClass c;
    c.determinant = determinant(g.b);
    for (int k = 1; k <= g.order; ++k) c.leading_minors.push_back(leading_minor(g.b, k));
    for (double ev : symmetric_eigenvalues(g.b)) {
        if (ev > tol)
            ++c.signature.plus;
        else if (ev < -tol)
            ++c.signature.minus;
        else
            ++c.signature.zero;
    }
    for (int k = 1; k < g.order; ++k)
        if (c.leading_minors[k - 1] <= tol) c.failing_minors.push_back(k);

    if (c.signature.minus == 0 && c.signature.zero == 0)
        c.kind = GeometryKind::Spherical;
    else if (c.signature.minus == 0)
        c.kind = GeometryKind::Euclidean;
    else if (c.signature.minus == 1 && c.failing_minors.empty() && c.determinant < -tol)
        c.kind = GeometryKind::HyperbolicCompact; // Lanner: proper leading minors positive
    else
        c.kind = GeometryKind::HyperbolicOther;
    return c;
}

struct VertexMatrix {
    Mat a; // inverse of the Gram matrix
};

struct SingularGramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline VertexMatrix invert_gram(const GramMatrix& g, double tol = 1e-9) {
    double det = determinant(g.b);
    if (std::fabs(det) <= tol)
        throw SingularGramError(
            "Gram matrix is singular (euclidean geometry); use the affine realization path");
    VertexMatrix v;
    v.a = inverse(g.b);
    // exact-inverse contract
    Mat resid = g.b * v.a - Mat::identity(g.order);
    if (norm_inf(resid) > 1e-10)
        throw std::runtime_error("invert_gram: inverse residual out of tolerance");
    return v;
}

// Defect of the characteristic triangle with angles pi/2, pi/p, pi/q.
// Positive means hyperbolic, zero euclidean, negative spherical excess.
inline double triangle_defect(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("triangle_defect: entries must be >= 2");
    const double pi = std::numbers::pi;
    return pi - (pi / 2 + pi / p + pi / q);
}

struct CobwebAdmissibility {
    int u = 0, v = 0, w = 0;
    bool angle_sum_uv_ok = false; // pi/u + pi/v < pi/2
    bool angle_sum_vw_ok = false; // pi/v + pi/w < pi/2
    double determinant_value = 0.0; // sin(pi/u) sin(pi/w) - cos(pi/v)
    bool determinant_negative = false;
    bool admissible = false;
};

// Orthoscheme parameters (u,v,w) admit a compact truncated domain iff both
// corner conditions hold strictly and the closed-form determinant is negative.
inline CobwebAdmissibility cobweb_admissible(int u, int v, int w) {
    if (u < 3 || v < 3 || w < 3)
        throw std::invalid_argument("cobweb_admissible: parameters must be >= 3");
    const double pi = std::numbers::pi;
    CobwebAdmissibility r;
    r.u = u;
    r.v = v;
    r.w = w;
    r.angle_sum_uv_ok = pi / u + pi / v < pi / 2 - 1e-15;
    r.angle_sum_vw_ok = pi / v + pi / w < pi / 2 - 1e-15;
    r.determinant_value = std::sin(pi / u) * std::sin(pi / w) - std::cos(pi / v);
    r.determinant_negative = r.determinant_value < 0.0;
    r.admissible = r.angle_sum_uv_ok && r.angle_sum_vw_ok && r.determinant_negative;
    return r;
}

} // namespace spaceform
