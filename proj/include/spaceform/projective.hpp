#pragma once

// The projective metric model: points are vectors over the vertex basis a_j,
// planes are forms over the form basis b^i, the two inner products are given
// by the vertex matrix and the Gram matrix, and reflections generate the
// isometries. One SpaceContext carries everything and is immutable.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spaceform/gram.hpp"
#include "spaceform/linalg.hpp"

namespace spaceform {

struct SpaceContext {
    GramMatrix gram;     // form-space inner product <b^i, b^j>
    VertexMatrix vertex; // vector-space inner product <a_i, a_j>
    GeometryClass geometry;
    double k = 1.0; // metric constant (spherical contexts read it as R)
    int order = 0;

    bool hyperbolic() const {
        return geometry.kind == GeometryKind::HyperbolicCompact ||
               geometry.kind == GeometryKind::HyperbolicOther;
    }
    bool spherical() const { return geometry.kind == GeometryKind::Spherical; }
};

inline SpaceContext make_context(const GramMatrix& g, double tol = 1e-9) {
    SpaceContext ctx;
    ctx.gram = g;
    ctx.geometry = classify_geometry(g, tol);
    if (ctx.geometry.kind == GeometryKind::Euclidean)
        throw SingularGramError(
            "euclidean Gram matrices have no projective metric context; "
            "use the affine realization path");
    ctx.vertex = invert_gram(g, tol);
    ctx.order = g.order;
    return ctx;
}

inline SpaceContext make_context(const std::string& symbol, double tol = 1e-9) {
    return make_context(build_gram(symbol), tol);
}

// point coordinates (over a_j) and plane coordinates (over b^i); the natural
// pairing of a form u with a vector x is the plain coordinate dot product.
inline double pair_eval(const Vec& plane, const Vec& point) { return dot(plane, point); }

inline double bilinear_point(const SpaceContext& ctx, const Vec& x, const Vec& y) {
    return dot(x, mul(ctx.vertex.a, y));
}

inline double bilinear_form(const SpaceContext& ctx, const Vec& u, const Vec& v) {
    return dot(u, mul(ctx.gram.b, v));
}

enum class ElementClass { Proper, Boundary, Outer };

inline const char* to_string(ElementClass c) {
    switch (c) {
        case ElementClass::Proper: return "proper";
        case ElementClass::Boundary: return "boundary";
        case ElementClass::Outer: return "outer";
    }
    return "?";
}

inline ElementClass classify_point(const SpaceContext& ctx, const Vec& x, double tol = 1e-9) {
    if (!ctx.hyperbolic())
        throw std::domain_error("point classification needs a hyperbolic context");
    double q = bilinear_point(ctx, x, x);
    double scale = tol * dot(x, x);
    if (q < -scale) return ElementClass::Proper;
    if (q > scale) return ElementClass::Outer;
    return ElementClass::Boundary;
}

inline ElementClass classify_plane(const SpaceContext& ctx, const Vec& u, double tol = 1e-9) {
    if (!ctx.hyperbolic())
        throw std::domain_error("plane classification needs a hyperbolic context");
    double q = bilinear_form(ctx, u, u);
    double scale = tol * dot(u, u);
    if (q > scale) return ElementClass::Proper;
    if (q < -scale) return ElementClass::Outer;
    return ElementClass::Boundary;
}

// Proper points normalized to <x;x> = -1; outer points to +1.
inline Vec normalize_point(const SpaceContext& ctx, const Vec& x) {
    double q = bilinear_point(ctx, x, x);
    double s = std::sqrt(std::fabs(q));
    if (s == 0.0) return x; // boundary point, homogeneous as-is
    return vscale(1.0 / s, x);
}

inline Vec normalize_plane(const SpaceContext& ctx, const Vec& u) {
    double q = bilinear_form(ctx, u, u);
    double s = std::sqrt(std::fabs(q));
    if (s == 0.0) return u;
    return vscale(1.0 / s, u);
}

// Hyperbolic distance cosh(d/k) = -<x;y>/sqrt(<x;x><y;y>); on a spherical
// context the same quotient with arccos and radius R = k.
inline double distance(const SpaceContext& ctx, const Vec& x, const Vec& y, double tol = 1e-9) {
    double qx = bilinear_point(ctx, x, x);
    double qy = bilinear_point(ctx, y, y);
    double qxy = bilinear_point(ctx, x, y);
    if (ctx.spherical()) {
        double c = qxy / std::sqrt(qx * qy);
        c = std::clamp(c, -1.0, 1.0);
        return ctx.k * std::acos(c);
    }
    if (!(qx < 0.0) || !(qy < 0.0))
        throw std::domain_error("distance: both points must be proper");
    double arg = std::fabs(qxy) / std::sqrt(qx * qy);
    if (arg < 1.0 - tol) throw std::domain_error("distance: arccosh argument below 1");
    if (arg < 1.0) arg = 1.0; // coincident points under roundoff
    return ctx.k * std::acosh(arg);
}

struct PlaneAngle {
    double raw = 0.0;      // arccos of the normalized form product
    double interior = 0.0; // pi - raw: the dihedral the Gram convention stores
    bool proper_intersection = false;
};

inline PlaneAngle angle(const SpaceContext& ctx, const Vec& u, const Vec& v) {
    double qu = bilinear_form(ctx, u, u);
    double qv = bilinear_form(ctx, v, v);
    double quv = bilinear_form(ctx, u, v);
    if (ctx.hyperbolic() && (qu <= 0.0 || qv <= 0.0))
        throw std::domain_error("angle: both planes must be proper");
    PlaneAngle a;
    double c = std::clamp(quv / std::sqrt(qu * qv), -1.0, 1.0);
    a.raw = std::acos(c);
    a.interior = std::numbers::pi - a.raw;
    a.proper_intersection = qu * qv - quv * quv > 0.0;
    return a;
}

// polarity: pole of a form u has vector coordinates u_i b^{ij}; the polar of
// a vector x has form coordinates a_{ij} x^j.
inline Vec pole(const SpaceContext& ctx, const Vec& u) { return mul(ctx.gram.b, u); }

inline Vec polar(const SpaceContext& ctx, const Vec& x) { return mul(ctx.vertex.a, x); }

namespace detail {
inline double mirror_norm_or_throw(const SpaceContext& ctx, const Vec& mirror) {
    double uu = bilinear_form(ctx, mirror, mirror);
    if (std::fabs(uu) < 1e-10 * dot(mirror, mirror))
        throw std::domain_error("reflect: boundary mirror");
    return uu;
}
} // namespace detail

// Reflection in the (proper) mirror plane u: x -> x - 2 (x.u)/<u;u> pole(u).
inline Vec reflect_point(const SpaceContext& ctx, const Vec& mirror, const Vec& x) {
    double uu = detail::mirror_norm_or_throw(ctx, mirror);
    double t = 2.0 * pair_eval(mirror, x) / uu;
    return vsub(x, vscale(t, pole(ctx, mirror)));
}

inline Vec reflect_plane(const SpaceContext& ctx, const Vec& mirror, const Vec& v) {
    double uu = detail::mirror_norm_or_throw(ctx, mirror);
    double t = 2.0 * bilinear_form(ctx, v, mirror) / uu;
    return vsub(v, vscale(t, mirror));
}

// Matrix of the reflection acting on point coordinates.
inline Mat reflection_matrix(const SpaceContext& ctx, const Vec& mirror) {
    double uu = detail::mirror_norm_or_throw(ctx, mirror);
    Vec p = pole(ctx, mirror);
    Mat r = Mat::identity(ctx.order);
    for (int i = 0; i < ctx.order; ++i)
        for (int j = 0; j < ctx.order; ++j) r(i, j) -= 2.0 * p[i] * mirror[j] / uu;
    return r;
}

} // namespace spaceform
