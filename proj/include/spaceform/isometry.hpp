#pragma once

// Isometry matrices, breadth-first group closure with projective
// deduplication, orbits, and the classification of an isometry into
// identity / reflection / rotation / half-turn / screw.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "spaceform/linalg.hpp"
#include "spaceform/projective.hpp"
#include "spaceform/words.hpp"

namespace spaceform {

// M preserves the vector-space inner product: M^T A M = A.
inline bool is_isometry(const SpaceContext& ctx, const Mat& m, double tol = 1e-8) {
    Mat lhs = transpose(m) * ctx.vertex.a * m;
    return norm_inf(lhs - ctx.vertex.a) <= tol * std::max(1.0, norm_inf(ctx.vertex.a));
}

namespace detail {

// Projective canonical form: flip the sign so the first entry of largest
// magnitude is positive. Makes M and -M compare equal.
inline Mat sign_normalize(const Mat& m) {
    int best = 0;
    double mag = 0.0;
    for (size_t i = 0; i < m.a.size(); ++i)
        if (std::fabs(m.a[i]) > mag + 1e-12) {
            mag = std::fabs(m.a[i]);
            best = static_cast<int>(i);
        }
    if (m.a[best] < 0.0) return -1.0 * m;
    return m;
}

inline bool mat_close(const Mat& x, const Mat& y, double tol) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (size_t i = 0; i < x.a.size(); ++i)
        if (std::fabs(x.a[i] - y.a[i]) > tol) return false;
    return true;
}

} // namespace detail

struct GroupClosure {
    std::vector<Mat> elements;            // canonically ordered
    std::vector<std::string> words;       // generator words, "" for identity
    bool projective = true;               // dedup up to sign
    size_t order() const { return elements.size(); }
};

struct ClosureCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Breadth-first closure of the generated group. Words are over the given
// names; the first (shortest, then lexicographically first by construction)
// word reaching an element wins. Throws once `cap` elements are exceeded,
// which is the usual sign of an infinite reflection group.
//
// Projective dedup (M and -M identified) is the right notion for the
// hyperbolic model, where both signs act as the same isometry. On a sphere
// the two signs are distinct maps, so spherical closures pass
// projective=false; the central inversion in [4,3] is what separates
// order 48 from its projective image of order 24.
inline GroupClosure group_closure(const std::vector<std::pair<std::string, Mat>>& generators,
                                  size_t cap = 10000, double tol = 1e-8,
                                  bool projective = true) {
    GroupClosure g;
    g.projective = projective;
    if (generators.empty()) throw std::invalid_argument("group_closure: no generators");
    const int n = generators.front().second.rows;
    auto canon = [&](const Mat& m) { return projective ? detail::sign_normalize(m) : m; };

    auto find = [&](const Mat& m) -> int {
        for (size_t i = 0; i < g.elements.size(); ++i)
            if (detail::mat_close(g.elements[i], m, tol)) return static_cast<int>(i);
        return -1;
    };

    g.elements.push_back(canon(Mat::identity(n)));
    g.words.emplace_back("");
    size_t head = 0;
    while (head < g.elements.size()) {
        Mat cur = g.elements[head];
        std::string word = g.words[head];
        ++head;
        for (const auto& [name, gen] : generators) {
            Mat next = canon(gen * cur);
            if (find(next) >= 0) continue;
            g.elements.push_back(next);
            g.words.push_back(name + word);
            if (g.elements.size() > cap)
                throw ClosureCapError("group closure exceeded cap " + std::to_string(cap) +
                                      " elements; group looks infinite");
        }
    }
    return g;
}

// Context-aware closure: hyperbolic contexts dedup projectively, spherical
// ones keep signs.
inline GroupClosure group_closure(const SpaceContext& ctx,
                                  const std::vector<std::pair<std::string, Mat>>& generators,
                                  size_t cap = 10000, double tol = 1e-8) {
    return group_closure(generators, cap, tol, ctx.hyperbolic());
}

// Orbit of a point under a finite closure, projectively deduplicated, kept in
// first-visit order (deterministic given the closure's canonical order).
inline std::vector<Vec> orbit_point(const Vec& x, const GroupClosure& g, double tol = 1e-8) {
    auto canon = [&](const Vec& v) {
        if (!g.projective) return v;
        int best = 0;
        double mag = 0.0;
        for (size_t i = 0; i < v.size(); ++i)
            if (std::fabs(v[i]) > mag + 1e-12) {
                mag = std::fabs(v[i]);
                best = static_cast<int>(i);
            }
        Vec w = vscale(1.0 / v[best], v);
        return w;
    };
    std::vector<Vec> orbit;
    for (const auto& m : g.elements) {
        Vec y = canon(mul(m, x));
        bool seen = false;
        for (const auto& z : orbit) {
            double d = 0.0;
            for (size_t i = 0; i < y.size(); ++i) d = std::max(d, std::fabs(y[i] - z[i]));
            if (d <= tol) {
                seen = true;
                break;
            }
        }
        if (!seen) orbit.push_back(y);
    }
    return orbit;
}

// Matrix value of a word over generator matrices, letters acting on column
// vectors (the leftmost letter is applied last).
inline Mat evaluate_word(const GroupWord& w, const std::vector<Mat>& gens) {
    if (gens.empty()) throw std::invalid_argument("evaluate_word: no generators");
    const int n = gens.front().rows;
    Mat m = Mat::identity(n);
    for (int l : w.letters) {
        int g = std::abs(l) - 1;
        m = m * (l > 0 ? gens.at(g) : inverse(gens.at(g)));
    }
    return m;
}

enum class IsometryKind { Identity, Reflection, Rotation, HalfTurn, Screw, Other };

inline const char* to_string(IsometryKind k) {
    switch (k) {
        case IsometryKind::Identity: return "identity";
        case IsometryKind::Reflection: return "reflection";
        case IsometryKind::Rotation: return "rotation";
        case IsometryKind::HalfTurn: return "half-turn";
        case IsometryKind::Screw: return "screw";
        case IsometryKind::Other: return "other";
    }
    return "?";
}

struct IsometryClassification {
    IsometryKind kind = IsometryKind::Other;
    double rotation_angle = 0.0;
    double translation_length = 0.0;
    double det = 0.0;
};

// Classification from the eigenvalue pattern. Hyperbolic screw motions show
// a real pair e^{l/k}, e^{-l/k} plus a unit pair e^{±i theta}; elliptic
// elements keep every modulus at 1.
inline IsometryClassification classify_isometry(const SpaceContext& ctx, const Mat& m0,
                                                double tol = 1e-8) {
    if (!is_isometry(ctx, m0, tol))
        throw std::domain_error("classify_isometry: matrix does not preserve the form");
    Mat m = m0;
    if (ctx.hyperbolic()) {
        // pick the representative preserving the proper cone component
        Vec probe(ctx.order, 0.0);
        int idx = 0;
        for (int i = 0; i < ctx.order; ++i)
            if (ctx.vertex.a(i, i) < ctx.vertex.a(idx, idx)) idx = i;
        probe[idx] = 1.0;
        if (bilinear_point(ctx, probe, mul(m, probe)) > 0.0) m = -1.0 * m;
    }
    IsometryClassification c;
    c.det = determinant(m);

    Mat diff = m - Mat::identity(ctx.order);
    if (norm_inf(diff) < tol) {
        c.kind = IsometryKind::Identity;
        return c;
    }

    auto ev = eigenvalues(m);
    double max_mod = 0.0, max_arg = 0.0;
    for (auto& z : ev) {
        max_mod = std::max(max_mod, std::abs(z));
        if (std::abs(std::abs(z) - 1.0) < 1e-6)
            max_arg = std::max(max_arg, std::fabs(std::arg(z)));
    }

    Mat m2 = m * m;
    bool involution = norm_inf(m2 - Mat::identity(ctx.order)) < 1e-6;

    if (c.det < 0.0) {
        // improper: a plane reflection fixes a 3-space (eigenvalue 1 thrice)
        int minus_ones = 0;
        for (auto& z : ev)
            if (std::abs(z - std::complex<double>(-1.0, 0.0)) < 1e-6) ++minus_ones;
        if (involution && minus_ones == 1) {
            c.kind = IsometryKind::Reflection;
            c.rotation_angle = std::numbers::pi;
            return c;
        }
        c.kind = IsometryKind::Other;
        c.rotation_angle = max_arg;
        return c;
    }

    if (max_mod > 1.0 + 1e-7) {
        c.kind = IsometryKind::Screw;
        c.translation_length = ctx.k * std::log(max_mod);
        double ang = 0.0;
        for (auto& z : ev)
            if (std::abs(std::abs(z) - 1.0) < 1e-6) ang = std::max(ang, std::fabs(std::arg(z)));
        c.rotation_angle = ang;
        return c;
    }

    // elliptic (or parabolic, which lands in Other)
    if (max_arg > 1e-7) {
        c.rotation_angle = max_arg;
        c.kind = involution ? IsometryKind::HalfTurn : IsometryKind::Rotation;
        return c;
    }
    c.kind = IsometryKind::Other; // parabolic: eigenvalues 1, matrix != I
    return c;
}

} // namespace spaceform
