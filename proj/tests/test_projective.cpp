#include <catch2/catch.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "spaceform/projective.hpp"

using namespace spaceform;
using std::numbers::pi;

namespace {

Vec basis(int n, int i) {
    Vec v(n, 0.0);
    v[i] = 1.0;
    return v;
}

// random proper point near the cell center of a hyperbolic context
Vec random_proper(const SpaceContext& ctx, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-0.2, 0.2);
    int center = 0;
    for (int i = 0; i < ctx.order; ++i)
        if (ctx.vertex.a(i, i) < ctx.vertex.a(center, center)) center = i;
    for (;;) {
        Vec x = basis(ctx.order, center);
        for (double& c : x) c += dist(rng);
        if (bilinear_point(ctx, x, x) < -1e-6) return x;
    }
}

} // namespace

TEST_CASE("context construction rejects euclidean input") {
    CHECK_THROWS_AS(make_context("4,3,4"), SingularGramError);
    CHECK_NOTHROW(make_context("5,3,5"));
    CHECK_NOTHROW(make_context("4,3"));
    CHECK_NOTHROW(make_context("6,6,6"));
}

TEST_CASE("element classification in 5,3,5") {
    SpaceContext ctx = make_context("5,3,5");
    // all four simplex vertices are proper (compact case)
    for (int i = 0; i < 4; ++i)
        CHECK(classify_point(ctx, basis(4, i)) == ElementClass::Proper);
    // mirrors are proper planes
    for (int i = 0; i < 4; ++i)
        CHECK(classify_plane(ctx, basis(4, i)) == ElementClass::Proper);
}

TEST_CASE("element classification in 6,6,6: outer tips") {
    SpaceContext ctx = make_context("6,6,6");
    CHECK(classify_point(ctx, basis(4, 0)) == ElementClass::Outer);
    CHECK(classify_point(ctx, basis(4, 3)) == ElementClass::Outer);
    CHECK(classify_point(ctx, basis(4, 1)) == ElementClass::Proper);
    CHECK(classify_point(ctx, basis(4, 2)) == ElementClass::Proper);
}

TEST_CASE("boundary points sit on the absolute") {
    SpaceContext ctx = make_context("5,3,5");
    // mix a proper and an outer direction of the form cone until <x;x> = 0:
    // pole of b^0 is outer, A_3 proper; solve the quadratic along the segment
    Vec p = pole(ctx, basis(4, 0));
    Vec a3 = basis(4, 3);
    double qa = bilinear_point(ctx, p, p);
    double qb = bilinear_point(ctx, a3, a3);
    double qab = bilinear_point(ctx, p, a3);
    // <p + t a3> = qa + 2 t qab + t^2 qb = 0
    double disc = qab * qab - qa * qb;
    REQUIRE(disc > 0.0);
    double t = (-qab + std::sqrt(disc)) / qb;
    Vec end = vadd(p, vscale(t, a3));
    CHECK(classify_point(ctx, end) == ElementClass::Boundary);
    // classification is homogeneous
    CHECK(classify_point(ctx, vscale(17.5, end)) == ElementClass::Boundary);
    CHECK(classify_point(ctx, vscale(-3.0, end)) == ElementClass::Boundary);
}

TEST_CASE("classification rejects spherical contexts") {
    SpaceContext sph = make_context("4,3");
    CHECK_THROWS_AS(classify_point(sph, basis(3, 0)), std::domain_error);
}

TEST_CASE("distance basics") {
    SpaceContext ctx = make_context("5,3,5");
    Vec a3 = basis(4, 3);
    CHECK(distance(ctx, a3, a3) == Approx(0.0).margin(1e-9));
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        Vec x = random_proper(ctx, rng), y = random_proper(ctx, rng);
        CHECK(distance(ctx, x, y) == Approx(distance(ctx, y, x)).margin(1e-12));
        CHECK(distance(ctx, x, y) >= 0.0);
        // scale invariance of the homogeneous formula
        CHECK(distance(ctx, vscale(2.5, x), vscale(-0.7, y)) ==
              Approx(distance(ctx, x, y)).margin(1e-10));
    }
}

TEST_CASE("distance A2 A3 in 5,3,5 against a high precision oracle") {
    SpaceContext ctx = make_context("5,3,5");
    double d = distance(ctx, basis(4, 2), basis(4, 3));
    // independent evaluation in long double straight from the inverse matrix
    const Mat& a = ctx.vertex.a;
    long double qx = a(2, 2), qy = a(3, 3), qxy = a(2, 3);
    long double arg = -qxy / sqrtl(qx * qy);
    if (arg < 1.0L) arg = -arg; // representatives may sit in opposite cones
    long double oracle = acoshl(arg);
    CHECK(d == Approx(static_cast<double>(oracle)).margin(1e-13));
    CHECK(d > 0.0);
}

TEST_CASE("distance requires proper points in hyperbolic contexts") {
    SpaceContext ctx = make_context("6,6,6");
    CHECK_THROWS_AS(distance(ctx, basis(4, 0), basis(4, 1)), std::domain_error);
}

TEST_CASE("triangle inequality on random proper triples") {
    SpaceContext ctx = make_context("5,3,5");
    std::mt19937 rng(5);
    for (int t = 0; t < 300; ++t) {
        Vec x = random_proper(ctx, rng), y = random_proper(ctx, rng), z = random_proper(ctx, rng);
        double xy = distance(ctx, x, y), yz = distance(ctx, y, z), xz = distance(ctx, x, z);
        CHECK(xz <= xy + yz + 1e-9);
    }
}

TEST_CASE("spherical distance matches cube coordinates") {
    // 4,3 context: A_0 = cube vertex direction, A_1 = edge midpoint direction
    SpaceContext ctx = make_context("4,3");
    double d = distance(ctx, basis(3, 0), basis(3, 1));
    Vec v1 = {1, 1, 1}, v2 = {1, 1, 0};
    double oracle = std::acos(dot(v1, v2) / (norm2(v1) * norm2(v2)));
    CHECK(d == Approx(oracle).margin(1e-12));
}

TEST_CASE("angles between mirror planes") {
    SpaceContext ctx = make_context("5,3,5");
    auto a01 = angle(ctx, basis(4, 0), basis(4, 1));
    CHECK(a01.raw == Approx(pi - pi / 5).margin(1e-12));
    CHECK(a01.interior == Approx(pi / 5).margin(1e-12));
    CHECK(a01.proper_intersection);
    auto a12 = angle(ctx, basis(4, 1), basis(4, 2));
    CHECK(a12.interior == Approx(pi / 3).margin(1e-12));
    auto a02 = angle(ctx, basis(4, 0), basis(4, 2));
    CHECK(a02.raw == Approx(pi / 2).margin(1e-12));
}

TEST_CASE("polarity") {
    SpaceContext ctx = make_context("5,3,5");
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        Vec u(4);
        for (double& c : u) c = dist(rng);
        Vec p = pole(ctx, u);
        Vec back = polar(ctx, p);
        // double dual is the identity up to scale; here the matrices are
        // exact inverses so it is the identity on the nose
        for (int i = 0; i < 4; ++i) CHECK(back[i] == Approx(u[i]).margin(1e-10));
        // incidence of pole with its own polar happens exactly on the absolute
        CHECK(pair_eval(u, p) == Approx(bilinear_form(ctx, u, u)).margin(1e-10));
    }
    // rank-3 check of the pole coordinates: pole(b^1) = (b^10, b^11, b^12)
    SpaceContext ctx3 = make_context("4,3");
    Vec p1 = pole(ctx3, basis(3, 1));
    for (int j = 0; j < 3; ++j) CHECK(p1[j] == Approx(ctx3.gram.b(1, j)).margin(1e-14));
}

TEST_CASE("proper planes have outer poles and proper points outer polars") {
    SpaceContext ctx = make_context("5,3,5");
    for (int i = 0; i < 4; ++i) {
        CHECK(classify_point(ctx, pole(ctx, basis(4, i))) == ElementClass::Outer);
        CHECK(classify_plane(ctx, polar(ctx, basis(4, i))) == ElementClass::Outer);
    }
}

TEST_CASE("reflections") {
    SpaceContext ctx = make_context("5,3,5");
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Vec mirror = basis(4, 0);

    SECTION("involution and fixed points") {
        for (int t = 0; t < 50; ++t) {
            Vec x(4);
            for (double& c : x) c = dist(rng);
            Vec twice = reflect_point(ctx, mirror, reflect_point(ctx, mirror, x));
            for (int i = 0; i < 4; ++i) CHECK(twice[i] == Approx(x[i]).margin(1e-10));
        }
        // points on the mirror stay put
        Vec on = basis(4, 1); // A_1 lies on b^0
        Vec img = reflect_point(ctx, mirror, on);
        for (int i = 0; i < 4; ++i) CHECK(img[i] == Approx(on[i]).margin(1e-12));
    }

    SECTION("reflections are isometries of both products") {
        for (int t = 0; t < 1000; ++t) {
            Vec x(4), y(4), u(4), v(4);
            for (double& c : x) c = dist(rng);
            for (double& c : y) c = dist(rng);
            for (double& c : u) c = dist(rng);
            for (double& c : v) c = dist(rng);
            int m = t % 4;
            Vec rx = reflect_point(ctx, basis(4, m), x);
            Vec ry = reflect_point(ctx, basis(4, m), y);
            CHECK(bilinear_point(ctx, rx, ry) ==
                  Approx(bilinear_point(ctx, x, y)).margin(1e-10));
            Vec ru = reflect_plane(ctx, basis(4, m), u);
            Vec rv = reflect_plane(ctx, basis(4, m), v);
            CHECK(bilinear_form(ctx, ru, rv) ==
                  Approx(bilinear_form(ctx, u, v)).margin(1e-10));
        }
    }

    SECTION("reflection matrix form") {
        Mat r = reflection_matrix(ctx, mirror);
        Vec x(4);
        for (double& c : x) c = dist(rng);
        Vec lhs = mul(r, x);
        Vec rhs = reflect_point(ctx, mirror, x);
        for (int i = 0; i < 4; ++i) CHECK(lhs[i] == Approx(rhs[i]).margin(1e-12));
        CHECK(determinant(r) == Approx(-1.0).margin(1e-10));
    }

    SECTION("reflecting a vertex preserves distances") {
        Vec a0 = basis(4, 0), a1 = basis(4, 1);
        Vec img = reflect_point(ctx, mirror, a0);
        CHECK(distance(ctx, img, a1) == Approx(distance(ctx, a0, a1)).margin(1e-10));
    }
}

TEST_CASE("boundary mirror is rejected") {
    SpaceContext ctx = make_context("5,3,5");
    // build a boundary form: polar of a boundary point
    Vec p = pole(ctx, basis(4, 0));
    Vec a3 = basis(4, 3);
    double qa = bilinear_point(ctx, p, p), qb = bilinear_point(ctx, a3, a3),
           qab = bilinear_point(ctx, p, a3);
    double t = (-qab + std::sqrt(qab * qab - qa * qb)) / qb;
    Vec end = vadd(p, vscale(t, a3));
    Vec u = polar(ctx, end); // tangent plane of the absolute at the end
    CHECK_THROWS_AS(reflect_point(ctx, u, a3), std::domain_error);
}
