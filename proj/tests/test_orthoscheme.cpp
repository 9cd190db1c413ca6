#include <catch2/catch.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "spaceform/orthoscheme.hpp"

using namespace spaceform;
using std::numbers::pi;

TEST_CASE("realized orthoscheme satisfies the incidence pattern") {
    Orthoscheme o = realize("5,3,5");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double v = pair_eval(o.planes[j], o.vertices[i]);
            if (i == j)
                CHECK(std::fabs(v) > 1e-6);
            else
                CHECK(v == Approx(0.0).margin(1e-12));
        }
    CHECK(o.contains(o.interior_point()));
    // strict interior: every pairing is positive
    for (const auto& u : o.planes) CHECK(pair_eval(u, o.interior_point()) > 1e-6);
}

TEST_CASE("realized angles reproduce the branch data") {
    GramMatrix g = build_gram("5,3,5");
    Orthoscheme o = realize(g);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            auto a = angle(o.ctx, o.planes[i], o.planes[j]);
            CHECK(a.interior == Approx(g.branch_angle(i, j)).margin(1e-10));
        }
}

TEST_CASE("sphenoid affine realization has four pi/3 and two pi/2 dihedrals") {
    GramMatrix g = build_gram(sphenoid_symbol());
    AffineOrthoscheme a = sphenoid_standard();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            double raw = affine_plane_angle(a.planes[i], a.planes[j]);
            CHECK(pi - raw == Approx(g.branch_angle(i, j)).margin(1e-12));
        }
    // vertices sit on their three planes
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double v = pair_eval(a.planes[j], a.vertices[i]);
            if (i == j)
                CHECK(std::fabs(v) > 1e-9);
            else
                CHECK(v == Approx(0.0).margin(1e-12));
        }
}

TEST_CASE("generic euclidean realization reproduces the 4,3,4 angles") {
    GramMatrix g = build_gram("4,3,4");
    AffineOrthoscheme a = realize_euclidean(g);
    // the inward normal system is the form basis: dihedral = pi - raw
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            double raw = affine_plane_angle(a.planes[i], a.planes[j]);
            CHECK(pi - raw == Approx(g.branch_angle(i, j)).margin(1e-10));
        }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j)
                CHECK(pair_eval(a.planes[j], a.vertices[i]) == Approx(0.0).margin(1e-9));
}

TEST_CASE("group closures reach the advertised orders") {
    Orthoscheme o = realize("5,3,5");
    auto m = [&](int i) { return o.reflection(i); };

    SECTION("dihedral subgroup of the pentagon branch") {
        auto g = group_closure({{"m0", m(0)}, {"m1", m(1)}});
        CHECK(g.order() == 10);
    }

    SECTION("cell stabilizer is the order 120 dodecahedron group") {
        auto g = group_closure({{"m0", m(0)}, {"m1", m(1)}, {"m2", m(2)}});
        CHECK(g.order() == 120);
    }

    SECTION("full reflection group is infinite: cap trips") {
        CHECK_THROWS_AS(
            group_closure({{"m0", m(0)}, {"m1", m(1)}, {"m2", m(2)}, {"m3", m(3)}}, 2000),
            ClosureCapError);
    }
}

TEST_CASE("spherical 4,3 full group has order 48") {
    Orthoscheme o = realize("4,3");
    // sphere isometries: signs matter, the central inversion is an element
    auto g = group_closure(o.ctx, {{"m0", o.reflection(0)}, {"m1", o.reflection(1)},
                                   {"m2", o.reflection(2)}});
    CHECK(g.order() == 48);
    // its projective image is the rotation-ish quotient of order 24
    auto proj = group_closure({{"m0", o.reflection(0)}, {"m1", o.reflection(1)},
                               {"m2", o.reflection(2)}});
    CHECK(proj.order() == 24);
}

TEST_CASE("sphenoid stabilizer of A3 has order 24 and generates the 466 cell") {
    AffineOrthoscheme a = sphenoid_standard();
    std::vector<std::pair<std::string, Mat>> gens;
    for (int i = 0; i < 3; ++i) // the three planes through A_3 = origin
        gens.push_back({"m" + std::to_string(i), affine_reflection(a.planes[i])});
    for (auto& [n, g] : gens) CHECK(is_euclidean_isometry(g));
    auto grp = group_closure(gens, 10000, 1e-8, /*projective=*/false);
    CHECK(grp.order() == 24);

    // orbit of the sphenoid centroid is the 24-vertex archimedean class
    Vec c(4, 0.0);
    for (const auto& v : a.vertices) c = vadd(c, vscale(0.25, v));
    CHECK(c[0] == Approx(2.0));
    CHECK(c[1] == Approx(1.0));
    CHECK(c[2] == Approx(0.0).margin(1e-15));
    auto orbit = orbit_point(c, grp, 1e-8);
    CHECK(orbit.size() == 24);

    // vertex fixed by the group has a singleton orbit
    auto fixed = orbit_point(a.vertices[3], grp, 1e-8);
    CHECK(fixed.size() == 1);
}

TEST_CASE("orbit sizes divide the group order") {
    Orthoscheme o = realize("5,3,5");
    auto g = group_closure({{"m0", o.reflection(0)}, {"m1", o.reflection(1)},
                            {"m2", o.reflection(2)}});
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> dist(0.1, 1.0);
    for (int t = 0; t < 5; ++t) {
        Vec x = {dist(rng), dist(rng), dist(rng), dist(rng)};
        auto orbit = orbit_point(x, g, 1e-7);
        CHECK(g.order() % orbit.size() == 0);
    }
    // A_3 itself is fixed
    CHECK(orbit_point(o.vertices[3], g).size() == 1);
}

TEST_CASE("closure elements preserve the mirror system") {
    Orthoscheme o = realize("5,3,5");
    auto g = group_closure({{"m0", o.reflection(0)}, {"m1", o.reflection(1)},
                            {"m2", o.reflection(2)}});
    std::mt19937 rng(17);
    std::uniform_int_distribution<size_t> pick(0, g.order() - 1);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int t = 0; t < 40; ++t) {
        const Mat& el = g.elements[pick(rng)];
        CHECK(is_isometry(o.ctx, el, 1e-10));
        Vec x(4), y(4);
        for (double& c : x) c = dist(rng);
        for (double& c : y) c = dist(rng);
        CHECK(bilinear_point(o.ctx, mul(el, x), mul(el, y)) ==
              Approx(bilinear_point(o.ctx, x, y)).margin(1e-10));
    }
}

TEST_CASE("isometry classification basics") {
    Orthoscheme o = realize("5,3,5");
    const SpaceContext& ctx = o.ctx;

    CHECK(classify_isometry(ctx, Mat::identity(4)).kind == IsometryKind::Identity);
    CHECK(classify_isometry(ctx, o.reflection(0)).kind == IsometryKind::Reflection);

    // product of two mirrors meeting at pi/5 rotates by 2pi/5
    Mat rot = o.reflection(0) * o.reflection(1);
    auto c = classify_isometry(ctx, rot);
    CHECK(c.kind == IsometryKind::Rotation);
    CHECK(c.rotation_angle == Approx(2 * pi / 5).margin(1e-9));

    // orthogonal mirrors give a half-turn
    Mat ht = o.reflection(0) * o.reflection(2);
    CHECK(classify_isometry(ctx, ht).kind == IsometryKind::HalfTurn);

    // the diagram flip (0<->3, 1<->2) is the halving half-turn
    Mat flip(4, 4);
    flip(0, 3) = flip(3, 0) = flip(1, 2) = flip(2, 1) = 1.0;
    CHECK(is_isometry(ctx, flip, 1e-12));
    auto f = classify_isometry(ctx, flip);
    CHECK(f.kind == IsometryKind::HalfTurn);
    CHECK(f.rotation_angle == Approx(pi).margin(1e-9));
    CHECK(f.det == Approx(1.0).margin(1e-12));
}

TEST_CASE("reflections in ultraparallel planes compose to a translation") {
    // the two polar truncation planes of the 6,6,6 orthoscheme are disjoint
    Orthoscheme o = realize("6,6,6");
    Vec p0 = polar(o.ctx, o.vertices[0]);
    Vec p3 = polar(o.ctx, o.vertices[3]);
    auto a = angle(o.ctx, p0, p3);
    CHECK_FALSE(a.proper_intersection);
    Mat tr = reflection_matrix(o.ctx, p0) * reflection_matrix(o.ctx, p3);
    auto c = classify_isometry(o.ctx, tr, 1e-7);
    CHECK(c.kind == IsometryKind::Screw);
    // repeated unit eigenvalues converge slowly, leaving some arg noise
    CHECK(c.rotation_angle == Approx(0.0).margin(1e-6));
    CHECK(c.translation_length > 0.1);
}

TEST_CASE("truncation of the 6,6,6 orthoscheme") {
    Orthoscheme o = realize("6,6,6");
    TruncatedOrthoscheme t = truncate(o);

    REQUIRE(t.truncated.size() == 2);
    CHECK(t.truncated[0] == 0);
    CHECK(t.truncated[1] == 3);

    SECTION("polar planes are orthogonal to the mirrors through the tip") {
        for (size_t k = 0; k < t.truncated.size(); ++k) {
            int i = t.truncated[k];
            for (int j = 0; j < 4; ++j) {
                if (j == i) continue;
                auto a = angle(o.ctx, t.polar_planes[k], o.planes[j]);
                CHECK(a.raw == Approx(pi / 2).margin(1e-12));
            }
        }
    }

    SECTION("compact domain: eight proper vertices") {
        CHECK(t.vertices.size() == 8);
        for (const auto& v : t.vertices)
            CHECK(classify_point(o.ctx, v) == ElementClass::Proper);
    }
}

TEST_CASE("truncating a compact orthoscheme is an error") {
    Orthoscheme o = realize("5,3,5");
    CHECK_THROWS_AS(truncate(o), NothingToTruncateError);
}
