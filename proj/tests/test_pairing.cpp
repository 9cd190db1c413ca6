#include <catch2/catch.hpp>

#include <numbers>

#include "spaceform/homology.hpp"
#include "spaceform/pairing.hpp"

using namespace spaceform;
using std::numbers::pi;

namespace {

// the three-torus: cube faces paired by the coordinate translations
std::vector<PairingSeed> torus_seeds() {
    // vertex ids encode the sign pattern: v = 4*(x>0) + 2*(y>0) + (z>0)
    return {
        {"x", "x-", "x+", {0, 1}, {4, 5}, {}},
        {"y", "y-", "y+", {0, 4}, {2, 6}, {}},
        {"z", "z-", "z+", {0, 2}, {1, 3}, {}},
    };
}

} // namespace

TEST_CASE("three-torus pairing propagates to three classes of four") {
    auto cube = build_catalog("cube");
    auto r = propagate(cube, torus_seeds(), 4);

    REQUIRE(r.classes.size() == 3);
    for (const auto& c : r.classes) {
        CHECK(c.members.size() == 4);
        CHECK(c.expected_size == 4);
        CHECK(c.kind != RelationKind::Pairing); // all pairings were seeded
    }

    SECTION("translation bijections are the expected shifts") {
        const auto* mx = r.map_named("x");
        REQUIRE(mx != nullptr);
        for (auto [a, b] : mx->mu) CHECK(b == a + 4);
    }

    SECTION("one vertex class of eight") {
        REQUIRE(r.vertex_classes.size() == 1);
        CHECK(r.vertex_classes[0].members.size() == 8);
        CHECK(r.vertex_classes[0].incident_edge_classes.size() == 3);
    }

    SECTION("relators are commutators: zero exponent sums, H1 = Z^3") {
        auto pres = presentation(r);
        REQUIRE(pres.generators.size() == 3);
        for (const auto& rel : pres.relators) {
            auto sums = exponent_sums(rel, 3);
            for (long long s : sums) CHECK(s == 0);
        }
        auto h = first_homology(pres);
        CHECK(h.free_rank == 3);
        CHECK(h.invariant_factors.empty());
    }

    SECTION("verification passes with right-angle metric data") {
        MetricAngles angles;
        angles.by_face_sizes[{4, 4}] = pi / 2;
        auto rep = verify_space_form(r, angles);
        for (const auto& line : rep.checks) {
            INFO(line.name << ": " << line.detail);
            CHECK(line.pass);
        }
        CHECK(rep.all_pass());
    }

    SECTION("pairing involution: mu and mu_inv invert each other") {
        for (const auto& m : r.maps) {
            for (auto [a, b] : m.mu) CHECK(m.mu_inv.at(b) == a);
            for (auto [b, a] : m.mu_inv) CHECK(m.mu.at(a) == b);
        }
    }

    SECTION("cycle words evaluate to the identity in the abelianization") {
        auto pres = presentation(r);
        auto rel_matrix = abelianize(pres);
        for (const auto& c : r.classes) {
            if (c.kind == RelationKind::Pairing) continue;
            auto sums = exponent_sums(c.relation, 3);
            std::vector<BigInt> x;
            for (long long s : sums) x.emplace_back(s);
            CHECK(in_row_span(rel_matrix, x));
        }
    }
}

TEST_CASE("declared multiplicity mismatch is a contradiction") {
    auto cube = build_catalog("cube");
    CHECK_THROWS_AS(propagate(cube, torus_seeds(), 3), PropagationError);
    try {
        propagate(cube, torus_seeds(), 3);
    } catch (const PropagationError& e) {
        CHECK(std::string(e.what()).find("close") != std::string::npos);
    }
}

TEST_CASE("seed validation") {
    auto cube = build_catalog("cube");

    SECTION("doubly paired face") {
        auto seeds = torus_seeds();
        seeds.push_back({"w", "x-", "y+", {0, 1}, {2, 6}, {}});
        CHECK_THROWS_AS(propagate(cube, seeds, 4), std::invalid_argument);
    }

    SECTION("source edge must be coherent") {
        std::vector<PairingSeed> seeds = {{"x", "x-", "x+", {1, 0}, {4, 5}, {}}};
        CHECK_THROWS_AS(propagate(cube, seeds, 4), std::invalid_argument);
    }

    SECTION("self-pairing is rejected") {
        std::vector<PairingSeed> seeds = {{"x", "x-", "x-", {0, 1}, {0, 1}, {}}};
        CHECK_THROWS_AS(propagate(cube, seeds, 4), std::invalid_argument);
    }
}

TEST_CASE("two unknown crossings per cycle deadlock instead of guessing") {
    // without the z seed every open cycle crosses the missing pairing twice,
    // so nothing is derivable; the engine must refuse rather than invent data
    auto cube = build_catalog("cube");
    std::vector<PairingSeed> seeds = {
        {"x", "x-", "x+", {0, 1}, {4, 5}, {}},
        {"y", "y-", "y+", {0, 4}, {2, 6}, {}},
    };
    CHECK_THROWS_AS(propagate(cube, seeds, 4), PropagationError);
}

TEST_CASE("orphan faces abort with a trace") {
    auto cube = build_catalog("cube");
    std::vector<PairingSeed> seeds = {{"x", "x-", "x+", {0, 1}, {4, 5}, {}}};
    try {
        propagate(cube, seeds, 4);
        FAIL("expected a propagation error");
    } catch (const PropagationError& e) {
        CHECK_FALSE(std::string(e.what()).empty());
    }
}
