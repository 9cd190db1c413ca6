// Acceptance suite: one line per criterion. Every tolerance is pinned in
// code. Exits with the number of failed criteria.
//
// The verified results: the classification table, the signature
// decompositions, group orders by closure, the metric cells with their
// dihedral closures, the three-torus control, the truncated-octahedron and
// truncated-icosahedron pairings with their presentations and homology, the
// supergroup identities behind the screw generators, and the cobweb family.
// Census counts of all pairings up to symmetry and the packing/covering
// densities are out of scope; randomized invariance properties stand in.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spaceform/constructions.hpp"
#include "spaceform/json_io.hpp"
#include "spaceform/schlegel.hpp"

using namespace spaceform;
using std::numbers::pi;

namespace {

int failures = 0;
std::string fixture_dir = "fixtures";

void line(int criterion, bool pass, const std::string& what) {
    std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PairingFixture load_fixture(const std::string& name) {
    return fixture_from_json(load_json_file(fixture_dir + "/" + name));
}

// ---------------------------------------------------------------------- 1
void criterion_classification() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream note;

    double b43 = classify_geometry(build_gram("4,3")).determinant;
    ok &= std::fabs(b43 - 0.25) <= 1e-12;

    double b53 = classify_geometry(build_gram("5,3")).determinant;
    ok &= std::fabs(b53 - (3.0 - std::sqrt(5.0)) / 8.0) <= 1e-12;
    ok &= std::fabs(b53 - 0.09549) <= 1e-5; // printed approximation
    ok &= std::fabs(b53 - 0.0954915028) <= 1e-9;

    for (const char* s : {"3,6", "6,3", "4,4"})
        ok &= classify_geometry(build_gram(s)).kind == GeometryKind::Euclidean;
    for (const char* s : {"3,7", "7,3", "4,5", "5,4"})
        ok &= classify_geometry(build_gram(s)).kind == GeometryKind::HyperbolicCompact;

    double dt = seconds_since(t0);
    ok &= dt < 1.0;
    note << "classification table, det(4,3)=" << b43 << ", det(5,3)=" << b53 << ", "
         << dt << " s";
    line(1, ok, note.str());
}

// ---------------------------------------------------------------------- 2
void criterion_signatures() {
    bool ok = true;
    auto c434 = classify_geometry(build_gram("4,3,4"));
    ok &= c434.signature.plus == 3 && c434.signature.zero == 1 && c434.signature.minus == 0;

    // the sphenoid form as a sum of three positive squares, the pinned
    // decomposition checked on 1000 random vectors
    GramMatrix sph = build_gram(sphenoid_symbol());
    std::mt19937 rng(20260808);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int t = 0; t < 1000 && ok; ++t) {
        Vec w = {dist(rng), dist(rng), dist(rng), dist(rng)};
        double q = dot(w, mul(sph.b, w));
        double s1 = w[0] - 0.5 * w[1] - 0.5 * w[3];
        double s2 = w[1] - 2.0 / 3.0 * w[2] - w[3] / 3.0;
        double s3 = w[2] - w[3];
        double sum = s1 * s1 + 0.75 * s2 * s2 + 2.0 / 3.0 * s3 * s3;
        ok &= std::fabs(q - sum) <= 1e-9;
    }

    // generic three-positive-squares decomposition of the 4,3,4 form via the
    // affine normal factorization B = N^T N
    GramMatrix cubic = build_gram("4,3,4");
    AffineOrthoscheme aff = realize_euclidean(cubic);
    for (int t = 0; t < 1000 && ok; ++t) {
        Vec w = {dist(rng), dist(rng), dist(rng), dist(rng)};
        double q = dot(w, mul(cubic.b, w));
        double sum = 0.0;
        for (int row = 0; row < 3; ++row) {
            double s = 0.0;
            for (int j = 0; j < 4; ++j) s += aff.planes[j][row] * w[j];
            sum += s * s;
        }
        ok &= std::fabs(q - sum) <= 1e-9;
    }

    auto c535 = classify_geometry(build_gram("5,3,5"));
    ok &= c535.signature.plus == 3 && c535.signature.minus == 1;
    ok &= c535.failing_minors.empty() && c535.determinant < 0.0;
    for (double m : c535.leading_minors) (void)m;
    for (size_t k = 0; k + 1 < c535.leading_minors.size(); ++k)
        ok &= c535.leading_minors[k] > 0.0;

    line(2, ok, "signatures (+,+,+,0) and (+,+,+,-), three-positive-squares on 2000 vectors");
}

// ---------------------------------------------------------------------- 3
void criterion_defect() {
    bool ok = std::fabs(triangle_defect(3, 7) - pi / 42) <= 1e-12 &&
              std::fabs(triangle_defect(4, 3) + pi / 12) <= 1e-12;
    line(3, ok, "triangle defects pi/42 and -pi/12");
}

// ---------------------------------------------------------------------- 4
void criterion_group_orders() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream note;

    Orthoscheme o = realize("5,3,5");
    auto d5 = group_closure(o.ctx, {{"m0", o.reflection(0)}, {"m1", o.reflection(1)}});
    ok &= d5.order() == 10;
    auto c3 = group_closure(o.ctx, {{"m0", o.reflection(0)}, {"m1", o.reflection(1)},
                                    {"m2", o.reflection(2)}});
    ok &= c3.order() == 120;

    AffineOrthoscheme sph = sphenoid_standard();
    std::vector<std::pair<std::string, Mat>> gens;
    for (int i = 0; i < 3; ++i)
        gens.push_back({"m" + std::to_string(i), affine_reflection(sph.planes[i])});
    auto stab = group_closure(gens, 10000, 1e-8, /*projective=*/false);
    ok &= stab.order() == 24;

    Orthoscheme cube = realize("4,3");
    auto full = group_closure(cube.ctx, {{"m0", cube.reflection(0)},
                                         {"m1", cube.reflection(1)},
                                         {"m2", cube.reflection(2)}});
    ok &= full.order() == 48;

    double dt = seconds_since(t0);
    ok &= dt < 5.0;
    note << "closure orders 10, 120, 24, 48 in " << dt << " s";
    line(4, ok, note.str());
}

// ---------------------------------------------------------------------- 5
void criterion_metric_cells() {
    bool ok = true;
    MetricPolyhedron fb = archimedean_566();
    ok &= fb.vertex_coords.size() == 60;
    int pent = 0, hex = 0;
    for (const auto& f : fb.combi.faces)
        (f.cycle.size() == 5 ? pent : hex)++;
    ok &= pent == 12 && hex == 20;
    ok &= std::fabs(2 * fb.alpha + fb.beta - 2 * pi) <= 1e-9;

    MetricPolyhedron to = archimedean_466();
    ok &= std::fabs(to.alpha - std::acos(-1.0 / std::sqrt(3.0))) <= 1e-9;
    ok &= std::fabs(to.beta - std::acos(-1.0 / 3.0)) <= 1e-9;

    std::ostringstream note;
    note << "60-vertex cell, 12+20 faces, 2a+b-2pi=" << 2 * fb.alpha + fb.beta - 2 * pi
         << "; euclidean dihedrals check";
    line(5, ok, note.str());
}

// ---------------------------------------------------------------------- 6
void criterion_trunc_oct() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    PairingFixture f = load_fixture("trunc_oct_fig4.json");
    auto res = propagate(build_catalog(f.polyhedron), f.seeds, f.cells_per_edge, f.specials);

    ok &= res.classes.size() == 12;
    for (const auto& c : res.classes) ok &= c.members.size() == 3;

    ok &= res.vertex_classes.size() == 6;
    std::map<int, int> class_hits;
    for (const auto& vc : res.vertex_classes) {
        ok &= vc.members.size() == 4;
        ok &= vc.incident_edge_classes.size() == 4;
        for (int e : vc.incident_edge_classes) class_hits[e]++;
    }
    // the incidence structure: 12 edge classes, each meeting exactly two of
    // the six vertex classes; every vertex class misses exactly one other
    ok &= class_hits.size() == 12;
    for (auto [e, hits] : class_hits) ok &= hits == 2;
    std::map<std::pair<int, int>, int> adjacency;
    for (const auto& vc : res.vertex_classes)
        for (const auto& wc : res.vertex_classes) {
            if (vc.id >= wc.id) continue;
            int shared = 0;
            for (int e : vc.incident_edge_classes)
                for (int g : wc.incident_edge_classes)
                    if (e == g) ++shared;
            adjacency[{vc.id, wc.id}] = shared;
        }
    for (const auto& vc : res.vertex_classes) {
        int nonneighbors = 0;
        for (const auto& wc : res.vertex_classes) {
            if (vc.id == wc.id) continue;
            auto key = std::minmax(vc.id, wc.id);
            if (adjacency[{key.first, key.second}] == 0) ++nonneighbors;
        }
        ok &= nonneighbors == 1; // the octahedral pattern of the class table
    }

    auto pres = presentation(res);
    ok &= pres.relators.size() == 2;
    GroupWord rel1, rel2;
    rel1.letters = {2, 2, 1, 2, 2, -1}; // v^2 u v^2 u^-1
    rel2.letters = {1, 1, -2, 1, 1, 2}; // u^2 v^-1 u^2 v
    bool direct = cyclically_equal(pres.relators[0], rel1, true) &&
                  cyclically_equal(pres.relators[1], rel2, true);
    bool swapped = cyclically_equal(pres.relators[0], rel2, true) &&
                   cyclically_equal(pres.relators[1], rel1, true);
    ok &= direct || swapped;
    ok &= first_homology(pres).str() == "Z_4 \u2295 Z_4";

    double dt = seconds_since(t0);
    ok &= dt < 1.0;
    std::ostringstream note;
    note << "12 classes of 3, class tables, presentation, H1 = Z_4 + Z_4, " << dt << " s";
    line(6, ok, note.str());
}

// ---------------------------------------------------------------------- 7
void criterion_football() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    PairingFixture f = load_fixture("football_fig5.json");
    auto res = propagate(build_catalog(f.polyhedron), f.seeds, f.cells_per_edge, f.specials);

    ok &= res.classes.size() == 30;
    for (const auto& c : res.classes) ok &= c.members.size() == 3;
    int census[4] = {0, 0, 0, 0};
    for (const auto& c : res.classes) census[static_cast<int>(c.kind)]++;
    ok &= census[1] >= 2;  // trivial relations as at the low classes
    ok &= census[2] == 2;  // exactly two defining
    ok &= census[3] >= 3;  // at least three consequences

    ok &= res.vertex_classes.size() == 15;
    for (const auto& vc : res.vertex_classes) ok &= vc.members.size() == 4;

    long euler = static_cast<long>(res.vertex_classes.size()) -
                 static_cast<long>(res.classes.size()) +
                 static_cast<long>(res.maps.size()) - 1;
    ok &= euler == 0;

    auto pres = presentation(res);
    auto is_pm = [](const std::vector<long long>& e, long long x, long long y) {
        return (e[0] == x && e[1] == y) || (e[0] == -x && e[1] == -y);
    };
    bool sums_ok = false;
    if (pres.relators.size() == 2) {
        auto e0 = exponent_sums(pres.relators[0], 2);
        auto e1 = exponent_sums(pres.relators[1], 2);
        sums_ok = (is_pm(e0, 8, -7) && is_pm(e1, -6, 7)) ||
                  (is_pm(e0, -6, 7) && is_pm(e1, 8, -7));
    }
    ok &= sums_ok;
    ok &= first_homology(pres).str() == "Z_14";

    double dt = seconds_since(t0);
    ok &= dt < 2.0;
    std::ostringstream note;
    note << "30 classes of 3, census " << census[1] << "t/" << census[2] << "d/"
         << census[3] << "c, relator sums, euler 0, H1 = Z_14, " << dt << " s";
    line(7, ok, note.str());
}

// ---------------------------------------------------------------------- 8
void criterion_supergroup() {
    bool ok = true;
    std::ostringstream note;
    MetricPolyhedron cell = archimedean_566();
    PairingFixture f = load_fixture("football_fig5.json");

    // the generators from the metric realization via their seed flags
    std::map<std::string, Mat> gen;
    for (const auto& s : f.seeds) {
        FaceFlag src{s.src_edge[0], s.src_edge[1], s.source};
        FaceFlag dst{s.dst_edge[0], s.dst_edge[1], s.target};
        gen[s.name] = isometry_from_flags(cell, src, dst, /*across=*/true, 1e-6);
    }
    ok &= gen.count("a") == 1 && gen.count("b") == 1;

    Orthoscheme o = realize("5,3,5");
    std::vector<Mat> m;
    for (int i = 0; i < 4; ++i) m.push_back(o.reflection(i));

    // b = m3 m0 m2 m1 m0 m1 directly
    double db = norm_inf(gen["b"] - m[3] * m[0] * m[2] * m[1] * m[0] * m[1]);
    ok &= db < 1e-7;

    // a^-1 = r m0 m1 m2 m1 with r the halving half-turn, realized from the
    // construction and certified as an involutive rotation by pi
    Mat r = inverse(gen["a"]) * inverse(m[0] * m[1] * m[2] * m[1]);
    auto cls = classify_isometry(*cell.ctx, r, 1e-7);
    ok &= cls.kind == IsometryKind::HalfTurn;
    ok &= std::fabs(cls.rotation_angle - pi) < 1e-6;
    ok &= norm_inf(r * r - Mat::identity(4)) < 1e-7;
    double da = norm_inf(inverse(gen["a"]) - r * m[0] * m[1] * m[2] * m[1]);
    ok &= da < 1e-7;

    // the composite seed matches the product map
    ok &= norm_inf(gen["ab"] - gen["a"] * gen["b"]) < 1e-6;

    note << "b-word residual " << db << ", r is a half-turn, a-word residual " << da;
    line(8, ok, note.str());
}

// ---------------------------------------------------------------------- 9
void criterion_torus() {
    bool ok = true;
    PairingFixture f = load_fixture("cube_torus.json");
    auto res = propagate(build_catalog(f.polyhedron), f.seeds, f.cells_per_edge, f.specials);
    auto rep = verify_space_form(res, metric_angles(metric_cube()));
    ok &= rep.all_pass();
    ok &= first_homology(presentation(res)).str() == "Z^3";
    line(9, ok, "three-torus control: verification passes, H1 = Z^3");
}

// --------------------------------------------------------------------- 10
void criterion_cobweb() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;

    auto adm = cobweb_admissible(6, 6, 6);
    ok &= adm.admissible;

    for (int z : {3, 5, 7}) {
        auto p = cobweb_solid(z);
        ok &= p.faces.size() == static_cast<size_t>(2 + 2 * z + 8 * z);
        ok &= validate(p).ok();
    }

    PairingFixture f = load_fixture("cobweb_z3_fig8.json");
    auto res = propagate(build_catalog(f.polyhedron), f.seeds, f.cells_per_edge, f.specials);
    int sixes = 0;
    for (const auto& c : res.classes) {
        if (c.expected_size == 6) {
            ++sixes;
            ok &= c.members.size() == 6;
        } else {
            ok &= c.members.size() == 3;
        }
    }
    ok &= sixes == 1;

    MetricAngles angles;
    for (auto e : f.declared_edges)
        angles.by_edge[{std::min(e[0], e[1]), std::max(e[0], e[1])}] = f.declared_angle;
    angles.partial = true;
    ok &= std::fabs(6 * f.declared_angle - 2 * pi) <= 1e-12;
    auto rep = verify_space_form(res, angles);
    ok &= rep.all_pass();

    long euler = static_cast<long>(res.vertex_classes.size()) -
                 static_cast<long>(res.classes.size()) +
                 static_cast<long>(res.maps.size()) - 1;
    ok &= euler == 0;

    double dt = seconds_since(t0);
    ok &= dt < 5.0;
    std::ostringstream note;
    note << "admissibility, face counts z=3,5,7, one size-6 arrow class at 6*pi/3, "
         << "euler 0, " << dt << " s";
    line(10, ok, note.str());
}

// --------------------------------------------------------------------- 11
void criterion_property_suites() {
    bool ok = true;

    // randomized Smith invariance, 100 trials
    std::mt19937 rng(4242);
    GroupPresentation base;
    base.generators = {"a", "b"};
    GroupWord r1, r2;
    r1.letters = {1, 1, 1, 1, 1, 1, 1, 1, -2, -2, -2, -2, -2, -2, -2};
    r2.letters = {-1, -1, -1, -1, -1, -1, 2, 2, 2, 2, 2, 2, 2};
    base.relators = {r1, r2};
    for (int t = 0; t < 100 && ok; ++t) {
        GroupPresentation p = base;
        for (int mv = 0; mv < 5; ++mv) {
            size_t i = rng() % 2, j = rng() % 2;
            int kind = static_cast<int>(rng() % 3);
            if (kind == 0) std::swap(p.relators[i], p.relators[j]);
            else if (kind == 1) p.relators[i] = p.relators[i].inverse();
            else if (i != j) p.relators[i] = concat(p.relators[i], p.relators[j]);
        }
        auto h = first_homology(p);
        ok &= h.free_rank == 0 && h.invariant_factors.size() == 1 &&
              h.invariant_factors[0] == BigInt(14);
    }

    // reflections preserve both products, 1000 random cases
    SpaceContext ctx = make_context("5,3,5");
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int t = 0; t < 1000 && ok; ++t) {
        Vec mirror(4), x(4), y(4);
        for (double& c : mirror) c = dist(rng);
        if (bilinear_form(ctx, mirror, mirror) < 1e-3) continue;
        for (double& c : x) c = dist(rng);
        for (double& c : y) c = dist(rng);
        Vec rx = reflect_point(ctx, mirror, x);
        Vec ry = reflect_point(ctx, mirror, y);
        ok &= std::fabs(bilinear_point(ctx, rx, ry) - bilinear_point(ctx, x, y)) <= 1e-10;
        Vec ru = reflect_plane(ctx, mirror, x);
        Vec rv = reflect_plane(ctx, mirror, y);
        ok &= std::fabs(bilinear_form(ctx, ru, rv) - bilinear_form(ctx, x, y)) <= 1e-10;
    }

    line(11, ok,
         "substitute suites: Smith invariance (100 trials), reflection isometry "
         "(1000 cases); tiling census counts and ball densities stay out of scope");
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) fixture_dir = argv[1];
    try {
        criterion_classification();
        criterion_signatures();
        criterion_defect();
        criterion_group_orders();
        criterion_metric_cells();
        criterion_trunc_oct();
        criterion_football();
        criterion_supergroup();
        criterion_torus();
        criterion_cobweb();
        criterion_property_suites();
    } catch (const std::exception& e) {
        std::printf("[FAIL] acceptance aborted: %s\n", e.what());
        return 99;
    }
    std::printf("%s\n", failures == 0 ? "all criteria pass" : "some criteria failed");
    return failures;
}
