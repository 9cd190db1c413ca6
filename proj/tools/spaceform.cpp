// Command-line front end: classify Coxeter-Schläfli symbols, run the face
// pairing pipeline on a data file, render Schlegel diagrams.
//
// Exit codes: 0 success, 1 verification or derivation failure, 2 usage or
// input errors.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spaceform/archimedean.hpp"
#include "spaceform/constructions.hpp"
#include "spaceform/gram.hpp"
#include "spaceform/json_io.hpp"
#include "spaceform/pairing.hpp"
#include "spaceform/polyhedron.hpp"
#include "spaceform/schlegel.hpp"

using namespace spaceform;
using nlohmann::json;

namespace {

// bare names resolve against $SPACEFORM_FIXTURES, then ./fixtures
std::string resolve_input(const std::string& name) {
    namespace fs = std::filesystem;
    if (fs::exists(name)) return name;
    if (const char* dir = std::getenv("SPACEFORM_FIXTURES")) {
        fs::path p = fs::path(dir) / name;
        if (fs::exists(p)) return p.string();
    }
    fs::path local = fs::path("fixtures") / name;
    if (fs::exists(local)) return local.string();
    return name;
}

CombinatorialPolyhedron resolve_polyhedron(const json& entry) {
    if (entry.is_string()) return build_catalog(entry.get<std::string>());
    return poly_from_json(entry);
}

struct MetricBundle {
    MetricAngles angles;
    std::optional<MetricPolyhedron> cell;
};

MetricBundle resolve_metric(const PairingFixture& f) {
    MetricBundle b;
    if (f.metric_kind == "cube") {
        b.cell = metric_cube();
        b.angles = metric_angles(*b.cell);
    } else if (f.metric_kind == "archimedean_466") {
        b.cell = archimedean_466();
        b.angles = metric_angles(*b.cell);
    } else if (f.metric_kind == "archimedean_566") {
        b.cell = archimedean_566();
        b.angles = metric_angles(*b.cell, 1e-7);
    } else if (f.metric_kind == "declared") {
        for (auto e : f.declared_edges)
            b.angles.by_edge[{std::min(e[0], e[1]), std::max(e[0], e[1])}] =
                f.declared_angle;
        b.angles.partial = true;
    } else {
        throw std::runtime_error("pairing file declares no usable metric");
    }
    return b;
}

json screw_parameters(const MetricBundle& metric, const PairingFixture& f) {
    json out = json::array();
    if (!metric.cell) return out;
    const MetricPolyhedron& cell = *metric.cell;
    for (const auto& s : f.seeds) {
        FaceFlag src{s.src_edge[0], s.src_edge[1], s.source};
        FaceFlag dst{s.dst_edge[0], s.dst_edge[1], s.target};
        Mat m = isometry_from_flags(cell, src, dst, /*across=*/true);
        IsometryClassification c = cell.euclidean
                                       ? classify_affine_isometry(m)
                                       : classify_isometry(*cell.ctx, m, 1e-7);
        out.push_back({{"generator", s.name},
                       {"kind", to_string(c.kind)},
                       {"rotation_angle", c.rotation_angle},
                       {"translation_length", c.translation_length}});
    }
    return out;
}

// accepts "p,q" / "p,q,r" strings or a json file with a branch matrix
int cmd_classify(const std::string& symbol, double tol, const std::string& out_path) {
    json report;
    try {
        GramMatrix g;
        if (symbol.size() > 5 && symbol.substr(symbol.size() - 5) == ".json")
            g = build_gram(symbol_from_json(load_json_file(resolve_input(symbol))));
        else
            g = build_gram(symbol);
        GeometryClass c = classify_geometry(g, tol);
        report["command"] = "classify";
        report["symbol"] = symbol;
        report["tolerance"] = tol;
        report["geometry"] = geometry_to_json(c);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << report.dump(2) << "\n";
    if (!out_path.empty()) save_text_file(out_path, report.dump(2) + "\n");
    return 0;
}

int cmd_manifold(const std::string& file, bool with_metric, double angle_tol,
                 int rewrite_depth, const std::string& out_path) {
    json report;
    report["command"] = "manifold";
    report["input"] = file;
    PairingFixture fixture;
    CombinatorialPolyhedron poly;
    try {
        json jf = load_json_file(resolve_input(file));
        fixture = fixture_from_json(jf);
        poly = resolve_polyhedron(jf.at("polyhedron"));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        PairingResult result =
            propagate(poly, fixture.seeds, fixture.cells_per_edge, fixture.specials,
                      rewrite_depth);
        report["pairing"] = result_to_json(result);

        std::optional<MetricAngles> metric;
        if (with_metric) {
            MetricBundle bundle = resolve_metric(fixture);
            metric = bundle.angles;
            report["screws"] = screw_parameters(bundle, fixture);
        }
        SpaceFormReport ver = verify_space_form(result, metric, angle_tol);
        report["verification"] = report_to_json(ver);

        GroupPresentation pres = presentation(result);
        json jp;
        jp["generators"] = pres.generators;
        jp["relators"] = json::array();
        for (const auto& r : pres.relators)
            jp["relators"].push_back(word_to_string(r, pres.generators));
        report["presentation"] = jp;
        report["homology"] = homology_to_json(first_homology(pres));
        report["pass"] = ver.all_pass();

        std::cout << report.dump(2) << "\n";
        if (!out_path.empty()) save_text_file(out_path, report.dump(2) + "\n");
        return ver.all_pass() ? 0 : 1;
    } catch (const PropagationError& e) {
        report["error"] = e.what();
        report["trace"] = e.trace;
        report["pass"] = false;
        std::cout << report.dump(2) << "\n";
        if (!out_path.empty()) save_text_file(out_path, report.dump(2) + "\n");
        std::cerr << "propagation failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_render(const std::string& poly_arg, const std::string& outer,
               const std::string& classes_path, const std::string& out_path) {
    try {
        CombinatorialPolyhedron poly;
        std::string resolved = resolve_input(poly_arg);
        if (std::filesystem::exists(resolved) && resolved.size() > 5 &&
            resolved.substr(resolved.size() - 5) == ".json") {
            json j = load_json_file(resolved);
            poly = j.contains("polyhedron") ? resolve_polyhedron(j.at("polyhedron"))
                                            : poly_from_json(j);
        } else {
            poly = build_catalog(poly_arg);
        }
        if (!poly.has_face(outer)) {
            std::cerr << "error: unknown face id '" << outer << "'\n";
            return 2;
        }
        std::map<std::pair<int, int>, int> edge_classes;
        bool have_classes = false;
        if (!classes_path.empty()) {
            json j = load_json_file(resolve_input(classes_path));
            const json& jr = j.contains("pairing") ? j.at("pairing") : j;
            for (const auto& jc : jr.at("edge_classes"))
                for (const auto& je : jc.at("members")) {
                    int a = je.at(0).get<int>(), b = je.at(1).get<int>();
                    edge_classes[{std::min(a, b), std::max(a, b)}] = jc.at("id").get<int>();
                }
            have_classes = true;
        }
        SchlegelLayout lay = schlegel_layout(poly, outer);
        std::string svg = svg_render(poly, lay, &poly.face_labels,
                                     have_classes ? &edge_classes : nullptr);
        if (out_path.empty())
            std::cout << svg;
        else
            save_text_file(out_path, svg);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coxeter-Schläfli orthoschemes, face-paired space forms, homology"};
    app.require_subcommand(1);

    std::string symbol, out_path;
    double tol = 1e-9;
    auto* classify = app.add_subcommand("classify", "classify a Schläfli symbol");
    classify->add_option("symbol", symbol, "symbol such as 5,3,5 or 4,3")->required();
    classify->add_option("--tol", tol, "zero eigenvalue threshold");
    classify->add_option("--out", out_path, "also write the report here");

    std::string pairing_file;
    bool with_metric = false;
    double angle_tol = 1e-9;
    int rewrite_depth = 20;
    auto* manifold = app.add_subcommand("manifold", "run the face pairing pipeline");
    manifold->add_option("file", pairing_file, "pairing data file (bare names resolve in fixtures/)")
        ->required();
    manifold->add_flag("--metric", with_metric, "check dihedral angle sums and screw data");
    manifold->add_option("--angle-tol", angle_tol, "tolerance for angle sums");
    manifold->add_option("--rewrite-depth", rewrite_depth, "consequence search depth");
    manifold->add_option("--out", out_path, "also write the report here");

    std::string poly_arg, outer, classes_path;
    auto* render = app.add_subcommand("render", "write a Schlegel diagram as SVG");
    render->add_option("polyhedron", poly_arg, "catalog name, cobweb:z, or a json file")
        ->required();
    render->add_option("--outer", outer, "outer face id")->required();
    render->add_option("--classes", classes_path, "manifold report for edge class numbers");
    render->add_option("--out", out_path, "output SVG path (stdout otherwise)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (classify->parsed()) return cmd_classify(symbol, tol, out_path);
    if (manifold->parsed())
        return cmd_manifold(pairing_file, with_metric, angle_tol, rewrite_depth, out_path);
    if (render->parsed()) return cmd_render(poly_arg, outer, classes_path, out_path);
    return 2;
}
