#pragma once

// JSON (de)serialization of the data-file schemas: polyhedra, pairing
// fixtures, and the structured run reports.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "spaceform/gram.hpp"
#include "spaceform/homology.hpp"
#include "spaceform/pairing.hpp"
#include "spaceform/polyhedron.hpp"
#include "spaceform/schlafli.hpp"

namespace spaceform {

// Branch-matrix symbols: {order, branches: [{i, j, num, den}]} with the
// dihedral angle beta^{ij} = pi * num / den.
inline SchlafliSymbol symbol_from_json(const nlohmann::json& j) {
    int order = j.at("order").get<int>();
    std::map<std::pair<int, int>, PiFraction> branches;
    for (const auto& jb : j.at("branches")) {
        PiFraction f;
        f.num = jb.at("num").get<long>();
        f.den = jb.at("den").get<long>();
        branches[{jb.at("i").get<int>(), jb.at("j").get<int>()}] = f;
    }
    return SchlafliSymbol::with_branches(order, std::move(branches));
}

inline nlohmann::json poly_to_json(const CombinatorialPolyhedron& p) {
    nlohmann::json j;
    j["name"] = p.name;
    j["vertices"] = p.vertices;
    j["faces"] = nlohmann::json::array();
    for (const auto& f : p.faces) j["faces"].push_back({{"id", f.id}, {"cycle", f.cycle}});
    j["labels"] = p.face_labels;
    return j;
}

inline CombinatorialPolyhedron poly_from_json(const nlohmann::json& j) {
    CombinatorialPolyhedron p;
    p.name = j.value("name", "");
    p.vertices = j.at("vertices").get<std::vector<int>>();
    for (const auto& jf : j.at("faces"))
        p.faces.push_back({jf.at("id").get<std::string>(), jf.at("cycle").get<std::vector<int>>()});
    if (j.contains("labels"))
        p.face_labels = j.at("labels").get<std::map<std::string, std::string>>();
    return p;
}

inline nlohmann::json fixture_to_json(const PairingFixture& f) {
    nlohmann::json j;
    j["polyhedron"] = f.polyhedron;
    j["cells_per_edge"] = f.cells_per_edge;
    j["seeds"] = nlohmann::json::array();
    for (const auto& s : f.seeds) {
        nlohmann::json js = {{"name", s.name},
                             {"source", s.source},
                             {"target", s.target},
                             {"src_edge", s.src_edge},
                             {"dst_edge", s.dst_edge}};
        if (!s.word_expr.empty()) js["word"] = s.word_expr;
        j["seeds"].push_back(js);
    }
    if (!f.specials.empty()) {
        j["special_classes"] = nlohmann::json::array();
        for (const auto& sc : f.specials)
            j["special_classes"].push_back({{"size", sc.size}, {"edge_hints", sc.edge_hints}});
    }
    if (!f.metric_kind.empty()) {
        nlohmann::json m;
        m["kind"] = f.metric_kind;
        if (f.metric_kind == "declared") {
            m["angle"] = f.declared_angle;
            m["edges"] = f.declared_edges;
        }
        j["metric"] = m;
    }
    return j;
}

inline PairingFixture fixture_from_json(const nlohmann::json& j) {
    PairingFixture f;
    f.polyhedron = j.at("polyhedron").get<std::string>();
    f.cells_per_edge = j.at("cells_per_edge").get<int>();
    for (const auto& js : j.at("seeds")) {
        PairingSeed s;
        s.name = js.at("name").get<std::string>();
        s.source = js.at("source").get<std::string>();
        s.target = js.at("target").get<std::string>();
        s.src_edge = js.at("src_edge").get<std::array<int, 2>>();
        s.dst_edge = js.at("dst_edge").get<std::array<int, 2>>();
        if (js.contains("word")) s.word_expr = js.at("word").get<std::vector<std::string>>();
        f.seeds.push_back(std::move(s));
    }
    if (j.contains("special_classes"))
        for (const auto& jc : j.at("special_classes")) {
            SpecialClass sc;
            sc.size = jc.at("size").get<int>();
            sc.edge_hints = jc.at("edge_hints").get<std::vector<std::array<int, 2>>>();
            f.specials.push_back(std::move(sc));
        }
    if (j.contains("metric")) {
        const auto& m = j.at("metric");
        f.metric_kind = m.at("kind").get<std::string>();
        if (f.metric_kind == "declared") {
            f.declared_angle = m.at("angle").get<double>();
            f.declared_edges = m.at("edges").get<std::vector<std::array<int, 2>>>();
        }
    }
    return f;
}

inline nlohmann::json geometry_to_json(const GeometryClass& c) {
    nlohmann::json j;
    j["kind"] = to_string(c.kind);
    j["determinant"] = c.determinant;
    j["leading_minors"] = c.leading_minors;
    j["signature"] = {{"plus", c.signature.plus},
                      {"minus", c.signature.minus},
                      {"zero", c.signature.zero}};
    if (!c.failing_minors.empty()) j["failing_minors"] = c.failing_minors;
    return j;
}

inline nlohmann::json result_to_json(const PairingResult& r) {
    nlohmann::json j;
    j["polyhedron"] = r.poly.name;
    j["cells_per_edge"] = r.cells_per_edge;
    j["generators"] = r.seed_names;
    j["maps"] = nlohmann::json::array();
    for (const auto& m : r.maps)
        j["maps"].push_back({{"name", m.name},
                             {"source", m.source},
                             {"target", m.target},
                             {"seed", m.is_seed},
                             {"word", word_to_string(m.word, r.seed_names)}});
    j["edge_classes"] = nlohmann::json::array();
    for (const auto& c : r.classes) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["size"] = c.members.size();
        jc["kind"] = to_string(c.kind);
        jc["members"] = c.members;
        if (!c.derived_name.empty()) jc["derives"] = c.derived_name;
        if (c.kind != RelationKind::Pairing)
            jc["relation"] = word_to_string(c.relation, r.seed_names);
        j["edge_classes"].push_back(jc);
    }
    j["vertex_classes"] = nlohmann::json::array();
    for (const auto& vc : r.vertex_classes)
        j["vertex_classes"].push_back({{"id", vc.id},
                                       {"members", vc.members},
                                       {"edge_classes", vc.incident_edge_classes}});
    return j;
}

inline nlohmann::json report_to_json(const SpaceFormReport& rep) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : rep.checks)
        j.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return j;
}

inline nlohmann::json homology_to_json(const HomologyGroup& h) {
    nlohmann::json j;
    j["group"] = h.str();
    j["free_rank"] = h.free_rank;
    j["invariant_factors"] = nlohmann::json::array();
    for (const auto& d : h.invariant_factors) j["invariant_factors"].push_back(d.str());
    return j;
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    return j;
}

inline void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

} // namespace spaceform
