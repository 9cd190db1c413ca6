#pragma once

// Planar diagrams: the outer face goes on a regular polygon and every
// interior vertex sits at the barycenter of its neighbours (one linear
// solve), which is a crossing-free embedding for 3-connected planar graphs.
// The SVG writer is deterministic down to element order.

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "spaceform/linalg.hpp"
#include "spaceform/polyhedron.hpp"

namespace spaceform {

struct SchlegelLayout {
    std::string outer_face;
    std::map<int, std::array<double, 2>> pos;
    double residual = 0.0;
};

inline SchlegelLayout schlegel_layout(const CombinatorialPolyhedron& poly,
                                      const std::string& outer_id) {
    const Face& outer = poly.face(outer_id);
    std::map<int, std::set<int>> adj;
    for (auto [u, v] : poly.undirected_edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    SchlegelLayout lay;
    lay.outer_face = outer_id;

    std::map<int, int> index; // interior vertices -> solve index
    std::vector<int> interior;
    std::set<int> on_outer(outer.cycle.begin(), outer.cycle.end());
    for (int v : poly.vertices)
        if (!on_outer.count(v)) {
            index[v] = static_cast<int>(interior.size());
            interior.push_back(v);
        }

    const size_t n = outer.cycle.size();
    for (size_t i = 0; i < n; ++i) {
        double ang = std::numbers::pi / 2 - 2 * std::numbers::pi * static_cast<double>(i) / n;
        lay.pos[outer.cycle[i]] = {std::cos(ang), std::sin(ang)};
    }

    if (!interior.empty()) {
        const int m = static_cast<int>(interior.size());
        Mat lap(m, m);
        Vec bx(m, 0.0), by(m, 0.0);
        for (int r = 0; r < m; ++r) {
            int v = interior[r];
            lap(r, r) = static_cast<double>(adj[v].size());
            for (int w : adj[v]) {
                if (index.count(w))
                    lap(r, index[w]) -= 1.0;
                else {
                    bx[r] += lay.pos[w][0];
                    by[r] += lay.pos[w][1];
                }
            }
        }
        Vec sx = solve(lap, bx);
        Vec sy = solve(lap, by);
        for (int r = 0; r < m; ++r) lay.pos[interior[r]] = {sx[r], sy[r]};
        // residual of the barycenter equations
        double res = 0.0;
        for (int r = 0; r < m; ++r) {
            double ex = 0.0, ey = 0.0;
            int v = interior[r];
            for (int w : adj[v]) {
                ex += lay.pos[w][0];
                ey += lay.pos[w][1];
            }
            double k = static_cast<double>(adj[v].size());
            res = std::max(res, std::fabs(lay.pos[v][0] - ex / k));
            res = std::max(res, std::fabs(lay.pos[v][1] - ey / k));
        }
        lay.residual = res;
        if (res > 1e-10) throw std::runtime_error("schlegel layout residual too large");
    }
    return lay;
}

// segment crossing test for the planarity oracle
inline bool segments_cross(const std::array<double, 2>& a, const std::array<double, 2>& b,
                           const std::array<double, 2>& c, const std::array<double, 2>& d) {
    auto orient = [](const std::array<double, 2>& p, const std::array<double, 2>& q,
                     const std::array<double, 2>& r) {
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
    };
    double o1 = orient(a, b, c), o2 = orient(a, b, d);
    double o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < -1e-15 && o3 * o4 < -1e-15;
}

inline bool layout_is_planar(const CombinatorialPolyhedron& poly, const SchlegelLayout& lay) {
    auto edges = poly.undirected_edges();
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (segments_cross(lay.pos.at(a), lay.pos.at(b), lay.pos.at(c), lay.pos.at(d)))
                return false;
        }
    return true;
}

// SVG 1.1 output, 1000x1000 view box, stable element order. Face labels sit
// at face barycenters (the outer label above the ring); optional per-edge
// class numbers sit at edge midpoints.
inline std::string svg_render(const CombinatorialPolyhedron& poly, const SchlegelLayout& lay,
                              const std::map<std::string, std::string>* face_labels = nullptr,
                              const std::map<std::pair<int, int>, int>* edge_classes = nullptr) {
    auto px = [](double t) { return 500.0 + 420.0 * t; };
    auto py = [](double t) { return 500.0 - 420.0 * t; };
    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    os << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
    for (auto [u, v] : poly.undirected_edges()) {
        const auto& a = lay.pos.at(u);
        const auto& b = lay.pos.at(v);
        os << "<line x1=\"" << px(a[0]) << "\" y1=\"" << py(a[1]) << "\" x2=\"" << px(b[0])
           << "\" y2=\"" << py(b[1]) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    std::vector<const Face*> faces;
    for (const auto& f : poly.faces) faces.push_back(&f);
    std::sort(faces.begin(), faces.end(),
              [](const Face* a, const Face* b) { return a->id < b->id; });
    for (const Face* f : faces) {
        double cx = 0.0, cy = 0.0;
        for (int v : f->cycle) {
            cx += lay.pos.at(v)[0];
            cy += lay.pos.at(v)[1];
        }
        cx /= static_cast<double>(f->cycle.size());
        cy /= static_cast<double>(f->cycle.size());
        std::string label = f->id;
        if (face_labels) {
            auto it = face_labels->find(f->id);
            if (it != face_labels->end()) label = it->second;
        }
        double tx = px(cx), ty = py(cy);
        if (f->id == lay.outer_face) {
            tx = 500.0;
            ty = 40.0;
        }
        os << "<text x=\"" << tx << "\" y=\"" << ty
           << "\" font-size=\"20\" text-anchor=\"middle\" fill=\"darkblue\">" << label
           << "</text>\n";
    }
    if (edge_classes) {
        for (auto [u, v] : poly.undirected_edges()) {
            auto it = edge_classes->find({std::min(u, v), std::max(u, v)});
            if (it == edge_classes->end()) continue;
            const auto& a = lay.pos.at(u);
            const auto& b = lay.pos.at(v);
            os << "<text x=\"" << px((a[0] + b[0]) / 2) << "\" y=\"" << py((a[1] + b[1]) / 2)
               << "\" font-size=\"13\" text-anchor=\"middle\" fill=\"firebrick\">"
               << it->second << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace spaceform
