#pragma once

// The face-pairing engine. From seed pairings it walks directed edge cycles,
// deriving the remaining pairings one unknown per cycle, classifying the
// cycle relations as trivial / defining / consequence, and collecting edge
// and vertex classes. The quotient checks certify the space-form conditions.
//
// Conventions, fixed once:
//  * every face cycle is traversed with the face on its left; a directed
//    edge is "coherent" with the one face whose cycle contains it;
//  * a pairing g maps its source face (labeled g^{-1}) onto its target
//    (labeled g), reversing the induced boundary orientation;
//  * walking a cycle crosses the coherent face of the current edge, and the
//    crossing contributes the crossed face's label on the left of the cell
//    word.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spaceform/polyhedron.hpp"
#include "spaceform/words.hpp"

namespace spaceform {

struct PairingSeed {
    std::string name;
    std::string source, target;
    std::array<int, 2> src_edge{}; // directed, coherent with source
    std::array<int, 2> dst_edge{}; // directed, incoherent with target

    // A composite seed is a product of earlier generator seeds (entries like
    // "a" or "a^-1"); it ships pairing data without adding a generator.
    std::vector<std::string> word_expr;
};

struct SpecialClass {
    int size = 0;
    std::vector<std::array<int, 2>> edge_hints; // undirected representatives
};

// A pairing problem as it ships in a data file: the solid by catalog name,
// the declared edge multiplicity, seeds, special classes, and which metric
// realization backs the angle checks.
struct PairingFixture {
    std::string polyhedron;
    int cells_per_edge = 3;
    std::vector<PairingSeed> seeds;
    std::vector<SpecialClass> specials;
    std::string metric_kind; // "cube", "archimedean_466", "archimedean_566", "declared"
    double declared_angle = 0.0;
    std::vector<std::array<int, 2>> declared_edges;
};

struct PropagationError : std::runtime_error {
    std::string trace;
    PropagationError(const std::string& what, std::string tr)
        : std::runtime_error(what), trace(std::move(tr)) {}
};

enum class RelationKind { Pairing, Trivial, Defining, Consequence };

inline const char* to_string(RelationKind k) {
    switch (k) {
        case RelationKind::Pairing: return "pairing";
        case RelationKind::Trivial: return "trivial";
        case RelationKind::Defining: return "defining";
        case RelationKind::Consequence: return "consequence";
    }
    return "?";
}

struct FacePairingMap {
    std::string name;
    std::string source, target;
    std::map<int, int> mu;     // boundary vertex bijection source -> target
    std::map<int, int> mu_inv;
    GroupWord word;            // over the seed alphabet
    bool is_seed = false;
};

struct EdgeClassRecord {
    int id = 0;
    int expected_size = 0;
    std::vector<std::pair<int, int>> members_directed; // in walk order
    std::vector<std::pair<int, int>> members;          // distinct undirected
    RelationKind kind = RelationKind::Pairing;
    GroupWord relation; // reduced cycle word over seeds (empty for pairings)
    std::string derived_name;
};

struct VertexClassRecord {
    int id = 0;
    std::vector<int> members;
    std::vector<int> incident_edge_classes; // sorted distinct class ids
};

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<GroupWord> relators;
};

struct PairingResult {
    CombinatorialPolyhedron poly;
    int cells_per_edge = 3;
    std::vector<std::string> seed_names;
    std::vector<FacePairingMap> maps;
    std::vector<EdgeClassRecord> classes;
    std::vector<VertexClassRecord> vertex_classes;

    const FacePairingMap* map_named(const std::string& n) const {
        for (const auto& m : maps)
            if (m.name == n) return &m;
        return nullptr;
    }

    int edge_class_of(int u, int v) const {
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        for (const auto& c : classes)
            for (auto e : c.members)
                if (e == key) return c.id;
        return -1;
    }
};

namespace pairdetail {

using Edge = std::pair<int, int>;

inline Edge undirect(const Edge& e) { return {std::min(e.first, e.second), std::max(e.first, e.second)}; }

struct Engine {
    const CombinatorialPolyhedron& poly;
    int default_size;
    std::map<Edge, int> special_size; // undirected -> declared cycle length
    int rewrite_depth;

    std::map<Edge, std::string> coherent_face; // directed edge -> left face
    std::map<std::string, int> paired_as;      // face -> map index
    std::map<std::string, bool> paired_forward;
    std::vector<FacePairingMap> maps;
    std::vector<EdgeClassRecord> classes;
    std::map<Edge, int> edge_class; // undirected -> class id
    std::vector<GroupWord> defining;
    std::vector<std::string> names_in_use;
    std::ostringstream trace;

    Engine(const CombinatorialPolyhedron& p, int size, int depth)
        : poly(p), default_size(size), rewrite_depth(depth) {
        for (const auto& f : poly.faces) {
            size_t n = f.cycle.size();
            for (size_t i = 0; i < n; ++i) {
                Edge e = {f.cycle[i], f.cycle[(i + 1) % n]};
                if (coherent_face.count(e))
                    throw std::invalid_argument("complex is not consistently oriented");
                coherent_face[e] = f.id;
            }
        }
    }

    const std::string& left_face(const Edge& e) const {
        auto it = coherent_face.find(e);
        if (it == coherent_face.end())
            throw std::invalid_argument("directed edge not on the complex");
        return it->second;
    }

    const std::string& right_face(const Edge& e) const {
        return left_face({e.second, e.first});
    }

    int expected_size(const Edge& e) const {
        auto it = special_size.find(undirect(e));
        return it == special_size.end() ? default_size : it->second;
    }

    bool face_paired(const std::string& f) const { return paired_as.count(f) > 0; }

    // label of face f as a group word over the seeds: the target face of g
    // reads g, the source face reads g^{-1}
    GroupWord face_label(const std::string& f) const {
        const FacePairingMap& m = maps[paired_as.at(f)];
        return m.target == f ? m.word : m.word.inverse();
    }

    // apply the map out of face f (source -> target or target -> source)
    Edge cross(const std::string& f, const Edge& e) const {
        const FacePairingMap& m = maps[paired_as.at(f)];
        if (m.source == f) return {m.mu.at(e.first), m.mu.at(e.second)};
        return {m.mu_inv.at(e.first), m.mu_inv.at(e.second)};
    }

    void register_map(FacePairingMap m) {
        if (face_paired(m.source) || face_paired(m.target))
            throw std::invalid_argument("face paired twice: " + m.source + " or " + m.target);
        if (m.source == m.target)
            throw std::invalid_argument("self-paired face " + m.source);
        for (auto [a, b] : m.mu) m.mu_inv[b] = a;
        maps.push_back(std::move(m));
        int idx = static_cast<int>(maps.size()) - 1;
        paired_as[maps[idx].source] = idx;
        paired_as[maps[idx].target] = idx;
        names_in_use.push_back(maps[idx].name);
    }

    // extend the anchor correspondence around both polygons
    static std::map<int, int> boundary_bijection(const Face& src, const Face& dst,
                                                 const Edge& se, const Edge& de) {
        size_t n = src.cycle.size();
        if (n != dst.cycle.size())
            throw std::invalid_argument("paired faces " + src.id + ", " + dst.id +
                                        " have different sizes");
        auto pos = [](const Face& f, const Edge& e) -> std::optional<size_t> {
            for (size_t i = 0; i < f.cycle.size(); ++i)
                if (f.cycle[i] == e.first && f.cycle[(i + 1) % f.cycle.size()] == e.second)
                    return i;
            return std::nullopt;
        };
        auto i0 = pos(src, se);
        if (!i0)
            throw std::invalid_argument("seed source edge not coherent with face " + src.id);
        auto j0 = pos(dst, {de.second, de.first});
        if (!j0)
            throw std::invalid_argument("seed target edge not incoherent with face " + dst.id);
        // mu(src[i0 + i]) = dst[j0 + 1 - i]
        std::map<int, int> mu;
        for (size_t i = 0; i < n; ++i)
            mu[src.cycle[(*i0 + i) % n]] = dst.cycle[(*j0 + 1 + n - i) % n];
        return mu;
    }

    std::string fresh_name() {
        for (char c = 'a'; c <= 'z'; ++c) {
            std::string n(1, c);
            if (std::find(names_in_use.begin(), names_in_use.end(), n) == names_in_use.end())
                return n;
        }
        return "g" + std::to_string(maps.size());
    }

    struct WalkOutcome {
        bool progressed = false;
    };

    // Walk the cycle of edge e0. Returns true when a class was committed.
    bool attempt(const Edge& e0) {
        const int n = expected_size(e0);

        std::vector<Edge> fwd = {e0};
        std::vector<GroupWord> fwd_letters;
        Edge cur = e0;
        bool closed = false;
        while (static_cast<int>(fwd_letters.size()) < n) {
            const std::string& f = left_face(cur);
            if (!face_paired(f)) break;
            fwd_letters.push_back(face_label(f));
            cur = cross(f, cur);
            if (static_cast<int>(fwd_letters.size()) == n) {
                if (cur != e0)
                    fail("cycle of edge (" + edge_str(e0) + ") does not close after " +
                         std::to_string(n) + " crossings");
                closed = true;
                break;
            }
            if (cur == e0)
                fail("cycle of edge (" + edge_str(e0) + ") closed early, before " +
                     std::to_string(n) + " crossings");
            fwd.push_back(cur);
        }

        if (closed) {
            // crossing face f from cell w(F) moves to (w g_f)(F), so the
            // cycle relation is the label product in crossing order
            GroupWord w;
            for (const auto& l : fwd_letters) w = concat(w, l);
            commit(fwd, w, std::nullopt, n);
            return true;
        }

        // stalled after i crossings; walk backwards
        std::vector<Edge> back;
        std::vector<GroupWord> back_letters; // forward letters of the back crossings
        Edge bcur = e0;
        while (static_cast<int>(fwd_letters.size() + back_letters.size()) + 1 < n) {
            const std::string& h = right_face(bcur);
            if (!face_paired(h)) break;
            const FacePairingMap& m = maps[paired_as.at(h)];
            Edge prev = m.source == h ? Edge{m.mu.at(bcur.first), m.mu.at(bcur.second)}
                                      : Edge{m.mu_inv.at(bcur.first), m.mu_inv.at(bcur.second)};
            // forward crossing from prev to bcur crosses partner(h)
            const std::string& partner = m.source == h ? m.target : m.source;
            back_letters.push_back(face_label(partner));
            bcur = prev;
            back.push_back(bcur);
        }

        int have = static_cast<int>(fwd_letters.size() + back_letters.size()) + 1;
        if (have < n) return false; // two or more unknown crossings: defer

        // exactly one crossing missing: derive the pairing from the last
        // forward edge across its left face onto the last backward edge
        Edge si = fwd.back();
        Edge di = back.empty() ? e0 : back.back();
        const std::string& src = left_face(si);
        const std::string& dst = right_face(di);
        if (face_paired(src) || face_paired(dst))
            fail("cycle of edge (" + edge_str(e0) + ") cannot close consistently");
        if (src == dst)
            fail("cycle of edge (" + edge_str(e0) +
                 ") demands a self-paired face " + src);

        FacePairingMap m;
        m.name = fresh_name();
        m.source = src;
        m.target = dst;
        m.mu = boundary_bijection(poly.face(src), poly.face(dst), si, di);
        // crossing order around the cycle: l_1..l_i, X, then the backward
        // crossings nearest-last; the product must be the identity. The
        // crossed face is the new map's source, so its label X is the
        // inverse of the map itself.
        GroupWord before; // l_1 ... l_i
        for (const auto& l : fwd_letters) before = concat(before, l);
        GroupWord after; // lam_j ... lam_1
        for (auto it = back_letters.rbegin(); it != back_letters.rend(); ++it)
            after = concat(after, *it);
        // before * X * after = 1 and X = word^{-1}  =>  word = after * before
        m.word = concat(after, before);

        trace << "derived " << m.name << ": " << m.source << " -> " << m.target << "\n";
        std::string derived = m.name;
        register_map(std::move(m));

        std::vector<Edge> all = fwd;
        all.insert(all.end(), back.rbegin(), back.rend());
        commit(all, GroupWord{}, derived, n);
        return true;
    }

    void commit(const std::vector<Edge>& edges, GroupWord relation,
                std::optional<std::string> derived, int n) {
        EdgeClassRecord rec;
        rec.id = static_cast<int>(classes.size()) + 1;
        rec.expected_size = n;
        rec.members_directed = edges;
        std::set<Edge> undirected;
        for (const auto& e : edges) undirected.insert(undirect(e));
        rec.members.assign(undirected.begin(), undirected.end());
        for (const auto& e : rec.members) {
            if (edge_class.count(e))
                fail("edge (" + edge_str(e) + ") falls into two classes");
            edge_class[e] = rec.id;
        }
        if (derived) {
            rec.kind = RelationKind::Pairing;
            rec.derived_name = *derived;
        } else {
            rec.relation = reduce(relation);
            if (rec.relation.empty()) {
                rec.kind = RelationKind::Trivial;
            } else {
                RewriteSystem rs(defining);
                if (rs.reduces_to_identity(rec.relation, rewrite_depth)) {
                    rec.kind = RelationKind::Consequence;
                } else {
                    rec.kind = RelationKind::Defining;
                    defining.push_back(rec.relation);
                }
            }
        }
        trace << "class " << rec.id << " (size " << rec.members.size() << "): "
              << to_string(rec.kind) << "\n";
        classes.push_back(std::move(rec));
    }

    static std::string edge_str(const Edge& e) {
        return std::to_string(e.first) + "," + std::to_string(e.second);
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw PropagationError(what, trace.str());
    }
};

} // namespace pairdetail

inline PairingResult propagate(const CombinatorialPolyhedron& poly,
                               const std::vector<PairingSeed>& seeds, int cells_per_edge,
                               const std::vector<SpecialClass>& specials = {},
                               int rewrite_depth = 20) {
    if (cells_per_edge < 3)
        throw std::invalid_argument("cells_per_edge must be at least 3");
    pairdetail::Engine eng(poly, cells_per_edge, rewrite_depth);
    for (const auto& sc : specials)
        for (auto h : sc.edge_hints)
            eng.special_size[pairdetail::undirect({h[0], h[1]})] = sc.size;

    // generator seeds get the letters; composite seeds reuse them
    std::vector<std::string> seed_names;
    std::map<std::string, int> gen_index;
    for (const auto& s : seeds)
        if (s.word_expr.empty()) {
            gen_index[s.name] = static_cast<int>(seed_names.size());
            seed_names.push_back(s.name);
        }
    for (const auto& s : seeds) {
        FacePairingMap m;
        m.name = s.name;
        m.source = s.source;
        m.target = s.target;
        m.is_seed = true;
        if (s.word_expr.empty()) {
            m.word = GroupWord::gen(gen_index.at(s.name));
        } else {
            for (const auto& tok : s.word_expr) {
                bool inv = tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1";
                std::string base = inv ? tok.substr(0, tok.size() - 3) : tok;
                auto it = gen_index.find(base);
                if (it == gen_index.end())
                    throw std::invalid_argument("composite seed '" + s.name +
                                                "' references unknown generator '" + base +
                                                "'");
                m.word = concat(m.word, GroupWord::gen(it->second, inv ? -1 : 1));
            }
        }
        m.mu = pairdetail::Engine::boundary_bijection(
            poly.face(s.source), poly.face(s.target), {s.src_edge[0], s.src_edge[1]},
            {s.dst_edge[0], s.dst_edge[1]});
        eng.register_map(std::move(m));
    }

    // deterministic scan, radiating outward from the seeds: edges on the
    // boundary of already-paired faces come first in the order those faces
    // were paired (ties by face label, then boundary position), which keeps
    // the class numbering aligned with the by-hand procedure; restart after
    // every committed class
    for (;;) {
        bool progressed = false;
        std::vector<std::pair<long, const Face*>> order;
        for (const auto& f : poly.faces) {
            auto it = eng.paired_as.find(f.id);
            long rank = it == eng.paired_as.end()
                            ? static_cast<long>(eng.maps.size()) + 1
                            : static_cast<long>(it->second);
            order.push_back({rank, &f});
        }
        std::sort(order.begin(), order.end(),
                  [](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first < b.first;
                      return a.second->id < b.second->id;
                  });
        for (auto [rank, f] : order) {
            size_t n = f->cycle.size();
            for (size_t i = 0; i < n && !progressed; ++i) {
                pairdetail::Edge e = {f->cycle[i], f->cycle[(i + 1) % n]};
                if (eng.edge_class.count(pairdetail::undirect(e))) continue;
                progressed = eng.attempt(e);
            }
            if (progressed) break;
        }
        if (!progressed) break;
    }

    size_t total_edges = poly.undirected_edges().size();
    if (eng.edge_class.size() != total_edges) {
        eng.trace << "classified " << eng.edge_class.size() << " of " << total_edges
                  << " edges\n";
        throw PropagationError("propagation stalled: orphan faces or edges remain",
                               eng.trace.str());
    }
    for (const auto& f : poly.faces)
        if (!eng.face_paired(f.id))
            throw PropagationError("face " + f.id + " was never paired", eng.trace.str());

    PairingResult r;
    r.poly = poly;
    r.cells_per_edge = cells_per_edge;
    r.seed_names = seed_names;
    r.maps = eng.maps;
    r.classes = eng.classes;

    // vertex classes under the pairing groupoid
    std::map<int, int> parent;
    for (int v : poly.vertices) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& m : r.maps)
        for (auto [a, b] : m.mu) parent[find(a)] = find(b);
    std::map<int, std::vector<int>> groups;
    for (int v : poly.vertices) groups[find(v)].push_back(v);

    // incident edge classes per vertex
    std::map<int, std::set<int>> vert_classes;
    for (const auto& c : r.classes)
        for (auto [u, v] : c.members) {
            vert_classes[u].insert(c.id);
            vert_classes[v].insert(c.id);
        }
    int id = 0;
    for (auto& [root, members] : groups) {
        VertexClassRecord vc;
        vc.id = ++id;
        std::sort(members.begin(), members.end());
        vc.members = members;
        std::set<int> inc;
        for (int v : members) inc.insert(vert_classes[v].begin(), vert_classes[v].end());
        vc.incident_edge_classes.assign(inc.begin(), inc.end());
        r.vertex_classes.push_back(std::move(vc));
    }
    return r;
}

inline GroupPresentation presentation(const PairingResult& r) {
    GroupPresentation p;
    p.generators = r.seed_names;
    for (const auto& c : r.classes)
        if (c.kind == RelationKind::Defining) p.relators.push_back(c.relation);
    return p;
}

// ---------------------------------------------------------------------------
// space-form verification

struct MetricAngles {
    // dihedral angle by the unordered face-size pair of the edge
    std::map<std::pair<int, int>, double> by_face_sizes;
    // overriding per-edge angles (undirected)
    std::map<std::pair<int, int>, double> by_edge;
    // declared data may cover only some classes; skip the rest when partial
    bool partial = false;
};

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SpaceFormReport {
    std::vector<CheckLine> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline SpaceFormReport verify_space_form(const PairingResult& r,
                                         const std::optional<MetricAngles>& metric = {},
                                         double angle_tol = 1e-9) {
    SpaceFormReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back({name, pass, detail});
    };

    bool sizes_ok = true;
    std::ostringstream sdet;
    for (const auto& c : r.classes)
        if (static_cast<int>(c.members.size()) != c.expected_size) {
            sizes_ok = false;
            sdet << "class " << c.id << " has " << c.members.size() << " edges, expected "
                 << c.expected_size << "; ";
        }
    add("edge class sizes", sizes_ok, sdet.str());

    size_t covered = 0;
    for (const auto& c : r.classes) covered += c.members.size();
    bool part_ok = covered == r.poly.undirected_edges().size();
    add("edge partition", part_ok,
        std::to_string(covered) + " of " + std::to_string(r.poly.undirected_edges().size()));

    long vc = static_cast<long>(r.vertex_classes.size());
    long ec = static_cast<long>(r.classes.size());
    long fp = static_cast<long>(r.maps.size());
    long euler = vc - ec + fp - 1;
    add("quotient euler characteristic",
        euler == 0, std::to_string(vc) + " - " + std::to_string(ec) + " + " +
                        std::to_string(fp) + " - 1 = " + std::to_string(euler));

    if (metric) {
        bool angles_ok = true;
        int skipped = 0, checked = 0;
        std::ostringstream adet;
        auto face_size = [&](const std::string& id) {
            return static_cast<int>(r.poly.face(id).cycle.size());
        };
        for (const auto& c : r.classes) {
            double sum = 0.0;
            bool have = true;
            for (auto e : c.members) {
                auto it = metric->by_edge.find(e);
                if (it != metric->by_edge.end()) {
                    sum += it->second;
                    continue;
                }
                auto fa = r.poly.face_with_edge(e.first, e.second);
                auto fb = r.poly.face_with_edge(e.second, e.first);
                if (!fa || !fb) {
                    have = false;
                    break;
                }
                int sa = face_size(*fa), sb = face_size(*fb);
                auto jt = metric->by_face_sizes.find({std::min(sa, sb), std::max(sa, sb)});
                if (jt == metric->by_face_sizes.end()) {
                    have = false;
                    break;
                }
                sum += jt->second;
            }
            if (!have) {
                if (metric->partial) {
                    ++skipped;
                    continue;
                }
                angles_ok = false;
                adet << "class " << c.id << " lacks angle data; ";
                continue;
            }
            ++checked;
            if (std::fabs(sum - 2 * std::numbers::pi) > angle_tol) {
                angles_ok = false;
                adet << "class " << c.id << " angle sum " << sum << "; ";
            }
        }
        if (checked == 0) angles_ok = false;
        adet << checked << " classes checked";
        if (skipped) adet << ", " << skipped << " without declared data skipped";
        add("dihedral angle sums 2*pi", angles_ok, adet.str());
    }
    return rep;
}

} // namespace spaceform
