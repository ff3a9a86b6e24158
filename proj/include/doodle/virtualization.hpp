#pragma once

// The bijection between doodles on surfaces and virtual doodles on the
// plane: stripping virtual crossings is codec parsing; this header goes the
// other way (planarize) and hosts the equality and virtual-area APIs.
//
// Planarization draws the map incrementally into a genus-0 working map.
// Crossings keep their prescribed counterclockwise rotations; unconnected
// ports hold pendant stubs.  Each original edge is routed from stub to stub
// along a shortest dual path, and every working edge it crosses gains a
// virtual node.  For a planar input both stubs always share a face, so the
// output has no virtual crossings at all; in general the count is reported
// with no minimality guarantee.

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "doodle/canonical.hpp"
#include "doodle/equality.hpp"
#include "doodle/map.hpp"
#include "doodle/pd_code.hpp"

namespace doodle {

namespace detail {

// Planar working map with arbitrary vertex degrees.
struct PlanarScene {
    enum class Kind : std::uint8_t { crossing, virtual_, stub };
    struct Vertex {
        Kind kind;
        std::vector<int> ports;  // dart ids, ccw
        std::uint32_t source = 0;  // original crossing for Kind::crossing
        bool dead = false;
    };
    std::vector<Vertex> verts;
    std::vector<int> dart_vert;
    std::vector<int> dart_pos;
    std::vector<int> dart_pair;

    int new_dart(int v, int pos) {
        int d = static_cast<int>(dart_vert.size());
        dart_vert.push_back(v);
        dart_pos.push_back(pos);
        dart_pair.push_back(-1);
        return d;
    }

    int add_vertex(Kind kind, int degree, std::uint32_t source = 0) {
        int v = static_cast<int>(verts.size());
        verts.push_back({kind, {}, source, false});
        for (int i = 0; i < degree; ++i) verts[v].ports.push_back(new_dart(v, i));
        return v;
    }

    void link(int a, int b) {
        dart_pair[a] = b;
        dart_pair[b] = a;
    }

    // Retires a stub leaf: its dart leaves the pairing entirely.
    void retire_stub(int stub_dart) {
        verts[dart_vert[stub_dart]].dead = true;
        dart_pair[stub_dart] = -1;
    }

    int rot_next(int d) const {
        const auto& ps = verts[dart_vert[d]].ports;
        return ps[(dart_pos[d] + 1) % ps.size()];
    }
    int rot_prev(int d) const {
        const auto& ps = verts[dart_vert[d]].ports;
        return ps[(dart_pos[d] + ps.size() - 1) % ps.size()];
    }
    // Same convention as the doodle map: travel the edge, turn clockwise.
    int face_next(int d) const { return rot_prev(dart_pair[d]); }

    // Face id per dart, for darts with a pairing.
    std::vector<int> face_ids(int& nfaces) const {
        std::vector<int> face(dart_pair.size(), -1);
        nfaces = 0;
        for (std::size_t d = 0; d < dart_pair.size(); ++d) {
            if (face[d] != -1 || dart_pair[d] < 0) continue;
            int e = static_cast<int>(d);
            do {
                face[e] = nfaces;
                e = face_next(e);
            } while (e != static_cast<int>(d));
            ++nfaces;
        }
        return face;
    }
};

}  // namespace detail

struct PlanarizeResult {
    PdDocument document;
    std::uint32_t virtual_crossings = 0;
};

// Produces a planar drawing combinatorics of the map as a PD document.
// Contract: parse_pd(planarize(m)) is canonically equal to m.  The seed
// varies routing order; all seeds yield detour-equivalent drawings.
inline PlanarizeResult planarize(const DoodleMap& m, std::uint64_t seed = 0) {
    require_valid(m, "planarize");
    using Scene = detail::PlanarScene;
    Scene scene;

    const std::uint32_t n = m.crossing_count();
    // Port dart per original dart; stub vertex per unconnected port.
    std::vector<int> port(m.dart_count(), -1);
    std::vector<int> stub(m.dart_count(), -1);
    std::vector<bool> placed(n, false);
    std::vector<bool> drawn(m.dart_count(), false);

    auto place_crossing = [&](std::uint32_t c) {
        int v = scene.add_vertex(Scene::Kind::crossing, 4, c);
        for (std::uint32_t s = 0; s < 4; ++s) {
            DartId d = make_dart(c, s);
            port[d] = scene.verts[v].ports[s];
            int sv = scene.add_vertex(Scene::Kind::stub, 1);
            stub[d] = scene.verts[sv].ports[0];
            scene.link(port[d], stub[d]);
        }
        placed[c] = true;
    };

    auto connect_ports = [&](DartId a, DartId b) {
        // Remove both pendant stubs, then route a's port to b's port.
        int fa, fb;
        {
            // Faces touched by the stub darts identify the ports' faces.
            int nf;
            auto face = scene.face_ids(nf);
            fa = face[stub[a]];
            fb = face[stub[b]];
            // Dual BFS from fa to fb across live non-stub edges.
            std::vector<int> back(nf, -1);       // dual predecessor face
            std::vector<int> via(nf, -1);        // dart crossed to get here
            std::vector<bool> seen(nf, false);
            std::deque<int> queue{fa};
            seen[fa] = true;
            while (!queue.empty() && !seen[fb]) {
                int f = queue.front();
                queue.pop_front();
                for (std::size_t d = 0; d < scene.dart_pair.size(); ++d) {
                    if (face[d] != f || scene.dart_pair[d] < 0) continue;
                    if (scene.verts[scene.dart_vert[d]].kind == Scene::Kind::stub ||
                        scene.verts[scene.dart_vert[scene.dart_pair[d]]].kind ==
                            Scene::Kind::stub)
                        continue;
                    int g = face[scene.dart_pair[d]];
                    if (seen[g]) continue;
                    seen[g] = true;
                    back[g] = f;
                    via[g] = static_cast<int>(d);
                    queue.push_back(g);
                    if (g == fb) break;
                }
            }
            if (!seen[fb]) throw Error("planarize: dual route not found");
            // Crossed darts from fa's side, in crossing order.
            std::vector<int> crossed;
            for (int f = fb; f != fa; f = back[f]) crossed.push_back(via[f]);
            std::reverse(crossed.begin(), crossed.end());

            // Retire the stubs.
            scene.retire_stub(stub[a]);
            scene.retire_stub(stub[b]);
            int cur = port[a];
            for (int w : crossed) {
                // w is the dart of the crossed edge on the side we come from.
                int pw = scene.dart_pair[w];
                int v = scene.add_vertex(Scene::Kind::virtual_, 4);
                const auto& ps = scene.verts[v].ports;
                // ccw: (path-in, toward w's vertex, path-out, toward pair).
                scene.link(cur, ps[0]);
                scene.link(ps[1], w);
                scene.link(ps[3], pw);
                cur = ps[2];
            }
            scene.link(cur, port[b]);
        }
        drawn[a] = drawn[b] = true;
    };

    // One component at a time, BFS over crossings; edge order is rotated by
    // the seed so different seeds give different routings.
    for (std::uint32_t c0 = 0; c0 < n; ++c0) {
        if (placed[c0]) continue;
        place_crossing(c0);
        std::deque<DartId> agenda;
        for (std::uint32_t s = 0; s < 4; ++s)
            agenda.push_back(make_dart(c0, (s + seed) & 3u));
        while (!agenda.empty()) {
            DartId d = agenda.front();
            agenda.pop_front();
            if (drawn[d]) continue;
            DartId e = m.pair(d);
            if (!placed[owner(e)]) {
                place_crossing(owner(e));
                // New crossing sits in the face holding d's stub: retire
                // stubs and link directly.
                scene.retire_stub(stub[d]);
                scene.retire_stub(stub[e]);
                scene.link(port[d], port[e]);
                drawn[d] = drawn[e] = true;
                for (std::uint32_t s = 0; s < 4; ++s)
                    agenda.push_back(make_dart(owner(e), (s + seed) & 3u));
            } else {
                connect_ports(d, e);
            }
        }
    }

    // Emit: label edges of the scene.
    PlanarizeResult out;
    std::map<int, std::string> edge_label;
    int next_label = 1;
    auto label_of = [&](int dart) {
        int key = std::min(dart, scene.dart_pair[dart]);
        auto it = edge_label.find(key);
        if (it == edge_label.end())
            it = edge_label.emplace(key, "e" + std::to_string(next_label++)).first;
        return it->second;
    };
    for (const auto& v : scene.verts) {
        if (v.dead || v.kind == Scene::Kind::stub) continue;
        PdNode node;
        node.kind = v.kind == Scene::Kind::crossing ? PdNode::Kind::real : PdNode::Kind::virtual_;
        for (int p : v.ports) node.labels.push_back(label_of(p));
        out.document.nodes.push_back(std::move(node));
        if (v.kind == Scene::Kind::virtual_) ++out.virtual_crossings;
    }
    for (std::uint32_t i = 0; i < m.trivial_circle_count(); ++i) {
        PdNode node;
        node.kind = PdNode::Kind::loop;
        node.labels.push_back("c" + std::to_string(next_label++));
        out.document.nodes.push_back(std::move(node));
    }
    return out;
}

inline PdDocument emit_pd(const DoodleMap& m) { return planarize(m).document; }

// Detour-equivalence of virtual diagrams: same Gauss data iff the parsed
// maps agree without any reduction.
inline bool gauss_data_equal(const PdDocument& k1, const PdDocument& k2) {
    return canonical_code(parse_pd(k1), kUnorientedUnordered) ==
           canonical_code(parse_pd(k2), kUnorientedUnordered);
}

// The virtual area number of a virtual doodle equals the genus of the
// associated doodle; the theorem is used as the computation.
inline int virtual_area_number(const PdDocument& k) { return genus_of_doodle(parse_pd(k)); }

// Full R1/R2/VR1-VR4 equivalence of virtual doodle diagrams.
inline bool virtual_doodle_equal(const PdDocument& k1, const PdDocument& k2, Mode mode = {}) {
    return doodle_equal(parse_pd(k1, mode), parse_pd(k2, mode), mode);
}

// ---------------------------------------------------------------------------
// Programmatic detour-move rewrites of PD documents, for tests.

// VR1: inserts a virtual kink on the edge with the given label.
inline PdDocument vr1_insert(const PdDocument& doc, const std::string& label, int counter) {
    PdDocument out = doc;
    std::string fresh = "k" + std::to_string(counter);
    std::string loop = "l" + std::to_string(counter);
    bool first = true;
    for (auto& node : out.nodes) {
        for (auto& l : node.labels) {
            if (l == label && first) {
                l = fresh;
                first = false;
                break;
            }
        }
        if (!first) break;
    }
    if (first) throw Error("vr1_insert: no such edge label");
    PdNode kink;
    kink.kind = PdNode::Kind::virtual_;
    kink.labels = {fresh, loop, loop, label};
    out.nodes.push_back(std::move(kink));
    return out;
}

// VR2: pushes edge `a` across edge `b` with two virtual crossings.
inline PdDocument vr2_insert(const PdDocument& doc, const std::string& a, const std::string& b,
                             int counter) {
    PdDocument out = doc;
    std::string a2 = "p" + std::to_string(counter);
    std::string b2 = "q" + std::to_string(counter);
    std::string am = "r" + std::to_string(counter);
    std::string bm = "s" + std::to_string(counter);
    bool fa = true, fb = true;
    for (auto& node : out.nodes) {
        for (auto& l : node.labels) {
            if (l == a && fa) {
                l = a2;
                fa = false;
            } else if (l == b && fb) {
                l = b2;
                fb = false;
            }
        }
    }
    if (fa || fb) throw Error("vr2_insert: no such edge label");
    PdNode v1, v2;
    v1.kind = v2.kind = PdNode::Kind::virtual_;
    v1.labels = {a2, b2, am, bm};
    v2.labels = {am, bm, a, b};
    out.nodes.push_back(std::move(v1));
    out.nodes.push_back(std::move(v2));
    return out;
}

}  // namespace doodle
