#pragma once

// Face tracing and the Euler-characteristic bookkeeping built on it.
//
// Face convention (fixed; changing it is a breaking change): the successor
// of dart d is rot_back(pair(d)) -- travel the edge from d to its partner,
// then step one slot clockwise at the arriving crossing.  The face lies to
// the left of directed travel.  Face orbits partition the darts and the
// disk closure of the orbits is the ambient surface.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "doodle/map.hpp"

namespace doodle {

inline DartId face_next(const DoodleMap& m, DartId d) { return rot_back(m.pair(d)); }

struct Face {
    std::vector<DartId> darts;  // orbit, starting at its least dart

    std::size_t degree() const { return darts.size(); }
    std::vector<std::uint32_t> corners() const {
        std::vector<std::uint32_t> cs;
        cs.reserve(darts.size());
        for (DartId d : darts) cs.push_back(owner(d));
        return cs;
    }
};

struct SurfaceComponent {
    std::uint32_t vertices = 0;
    std::uint32_t edges = 0;
    std::uint32_t faces = 0;
    int genus = 0;
    bool is_circle_sphere = false;
};

struct FaceVector {
    std::vector<SurfaceComponent> components;     // map components (by least
                                                  // crossing id), then one
                                                  // sphere per trivial circle
    std::map<std::size_t, std::uint32_t> face_counts;  // F_i over dart-faces
    std::uint32_t vertices = 0;
    std::uint32_t edges = 0;
    std::uint32_t faces = 0;  // dart-faces only
    int total_genus = 0;
};

// All face orbits, deterministically ordered by least dart in orbit.
inline std::vector<Face> trace_faces(const DoodleMap& m) {
    std::vector<Face> out;
    std::vector<bool> seen(m.dart_count(), false);
    for (DartId d = 0; d < m.dart_count(); ++d) {
        if (seen[d]) continue;
        Face f;
        DartId e = d;
        do {
            seen[e] = true;
            f.darts.push_back(e);
            e = face_next(m, e);
        } while (e != d);
        out.push_back(std::move(f));
    }
    return out;
}

namespace detail {

// Connected-component label per crossing (two crossings are connected when
// an edge joins them), labels in order of least crossing id.
inline std::vector<std::uint32_t> crossing_components(const DoodleMap& m) {
    const std::uint32_t n = m.crossing_count();
    std::vector<std::uint32_t> comp(n, 0xffffffffu);
    std::uint32_t next = 0;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t c = 0; c < n; ++c) {
        if (comp[c] != 0xffffffffu) continue;
        comp[c] = next;
        stack.push_back(c);
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            for (std::uint32_t s = 0; s < 4; ++s) {
                std::uint32_t w = owner(m.pair(make_dart(v, s)));
                if (comp[w] == 0xffffffffu) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace detail

inline bool is_connected(const DoodleMap& m) {
    if (m.trivial_circle_count() > 0) return m.crossing_count() == 0 && m.trivial_circle_count() == 1;
    if (m.crossing_count() == 0) return false;
    auto comp = detail::crossing_components(m);
    for (auto c : comp)
        if (c != 0) return false;
    return true;
}

inline std::pair<std::vector<Face>, FaceVector> face_trace(const DoodleMap& m) {
    require_valid(m, "face_trace");
    auto faces = trace_faces(m);
    FaceVector fv;
    fv.vertices = m.crossing_count();
    fv.edges = m.edge_count();
    fv.faces = static_cast<std::uint32_t>(faces.size());

    auto comp = detail::crossing_components(m);
    std::uint32_t ncomp = 0;
    for (auto c : comp) ncomp = std::max(ncomp, c + 1);
    fv.components.resize(ncomp);
    for (auto c : comp) ++fv.components[c].vertices;
    for (auto& sc : fv.components) sc.edges = sc.vertices * 2;
    for (const auto& f : faces) {
        ++fv.face_counts[f.degree()];
        ++fv.components[comp[owner(f.darts.front())]].faces;
    }
    for (auto& sc : fv.components) {
        // V - E + F = 2 - 2g with E = 2V
        int chi = static_cast<int>(sc.vertices) - static_cast<int>(sc.edges) +
                  static_cast<int>(sc.faces);
        sc.genus = (2 - chi) / 2;
        fv.total_genus += sc.genus;
    }
    for (std::uint32_t i = 0; i < m.trivial_circle_count(); ++i) {
        SurfaceComponent sphere;
        sphere.faces = 2;
        sphere.is_circle_sphere = true;
        fv.components.push_back(sphere);
    }
    return {std::move(faces), std::move(fv)};
}

// Genus of each connected surface component (crossing-free circles are
// genus-0 spheres) and the total.
struct GenusReport {
    std::vector<int> per_component;
    int total = 0;
};

inline GenusReport genus(const DoodleMap& m) {
    auto [faces, fv] = face_trace(m);
    GenusReport g;
    for (const auto& sc : fv.components) g.per_component.push_back(sc.genus);
    g.total = fv.total_genus;
    return g;
}

inline int euler_characteristic_total(const DoodleMap& m) {
    auto [faces, fv] = face_trace(m);
    int chi = 0;
    for (const auto& sc : fv.components) chi += 2 - 2 * sc.genus;
    return chi;
}

// Level of a diagram in the graph of doodle diagrams: crossings minus the
// Euler characteristic of the ambient surface.  Every collapse move
// strictly decreases it.
inline int level(const DoodleMap& m) {
    return static_cast<int>(m.crossing_count()) - euler_characteristic_total(m);
}

struct IdentityLine {
    long lhs = 0;
    long rhs = 0;
    bool pass = false;
};

struct IdentityReport {
    bool applicable = false;
    std::string reason;
    IdentityLine i1, i2, i3;  // E=2V, F=V+2-2g, V-6+6g = sum (i-3) F_i
    bool all_pass() const { return applicable && i1.pass && i2.pass && i3.pass; }
};

// Evaluates the three minimal-diagram identities.  Applicable only to
// connected, non-trivial, minimal diagrams; anything else is reported, not
// thrown.
inline IdentityReport check_identities(const DoodleMap& m) {
    IdentityReport r;
    if (m.crossing_count() == 0) {
        r.reason = "identities not applicable: no crossings";
        return r;
    }
    if (m.trivial_circle_count() > 0 || !is_connected(m)) {
        r.reason = "identities not applicable: diagram not connected";
        return r;
    }
    auto [faces, fv] = face_trace(m);
    for (const auto& f : faces) {
        if (f.degree() == 1) {
            r.reason = "identities not applicable: diagram has a monogon";
            return r;
        }
        if (f.degree() == 2 && owner(f.darts[0]) != owner(f.darts[1])) {
            r.reason = "identities not applicable: diagram has a bigon";
            return r;
        }
    }
    r.applicable = true;
    const long v = fv.vertices, e = fv.edges, f = fv.faces;
    const long g = fv.total_genus;
    r.i1 = {e, 2 * v, e == 2 * v};
    r.i2 = {f, v + 2 - 2 * g, f == v + 2 - 2 * g};
    long rhs3 = 0;
    for (auto [deg, count] : fv.face_counts)
        if (deg >= 4) rhs3 += static_cast<long>(deg - 3) * count;
    r.i3 = {v - 6 + 6 * g, rhs3, v - 6 + 6 * g == rhs3};
    return r;
}

}  // namespace doodle
