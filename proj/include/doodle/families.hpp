#pragma once

// Exact generators for the named doodles and families, plus the shipped
// figure fixtures.
//
// Family rotations come from the concentric planar drawings: polygon
// vertices carry slots (forward-along-gon, inward/outward slants, backward)
// in counterclockwise order.  Slot diagrams are documented in
// docs/families.md.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doodle/map.hpp"
#include "doodle/pd_code.hpp"

namespace doodle {

inline DoodleMap hopf() { return DoodleMap::from_pairing(1, {2, 3, 0, 1}); }

inline DoodleMap trivial(std::uint32_t circles) {
    return DoodleMap::from_pairing(0, {}, circles);
}

// Generalized Borromean doodle B_n: two concentric n-gons X, Y joined by
// verticals X_i Y_i and diagonals X_i Y_{i+1}.  B_3 is the Borromean
// doodle, B_4 the poppy.  2n crossings, F_3 = 2n, F_n = 2 (extra), and 3
// components when 3 | n, otherwise 1.
inline DoodleMap borromean(std::uint32_t n) {
    if (n < 3) throw Error("borromean: n >= 3 required");
    auto X = [&](std::uint32_t i, std::uint32_t s) { return make_dart(i % n, s); };
    auto Y = [&](std::uint32_t i, std::uint32_t s) { return make_dart(n + i % n, s); };
    std::vector<DartId> p(static_cast<std::size_t>(2 * n) * 4, kNoDart);
    auto link = [&](DartId a, DartId b) { p[a] = b; p[b] = a; };
    // X_i rotation: (X_{i+1}, Y_{i+1}, Y_i, X_{i-1});
    // Y_i rotation: (X_i, Y_{i+1}, Y_{i-1}, X_{i-1}).
    for (std::uint32_t i = 0; i < n; ++i) {
        link(X(i, 0), X(i + 1, 3));  // outer n-gon
        link(Y(i, 1), Y(i + 1, 2));  // inner n-gon
        link(X(i, 2), Y(i, 0));      // vertical
        link(X(i, 1), Y(i + 1, 3));  // diagonal
    }
    return DoodleMap::from_pairing(2 * n, std::move(p));
}

namespace detail {

// Bicupola skeleton: n-gon A, 2n-gon M, n-gon B with both annuli filled by
// alternating squares and triangles.  gyro abuts squares to triangles
// across the 2n-gon, ortho squares to squares.
inline DoodleMap bicupola(std::uint32_t n, bool gyro) {
    if (n < 3) throw Error("bicupola: n >= 3 required");
    auto A = [&](std::uint32_t i, std::uint32_t s) { return make_dart(i % n, s); };
    auto M = [&](std::uint32_t j, std::uint32_t s) { return make_dart(n + j % (2 * n), s); };
    auto B = [&](std::uint32_t i, std::uint32_t s) { return make_dart(3 * n + i % n, s); };
    std::vector<DartId> p(static_cast<std::size_t>(4 * n) * 4, kNoDart);
    auto link = [&](DartId a, DartId b) { p[a] = b; p[b] = a; };
    // A_i: (A_{i+1}, M_{2i}, M_{2i-1}, A_{i-1})
    // M_j: (A-slant, M_{j+1}, B-slant, M_{j-1})
    // B_i ortho: (M_{2i}, B_{i+1}, B_{i-1}, M_{2i-1})
    // B_i gyro:  (M_{2i}, M_{2i+1}, B_{i+1}, B_{i-1})
    for (std::uint32_t i = 0; i < n; ++i) {
        link(A(i, 0), A(i + 1, 3));          // outer n-gon
        link(A(i, 1), M(2 * i, 0));          // slant down-forward
        link(A(i, 2), M(2 * i + 2 * n - 1, 0));  // slant down-back
    }
    for (std::uint32_t j = 0; j < 2 * n; ++j) link(M(j, 1), M(j + 1, 3));  // middle 2n-gon
    for (std::uint32_t i = 0; i < n; ++i) {
        if (gyro) {
            link(B(i, 2), B(i + 1, 3));          // inner n-gon
            link(B(i, 0), M(2 * i, 2));          // slant up
            link(B(i, 1), M(2 * i + 1, 2));      // slant up-forward
        } else {
            link(B(i, 1), B(i + 1, 2));          // inner n-gon
            link(B(i, 0), M(2 * i, 2));          // slant up
            link(B(i, 3), M(2 * i + 2 * n - 1, 2));  // slant up-back
        }
    }
    return DoodleMap::from_pairing(4 * n, std::move(p));
}

}  // namespace detail

// Gyro C'_n: 4n crossings, F_n = 2 and F_3 = F_4 = 2n; four components
// when 3 | n, otherwise two.
inline DoodleMap gyro(std::uint32_t n) { return detail::bicupola(n, true); }

// Ortho C''_n: same face counts, n+1 components; the central 2n-gon is
// always one of them.
inline DoodleMap ortho(std::uint32_t n) { return detail::bicupola(n, false); }

// Component-table index of the central 2n-gon strand of gyro/ortho maps.
inline std::size_t central_component_index(const DoodleMap& m, std::uint32_t n) {
    for (std::size_t i = 0; i < m.components().size(); ++i) {
        const Component& c = m.components()[i];
        if (c.is_circle()) continue;
        auto orbit = m.strand_orbit(c.rep);
        bool central = orbit.size() == 2 * n;
        for (DartId d : orbit)
            central = central && owner(d) >= n && owner(d) < 3 * n;
        if (central) return i;
    }
    throw Error("central_component_index: no central component");
}

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v{"d3.1"};
        for (int i = 1; i <= 19; ++i) v.push_back("d4." + std::to_string(i));
        v.push_back("kishino");
        v.push_back("fig19");
        v.push_back("fig20");
        return v;
    }();
    return names;
}

// Loads a transcribed figure fixture as a PD document.
inline PdDocument fixture(const std::string& name, const std::string& dir) {
    const auto& names = fixture_names();
    bool known = false;
    for (const auto& n : names) known |= n == name;
    if (!known) throw Error("fixture: unknown name '" + name + "'");
    std::ifstream in(dir + "/" + name + ".pd");
    if (!in) throw Error("fixture: cannot open '" + dir + "/" + name + ".pd'");
    std::stringstream ss;
    ss << in.rdbuf();
    return PdDocument::parse(ss.str());
}

}  // namespace doodle
