#pragma once

// Combinatorial-map representation of doodle diagrams on closed oriented
// surfaces.
//
// A diagram is a 4-valent graph of transverse crossings together with a
// counterclockwise cyclic order of half-edges (darts) at every crossing.
// Dart ids encode their position: dart 4*c+s is slot s of crossing c, and
// slots 0,1,2,3 read counterclockwise.  The edge pairing is a fixed-point
// free involution on darts; a strand enters a crossing on one dart and
// leaves on the opposite slot (s+2 mod 4).  The ambient surface is never
// stored: it is the disk closure of the face orbits, which quotients away
// handle surgeries and homeomorphisms.
//
// Crossing-free circle components live each on their own 2-sphere and are
// kept as entries of the component table with no darts.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace doodle {

using DartId = std::uint32_t;

inline constexpr DartId kNoDart = 0xffffffffu;

inline constexpr DartId make_dart(std::uint32_t crossing, std::uint32_t s) {
    return (crossing << 2) | (s & 3u);
}
inline constexpr std::uint32_t owner(DartId d) { return d >> 2; }
inline constexpr std::uint32_t slot(DartId d) { return d & 3u; }

// Counterclockwise neighbour in the rotation at the same crossing.
inline constexpr DartId rot(DartId d) { return (d & ~3u) | ((d + 1) & 3u); }
// Clockwise neighbour.
inline constexpr DartId rot_back(DartId d) { return (d & ~3u) | ((d + 3) & 3u); }
// Opposite slot; the strand through a crossing continues there.
inline constexpr DartId opposite(DartId d) { return d ^ 2u; }

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

enum class Orientation : std::uint8_t { unoriented, oriented };
enum class Ordering : std::uint8_t { unordered, ordered };

struct Mode {
    Orientation orientation = Orientation::unoriented;
    Ordering ordering = Ordering::unordered;

    bool operator==(const Mode&) const = default;
};

inline constexpr Mode kUnorientedUnordered{};
inline constexpr Mode kOrientedOrdered{Orientation::oriented, Ordering::ordered};

// One entry of the component table: either a strand, identified by a
// representative dart whose forward orbit fixes the chosen direction, or a
// crossing-free circle.
struct Component {
    DartId rep = kNoDart;

    static Component circle() { return Component{kNoDart}; }
    static Component strand(DartId rep) { return Component{rep}; }
    bool is_circle() const { return rep == kNoDart; }

    bool operator==(const Component&) const = default;
};

class DoodleMap {
public:
    DoodleMap() = default;

    // Builds a map from a pairing and derives the component table
    // deterministically: strands ordered by least dart, directions chosen
    // so the representative is the least dart of the strand, circles last.
    static DoodleMap from_pairing(std::uint32_t crossings, std::vector<DartId> pairing,
                                  std::uint32_t trivial_circles = 0, Mode mode = {}) {
        DoodleMap m;
        m.crossings_ = crossings;
        m.pairing_ = std::move(pairing);
        m.mode_ = mode;
        if (m.pairing_.size() != static_cast<std::size_t>(crossings) * 4)
            throw Error("from_pairing: pairing size != 4*crossings");
        m.components_ = derive_strands(m);
        for (std::uint32_t i = 0; i < trivial_circles; ++i)
            m.components_.push_back(Component::circle());
        return m;
    }

    // Builds a map with an explicit component table (parsers use this to
    // record reading-order directions and line-order indices).
    static DoodleMap with_components(std::uint32_t crossings, std::vector<DartId> pairing,
                                     std::vector<Component> table, Mode mode = {}) {
        DoodleMap m;
        m.crossings_ = crossings;
        m.pairing_ = std::move(pairing);
        m.components_ = std::move(table);
        m.mode_ = mode;
        return m;
    }

    std::uint32_t crossing_count() const { return crossings_; }
    std::uint32_t dart_count() const { return crossings_ * 4; }
    std::uint32_t edge_count() const { return crossings_ * 2; }

    DartId pair(DartId d) const { return pairing_[d]; }
    const std::vector<DartId>& pairing() const { return pairing_; }

    const std::vector<Component>& components() const { return components_; }
    std::uint32_t trivial_circle_count() const {
        std::uint32_t k = 0;
        for (const auto& c : components_) k += c.is_circle();
        return k;
    }
    std::uint32_t strand_count() const {
        return static_cast<std::uint32_t>(components_.size()) - trivial_circle_count();
    }

    Mode mode() const { return mode_; }
    void set_mode(Mode m) { mode_ = m; }

    bool empty() const { return crossings_ == 0 && components_.empty(); }

    // Next outgoing dart along a directed strand traversal.
    DartId strand_next(DartId d) const { return opposite(pairing_[d]); }

    // Outgoing darts of the directed traversal starting at rep.
    std::vector<DartId> strand_orbit(DartId rep) const {
        std::vector<DartId> orbit;
        DartId d = rep;
        do {
            orbit.push_back(d);
            d = strand_next(d);
        } while (d != rep);
        return orbit;
    }

    static DoodleMap disjoint_union(const DoodleMap& a, const DoodleMap& b) {
        DoodleMap m;
        m.crossings_ = a.crossings_ + b.crossings_;
        m.mode_ = a.mode_;
        m.pairing_ = a.pairing_;
        const DartId off = a.dart_count();
        for (DartId d : b.pairing_) m.pairing_.push_back(d + off);
        m.components_ = a.components_;
        for (const auto& c : b.components_)
            m.components_.push_back(c.is_circle() ? c : Component::strand(c.rep + off));
        return m;
    }

private:
    static std::vector<Component> derive_strands(const DoodleMap& m);

    std::uint32_t crossings_ = 0;
    std::vector<DartId> pairing_;
    std::vector<Component> components_;
    Mode mode_;
};

inline std::vector<Component> DoodleMap::derive_strands(const DoodleMap& m) {
    std::vector<Component> out;
    std::vector<bool> seen(m.dart_count(), false);
    for (DartId d = 0; d < m.dart_count(); ++d) {
        if (seen[d]) continue;
        out.push_back(Component::strand(d));
        DartId e = d;
        do {
            seen[e] = true;
            seen[opposite(e)] = true;  // the reverse traversal's out-dart
            e = m.strand_next(e);
        } while (e != d);
    }
    return out;
}

// Checks every structural invariant; one entry per violation.  Violations
// are data, not failures.
inline std::vector<std::string> validate(const DoodleMap& m) {
    std::vector<std::string> bad;
    const std::uint32_t nd = m.dart_count();
    if (m.pairing().size() != nd) {
        bad.push_back("pairing size " + std::to_string(m.pairing().size()) +
                      " != dart count " + std::to_string(nd));
        return bad;
    }
    for (DartId d = 0; d < nd; ++d) {
        DartId p = m.pair(d);
        if (p >= nd) {
            bad.push_back("edge_pairing out of range at dart " + std::to_string(d));
            continue;
        }
        if (p == d) bad.push_back("edge_pairing has fixed point " + std::to_string(d));
        else if (m.pair(p) != d)
            bad.push_back("edge_pairing not an involution at dart " + std::to_string(d));
    }
    if (!bad.empty()) return bad;

    // Component table must list every strand exactly once.
    std::vector<int> strand_id(nd, -1);
    int ns = 0;
    for (DartId d = 0; d < nd; ++d) {
        if (strand_id[d] >= 0) continue;
        DartId e = d;
        do {
            strand_id[e] = ns;
            strand_id[opposite(e)] = ns;
            e = m.strand_next(e);
        } while (e != d);
        ++ns;
    }
    std::vector<int> hits(ns, 0);
    for (std::size_t i = 0; i < m.components().size(); ++i) {
        const Component& c = m.components()[i];
        if (c.is_circle()) continue;
        if (c.rep >= nd) {
            bad.push_back("component " + std::to_string(i) + " has invalid dart");
            continue;
        }
        ++hits[strand_id[c.rep]];
    }
    for (int s = 0; s < ns; ++s) {
        if (hits[s] == 0)
            bad.push_back("strand " + std::to_string(s) + " missing from component table");
        else if (hits[s] > 1)
            bad.push_back("strand " + std::to_string(s) + " listed more than once");
    }
    return bad;
}

inline void require_valid(const DoodleMap& m, const char* where) {
    auto bad = validate(m);
    if (!bad.empty()) throw Error(std::string(where) + ": " + bad.front());
}

// Reverses every rotation cycle (slot order 0,3,2,1).  Mirroring is not a
// doodle equivalence; the surface orientation is part of the data.
inline DoodleMap mirror(const DoodleMap& m) {
    auto flip = [](DartId d) {
        std::uint32_t s = slot(d);
        return make_dart(owner(d), s == 1 ? 3 : s == 3 ? 1 : s);
    };
    std::vector<DartId> p(m.dart_count());
    for (DartId d = 0; d < m.dart_count(); ++d) p[flip(d)] = flip(m.pair(d));
    std::vector<Component> table;
    table.reserve(m.components().size());
    for (const auto& c : m.components())
        table.push_back(c.is_circle() ? c : Component::strand(flip(c.rep)));
    return DoodleMap::with_components(m.crossing_count(), std::move(p), std::move(table), m.mode());
}

namespace detail {

// Rebuilds a map with the crossings in `dead` removed.  Components marked
// in `drop` vanish entirely (their strands must touch only dead crossings);
// every other strand is spliced through the dead crossings it visited.
// Surviving strands left with no crossings become trivial circles.
inline DoodleMap rebuild_without(const DoodleMap& m, const std::vector<bool>& dead,
                                 const std::vector<bool>& drop) {
    const std::uint32_t n = m.crossing_count();
    std::vector<std::uint32_t> remap(n, 0);
    std::uint32_t alive = 0;
    for (std::uint32_t c = 0; c < n; ++c)
        if (!dead[c]) remap[c] = alive++;

    auto remap_dart = [&](DartId d) { return make_dart(remap[owner(d)], slot(d)); };

    std::vector<DartId> pairing(static_cast<std::size_t>(alive) * 4, kNoDart);
    for (DartId d = 0; d < m.dart_count(); ++d) {
        if (dead[owner(d)]) continue;
        DartId w = m.pair(d);
        while (dead[owner(w)]) w = m.pair(opposite(w));
        pairing[remap_dart(d)] = remap_dart(w);
    }

    std::vector<Component> table;
    for (std::size_t i = 0; i < m.components().size(); ++i) {
        const Component& c = m.components()[i];
        if (i < drop.size() && drop[i]) continue;
        if (c.is_circle()) {
            table.push_back(c);
            continue;
        }
        // Find an out-dart of the same directed traversal at a live crossing.
        DartId d = c.rep;
        DartId found = kNoDart;
        do {
            if (!dead[owner(d)]) {
                found = d;
                break;
            }
            d = m.strand_next(d);
        } while (d != c.rep);
        table.push_back(found == kNoDart ? Component::circle()
                                         : Component::strand(remap_dart(found)));
    }
    return DoodleMap::with_components(alive, std::move(pairing), std::move(table), m.mode());
}

}  // namespace detail

// Deletes the indexed component together with every crossing it touches,
// splicing the other strands through each deleted crossing.
inline DoodleMap remove_component(const DoodleMap& m, std::size_t index) {
    if (index >= m.components().size())
        throw Error("remove_component: index out of range");
    std::vector<bool> drop(m.components().size(), false);
    drop[index] = true;
    const Component& c = m.components()[index];
    std::vector<bool> dead(m.crossing_count(), false);
    if (!c.is_circle())
        for (DartId d : m.strand_orbit(c.rep)) dead[owner(d)] = true;
    return detail::rebuild_without(m, dead, drop);
}

}  // namespace doodle
