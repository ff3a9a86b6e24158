#pragma once

// Canonical labeling of doodle maps.
//
// A connected component is serialized by a breadth-first relabeling from a
// seed dart: crossings are numbered in discovery order, the discovery dart
// of each crossing becomes its local slot 0, and the code lists, for every
// relabeled dart in order, the relabeled dart it is paired with.  The
// canonical form of the component is the lexicographic minimum over all
// admissible seeds.  Rotations are never reflected, so codes separate
// mirror images.
//
// In oriented mode only seeds consistent with the chosen strand directions
// are admissible and each strand contributes a direction bit; in ordered
// mode strand indices are embedded.  Equality of codes decides isomorphism
// under the mode's notion.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "doodle/faces.hpp"
#include "doodle/map.hpp"

namespace doodle {

namespace detail {

// Breadth-first relabeling of the connected component containing `seed`.
struct BfsLabeling {
    static constexpr std::uint32_t kNoLabel = 0xffffffffu;

    std::vector<std::uint32_t> label;  // crossing -> label
    std::vector<DartId> base;          // crossing -> dart playing local slot 0
    std::vector<std::uint32_t> order;  // label -> crossing

    BfsLabeling(const std::vector<DartId>& pairing, std::uint32_t crossings, DartId seed)
        : label(crossings, kNoLabel), base(crossings, 0) {
        label[owner(seed)] = 0;
        base[owner(seed)] = seed;
        order.push_back(owner(seed));
        for (std::uint32_t k = 0; k < order.size(); ++k) {
            const DartId b = base[order[k]];
            for (std::uint32_t j = 0; j < 4; ++j) {
                DartId partner = pairing[(b & ~3u) | ((b + j) & 3u)];
                std::uint32_t c = owner(partner);
                if (label[c] == kNoLabel) {
                    label[c] = static_cast<std::uint32_t>(order.size());
                    base[c] = partner;
                    order.push_back(c);
                }
            }
        }
    }

    bool visited(std::uint32_t crossing) const { return label[crossing] != kNoLabel; }

    std::uint16_t canon(DartId d) const {
        std::uint32_t c = owner(d);
        std::uint32_t j = (slot(d) - slot(base[c])) & 3u;
        return static_cast<std::uint16_t>(label[c] * 4 + j);
    }
};

// Streaming comparison of the BFS code from `seed` against a reference
// sequence, without materializing the code.  Scratch state is reused across
// calls; this is the enumeration hot path.
class BfsCodeComparer {
public:
    explicit BfsCodeComparer(const std::vector<DartId>& pairing)
        : pairing_(pairing),
          label_(pairing.size() / 4, BfsLabeling::kNoLabel),
          base_(pairing.size() / 4, 0) {}

    // -1 / 0 / +1 as code(seed) is lexicographically <, ==, > reference.
    int compare_from(DartId seed, const std::uint16_t* reference, std::size_t len) {
        order_.clear();
        assign(owner(seed), seed);
        int verdict = 0;
        std::size_t pos = 0;
        for (std::uint32_t k = 0; k < order_.size() && verdict == 0; ++k) {
            const DartId b = base_[order_[k]];
            for (std::uint32_t j = 0; j < 4; ++j) {
                DartId partner = pairing_[(b & ~3u) | ((b + j) & 3u)];
                if (label_[owner(partner)] == BfsLabeling::kNoLabel)
                    assign(owner(partner), partner);
                std::uint32_t c = owner(partner);
                std::uint16_t v = static_cast<std::uint16_t>(
                    label_[c] * 4 + ((slot(partner) - slot(base_[c])) & 3u));
                if (pos >= len || v > reference[pos]) {
                    verdict = 1;
                    break;
                }
                if (v < reference[pos]) {
                    verdict = -1;
                    break;
                }
                ++pos;
            }
        }
        for (std::uint32_t c : order_) label_[c] = BfsLabeling::kNoLabel;
        return verdict;
    }

private:
    void assign(std::uint32_t crossing, DartId b) {
        label_[crossing] = static_cast<std::uint32_t>(order_.size());
        base_[crossing] = b;
        order_.push_back(crossing);
    }

    const std::vector<DartId>& pairing_;
    std::vector<std::uint32_t> label_;
    std::vector<DartId> base_;
    std::vector<std::uint32_t> order_;
};

inline void append_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

}  // namespace detail

struct CanonicalCode {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalCode&) const = default;

    // Stable textual rendering used in census files.  Versioned.
    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s = "v1:";
        s.reserve(3 + bytes.size() * 2);
        for (std::uint8_t b : bytes) {
            s.push_back(digits[b >> 4]);
            s.push_back(digits[b & 0xf]);
        }
        return s;
    }
};

inline CanonicalCode canonical_code(const DoodleMap& m, Mode mode) {
    const std::uint32_t nd = m.dart_count();
    const bool oriented = mode.orientation == Orientation::oriented;
    const bool ordered = mode.ordering == Ordering::ordered;

    // Strand id per dart, chosen-direction out-darts, table position per
    // strand.
    std::vector<std::uint32_t> strand_of(nd, 0);
    std::vector<bool> out_dart(nd, false);
    std::vector<std::uint32_t> strand_table_pos;
    for (std::uint32_t i = 0; i < m.components().size(); ++i) {
        const Component& c = m.components()[i];
        if (c.is_circle()) continue;
        std::uint32_t sid = static_cast<std::uint32_t>(strand_table_pos.size());
        for (DartId d : m.strand_orbit(c.rep)) {
            strand_of[d] = sid;
            strand_of[m.pair(d)] = sid;
            out_dart[d] = true;
        }
        strand_table_pos.push_back(i);
    }

    auto comp = detail::crossing_components(m);
    std::uint32_t ncomp = 0;
    for (auto c : comp) ncomp = std::max(ncomp, c + 1);

    std::vector<std::vector<std::uint8_t>> payloads(ncomp);
    for (std::uint32_t mc = 0; mc < ncomp; ++mc) {
        std::vector<std::uint8_t>& best = payloads[mc];
        for (DartId seed = 0; seed < nd; ++seed) {
            if (comp[owner(seed)] != mc) continue;
            if (oriented && !out_dart[seed]) continue;

            detail::BfsLabeling lab(m.pairing(), m.crossing_count(), seed);
            std::vector<std::uint8_t> payload;
            payload.reserve(2 + lab.order.size() * 8);
            detail::append_u16(payload, static_cast<std::uint16_t>(lab.order.size()));
            for (std::uint32_t k = 0; k < lab.order.size(); ++k) {
                const DartId b = lab.base[lab.order[k]];
                for (std::uint32_t j = 0; j < 4; ++j)
                    detail::append_u16(payload, lab.canon(m.pair((b & ~3u) | ((b + j) & 3u))));
            }

            if (oriented || ordered) {
                // Per strand in this component: least canonical dart, the
                // direction bit it witnesses, and the table index.
                struct Mark {
                    std::uint16_t min_dart = 0xffff;
                    bool direction = false;
                    std::uint32_t table_pos = 0;
                };
                std::vector<Mark> marks;
                std::vector<std::uint32_t> sid_at;
                for (DartId d = 0; d < nd; ++d) {
                    if (!lab.visited(owner(d))) continue;
                    std::uint32_t sid = strand_of[d];
                    std::size_t idx = 0;
                    for (; idx < sid_at.size(); ++idx)
                        if (sid_at[idx] == sid) break;
                    if (idx == sid_at.size()) {
                        sid_at.push_back(sid);
                        marks.emplace_back();
                    }
                    std::uint16_t cd = lab.canon(d);
                    if (cd < marks[idx].min_dart) {
                        marks[idx].min_dart = cd;
                        marks[idx].direction = out_dart[d];
                        marks[idx].table_pos = strand_table_pos[sid];
                    }
                }
                std::sort(marks.begin(), marks.end(),
                          [](const Mark& a, const Mark& b) { return a.min_dart < b.min_dart; });
                for (const Mark& s : marks) {
                    if (oriented) payload.push_back(s.direction ? 1 : 0);
                    if (ordered)
                        detail::append_u16(payload, static_cast<std::uint16_t>(s.table_pos));
                }
            }
            if (best.empty() || payload < best) best = std::move(payload);
        }
    }

    // Component order: by least strand table index in ordered mode, by
    // payload bytes otherwise.
    std::vector<std::uint32_t> comp_order(ncomp);
    for (std::uint32_t i = 0; i < ncomp; ++i) comp_order[i] = i;
    if (ordered) {
        std::vector<std::uint32_t> min_pos(ncomp, 0xffffffffu);
        std::vector<std::uint32_t> sid_comp(strand_table_pos.size(), 0);
        for (DartId d = 0; d < nd; ++d) sid_comp[strand_of[d]] = comp[owner(d)];
        for (std::uint32_t sid = 0; sid < strand_table_pos.size(); ++sid)
            min_pos[sid_comp[sid]] = std::min(min_pos[sid_comp[sid]], strand_table_pos[sid]);
        std::sort(comp_order.begin(), comp_order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return min_pos[a] < min_pos[b]; });
    } else {
        std::sort(comp_order.begin(), comp_order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return payloads[a] < payloads[b]; });
    }

    CanonicalCode cc;
    cc.bytes.push_back(static_cast<std::uint8_t>((oriented ? 1 : 0) | (ordered ? 2 : 0)));
    detail::append_u16(cc.bytes, static_cast<std::uint16_t>(ncomp));
    for (std::uint32_t i : comp_order) {
        detail::append_u16(cc.bytes, static_cast<std::uint16_t>(payloads[i].size()));
        cc.bytes.insert(cc.bytes.end(), payloads[i].begin(), payloads[i].end());
    }
    if (ordered) {
        std::vector<std::uint16_t> circles;
        for (std::uint32_t i = 0; i < m.components().size(); ++i)
            if (m.components()[i].is_circle()) circles.push_back(static_cast<std::uint16_t>(i));
        detail::append_u16(cc.bytes, static_cast<std::uint16_t>(circles.size()));
        for (auto i : circles) detail::append_u16(cc.bytes, i);
    } else {
        detail::append_u16(cc.bytes, static_cast<std::uint16_t>(m.trivial_circle_count()));
    }
    return cc;
}

inline CanonicalCode canonical_code(const DoodleMap& m) { return canonical_code(m, m.mode()); }

}  // namespace doodle
