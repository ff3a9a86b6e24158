#pragma once

// Top-level doodle equality and genus, through reduction to the unique
// minimal diagram.

#include "doodle/canonical.hpp"
#include "doodle/moves.hpp"

namespace doodle {

// Complete decision procedure for doodle equivalence: reduce both diagrams
// and compare canonical codes under the given mode.
inline bool doodle_equal(const DoodleMap& a, const DoodleMap& b, Mode mode = {}) {
    require_valid(a, "doodle_equal");
    require_valid(b, "doodle_equal");
    return canonical_code(reduced(a), mode) == canonical_code(reduced(b), mode);
}

// The genus of a doodle is the genus of its unique minimal diagram.
inline int genus_of_doodle(const DoodleMap& m) {
    require_valid(m, "genus_of_doodle");
    return genus(reduced(m)).total;
}

// A doodle is trivial iff its minimal diagram has no crossings.
inline bool is_trivial_doodle(const DoodleMap& m) {
    require_valid(m, "is_trivial_doodle");
    return reduced(m).crossing_count() == 0;
}

}  // namespace doodle
