// autsearch.hpp — automorphism groups and isomorphisms of 21-point codes.
//
// A permutation of the points is an automorphism of an admissible code as
// soon as it preserves the set of linear words and the set of quadratic
// words, so the search works on those two word sets.  The backtracking maps
// points in order, pruned by per-point and per-pair incidence counts with the
// linear and quadratic words (necessary conditions, so nothing is missed),
// and every surviving leaf is verified against both word sets exactly.
#pragma once

#include <optional>

#include "code21.hpp"
#include "permgroup.hpp"

namespace k3m {

// Full automorphism group (all elements found by the search, returned through
// its generator list; the PermGroup recomputes the order independently).
PermGroup code_automorphisms(const Code21& c);

// Some isomorphism a -> b on the point set, or nullopt.
std::optional<Perm> code_isomorphism(const Code21& a, const Code21& b);

}  // namespace k3m
