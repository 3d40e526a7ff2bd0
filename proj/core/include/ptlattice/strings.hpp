#pragma once

#include <vector>

#include "ptlattice/representation.hpp"
#include "ptlattice/walk.hpp"

namespace ptl {

// All canonical strings, trivial ones included, sorted. Throws
// NotStringAlgebra, or BandPresent naming the band found.
std::vector<StringWalk> enumerate_strings(const BoundQuiverAlgebra& a);

// One basis vector per visited vertex, identity entries along the letters.
Representation string_to_module(const AlgebraPtr& a, Field f, const StringWalk& w);

}  // namespace ptl
