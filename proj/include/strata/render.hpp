#pragma once

#include "strata/atlas.hpp"

#include <string>

namespace strata {

// Directed DOT graph: one node per class (or subsystem when fine), one edge
// per cover drawn lower -> higher, one same-rank group per dim_top value.
std::string render_dot(const Atlas& atlas, bool fine = false);

// Level-sorted node/edge listing.
std::string render_ascii(const Atlas& atlas, bool fine = false);

}  // namespace strata
