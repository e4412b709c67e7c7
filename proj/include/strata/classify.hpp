#pragma once

#include "strata/atlas.hpp"
#include "strata/subsystems.hpp"

#include <vector>

namespace strata {

// Support pattern of a point (X, Y): the set of roots alpha with
// (X_alpha, Y_alpha) != (0, 0), plus a flag for nonzero Cartan components
// (the weight-zero part).  Coefficient magnitudes are irrelevant to both the
// stabilizer and the polystability test, so they are never stored; the
// classifier assumes the support arises from an actual point of the variety.
struct PointSupport {
    std::vector<int> support;
    bool has_zero_weight = false;
};

// The stabilizer subsystem Phi(X, Y) = Phi ∩ Span_Z(support): the closure.
Subsystem support_subsystem(const RootSystem& rs, const PointSupport& p);

// Torus polystability: zero lies in the relative interior of the convex hull
// of the weights {alpha in support} ∪ ({0} when the zero weight is present).
bool is_polystable(const RootSystem& rs, const PointSupport& p);

struct StratumAssignment {
    Subsystem fine;   // the stabilizer subsystem
    int subsystem_id; // its index in the atlas
    int class_id;     // its coarse class
};

// Assign a polystable point to its fine and coarse strata.
// Throws NotPolystableError otherwise.
StratumAssignment stratum_of(const Atlas& atlas, const PointSupport& p);

}  // namespace strata
