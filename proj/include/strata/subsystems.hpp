#pragma once

#include "strata/exact.hpp"
#include "strata/mask.hpp"
#include "strata/root_system.hpp"

#include <vector>

namespace strata {

// A root subsystem, stored as a bit mask over the root indices of one
// ambient RootSystem.  Invariants: symmetric (closed under negation),
// closed under addition-within-Phi, and saturated: (Span_Z Psi) ∩ Phi = Psi.
using Subsystem = RootMask;

// Smallest root subsystem containing the given roots:
// (Span_Z S) ∩ Phi, computed by HNF plus lattice membership per root.
Subsystem closure(const RootSystem& rs, const std::vector<int>& root_indices);
Subsystem closure(const RootSystem& rs, const Subsystem& s);

inline constexpr int kDefaultRankLimit = 4;

// The complete duplicate-free list of root subsystems, in canonical mask
// order.  Candidates are closures of linearly independent subsets of the
// positive roots of size <= rank; completeness holds because every subsystem
// is the closure of its simple system, whose elements can be replaced by
// their negatives without changing the integer span.
// Throws CapabilityError when rank(rs) exceeds rank_limit.
std::vector<Subsystem> enumerate_subsystems(const RootSystem& rs,
                                            int rank_limit = kDefaultRankLimit);

// Full W-orbit of psi, by BFS over the simple-reflection generators acting
// on masks.  Sorted canonically.
std::vector<Subsystem> weyl_orbit(const RootSystem& rs, const Subsystem& psi);

struct SubsystemClass {
    int class_id = 0;
    Subsystem representative;        // canonically smallest mask in the orbit
    std::vector<int> members;        // subsystem ids of the orbit, ascending
    std::uint64_t orbit_size = 0;
    exact::Int weyl_index;           // |W_Phi : W_Psi|
    exact::Int embedding_number;     // weyl_index * orbit_size
    TypeLabel label;
    std::int64_t dim_top = 0;        // 4 (|Psi| - rk Psi)
    std::size_t subsystem_rank = 0;  // rk Psi
};

struct ClassPartition {
    std::vector<SubsystemClass> classes;  // ordered by class_id
    std::vector<int> class_of;            // subsystem id -> class_id
};

// Partition the subsystems into W-orbits and compute the class data.
// class_ids are assigned by (dim_top desc, label, representative mask).
ClassPartition conjugacy_classes(const RootSystem& rs,
                                 const std::vector<Subsystem>& subsystems);

// |W_Phi : W_Psi| * |orbit of Psi|.
exact::Int embedding_number(const RootSystem& rs, const Subsystem& psi);

// 4 (|Psi| - rk Psi): real dimension of the top stratum of the subsystem's
// own moduli space.
std::int64_t dim_top(const RootSystem& rs, const Subsystem& psi);

std::size_t subsystem_rank(const RootSystem& rs, const Subsystem& psi);

}  // namespace strata
