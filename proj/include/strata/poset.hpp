#pragma once

#include "strata/mask.hpp"
#include "strata/subsystems.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace strata {

// A finite poset with its order relation, transitive reduction and a
// per-node level used for diagram layering.
struct StratPoset {
    std::size_t size = 0;
    std::vector<RootMask> leq;               // leq[i] = up-set of i (includes i)
    std::vector<std::pair<int, int>> covers; // (lower, higher), sorted
    std::vector<std::int64_t> level;         // dim_top per node
};

// Cover edges of a partial order given by its up-sets.
// Throws std::invalid_argument when leq is not a partial order
// (e.g. a cycle makes antisymmetry fail).
std::vector<std::pair<int, int>> transitive_reduction(const std::vector<RootMask>& leq);

// Nodes are subsystems, ordered by mask inclusion.
StratPoset fine_poset(const RootSystem& rs, const std::vector<Subsystem>& subsystems);

// True iff some Weyl image of c1's representative is contained in c2's:
// the conjugate-inclusion order on classes, checked by scanning the orbit.
bool coarse_leq(const std::vector<Subsystem>& subsystems, const ClassPartition& part,
                int c1, int c2);

// Nodes are conjugacy classes, ordered by conjugate inclusion.
StratPoset coarse_poset(const RootSystem& rs, const std::vector<Subsystem>& subsystems,
                        const ClassPartition& part);

// "mL" rendering: m omitted when 1, bare m when the label is trivial.
std::string node_label(const SubsystemClass& c);

// node_label plus "#k" suffixes distinguishing classes that share a label,
// numbered by class_id.
std::vector<std::string> display_labels(const std::vector<SubsystemClass>& classes);

}  // namespace strata
