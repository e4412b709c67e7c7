#pragma once

#include "strata/atlas.hpp"

#include <string>
#include <utility>
#include <vector>

namespace strata {

// A hand-transcribed Hasse diagram: node labels with multiplicities and
// undirected label-pair edges.  Duplicate labels carry "#k" disambiguation
// indices; the matcher searches over label-preserving bijections, so the
// transcription's index assignment can never cause a false failure.
struct ExpectedDiagram {
    std::string type;
    std::vector<std::pair<std::string, int>> nodes;  // (label, multiplicity)
    std::vector<std::pair<std::string, std::string>> edges;
};

ExpectedDiagram load_expected_diagram(const std::string& path);

// All *.json diagrams under the directory, sorted by type name.
std::vector<ExpectedDiagram> load_corpus(const std::string& dir);

struct DiagramMatch {
    bool ok = false;
    std::vector<std::string> diffs;
};

// Node label-multiset equality and edge-set equality up to a
// label-preserving bijection (small backtracking search).
DiagramMatch match_diagram(const Atlas& atlas, const ExpectedDiagram& expected);

}  // namespace strata
