#include "strata/render.hpp"

#include "strata/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace strata {

namespace {

struct NodeView {
    std::vector<std::string> labels;
    const StratPoset* poset;
    char id_prefix;
};

NodeView make_view(const Atlas& atlas, bool fine) {
    NodeView v;
    if (fine) {
        v.poset = &atlas.fine;
        v.id_prefix = 's';
        for (std::size_t i = 0; i < atlas.subsystems.size(); ++i) {
            const int cls = atlas.partition.class_of[i];
            const auto& label = atlas.classes()[std::size_t(cls)].label;
            v.labels.push_back("s" + std::to_string(i) + ":" +
                               (label.trivial() ? "0" : label.str()));
        }
    } else {
        v.poset = &atlas.coarse;
        v.id_prefix = 'c';
        v.labels = display_labels(atlas.classes());
    }
    return v;
}

// Levels in descending dim order, nodes within a level by id.
std::map<std::int64_t, std::vector<int>, std::greater<>> levels_of(const StratPoset& p) {
    std::map<std::int64_t, std::vector<int>, std::greater<>> levels;
    for (std::size_t i = 0; i < p.size; ++i) levels[p.level[i]].push_back(int(i));
    return levels;
}

}  // namespace

std::string render_dot(const Atlas& atlas, bool fine) {
    const NodeView v = make_view(atlas, fine);
    std::ostringstream os;
    os << "digraph \"" << atlas.spec.str() << (fine ? " fine" : "") << "\" {\n";
    os << "  rankdir = BT;\n";
    os << "  node [shape = none];\n";
    for (const auto& [dim, nodes] : levels_of(*v.poset)) {
        os << "  { rank = same;";
        for (int n : nodes)
            os << " " << v.id_prefix << n << " [label = \"" << v.labels[std::size_t(n)] << "\"];";
        os << " }\n";
    }
    for (const auto& [lo, hi] : v.poset->covers)
        os << "  " << v.id_prefix << lo << " -> " << v.id_prefix << hi << ";\n";
    os << "}\n";
    return os.str();
}

std::string render_ascii(const Atlas& atlas, bool fine) {
    const NodeView v = make_view(atlas, fine);
    std::ostringstream os;
    os << "atlas " << atlas.spec.str() << ": " << atlas.rs->num_roots() << " roots, |W| = "
       << atlas.weyl_order_value().str() << ", " << atlas.subsystems.size() << " subsystems, "
       << atlas.classes().size() << " classes\n";
    os << (fine ? "fine" : "coarse") << " Hasse diagram (" << v.poset->size << " nodes, "
       << v.poset->covers.size() << " cover edges)\n";
    for (const auto& [dim, nodes] : levels_of(*v.poset)) {
        os << "  dim " << dim << ":";
        for (int n : nodes) os << "  " << v.labels[std::size_t(n)];
        os << "\n";
    }
    os << "covers (lower -> higher):\n";
    for (const auto& [lo, hi] : v.poset->covers)
        os << "  " << v.labels[std::size_t(lo)] << " -> " << v.labels[std::size_t(hi)] << "\n";
    return os.str();
}

}  // namespace strata
