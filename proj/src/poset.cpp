#include "strata/poset.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace strata {

std::vector<std::pair<int, int>> transitive_reduction(const std::vector<RootMask>& leq) {
    const std::size_t n = leq.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq[i].test(i))
            throw std::invalid_argument("transitive_reduction: relation is not reflexive");
        for (std::size_t j = 0; j < n; ++j) {
            if (!leq[i].test(j)) continue;
            if (i != j && leq[j].test(i))
                throw std::invalid_argument("transitive_reduction: cycle (antisymmetry fails)");
            if (!leq[j].is_subset_of(leq[i]))
                throw std::invalid_argument("transitive_reduction: relation is not transitive");
        }
    }
    // Down-sets, for the interval test.
    std::vector<RootMask> geq(n, RootMask(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (leq[i].test(j)) geq[j].set(i);

    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !leq[i].test(j)) continue;
            RootMask between = leq[i] & geq[j];
            between.reset(i);
            between.reset(j);
            if (between.none()) covers.emplace_back(int(i), int(j));
        }
    std::sort(covers.begin(), covers.end());
    return covers;
}

StratPoset fine_poset(const RootSystem& rs, const std::vector<Subsystem>& subsystems) {
    StratPoset p;
    p.size = subsystems.size();
    p.leq.assign(p.size, RootMask(p.size));
    for (std::size_t i = 0; i < p.size; ++i)
        for (std::size_t j = 0; j < p.size; ++j)
            if (subsystems[i].is_subset_of(subsystems[j])) p.leq[i].set(j);
    p.covers = transitive_reduction(p.leq);
    p.level.reserve(p.size);
    for (const auto& s : subsystems) p.level.push_back(dim_top(rs, s));
    return p;
}

bool coarse_leq(const std::vector<Subsystem>& subsystems, const ClassPartition& part,
                int c1, int c2) {
    const auto& rep2 = part.classes[std::size_t(c2)].representative;
    for (int member : part.classes[std::size_t(c1)].members)
        if (subsystems[std::size_t(member)].is_subset_of(rep2)) return true;
    return false;
}

StratPoset coarse_poset(const RootSystem&, const std::vector<Subsystem>& subsystems,
                        const ClassPartition& part) {
    StratPoset p;
    p.size = part.classes.size();
    p.leq.assign(p.size, RootMask(p.size));
    for (std::size_t i = 0; i < p.size; ++i)
        for (std::size_t j = 0; j < p.size; ++j)
            if (coarse_leq(subsystems, part, int(i), int(j))) p.leq[i].set(j);
    p.covers = transitive_reduction(p.leq);
    p.level.reserve(p.size);
    for (const auto& c : part.classes) p.level.push_back(c.dim_top);
    return p;
}

std::string node_label(const SubsystemClass& c) {
    if (c.label.trivial()) return c.embedding_number.str();
    if (c.embedding_number == 1) return c.label.str();
    return c.embedding_number.str() + c.label.str();
}

std::vector<std::string> display_labels(const std::vector<SubsystemClass>& classes) {
    std::map<std::string, int> total;
    for (const auto& c : classes) ++total[node_label(c)];
    std::map<std::string, int> seen;
    std::vector<std::string> out;
    out.reserve(classes.size());
    for (const auto& c : classes) {
        std::string base = node_label(c);
        if (total[base] > 1)
            out.push_back(base + "#" + std::to_string(seen[base]++));
        else
            out.push_back(base);
    }
    return out;
}

}  // namespace strata
