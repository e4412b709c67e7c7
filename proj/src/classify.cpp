#include "strata/classify.hpp"

#include "strata/errors.hpp"

#include <stdexcept>

namespace strata {

namespace {

void validate_support(const RootSystem& rs, const PointSupport& p) {
    for (int i : p.support)
        if (i < 0 || std::size_t(i) >= rs.num_roots())
            throw ParseError("support index " + std::to_string(i) + " out of range (0.." +
                             std::to_string(rs.num_roots() - 1) + ")");
}

}  // namespace

Subsystem support_subsystem(const RootSystem& rs, const PointSupport& p) {
    validate_support(rs, p);
    return closure(rs, p.support);
}

bool is_polystable(const RootSystem& rs, const PointSupport& p) {
    validate_support(rs, p);
    std::vector<exact::IntVector> weights;
    weights.reserve(p.support.size() + 1);
    for (int i : p.support) {
        const auto& v = rs.root(i);
        exact::IntVector w(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) w[k] = v[k];
        weights.push_back(std::move(w));
    }
    if (p.has_zero_weight)
        weights.emplace_back(std::size_t(rs.rank()), exact::Int(0));
    if (weights.empty()) {
        // Empty support and no Cartan component: no weights at all, which is
        // the zero point; its orbit is trivially closed.
        return true;
    }
    return exact::zero_in_relative_interior(weights);
}

StratumAssignment stratum_of(const Atlas& atlas, const PointSupport& p) {
    if (!is_polystable(*atlas.rs, p))
        throw NotPolystableError("point not polystable; no stratum assigned");
    StratumAssignment out;
    out.fine = support_subsystem(*atlas.rs, p);
    out.subsystem_id = atlas.subsystem_id_of(out.fine);
    if (out.subsystem_id < 0)
        throw InternalError("stabilizer subsystem missing from the atlas");
    out.class_id = atlas.partition.class_of[std::size_t(out.subsystem_id)];
    return out;
}

}  // namespace strata
