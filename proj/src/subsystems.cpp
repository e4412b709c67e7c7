#include "strata/subsystems.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace strata {

using exact::Int;
using exact::IntMatrix;
using exact::IntVector;

namespace {

IntVector to_int_vector(const RootVec& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

IntMatrix rows_from_roots(const RootSystem& rs, const std::vector<int>& indices) {
    IntMatrix m(indices.size(), std::size_t(rs.rank()));
    for (std::size_t r = 0; r < indices.size(); ++r) {
        const auto& v = rs.root(indices[r]);
        for (std::size_t j = 0; j < v.size(); ++j) m.at(r, j) = v[j];
    }
    return m;
}

Subsystem closure_of_hnf(const RootSystem& rs, const IntMatrix& h) {
    Subsystem mask(rs.num_roots());
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        if (exact::hnf_contains(h, to_int_vector(rs.root(int(i))))) mask.set(i);
    return mask;
}

}  // namespace

Subsystem closure(const RootSystem& rs, const std::vector<int>& root_indices) {
    if (root_indices.empty()) return rs.empty_mask();
    const auto hnf = exact::hermite_normal_form(rows_from_roots(rs, root_indices));
    return closure_of_hnf(rs, hnf.h);
}

Subsystem closure(const RootSystem& rs, const Subsystem& s) {
    return closure(rs, s.indices());
}

std::vector<Subsystem> enumerate_subsystems(const RootSystem& rs, int rank_limit) {
    if (rs.rank() > rank_limit)
        throw CapabilityError("subsystem enumeration supports total rank <= " +
                              std::to_string(rank_limit) + "; requested " + rs.spec().str() +
                              " has rank " + std::to_string(rs.rank()) +
                              " (raise the rank limit to proceed)");

    const auto positives = rs.positive_roots();
    std::unordered_set<Subsystem> seen;
    std::vector<Subsystem> out;
    auto record = [&](const Subsystem& s) {
        if (seen.insert(s).second) out.push_back(s);
    };
    record(rs.empty_mask());

    // DFS over linearly independent subsets of the positive roots, keeping
    // the HNF of the chosen rows incrementally for the independence check
    // and the closure computation.
    std::vector<int> chosen;
    auto extend = [&](auto&& self, const IntMatrix& hnf_rows, std::size_t next) -> void {
        for (std::size_t k = next; k < positives.size(); ++k) {
            const int cand = positives[k];
            IntMatrix stacked(hnf_rows.rows() + 1, std::size_t(rs.rank()));
            for (std::size_t i = 0; i < hnf_rows.rows(); ++i)
                for (std::size_t j = 0; j < stacked.cols(); ++j)
                    stacked.at(i, j) = hnf_rows.at(i, j);
            const auto& v = rs.root(cand);
            for (std::size_t j = 0; j < stacked.cols(); ++j)
                stacked.at(hnf_rows.rows(), j) = v[j];
            const auto hnf = exact::hermite_normal_form(stacked);
            if (exact::hnf_rank(hnf.h) != hnf_rows.rows() + 1) continue;  // dependent
            record(closure_of_hnf(rs, hnf.h));
            if (hnf_rows.rows() + 1 < std::size_t(rs.rank()))
                self(self, hnf.h, k + 1);
        }
    };
    extend(extend, IntMatrix(0, std::size_t(rs.rank())), 0);

    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subsystem> weyl_orbit(const RootSystem& rs, const Subsystem& psi) {
    std::unordered_set<Subsystem> seen{psi};
    std::deque<Subsystem> queue{psi};
    while (!queue.empty()) {
        Subsystem cur = queue.front();
        queue.pop_front();
        for (const auto& gen : rs.weyl_gens()) {
            Subsystem img = cur.permuted(gen);
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    std::vector<Subsystem> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t subsystem_rank(const RootSystem& rs, const Subsystem& psi) {
    return exact::integer_rank(rows_from_roots(rs, psi.indices()));
}

std::int64_t dim_top(const RootSystem& rs, const Subsystem& psi) {
    return 4 * (std::int64_t(psi.count()) - std::int64_t(subsystem_rank(rs, psi)));
}

namespace {

SubsystemClass make_class(const RootSystem& rs, const Subsystem& rep,
                          std::uint64_t orbit_size) {
    SubsystemClass c;
    c.representative = rep;
    c.orbit_size = orbit_size;
    c.label = identify_type(rs, rep);
    const Int w_phi = weyl_order(rs.spec());
    const Int w_psi = weyl_order(c.label);
    if (w_phi % w_psi != 0)
        throw InternalError("Weyl subgroup order does not divide the ambient order");
    c.weyl_index = w_phi / w_psi;
    c.embedding_number = c.weyl_index * Int(orbit_size);
    c.subsystem_rank = subsystem_rank(rs, rep);
    c.dim_top = 4 * (std::int64_t(rep.count()) - std::int64_t(c.subsystem_rank));
    return c;
}

}  // namespace

ClassPartition conjugacy_classes(const RootSystem& rs,
                                 const std::vector<Subsystem>& subsystems) {
    std::unordered_map<Subsystem, int> id_of;
    id_of.reserve(subsystems.size() * 2);
    for (std::size_t i = 0; i < subsystems.size(); ++i)
        id_of.emplace(subsystems[i], int(i));

    ClassPartition part;
    part.class_of.assign(subsystems.size(), -1);

    std::vector<SubsystemClass> classes;
    for (std::size_t i = 0; i < subsystems.size(); ++i) {
        if (part.class_of[i] >= 0) continue;
        const auto orbit = weyl_orbit(rs, subsystems[i]);
        SubsystemClass c = make_class(rs, orbit.front(), orbit.size());
        for (const auto& member : orbit) {
            const auto it = id_of.find(member);
            if (it == id_of.end())
                throw InternalError("Weyl orbit left the enumerated subsystem list");
            c.members.push_back(it->second);
            part.class_of[std::size_t(it->second)] = int(classes.size());
        }
        std::sort(c.members.begin(), c.members.end());
        classes.push_back(std::move(c));
    }

    // Canonical class ids: (dim_top desc, label, representative mask).
    std::vector<int> order(classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ca = classes[std::size_t(a)];
        const auto& cb = classes[std::size_t(b)];
        if (ca.dim_top != cb.dim_top) return ca.dim_top > cb.dim_top;
        if (ca.label != cb.label) return ca.label.str() < cb.label.str();
        return ca.representative < cb.representative;
    });
    std::vector<int> new_id(classes.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        new_id[std::size_t(order[pos])] = int(pos);

    part.classes.resize(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        classes[i].class_id = new_id[i];
        part.classes[std::size_t(new_id[i])] = std::move(classes[i]);
    }
    for (auto& c : part.class_of) c = new_id[std::size_t(c)];
    return part;
}

exact::Int embedding_number(const RootSystem& rs, const Subsystem& psi) {
    const Int w_phi = weyl_order(rs.spec());
    const Int w_psi = weyl_order(identify_type(rs, psi));
    return (w_phi / w_psi) * Int(weyl_orbit(rs, psi).size());
}

}  // namespace strata
