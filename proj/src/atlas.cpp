#include "strata/atlas.hpp"

#include "strata/errors.hpp"
#include "strata/json_io.hpp"
#include "strata/version.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <sstream>

namespace strata {

using exact::Int;

std::string current_timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int Atlas::subsystem_id_of(const Subsystem& mask) const {
    const auto it = std::lower_bound(subsystems.begin(), subsystems.end(), mask);
    if (it != subsystems.end() && *it == mask) return int(it - subsystems.begin());
    return -1;
}

Atlas build_atlas(const TypeSpec& spec, const BuildOptions& opts) {
    Atlas a;
    a.spec = spec;
    a.rs = std::make_shared<RootSystem>(spec);
    a.subsystems = enumerate_subsystems(*a.rs, opts.rank_limit);
    a.partition = conjugacy_classes(*a.rs, a.subsystems);
    a.fine = fine_poset(*a.rs, a.subsystems);
    a.coarse = coarse_poset(*a.rs, a.subsystems, a.partition);
    a.metadata.tool_version = kToolVersion;
    a.metadata.cartan_convention = kCartanConvention;
    a.metadata.generated_at = current_timestamp_utc();
    a.metadata.rank_limit = opts.rank_limit;
    a.checksum = atlas_checksum(a);
    return a;
}

bool ConsistencyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

namespace {

void add_check(ConsistencyReport& rep, std::string name, bool ok, std::string detail = "") {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
}

bool is_partial_order(const std::vector<RootMask>& leq, std::string& why) {
    const std::size_t n = leq.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq[i].test(i)) { why = "not reflexive at " + std::to_string(i); return false; }
        for (std::size_t j = 0; j < n; ++j) {
            if (!leq[i].test(j)) continue;
            if (i != j && leq[j].test(i)) {
                why = "antisymmetry fails on (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return false;
            }
            if (!leq[j].is_subset_of(leq[i])) {
                why = "transitivity fails through " + std::to_string(j);
                return false;
            }
        }
    }
    return true;
}

}  // namespace

ConsistencyReport consistency_check(const Atlas& atlas) {
    ConsistencyReport rep;
    const auto& classes = atlas.classes();
    const Int w = atlas.weyl_order_value();

    // Top and bottom embedding numbers.
    bool top_ok = false, bottom_ok = false;
    for (const auto& c : classes) {
        if (c.representative == atlas.rs->full_mask()) top_ok = (c.embedding_number == 1);
        if (c.representative.none()) bottom_ok = (c.embedding_number == w);
    }
    add_check(rep, "m_top_is_one", top_ok);
    add_check(rep, "m_bottom_is_weyl_order", bottom_ok, "|W| = " + w.str());

    // Per-class factorization m = |W:W_Psi| * orbit and index integrality.
    bool factor_ok = true, integral_ok = true, divides_ok = true;
    for (const auto& c : classes) {
        if (c.embedding_number != c.weyl_index * Int(c.orbit_size)) factor_ok = false;
        const Int w_psi = weyl_order(c.label);
        if (c.weyl_index * w_psi != w) integral_ok = false;
        if (w % Int(c.orbit_size) != 0) divides_ok = false;
    }
    add_check(rep, "embedding_number_factorization", factor_ok);
    add_check(rep, "weyl_index_integrality", integral_ok);
    add_check(rep, "orbit_sizes_divide_weyl_order", divides_ok);

    // Sum over classes of m equals sum over subsystems of the Weyl index.
    Int sum_m = 0, sum_idx = 0;
    for (const auto& c : classes) {
        sum_m += c.embedding_number;
        sum_idx += c.weyl_index * Int(c.members.size());
    }
    add_check(rep, "embedding_sum_matches_weyl_index_sum", sum_m == sum_idx,
              "sum m = " + sum_m.str());

    // Class partition covers every subsystem exactly once, masks distinct.
    std::size_t member_total = 0;
    bool members_ok = true;
    for (const auto& c : classes) {
        member_total += c.members.size();
        if (c.members.size() != c.orbit_size) members_ok = false;
    }
    add_check(rep, "orbit_members_match_sizes", members_ok);
    add_check(rep, "classes_partition_subsystems", member_total == atlas.subsystems.size());
    bool distinct = true;
    for (std::size_t i = 0; i + 1 < atlas.subsystems.size(); ++i)
        if (atlas.subsystems[i] == atlas.subsystems[i + 1]) distinct = false;
    add_check(rep, "subsystem_masks_distinct", distinct);

    // Both stored relations are partial orders.
    std::string why;
    add_check(rep, "fine_leq_is_partial_order", is_partial_order(atlas.fine.leq, why), why);
    why.clear();
    add_check(rep, "coarse_leq_is_partial_order", is_partial_order(atlas.coarse.leq, why), why);

    // Fine order is exactly mask inclusion.
    bool fine_ok = atlas.fine.leq.size() == atlas.subsystems.size();
    for (std::size_t i = 0; fine_ok && i < atlas.subsystems.size(); ++i)
        for (std::size_t j = 0; j < atlas.subsystems.size(); ++j)
            if (atlas.fine.leq[i].test(j) != atlas.subsystems[i].is_subset_of(atlas.subsystems[j])) {
                fine_ok = false;
                break;
            }
    add_check(rep, "fine_order_is_mask_inclusion", fine_ok);

    // Stored covers are the transitive reduction of the stored order.
    try {
        add_check(rep, "fine_covers_are_reduction",
                  atlas.fine.covers == transitive_reduction(atlas.fine.leq));
        add_check(rep, "coarse_covers_are_reduction",
                  atlas.coarse.covers == transitive_reduction(atlas.coarse.leq));
    } catch (const std::invalid_argument& e) {
        add_check(rep, "covers_are_reduction", false, e.what());
    }

    // Every coarse cover edge lifts to a fine inclusion between orbit members.
    bool lift_ok = true;
    for (const auto& [lo, hi] : atlas.coarse.covers) {
        bool found = false;
        for (int m1 : classes[std::size_t(lo)].members) {
            for (int m2 : classes[std::size_t(hi)].members)
                if (atlas.subsystems[std::size_t(m1)].is_subset_of(atlas.subsystems[std::size_t(m2)])) {
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found) lift_ok = false;
    }
    add_check(rep, "coarse_covers_lift_to_fine_inclusions", lift_ok);

    // Diagram layering: cover edges strictly increase dim_top.
    bool dims_fine = true;
    for (const auto& [lo, hi] : atlas.fine.covers)
        if (atlas.fine.level[std::size_t(lo)] >= atlas.fine.level[std::size_t(hi)]) dims_fine = false;
    bool dims_coarse = true;
    for (const auto& [lo, hi] : atlas.coarse.covers)
        if (atlas.coarse.level[std::size_t(lo)] >= atlas.coarse.level[std::size_t(hi)]) dims_coarse = false;
    add_check(rep, "fine_cover_dims_strictly_increase", dims_fine);
    add_check(rep, "coarse_cover_dims_strictly_increase", dims_coarse);

    // Unique maximum and minimum in both posets.
    auto unique_extremes = [](const StratPoset& p) {
        int maxima = 0, minima = 0;
        for (std::size_t i = 0; i < p.size; ++i) {
            bool has_up = false, has_down = false;
            for (std::size_t j = 0; j < p.size; ++j) {
                if (j == i) continue;
                if (p.leq[i].test(j)) has_up = true;
                if (p.leq[j].test(i)) has_down = true;
            }
            if (!has_up) ++maxima;
            if (!has_down) ++minima;
        }
        return maxima == 1 && minima == 1;
    };
    add_check(rep, "fine_poset_unique_extremes",
              atlas.fine.size == 1 || unique_extremes(atlas.fine));
    add_check(rep, "coarse_poset_unique_extremes",
              atlas.coarse.size == 1 || unique_extremes(atlas.coarse));

    return rep;
}

}  // namespace strata
