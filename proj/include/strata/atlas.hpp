#pragma once

#include "strata/poset.hpp"
#include "strata/root_system.hpp"
#include "strata/subsystems.hpp"

#include <memory>
#include <string>
#include <vector>

namespace strata {

struct AtlasMetadata {
    std::string tool_version;
    std::string cartan_convention;
    std::string generated_at;  // ISO 8601 UTC; excluded from the checksum
    int rank_limit = kDefaultRankLimit;
};

// The full computed record for one Lie type: the persistence unit.
struct Atlas {
    TypeSpec spec;
    std::shared_ptr<const RootSystem> rs;
    std::vector<Subsystem> subsystems;
    ClassPartition partition;
    StratPoset fine;
    StratPoset coarse;
    AtlasMetadata metadata;
    std::string checksum;  // over the mathematical payload only

    const std::vector<SubsystemClass>& classes() const { return partition.classes; }
    exact::Int weyl_order_value() const { return weyl_order(spec); }
    int subsystem_id_of(const Subsystem& mask) const;  // -1 when absent
};

struct BuildOptions {
    int rank_limit = kDefaultRankLimit;
};

Atlas build_atlas(const TypeSpec& spec, const BuildOptions& opts = {});

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ConsistencyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

// Structural self-checks on a (possibly deserialized) atlas: embedding
// numbers factor and sum correctly, both posets are genuine partial orders
// with the stated orders, coarse covers lift to fine inclusions, and cover
// edges strictly increase dimension.
ConsistencyReport consistency_check(const Atlas& atlas);

std::string current_timestamp_utc();

}  // namespace strata
