#include "strata/json_io.hpp"

#include "strata/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <limits>

namespace strata {

using exact::Int;
using nlohmann::json;

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::int64_t to_int64(const Int& v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < 0)
        throw IoError(std::string("value of ") + what + " does not fit the JSON integer range");
    return std::int64_t(v);
}

json covers_json(const StratPoset& p) {
    json edges = json::array();
    for (const auto& [lo, hi] : p.covers) edges.push_back({lo, hi});
    return edges;
}

json poset_json(const StratPoset& p) {
    json nodes = json::array();
    for (std::size_t i = 0; i < p.size; ++i) nodes.push_back(int(i));
    return json{{"nodes", nodes}, {"covers", covers_json(p)}, {"levels", p.level}};
}

}  // namespace

json atlas_payload_json(const Atlas& atlas) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["spec"] = atlas.spec.str();

    json roots = json::array();
    for (const auto& r : atlas.rs->roots()) roots.push_back(r);
    j["roots"] = roots;

    json subs = json::array();
    for (std::size_t i = 0; i < atlas.subsystems.size(); ++i)
        subs.push_back(json{{"id", int(i)},
                            {"mask", atlas.subsystems[i].indices()},
                            {"class", atlas.partition.class_of[i]}});
    j["subsystems"] = subs;

    json classes = json::array();
    for (const auto& c : atlas.classes()) {
        classes.push_back(json{{"id", c.class_id},
                               {"label", c.label.str()},
                               {"node_label", node_label(c)},
                               {"representative", c.members.front()},
                               {"members", c.members},
                               {"orbit_size", c.orbit_size},
                               {"weyl_index", to_int64(c.weyl_index, "weyl_index")},
                               {"embedding_number", to_int64(c.embedding_number, "embedding_number")},
                               {"rank", c.subsystem_rank},
                               {"dim_top", c.dim_top}});
    }
    j["classes"] = classes;

    j["fine_poset"] = poset_json(atlas.fine);
    j["coarse_poset"] = poset_json(atlas.coarse);
    return j;
}

std::string atlas_checksum(const Atlas& atlas) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(atlas_payload_json(atlas).dump())));
    return std::string("fnv1a64:") + buf;
}

json atlas_to_json(const Atlas& atlas) {
    json j = atlas_payload_json(atlas);
    j["metadata"] = json{{"tool_version", atlas.metadata.tool_version},
                         {"cartan_convention", atlas.metadata.cartan_convention},
                         {"generated_at", atlas.metadata.generated_at},
                         {"rank_limit", atlas.metadata.rank_limit}};
    j["checksum"] = atlas.checksum;
    return j;
}

std::string atlas_to_json_string(const Atlas& atlas) {
    return atlas_to_json(atlas).dump(1) + "\n";
}

namespace {

StratPoset poset_from_json(const json& j, std::size_t expected_nodes) {
    StratPoset p;
    p.size = j.at("nodes").size();
    if (p.size != expected_nodes) throw IoError("poset node count mismatch");
    p.level = j.at("levels").get<std::vector<std::int64_t>>();
    if (p.level.size() != p.size) throw IoError("poset level count mismatch");
    for (const auto& e : j.at("covers"))
        p.covers.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    // The order relation is the reflexive-transitive closure of the covers.
    p.leq.assign(p.size, RootMask(p.size));
    for (std::size_t i = 0; i < p.size; ++i) p.leq[i].set(i);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [lo, hi] : p.covers) {
            RootMask merged = p.leq[std::size_t(lo)] | p.leq[std::size_t(hi)];
            if (!(merged == p.leq[std::size_t(lo)])) {
                p.leq[std::size_t(lo)] = merged;
                changed = true;
            }
        }
    }
    return p;
}

}  // namespace

Atlas atlas_from_json(const json& j) {
    try {
        if (j.at("schema_version").get<int>() != kSchemaVersion)
            throw IoError("unsupported schema_version");
        Atlas a;
        a.spec = TypeSpec::parse(j.at("spec").get<std::string>());
        a.rs = std::make_shared<RootSystem>(a.spec);

        const auto roots = j.at("roots").get<std::vector<RootVec>>();
        if (roots != a.rs->roots())
            throw IoError("stored roots disagree with the rebuilt root system");

        const auto& subs = j.at("subsystems");
        a.subsystems.reserve(subs.size());
        a.partition.class_of.reserve(subs.size());
        for (const auto& s : subs) {
            a.subsystems.push_back(
                RootMask::from_indices(a.rs->num_roots(), s.at("mask").get<std::vector<int>>()));
            a.partition.class_of.push_back(s.at("class").get<int>());
        }

        for (const auto& c : j.at("classes")) {
            SubsystemClass sc;
            sc.class_id = c.at("id").get<int>();
            sc.members = c.at("members").get<std::vector<int>>();
            for (int m : sc.members)
                if (m < 0 || std::size_t(m) >= a.subsystems.size())
                    throw IoError("class member out of range");
            sc.representative = a.subsystems[std::size_t(sc.members.front())];
            sc.orbit_size = c.at("orbit_size").get<std::uint64_t>();
            sc.weyl_index = Int(c.at("weyl_index").get<std::int64_t>());
            sc.embedding_number = Int(c.at("embedding_number").get<std::int64_t>());
            sc.label = identify_type(*a.rs, sc.representative);
            if (sc.label.str() != c.at("label").get<std::string>())
                throw IoError("stored class label disagrees with the recomputed type");
            sc.subsystem_rank = c.at("rank").get<std::size_t>();
            sc.dim_top = c.at("dim_top").get<std::int64_t>();
            a.partition.classes.push_back(std::move(sc));
        }

        a.fine = poset_from_json(j.at("fine_poset"), a.subsystems.size());
        a.coarse = poset_from_json(j.at("coarse_poset"), a.partition.classes.size());

        const auto& meta = j.at("metadata");
        a.metadata.tool_version = meta.at("tool_version").get<std::string>();
        a.metadata.cartan_convention = meta.at("cartan_convention").get<std::string>();
        a.metadata.generated_at = meta.at("generated_at").get<std::string>();
        a.metadata.rank_limit = meta.at("rank_limit").get<int>();

        a.checksum = j.at("checksum").get<std::string>();
        if (a.checksum != atlas_checksum(a))
            throw IoError("checksum mismatch: atlas payload was modified");
        return a;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed atlas JSON: ") + e.what());
    }
}

Atlas atlas_from_json_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError("malformed atlas JSON: parse failed");
    return atlas_from_json(j);
}

}  // namespace strata
