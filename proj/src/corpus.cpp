#include "strata/corpus.hpp"

#include "strata/errors.hpp"
#include "strata/poset.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace strata {

using nlohmann::json;

ExpectedDiagram load_expected_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open corpus file: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw IoError("malformed corpus file: " + path);
    try {
        ExpectedDiagram d;
        d.type = j.at("type").get<std::string>();
        for (const auto& n : j.at("nodes"))
            d.nodes.emplace_back(n.at(0).get<std::string>(), n.at(1).get<int>());
        for (const auto& e : j.at("edges"))
            d.edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
        return d;
    } catch (const json::exception& e) {
        throw IoError("malformed corpus file " + path + ": " + e.what());
    }
}

std::vector<ExpectedDiagram> load_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<ExpectedDiagram> out;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw IoError("corpus directory not found: " + dir);
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".json")
            out.push_back(load_expected_diagram(entry.path().string()));
    }
    std::sort(out.begin(), out.end(),
              [](const ExpectedDiagram& a, const ExpectedDiagram& b) { return a.type < b.type; });
    if (out.empty()) throw IoError("no corpus files in " + dir);
    return out;
}

namespace {

// Split "18A1#1" into base label and copy index (-1 when absent).
std::pair<std::string, int> split_ref(const std::string& ref) {
    const auto pos = ref.rfind('#');
    if (pos == std::string::npos) return {ref, -1};
    return {ref.substr(0, pos), std::stoi(ref.substr(pos + 1))};
}

}  // namespace

DiagramMatch match_diagram(const Atlas& atlas, const ExpectedDiagram& expected) {
    DiagramMatch result;

    // 1. Node label multisets.
    std::map<std::string, int> expected_counts;
    for (const auto& [label, count] : expected.nodes) expected_counts[label] += count;
    std::map<std::string, std::vector<int>> computed;  // label -> class ids
    for (const auto& c : atlas.classes()) computed[node_label(c)].push_back(c.class_id);

    bool nodes_ok = true;
    for (const auto& [label, count] : expected_counts) {
        const auto it = computed.find(label);
        const int have = it == computed.end() ? 0 : int(it->second.size());
        if (have != count) {
            nodes_ok = false;
            result.diffs.push_back("node '" + label + "': expected x" + std::to_string(count) +
                                   ", computed x" + std::to_string(have));
        }
    }
    for (const auto& [label, ids] : computed)
        if (!expected_counts.count(label)) {
            nodes_ok = false;
            result.diffs.push_back("unexpected computed node '" + label + "' x" +
                                   std::to_string(ids.size()));
        }
    if (!nodes_ok) return result;

    // 2. Expected edges as pairs of (label, copy) keys.
    using Key = std::pair<std::string, int>;
    std::set<std::pair<Key, Key>> expected_edges;
    for (const auto& [a, b] : expected.edges) {
        auto ka = split_ref(a);
        auto kb = split_ref(b);
        for (auto* k : {&ka, &kb}) {
            const int total = expected_counts.at(k->first);
            if (k->second < 0) {
                if (total != 1)
                    throw IoError("corpus edge endpoint '" + k->first + "' is ambiguous in " +
                                  expected.type);
                k->second = 0;
            }
            if (k->second >= total)
                throw IoError("corpus edge endpoint '" + k->first + "#" +
                              std::to_string(k->second) + "' out of range in " + expected.type);
        }
        expected_edges.insert(std::minmax(ka, kb));
    }

    // 3. Search label-preserving bijections copy-index -> class id.
    std::vector<std::pair<std::string, std::vector<int>>> groups(computed.begin(), computed.end());
    std::map<std::string, std::vector<int>> assignment;  // label -> perm (copy k -> ids[perm[k]])
    for (auto& [label, ids] : groups) {
        std::vector<int> perm(ids.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
        assignment[label] = perm;
    }

    auto edges_under = [&]() {
        std::set<std::pair<Key, Key>> got;
        std::map<int, Key> key_of;
        for (const auto& [label, ids] : groups) {
            const auto& perm = assignment[label];
            for (std::size_t k = 0; k < ids.size(); ++k)
                key_of[ids[std::size_t(perm[k])]] = Key{label, int(k)};
        }
        for (const auto& [lo, hi] : atlas.coarse.covers)
            got.insert(std::minmax(key_of.at(lo), key_of.at(hi)));
        return got;
    };

    bool matched = false;
    auto search = [&](auto&& self, std::size_t g) -> void {
        if (matched) return;
        if (g == groups.size()) {
            if (edges_under() == expected_edges) matched = true;
            return;
        }
        auto& perm = assignment[groups[g].first];
        std::sort(perm.begin(), perm.end());
        do {
            self(self, g + 1);
            if (matched) return;
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    search(search, 0);

    if (matched) {
        result.ok = true;
        return result;
    }

    // Report the discrepancy under the identity assignment.
    for (auto& [label, perm] : assignment)
        std::sort(perm.begin(), perm.end());
    const auto got = edges_under();
    auto fmt = [&](const std::pair<Key, Key>& e) {
        auto one = [&](const Key& k) {
            const bool dup = expected_counts.at(k.first) > 1;
            return dup ? k.first + "#" + std::to_string(k.second) : k.first;
        };
        return one(e.first) + " -- " + one(e.second);
    };
    for (const auto& e : expected_edges)
        if (!got.count(e)) result.diffs.push_back("missing edge " + fmt(e));
    for (const auto& e : got)
        if (!expected_edges.count(e)) result.diffs.push_back("extra edge " + fmt(e));
    if (result.diffs.empty())
        result.diffs.push_back("edge sets differ under every label-preserving bijection");
    return result;
}

}  // namespace strata
