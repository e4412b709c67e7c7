#include "strata/json_io.hpp"

#include "strata/cache.hpp"
#include "strata/corpus.hpp"
#include "strata/errors.hpp"
#include "strata/render.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace strata;

namespace {

Atlas atlas_of(const std::string& type) { return build_atlas(TypeSpec::parse(type)); }

// Minimal DOT checker: tokenizes and validates
//   digraph <id> { (node | edge | attr | rank-group)* }
// and counts node declarations and edges.
struct DotSummary {
    int nodes = 0;
    int edges = 0;
};

DotSummary check_dot(const std::string& text) {
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < text.size();) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c == '"') {
            std::size_t j = i + 1;
            while (j < text.size() && text[j] != '"') ++j;
            REQUIRE_MESSAGE(j < text.size(), "unterminated string");
            tokens.push_back(text.substr(i, j - i + 1));
            i = j + 1;
            continue;
        }
        if (std::string("{}[];=").find(c) != std::string::npos) {
            tokens.emplace_back(1, c);
            ++i;
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            tokens.emplace_back("->");
            i += 2;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
            ++j;
        REQUIRE_MESSAGE(j > i, "unexpected character in DOT output");
        tokens.push_back(text.substr(i, j - i));
        i = j;
    }

    DotSummary sum;
    std::size_t pos = 0;
    auto expect = [&](const std::string& tok) {
        REQUIRE(pos < tokens.size());
        REQUIRE(tokens[pos] == tok);
        ++pos;
    };
    expect("digraph");
    REQUIRE(tokens[pos].front() == '"');
    ++pos;
    expect("{");
    int depth = 1;
    while (pos < tokens.size() && depth > 0) {
        const std::string& t = tokens[pos];
        if (t == "{") { ++depth; ++pos; continue; }
        if (t == "}") { --depth; ++pos; continue; }
        if (t == "rank" || t == "rankdir" || t == "node") {
            // attribute or attr-statement
            ++pos;
            if (tokens[pos] == "=") { pos += 2; }
            else if (tokens[pos] == "[") {
                while (tokens[pos] != "]") ++pos;
                ++pos;
            }
            if (tokens[pos] == ";") ++pos;
            continue;
        }
        // node or edge statement: id [...] ; | id -> id ;
        REQUIRE(std::isalnum(static_cast<unsigned char>(t.front())));
        ++pos;
        if (tokens[pos] == "->") {
            ++pos;
            REQUIRE(std::isalnum(static_cast<unsigned char>(tokens[pos].front())));
            ++pos;
            ++sum.edges;
        } else if (tokens[pos] == "[") {
            while (tokens[pos] != "]") ++pos;
            ++pos;
            ++sum.nodes;
        }
        if (tokens[pos] == ";") ++pos;
    }
    CHECK(depth == 0);
    return sum;
}

}  // namespace

TEST_CASE("atlas JSON schema and round trip preserve the checksum") {
    for (const std::string type : {"A2", "B2", "G2", "B3"}) {
        const auto atlas = atlas_of(type);
        const auto text = atlas_to_json_string(atlas);
        const auto parsed = atlas_from_json_string(text);
        CHECK(parsed.checksum == atlas.checksum);
        CHECK(parsed.spec == atlas.spec);
        CHECK(parsed.subsystems == atlas.subsystems);
        CHECK(parsed.coarse.covers == atlas.coarse.covers);
        CHECK(parsed.fine.covers == atlas.fine.covers);
        CHECK(atlas_checksum(parsed) == atlas.checksum);
    }
}

TEST_CASE("atlas JSON has the stable top-level schema") {
    const auto j = atlas_to_json(atlas_of("A1"));
    for (const char* key : {"schema_version", "spec", "roots", "subsystems", "classes",
                            "fine_poset", "coarse_poset", "metadata", "checksum"})
        CHECK_MESSAGE(j.contains(key), key);
    CHECK(j["schema_version"] == 1);
    // Masks are arrays of sorted root indices.
    for (const auto& s : j["subsystems"]) {
        auto mask = s["mask"].get<std::vector<int>>();
        CHECK(std::is_sorted(mask.begin(), mask.end()));
    }
}

TEST_CASE("payload serialization is deterministic across builds") {
    const auto a1 = atlas_of("G2");
    const auto a2 = atlas_of("G2");
    CHECK(atlas_payload_json(a1).dump() == atlas_payload_json(a2).dump());
    CHECK(a1.checksum == a2.checksum);
}

TEST_CASE("tampered JSON is rejected by the checksum") {
    const auto atlas = atlas_of("B2");
    auto j = atlas_to_json(atlas);
    j["classes"][1]["embedding_number"] = 7;
    CHECK_THROWS_AS((void)atlas_from_json(j), IoError);
}

TEST_CASE("DOT output is well-formed with one node per class and one edge per cover") {
    for (const std::string type : {"A1", "G2", "B3"}) {
        const auto atlas = atlas_of(type);
        const auto sum = check_dot(render_dot(atlas));
        CHECK(sum.nodes == int(atlas.classes().size()));
        CHECK(sum.edges == int(atlas.coarse.covers.size()));

        const auto fine_sum = check_dot(render_dot(atlas, true));
        CHECK(fine_sum.nodes == int(atlas.subsystems.size()));
        CHECK(fine_sum.edges == int(atlas.fine.covers.size()));
    }
}

TEST_CASE("ascii rendering mentions every class label") {
    const auto atlas = atlas_of("G2");
    const auto text = render_ascii(atlas);
    for (const char* label : {"G2", "2A2", "9A1^2", "18A1#0", "18A1#1", "12"})
        CHECK(text.find(label) != std::string::npos);
}

TEST_CASE("corpus loads and matches the computed diagrams") {
    const auto corpus = load_corpus(STRATA_CORPUS_DIR);
    CHECK(corpus.size() == 12);
    for (const auto& expected : corpus) {
        const auto atlas = atlas_of(expected.type);
        const auto match = match_diagram(atlas, expected);
        CHECK_MESSAGE(match.ok, expected.type);
    }
}

TEST_CASE("an injected corpus edge fails verification and is named") {
    auto expected = load_expected_diagram(std::string(STRATA_CORPUS_DIR) + "/G2.json");
    // Claim that both A1 classes sit below the A2 class.
    expected.edges.emplace_back("18A1#0", "2A2");
    const auto atlas = atlas_of("G2");
    const auto match = match_diagram(atlas, expected);
    CHECK_FALSE(match.ok);
    bool named = false;
    for (const auto& d : match.diffs)
        if (d.find("18A1") != std::string::npos && d.find("2A2") != std::string::npos) named = true;
    CHECK(named);
}

TEST_CASE("a missing node count fails verification") {
    auto expected = load_expected_diagram(std::string(STRATA_CORPUS_DIR) + "/B2.json");
    expected.nodes[2].second = 1;  // claim only one 8A1 class
    const auto match = match_diagram(atlas_of("B2"), expected);
    CHECK_FALSE(match.ok);
    CHECK(!match.diffs.empty());
}

TEST_CASE("atlas cache stores and reloads through STRATA_ATLAS_CACHE") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "strata-test-cache";
    fs::remove_all(dir);
    setenv("STRATA_ATLAS_CACHE", dir.c_str(), 1);

    CHECK(atlas_cache_dir() == dir.string());
    const auto spec = TypeSpec::parse("B2");
    CHECK_FALSE(load_cached_atlas(spec).has_value());

    const auto atlas = build_atlas(spec);
    store_cached_atlas(atlas);
    const auto reloaded = load_cached_atlas(spec);
    REQUIRE(reloaded.has_value());
    CHECK(reloaded->checksum == atlas.checksum);

    // A corrupted cache entry is ignored rather than fatal.
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::ofstream out(entry.path());
        out << "{ not json";
    }
    CHECK_FALSE(load_cached_atlas(spec).has_value());

    unsetenv("STRATA_ATLAS_CACHE");
    fs::remove_all(dir);
}
