#include "strata/cache.hpp"

#include "strata/errors.hpp"
#include "strata/json_io.hpp"
#include "strata/version.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

namespace strata {

namespace fs = std::filesystem;

std::string atlas_cache_dir() {
    if (const char* env = std::getenv("STRATA_ATLAS_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return (fs::path(xdg) / "strata").string();
    if (const char* home = std::getenv("HOME"); home && *home)
        return (fs::path(home) / ".cache" / "strata").string();
    return (fs::temp_directory_path() / "strata-cache").string();
}

namespace {

fs::path cache_file(const TypeSpec& spec) {
    return fs::path(atlas_cache_dir()) / (spec.str() + ".v" + kToolVersion + ".json");
}

}  // namespace

std::optional<Atlas> load_cached_atlas(const TypeSpec& spec) {
    const fs::path file = cache_file(spec);
    std::error_code ec;
    if (!fs::is_regular_file(file, ec)) return std::nullopt;
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        Atlas a = atlas_from_json_string(text);
        if (a.spec == spec && a.metadata.tool_version == kToolVersion) return a;
    } catch (const IoError&) {
        // stale or corrupted cache entry: recompute
    }
    return std::nullopt;
}

void store_cached_atlas(const Atlas& atlas) {
    const fs::path file = cache_file(atlas.spec);
    std::error_code ec;
    fs::create_directories(file.parent_path(), ec);
    if (ec) throw IoError("cannot create cache directory " + file.parent_path().string());
    const fs::path tmp = file.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot write cache file " + tmp.string());
        out << atlas_to_json_string(atlas);
    }
    fs::rename(tmp, file, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot finalize cache file " + file.string());
    }
}

}  // namespace strata
