#pragma once

#include "strata/atlas.hpp"

#include <optional>
#include <string>

namespace strata {

// Cache directory resolution: STRATA_ATLAS_CACHE, else
// $XDG_CACHE_HOME/strata, else $HOME/.cache/strata.
std::string atlas_cache_dir();

// Cached atlas for (canonical type, tool version), when present and intact.
std::optional<Atlas> load_cached_atlas(const TypeSpec& spec);

// Write-then-rename, so concurrent readers never see a partial file.
void store_cached_atlas(const Atlas& atlas);

}  // namespace strata
