#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace ringlab {

// RINGLAB_CACHE, or .ringlab-cache under the working directory
std::filesystem::path cache_directory();

void cache_store(const std::string& key, const nlohmann::json& payload);

// nullopt on miss; a corrupt entry is also a miss, with *warning set
std::optional<nlohmann::json> cache_load(const std::string& key,
                                         std::string* warning = nullptr);

}  // namespace ringlab
