#include "ringlab/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "ringlab/report.hpp"

namespace ringlab {

std::filesystem::path cache_directory() {
  if (const char* env = std::getenv("RINGLAB_CACHE"); env && *env)
    return env;
  return ".ringlab-cache";
}

static std::filesystem::path entry_path(const std::string& key) {
  return cache_directory() / (key + ".json");
}

void cache_store(const std::string& key, const nlohmann::json& payload) {
  std::error_code ec;
  std::filesystem::create_directories(cache_directory(), ec);
  nlohmann::json entry;
  entry["payload"] = payload;
  entry["checksum"] = content_hash(payload.dump());
  std::ofstream out(entry_path(key));
  out << entry.dump();
}

std::optional<nlohmann::json> cache_load(const std::string& key,
                                         std::string* warning) {
  std::ifstream in(entry_path(key));
  if (!in) return std::nullopt;
  nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.contains("payload") ||
      !entry.contains("checksum") ||
      entry["checksum"] != content_hash(entry["payload"].dump())) {
    if (warning)
      *warning = "corrupt cache entry for " + key + ", recomputing";
    return std::nullopt;
  }
  return entry["payload"];
}

}  // namespace ringlab
