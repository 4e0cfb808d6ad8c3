#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ringlab {

inline constexpr const char* kToolVersion = "0.1.0";

// stable content hash for report fields and cache keys
std::string content_hash(const std::string& data);

// JSON run report: command echo, input hashes, per-check verdicts, timings
class Report {
 public:
  explicit Report(const std::vector<std::string>& argv);

  void add_input(const std::string& label, const std::string& content);
  void set_seed(std::uint64_t seed);
  void add_check(const std::string& name, bool ok,
                 nlohmann::json details = nlohmann::json::object());
  void add_note(const std::string& key, nlohmann::json value);
  void add_timing(const std::string& name, double seconds);

  bool all_passed() const;
  std::string dump() const;
  const nlohmann::json& json() const { return j_; }

 private:
  nlohmann::json j_;
};

}  // namespace ringlab
