#include "ringlab/report.hpp"

namespace ringlab {

std::string content_hash(const std::string& data) {
  // FNV-1a, 64-bit
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

Report::Report(const std::vector<std::string>& argv) {
  j_["command"] = argv;
  j_["version"] = kToolVersion;
  j_["inputs"] = nlohmann::json::object();
  j_["checks"] = nlohmann::json::array();
  j_["timings"] = nlohmann::json::object();
}

void Report::add_input(const std::string& label, const std::string& content) {
  j_["inputs"][label] = content_hash(content);
}

void Report::set_seed(std::uint64_t seed) { j_["seed"] = seed; }

void Report::add_check(const std::string& name, bool ok,
                       nlohmann::json details) {
  details["name"] = name;
  details["ok"] = ok;
  j_["checks"].push_back(std::move(details));
}

void Report::add_note(const std::string& key, nlohmann::json value) {
  j_[key] = std::move(value);
}

void Report::add_timing(const std::string& name, double seconds) {
  j_["timings"][name] = seconds;
}

bool Report::all_passed() const {
  for (auto& c : j_["checks"])
    if (!c["ok"].get<bool>()) return false;
  return true;
}

std::string Report::dump() const { return j_.dump(2) + "\n"; }

}  // namespace ringlab
