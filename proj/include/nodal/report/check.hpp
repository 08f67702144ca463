#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace nodal {

/// One named verification step. `detail` carries computed values.
struct Check {
  std::string id;
  bool passed = false;
  nlohmann::json detail = nlohmann::json::object();
};

inline bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

inline nlohmann::json to_json(const Check& c) {
  nlohmann::json j{{"id", c.id}, {"passed", c.passed}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

inline nlohmann::json to_json(const std::vector<Check>& checks) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : checks) a.push_back(to_json(c));
  return a;
}

}  // namespace nodal
