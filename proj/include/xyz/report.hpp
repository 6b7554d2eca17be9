#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "xyz/polynomial.hpp"

namespace xyz {

using json = nlohmann::json;

// Outcome of one verified statement plus the data that decided it.
struct Check {
  std::string name;
  bool passed = false;
  json witness = json::object();
};

inline bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

inline json to_json(const Check& c) {
  return json{{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}};
}

// Ascending-power decimal strings.
inline json coefficients_json(const IntPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  return arr;
}

}  // namespace xyz
