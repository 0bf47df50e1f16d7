#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rees {

/// Pass/fail record of one checked claim, with the values that decided it.
struct VerificationReport {
  std::string check;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> values;
  std::string witness;  ///< filled when the check fails

  VerificationReport& set(std::string key, std::string value) {
    for (auto& [k, v] : values)
      if (k == key) {
        v = std::move(value);
        return *this;
      }
    values.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  const std::string* get(const std::string& key) const {
    for (const auto& [k, v] : values)
      if (k == key) return &v;
    return nullptr;
  }
};

}  // namespace rees
