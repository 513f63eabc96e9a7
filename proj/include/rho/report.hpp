#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace rho {

// Outcome of one verification: pass/fail with a witness (first differing
// monomial or mismatched totals) when it fails.
struct VerdictReport {
  std::string check;
  std::string params;
  bool pass = false;
  std::optional<std::string> witness;
  double ms = 0.0;

  nlohmann::json to_json() const {
    nlohmann::json j{{"check", check},
                     {"params", params},
                     {"pass", pass},
                     {"ms", static_cast<long>(ms)}};
    if (witness) j["witness"] = *witness;
    return j;
  }

  std::string line() const {
    std::string s = (pass ? "PASS " : "FAIL ") + check;
    if (!params.empty()) s += " [" + params + "]";
    if (witness) s += "  witness: " + *witness;
    return s;
  }
};

}  // namespace rho
