// Machine-readable verification reports.
//
// The canonical JSON form is fully deterministic (insertion-ordered keys, no
// timing data), so byte-identical reruns certify reproducibility; elapsed
// times are carried separately for the human-readable rendering only.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace twg {

using ordered_json = nlohmann::ordered_json;

struct CheckRecord {
  std::string name;
  bool pass = false;
  ordered_json witness;   // small named values backing the verdict
  double elapsed_s = 0.0; // excluded from canonical JSON
};

struct VerificationReport {
  int q = 0, p = 0, m = 0;
  ordered_json metadata;
  std::vector<CheckRecord> checks;

  bool pass() const {
    for (const CheckRecord& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckRecord* first_failure() const {
    for (const CheckRecord& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }

  ordered_json to_json() const;           // canonical, deterministic
  std::string to_text() const;            // human-readable, includes timing
};

}  // namespace twg
