#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace picard {

enum class Verdict { verified, refuted, error };
std::string to_string(Verdict v);

// Machine-readable verdict record tying a named claim to a computed witness.
// A refuted or errored certificate always carries a non-empty witness.
struct Certificate {
  std::string claim_id;
  std::string paper_anchor;
  Verdict verdict = Verdict::verified;
  nlohmann::ordered_json witness;  // null when verified
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
};

// Collects checks for one claim; the first failures land in the witness.
class ClaimRun {
 public:
  ClaimRun(std::string claim_id, std::string paper_anchor);

  // records a refutation witness when ok is false; returns ok
  bool check(bool ok, const std::string& what,
             nlohmann::ordered_json detail = nullptr);
  template <typename T>
  void stat(const std::string& key, const T& value) {
    cert_.stats[key] = value;
  }
  Certificate finish();

 private:
  Certificate cert_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace picard
