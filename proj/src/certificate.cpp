#include "picard/certificate.hpp"

#include <stdexcept>

namespace picard {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::refuted: return "refuted";
    case Verdict::error: return "error";
  }
  throw std::logic_error("unknown Verdict");
}

nlohmann::ordered_json Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["claim_id"] = claim_id;
  j["paper_anchor"] = paper_anchor;
  j["verdict"] = to_string(verdict);
  j["witness"] = witness;
  j["stats"] = stats;
  return j;
}

ClaimRun::ClaimRun(std::string claim_id, std::string paper_anchor)
    : start_(std::chrono::steady_clock::now()) {
  cert_.claim_id = std::move(claim_id);
  cert_.paper_anchor = std::move(paper_anchor);
}

bool ClaimRun::check(bool ok, const std::string& what, nlohmann::ordered_json detail) {
  if (!ok) {
    cert_.verdict = Verdict::refuted;
    if (!cert_.witness.is_array()) cert_.witness = nlohmann::ordered_json::array();
    nlohmann::ordered_json entry;
    entry["failed_check"] = what;
    if (!detail.is_null()) entry["detail"] = detail;
    cert_.witness.push_back(std::move(entry));
  }
  return ok;
}

Certificate ClaimRun::finish() {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start_)
                .count();
  cert_.stats["elapsed_ms"] = ms;
  return cert_;
}

}  // namespace picard
