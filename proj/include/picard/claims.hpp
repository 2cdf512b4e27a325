#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "picard/certificate.hpp"

namespace picard {

struct ClaimOptions {
  bool slow_cross_checks = false;
};

struct ClaimInfo {
  std::string id;
  std::string anchor;
  std::string summary;
};

// All claim ids, sorted.
std::vector<ClaimInfo> list_claims();
bool is_claim_id(const std::string& id);

// Runs the given claims (sorted by id, heavy structures shared); throws
// std::invalid_argument for an unknown id.
std::vector<Certificate> run_claims(const std::vector<std::string>& ids,
                                    const ClaimOptions& options = {});
std::vector<Certificate> run_all_claims(const ClaimOptions& options = {});

nlohmann::ordered_json report_json(const std::vector<Certificate>& certs);
std::string report_text(const std::vector<Certificate>& certs);
bool all_verified(const std::vector<Certificate>& certs);

// Frozen order-3 census fixtures for W(E6), by type A2, A2^2, A2^3.
inline constexpr long long kOrder3Counts[3] = {240, 480, 80};

nlohmann::ordered_json census_order3_json();
std::string census_order3_text();

}  // namespace picard
