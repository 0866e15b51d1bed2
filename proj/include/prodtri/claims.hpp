#pragma once
// A fixed corpus of checks against the published triangles, sequences and
// continued fractions. Items whose printed form is known to be off are run
// both as printed and as corrected.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "prodtri/oeis.hpp"

namespace prodtri {

// deviation: the printed form fails and the corrected reading passes.
enum class ClaimStatus { pass, fail, deviation };

std::string_view to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  std::string statement;
  ClaimStatus status = ClaimStatus::fail;
  std::string detail;
};

struct ClaimsReport {
  std::vector<ClaimResult> results;

  std::size_t count(ClaimStatus s) const;
  // No item failed; deviations are expected.
  bool ok() const { return count(ClaimStatus::fail) == 0; }
  const ClaimResult* find(std::string_view id) const;
};

ClaimsReport run_claims(const OeisClient& client, std::uint64_t seed = 20061);

nlohmann::json to_json(const ClaimsReport& report);
std::string render_plain(const ClaimsReport& report);

}  // namespace prodtri
