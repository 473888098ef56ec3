#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bpir/harness/session.hpp"

namespace bpir::harness {

enum class AuditMode { exhaustive, transfer_matrix };

struct AuditFailure {
  std::vector<std::size_t> subset;  // 0-based
  std::string detail;
};

struct AuditReport {
  AuditMode mode = AuditMode::exhaustive;
  std::uint64_t seed = 0;
  std::size_t cases_total = 0;
  std::size_t cases_failed = 0;
  std::vector<AuditFailure> failures;
  std::optional<Rational> max_tv_distance;  // exhaustive mode only
  std::string verdict;
};

// Largest per-entry randomness space the exhaustive audit will enumerate.
inline constexpr std::uint64_t kAuditEnumerationLimit = std::uint64_t{1} << 16;

// Checks t-privacy for one coalition, or for every t-subset when subset is
// empty. Exhaustive mode enumerates all blinding values of each database
// entry for every iota and compares the exact distributions of the
// coalition's query entries; entries use independent randomness, so the
// joint view is the product of these. Transfer-matrix mode checks that the
// map from blinding values to the coalition's entries is injective. A
// coalition larger than t is out of contract and reported as such.
// Throws EnumerationTooLarge when (q^s)^t exceeds kAuditEnumerationLimit.
AuditReport privacy_audit(const SchemeParams& p, const std::vector<std::size_t>& subset, AuditMode mode,
                          std::uint64_t seed = 0);

nlohmann::json to_json(const SchemeParams& p, const AuditReport& r);

// All size-n subsets of {0..k-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t k, std::size_t n);

}  // namespace bpir::harness
