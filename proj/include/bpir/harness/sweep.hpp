#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bpir/harness/session.hpp"

namespace bpir::harness {

struct SweepScope {
  enum Kind { exhaustive, randomized } kind = exhaustive;
  std::size_t cases = 0;  // randomized only
};

struct SweepOptions {
  SweepScope scope;
  AnswerMode mode = AnswerMode::trace;
  std::uint64_t seed = 0;
  std::optional<std::size_t> byzantine_count{};  // defaults to b
  pir::ExecPolicy policy = pir::ExecPolicy::parallel;
};

struct SweepFailure {
  std::size_t iota = 0;                   // 0-based
  std::vector<std::size_t> byzantine;     // 0-based
  std::vector<std::uint64_t> offsets;     // symbol index added by each byzantine server
  std::string reason;                     // decode-failure | miscorrection
};

struct SweepReport {
  std::uint64_t seed = 0;
  std::size_t byzantine_count = 0;
  std::size_t cases_total = 0;
  std::size_t cases_failed = 0;
  std::vector<SweepFailure> failures;
};

inline constexpr std::uint64_t kSweepCaseLimit = 1'000'000;

// Exhaustive: every byzantine set of the given size, every combination of
// nonzero offsets, every iota; one query set per iota drawn from seed.
// Randomized: each case draws iota, the set and the offsets from its own
// substream and generates fresh queries. Cases run in parallel and are
// reported in case order. Throws EnumerationTooLarge when the exhaustive case
// count exceeds kSweepCaseLimit.
SweepReport byzantine_sweep(const SchemeParams& p, const Database& db, const SweepOptions& opt);

std::uint64_t exhaustive_case_count(const SchemeParams& p, AnswerMode mode, std::size_t byzantine_count);

nlohmann::json to_json(const SchemeParams& p, const SweepReport& r);

}  // namespace bpir::harness
