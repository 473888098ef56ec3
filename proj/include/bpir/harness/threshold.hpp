#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bpir/harness/session.hpp"

namespace bpir::harness {

struct IndistinguishablePair {
  Database first;
  Database second;
  std::vector<ExtElem> answers;  // shared full-mode answers of the listed servers
};

inline constexpr std::uint64_t kThresholdDatabaseLimit = std::uint64_t{1} << 20;

// Fixes one query set for iota (drawn from seed), enumerates every database,
// and returns two that differ in row iota yet produce identical honest
// full-mode answers at the given servers. nullopt means the answers always
// determine the row. Throws EnumerationTooLarge beyond 2^20 databases.
std::optional<IndistinguishablePair> find_indistinguishable(const SchemeParams& p, std::size_t iota,
                                                            const std::vector<std::size_t>& servers, std::uint64_t seed);

}  // namespace bpir::harness
