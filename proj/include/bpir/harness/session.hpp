#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bpir/harness/server.hpp"
#include "bpir/pir/capacity.hpp"

namespace bpir::harness {

using pir::Rational;

enum class SessionStatus { ok, failed };

struct SessionReport {
  std::size_t iota = 0;  // 0-based
  AnswerMode mode = AnswerMode::trace;
  std::uint64_t seed = 0;
  SessionStatus status = SessionStatus::ok;
  std::string failure_reason;  // "decode-failure" or "miscorrection"
  std::string failure_detail;
  std::vector<ExtElem> retrieved_file;
  bool ground_truth_match = false;
  std::vector<std::size_t> identified_error_positions;  // 0-based server ids
  std::vector<std::size_t> byzantine;
  Strategy strategy = Strategy::random_symbol;
  std::vector<std::size_t> responders;
  std::size_t downloaded_symbols = 0;  // F_q symbols
  std::size_t file_symbols = 0;        // F_q symbols
  double downloaded_bits = 0;
  double file_bits = 0;
  Rational measured_rate;
  Rational capacity_finite_m;
  Rational capacity_asymptotic;
};

// Generates queries from seed, lets every responder (honest or byzantine)
// answer, retrieves, and compares with row iota of db. Decode failures come
// back as failed sessions, not exceptions.
SessionReport run_session(const SchemeParams& p, const Database& db, std::size_t iota, const AdversaryModel& adv,
                          AnswerMode mode, std::uint64_t seed, pir::ExecPolicy policy = pir::ExecPolicy::parallel);

// Compact parameter summary used by every report.
nlohmann::json params_summary(const SchemeParams& p);

// Server ids and iota are 1-based in the JSON form.
nlohmann::json to_json(const SchemeParams& p, const SessionReport& r);

}  // namespace bpir::harness
