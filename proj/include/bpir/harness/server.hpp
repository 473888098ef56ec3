#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "bpir/pir/answer.hpp"
#include "bpir/pir/database.hpp"
#include "bpir/pir/params.hpp"
#include "bpir/pir/rng.hpp"

namespace bpir::harness {

using pir::AnswerMode;
using pir::CounterRng;
using pir::Database;
using pir::ExtElem;
using pir::Grid;
using pir::SchemeParams;

// How a byzantine server picks its wrong answer. Every strategy returns a
// symbol of the answer alphabet that differs from the honest one.
enum class Strategy {
  random_symbol,  // honest + uniform nonzero offset
  fixed_offset,   // honest + a chosen nonzero offset
  query_aware,    // answers as if the database were shifted by a fixed array
};

std::string_view to_string(Strategy s) noexcept;
Strategy parse_strategy(std::string_view text);

struct AdversaryModel {
  std::vector<std::size_t> byzantine;  // 0-based server ids
  Strategy strategy = Strategy::random_symbol;
  // fixed_offset: symbol index of the offset, one per byzantine server, or a
  // single value shared by all of them. Empty means 1.
  std::vector<std::uint64_t> offsets;
  std::vector<std::size_t> colluders;  // 0-based; only the privacy auditor uses them

  bool is_byzantine(std::size_t server) const;
};

// Throws InvalidParameters on out-of-range or repeated ids, zero or
// out-of-alphabet offsets, or more than t colluders. The byzantine set may
// exceed b so that over-budget behavior can be exercised.
void validate_adversary(const SchemeParams& p, const AdversaryModel& adv, AnswerMode mode);

// Answer alphabet: F_q in trace mode, F_{q^s} in full mode.
std::uint64_t symbol_count(const SchemeParams& p, AnswerMode mode);
ExtElem symbol(const SchemeParams& p, AnswerMode mode, std::uint64_t index);

// The wrong answer a byzantine server sends instead of honest.
ExtElem byzantine_answer(const SchemeParams& p, const AdversaryModel& adv, std::size_t server, const Grid& query,
                         AnswerMode mode, ExtElem honest, const CounterRng& rng);

struct QueryMessage {
  std::size_t server = 0;
  AnswerMode mode = AnswerMode::trace;
  Grid query;
};

struct AnswerMessage {
  std::size_t server = 0;
  ExtElem value;
};

// In-process server behind a request/response interface. Holds references to
// params, database and adversary; they must outlive the node.
class ServerNode {
 public:
  ServerNode(const SchemeParams& p, const Database& db, std::size_t id, const AdversaryModel& adv, CounterRng rng);

  std::size_t id() const noexcept { return id_; }
  bool byzantine() const { return adv_->is_byzantine(id_); }
  AnswerMessage handle(const QueryMessage& msg, pir::ExecPolicy policy = pir::ExecPolicy::parallel) const;

 private:
  const SchemeParams* p_;
  const Database* db_;
  std::size_t id_;
  const AdversaryModel* adv_;
  CounterRng rng_;
};

}  // namespace bpir::harness
