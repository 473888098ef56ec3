#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bpir/pir/database.hpp"
#include "bpir/pir/kernels.hpp"
#include "bpir/pir/params.hpp"

namespace bpir::pir {

// full: each server returns phi(beta_j) in F_{q^s} (retrieval from r servers).
// trace: each server returns Tr(v_j phi(beta_j)) in F_q (retrieval from all k).
enum class AnswerMode { full, trace };

std::string_view to_string(AnswerMode mode) noexcept;
AnswerMode parse_answer_mode(std::string_view text);

// Honest answer of server j. In trace mode the F_q value is returned embedded
// in F_{q^s}.
ExtElem server_answer(const SchemeParams& p, std::size_t j, const Grid& query, const Database& db, AnswerMode mode,
                      ExecPolicy policy = ExecPolicy::parallel);

// Answers as received by the client, possibly corrupted.
struct AnswerSet {
  AnswerMode mode = AnswerMode::trace;
  std::vector<std::size_t> servers;  // responders, 0-based
  std::vector<ExtElem> values;       // values[i] came from servers[i]
};

// Honest answers from the listed servers.
AnswerSet collect_answers(const SchemeParams& p, const std::vector<Grid>& queries, const Database& db, AnswerMode mode,
                          const std::vector<std::size_t>& servers, ExecPolicy policy = ExecPolicy::parallel);

// Servers 0..k-1 (trace) or 0..r-1 (full).
std::vector<std::size_t> default_responders(const SchemeParams& p, AnswerMode mode);

}  // namespace bpir::pir
