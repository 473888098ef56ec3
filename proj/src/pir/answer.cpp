#include "bpir/pir/answer.hpp"

namespace bpir::pir {

std::string_view to_string(AnswerMode mode) noexcept { return mode == AnswerMode::full ? "full" : "trace"; }

AnswerMode parse_answer_mode(std::string_view text) {
  if (text == "full") return AnswerMode::full;
  if (text == "trace") return AnswerMode::trace;
  throw ParseError("answer mode must be 'full' or 'trace', got '" + std::string(text) + "'");
}

ExtElem server_answer(const SchemeParams& p, std::size_t j, const Grid& query, const Database& db, AnswerMode mode,
                      ExecPolicy policy) {
  if (j >= p.k) throw IndexOutOfRange("server " + std::to_string(j + 1) + " outside [1, " + std::to_string(p.k) + "]");
  require_compatible(p, db);
  if (query.rows() != db.files() || query.cols() != db.delta()) throw DimensionMismatch("query shape differs from the database");
  const ExtElem a = frobenius_product(p.field, query, db.entries(), policy);
  if (mode == AnswerMode::full) return a;
  return p.field.embed(p.field.trace(p.field.mul(p.v[j], a)));
}

AnswerSet collect_answers(const SchemeParams& p, const std::vector<Grid>& queries, const Database& db, AnswerMode mode,
                          const std::vector<std::size_t>& servers, ExecPolicy policy) {
  AnswerSet out{mode, servers, {}};
  out.values.reserve(servers.size());
  for (auto j : servers) {
    if (j >= queries.size()) throw IndexOutOfRange("no query for server " + std::to_string(j + 1));
    out.values.push_back(server_answer(p, j, queries[j], db, mode, policy));
  }
  return out;
}

std::vector<std::size_t> default_responders(const SchemeParams& p, AnswerMode mode) {
  std::vector<std::size_t> out(mode == AnswerMode::full ? p.r : p.k);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = j;
  return out;
}

}  // namespace bpir::pir
