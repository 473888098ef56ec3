#include "bpir/harness/session.hpp"

#include <algorithm>
#include <cmath>

#include "bpir/pir/query.hpp"
#include "bpir/pir/retrieve.hpp"

namespace bpir::harness {

SessionReport run_session(const SchemeParams& p, const Database& db, std::size_t iota, const AdversaryModel& adv,
                          AnswerMode mode, std::uint64_t seed, pir::ExecPolicy policy) {
  pir::require_compatible(p, db);
  validate_adversary(p, adv, mode);
  const CounterRng root(seed);
  const auto qs = pir::gen_queries(p, iota, root.substream(1), policy);

  SessionReport rep;
  rep.iota = iota;
  rep.mode = mode;
  rep.seed = seed;
  rep.byzantine = adv.byzantine;
  std::sort(rep.byzantine.begin(), rep.byzantine.end());
  rep.strategy = adv.strategy;
  rep.responders = pir::default_responders(p, mode);

  pir::AnswerSet answers{mode, {}, {}};
  for (auto j : rep.responders) {
    const ServerNode node(p, db, j, adv, root.substream(2));
    const auto reply = node.handle({j, mode, qs.per_server[j]}, policy);
    answers.servers.push_back(reply.server);
    answers.values.push_back(reply.value);
  }

  const std::size_t per_answer = mode == AnswerMode::trace ? 1 : p.s;
  rep.downloaded_symbols = answers.values.size() * per_answer;
  rep.file_symbols = p.file_symbols();
  const double log_q = std::log2(static_cast<double>(p.q()));
  rep.downloaded_bits = static_cast<double>(rep.downloaded_symbols) * log_q;
  rep.file_bits = static_cast<double>(rep.file_symbols) * log_q;
  rep.measured_rate = Rational(rep.file_symbols, rep.downloaded_symbols);
  rep.capacity_finite_m = pir::capacity_finite(p.t, p.b, p.k, p.m);
  rep.capacity_asymptotic = pir::capacity(p.t, p.b, p.k);

  try {
    auto got = pir::retrieve(p, answers);
    rep.retrieved_file = std::move(got.file);
    rep.identified_error_positions = std::move(got.error_servers);
    rep.ground_truth_match = rep.retrieved_file == db.file(iota);
    if (!rep.ground_truth_match) {
      rep.status = SessionStatus::failed;
      rep.failure_reason = "miscorrection";
      rep.failure_detail = "decoder returned a file that differs from the planted row";
    }
  } catch (const ByzantineBudgetExceeded& e) {
    rep.status = SessionStatus::failed;
    rep.failure_reason = "decode-failure";
    rep.failure_detail = e.what();
  }
  return rep;
}

nlohmann::json params_summary(const SchemeParams& p) {
  return {{"k", p.k}, {"t", p.t}, {"b", p.b}, {"r", p.r}, {"delta", p.delta},
          {"s", p.s}, {"m", p.m}, {"q", p.q()}, {"field", p.field.description()}};
}

namespace {

nlohmann::json one_based(const std::vector<std::size_t>& ids) {
  auto out = nlohmann::json::array();
  for (auto j : ids) out.push_back(j + 1);
  return out;
}

}  // namespace

nlohmann::json to_json(const SchemeParams& p, const SessionReport& r) {
  auto file = nlohmann::json::array();
  for (auto x : r.retrieved_file) file.push_back(p.field.format(x));
  nlohmann::json j{
      {"params", params_summary(p)},
      {"iota", r.iota + 1},
      {"mode", pir::to_string(r.mode)},
      {"seed", r.seed},
      {"status", r.status == SessionStatus::ok ? "ok" : "failed"},
      {"failure_reason", r.failure_reason.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.failure_reason)},
      {"retrieved_file", file},
      {"ground_truth_match", r.ground_truth_match},
      {"identified_error_positions", one_based(r.identified_error_positions)},
      {"byzantine_set", one_based(r.byzantine)},
      {"strategy", to_string(r.strategy)},
      {"responders", one_based(r.responders)},
      {"downloaded_symbols", r.downloaded_symbols},
      {"file_symbols", r.file_symbols},
      {"downloaded_bits", r.downloaded_bits},
      {"file_bits", r.file_bits},
      {"measured_rate", pir::to_string(r.measured_rate)},
      {"capacity_finite_m", pir::to_string(r.capacity_finite_m)},
      {"capacity_asymptotic", pir::to_string(r.capacity_asymptotic)},
      {"rate_equals_capacity", r.measured_rate == r.capacity_asymptotic},
  };
  if (!r.failure_detail.empty()) j["failure_detail"] = r.failure_detail;
  return j;
}

}  // namespace bpir::harness
