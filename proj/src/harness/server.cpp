#include "bpir/harness/server.hpp"

#include <algorithm>
#include <string>

namespace bpir::harness {

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::random_symbol: return "random-symbol";
    case Strategy::fixed_offset: return "fixed-offset";
    case Strategy::query_aware: return "query-aware";
  }
  return "?";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "random-symbol") return Strategy::random_symbol;
  if (text == "fixed-offset") return Strategy::fixed_offset;
  if (text == "query-aware") return Strategy::query_aware;
  throw InvalidParameters("unknown strategy '" + std::string(text) + "' (random-symbol, fixed-offset, query-aware)");
}

bool AdversaryModel::is_byzantine(std::size_t server) const {
  return std::find(byzantine.begin(), byzantine.end(), server) != byzantine.end();
}

namespace {

void require_ids(const std::vector<std::size_t>& ids, std::size_t k, const char* what) {
  std::vector<bool> seen(k, false);
  for (auto j : ids) {
    if (j >= k) throw InvalidParameters(std::string(what) + " server " + std::to_string(j + 1) + " outside [1, " + std::to_string(k) + "]");
    if (seen[j]) throw InvalidParameters(std::string(what) + " server " + std::to_string(j + 1) + " listed twice");
    seen[j] = true;
  }
}

std::size_t position(const AdversaryModel& adv, std::size_t server) {
  return static_cast<std::size_t>(std::find(adv.byzantine.begin(), adv.byzantine.end(), server) - adv.byzantine.begin());
}

}  // namespace

void validate_adversary(const SchemeParams& p, const AdversaryModel& adv, AnswerMode mode) {
  require_ids(adv.byzantine, p.k, "byzantine");
  require_ids(adv.colluders, p.k, "colluding");
  if (adv.colluders.size() > p.t) {
    throw InvalidParameters(std::to_string(adv.colluders.size()) + " colluders exceed t=" + std::to_string(p.t));
  }
  if (adv.offsets.size() > 1 && adv.offsets.size() != adv.byzantine.size()) {
    throw InvalidParameters("give one offset, or one per byzantine server");
  }
  const std::uint64_t n = symbol_count(p, mode);
  for (auto o : adv.offsets) {
    if (o == 0 || o >= n) throw InvalidParameters("offset " + std::to_string(o) + " outside [1, " + std::to_string(n - 1) + "]");
  }
}

std::uint64_t symbol_count(const SchemeParams& p, AnswerMode mode) {
  return mode == AnswerMode::trace ? p.q() : p.field.order();
}

ExtElem symbol(const SchemeParams& p, AnswerMode mode, std::uint64_t index) {
  return mode == AnswerMode::trace ? p.field.embed(p.base().from_index(index)) : p.field.from_index(index);
}

ExtElem byzantine_answer(const SchemeParams& p, const AdversaryModel& adv, std::size_t server, const Grid& query,
                         AnswerMode mode, ExtElem honest, const CounterRng& rng) {
  const auto& f = p.field;
  const std::uint64_t n = symbol_count(p, mode);
  ExtElem offset;
  switch (adv.strategy) {
    case Strategy::random_symbol:
      offset = symbol(p, mode, 1 + rng.substream(server).below(n - 1, 0));
      break;
    case Strategy::fixed_offset: {
      std::uint64_t o = 1;
      if (adv.offsets.size() == 1) o = adv.offsets.front();
      if (adv.offsets.size() > 1) o = adv.offsets.at(position(adv, server));
      offset = symbol(p, mode, o);
      break;
    }
    case Strategy::query_aware: {
      // Shift every database entry by one: colluding liars stay mutually
      // consistent, which is the hardest case for the decoder.
      ExtElem shift = f.zero();
      for (auto x : query.flat()) shift = f.add(shift, x);
      if (mode == AnswerMode::trace) shift = f.embed(f.trace(f.mul(p.v[server], shift)));
      offset = f.is_zero(shift) ? f.one() : shift;
      break;
    }
  }
  return f.add(honest, offset);
}

ServerNode::ServerNode(const SchemeParams& p, const Database& db, std::size_t id, const AdversaryModel& adv, CounterRng rng)
    : p_(&p), db_(&db), id_(id), adv_(&adv), rng_(rng) {
  if (id >= p.k) throw IndexOutOfRange("server " + std::to_string(id + 1) + " outside [1, " + std::to_string(p.k) + "]");
}

AnswerMessage ServerNode::handle(const QueryMessage& msg, pir::ExecPolicy policy) const {
  if (msg.server != id_) throw InvalidParameters("query addressed to server " + std::to_string(msg.server + 1));
  ExtElem a = pir::server_answer(*p_, id_, msg.query, *db_, msg.mode, policy);
  if (byzantine()) a = byzantine_answer(*p_, *adv_, id_, msg.query, msg.mode, a, rng_);
  return {id_, a};
}

}  // namespace bpir::harness
