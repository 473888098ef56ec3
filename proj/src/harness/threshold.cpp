#include "bpir/harness/threshold.hpp"

#include <map>

#include "bpir/pir/query.hpp"

namespace bpir::harness {

std::optional<IndistinguishablePair> find_indistinguishable(const SchemeParams& p, std::size_t iota,
                                                            const std::vector<std::size_t>& servers, std::uint64_t seed) {
  const auto& f = p.field;
  const std::size_t entries = p.m * p.delta;
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < entries; ++e) {
    total *= f.order();
    if (total > kThresholdDatabaseLimit) throw EnumerationTooLarge("more than 2^20 databases to enumerate");
  }
  const auto qs = pir::gen_queries(p, iota, CounterRng(seed), pir::ExecPolicy::serial);
  const auto make = [&](std::uint64_t code) {
    Grid g(p.m, p.delta, f.zero());
    for (auto& x : g.flat()) {
      x = f.from_index(code % f.order());
      code /= f.order();
    }
    return Database(std::move(g));
  };

  // First database seen per (answers, row iota).
  std::map<std::vector<std::uint64_t>, std::pair<std::vector<ExtElem>, std::uint64_t>> seen;
  for (std::uint64_t code = 0; code < total; ++code) {
    const auto db = make(code);
    std::vector<std::uint64_t> key;
    std::vector<ExtElem> answers;
    for (auto j : servers) {
      answers.push_back(pir::server_answer(p, j, qs.per_server[j], db, AnswerMode::full, pir::ExecPolicy::serial));
      key.push_back(f.index(answers.back()));
    }
    const auto row = db.file(iota);
    const auto [it, fresh] = seen.try_emplace(key, row, code);
    if (!fresh && it->second.first != row) return IndistinguishablePair{make(it->second.second), db, answers};
  }
  return std::nullopt;
}

}  // namespace bpir::harness
