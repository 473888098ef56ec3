#include "bpir/harness/sweep.hpp"

#include <algorithm>

#include "bpir/harness/audit.hpp"
#include "bpir/pir/query.hpp"
#include "bpir/pir/retrieve.hpp"

namespace bpir::harness {
namespace {

struct Case {
  std::size_t iota;
  std::vector<std::size_t> byzantine;
  std::vector<std::uint64_t> offsets;
};

// Retrieval from corrupted copies of the honest answers; nullopt on success.
std::optional<std::string> check_case(const SchemeParams& p, const Database& db, const pir::AnswerSet& clean,
                                      const Case& c, AnswerMode mode) {
  auto rx = clean;
  for (std::size_t i = 0; i < c.byzantine.size(); ++i) {
    const auto pos = static_cast<std::size_t>(std::find(rx.servers.begin(), rx.servers.end(), c.byzantine[i]) - rx.servers.begin());
    if (pos == rx.servers.size()) continue;  // not a responder
    rx.values[pos] = p.field.add(rx.values[pos], symbol(p, mode, c.offsets[i]));
  }
  try {
    if (pir::retrieve(p, rx).file != db.file(c.iota)) return "miscorrection";
  } catch (const ByzantineBudgetExceeded&) {
    return "decode-failure";
  }
  return std::nullopt;
}

pir::AnswerSet honest_answers(const SchemeParams& p, const Database& db, std::size_t iota, const CounterRng& rng,
                              AnswerMode mode) {
  const auto qs = pir::gen_queries(p, iota, rng, pir::ExecPolicy::serial);
  return pir::collect_answers(p, qs.per_server, db, mode, pir::default_responders(p, mode), pir::ExecPolicy::serial);
}

// Runs every case, catching per case so nothing escapes the parallel region.
template <class Fn>
std::vector<std::optional<std::string>> run_cases(std::size_t n, pir::ExecPolicy policy, Fn&& fn) {
  std::vector<std::optional<std::string>> verdict(n);
  std::vector<std::string> crashed(n);
  const auto body = [&](std::size_t i) {
    try {
      verdict[i] = fn(i);
    } catch (const std::exception& e) {
      crashed[i] = e.what();
    }
  };
  if (policy == pir::ExecPolicy::parallel) {
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!crashed[i].empty()) throw InternalError("sweep case " + std::to_string(i) + ": " + crashed[i]);
  }
  return verdict;
}

}  // namespace

std::uint64_t exhaustive_case_count(const SchemeParams& p, AnswerMode mode, std::size_t count) {
  const std::uint64_t wrong = symbol_count(p, mode) - 1;
  if (count > p.k) return 0;
  long double total = static_cast<long double>(p.m);
  for (std::size_t i = 0; i < count; ++i) {
    total = total * static_cast<long double>(p.k - i) / static_cast<long double>(i + 1);
    total *= static_cast<long double>(wrong);
  }
  return total > static_cast<long double>(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(total + 0.5L);
}

SweepReport byzantine_sweep(const SchemeParams& p, const Database& db, const SweepOptions& opt) {
  pir::require_compatible(p, db);
  SweepReport rep;
  rep.seed = opt.seed;
  rep.byzantine_count = opt.byzantine_count.value_or(p.b);
  if (rep.byzantine_count > p.k) throw InvalidParameters("byzantine count exceeds k");
  const std::uint64_t wrong = symbol_count(p, opt.mode) - 1;
  const CounterRng root(opt.seed);

  std::vector<Case> cases;
  std::vector<pir::AnswerSet> clean;
  if (opt.scope.kind == SweepScope::exhaustive) {
    if (exhaustive_case_count(p, opt.mode, rep.byzantine_count) > kSweepCaseLimit) {
      throw EnumerationTooLarge("exhaustive sweep exceeds 10^6 cases; use randomized mode");
    }
    for (std::size_t iota = 0; iota < p.m; ++iota) clean.push_back(honest_answers(p, db, iota, root.substream(iota), opt.mode));
    for (std::size_t iota = 0; iota < p.m; ++iota) {
      for (const auto& set : subsets(p.k, rep.byzantine_count)) {
        std::vector<std::uint64_t> off(set.size(), 1);
        while (true) {
          cases.push_back({iota, set, off});
          std::size_t i = 0;
          while (i < off.size() && off[i] == wrong) off[i++] = 1;
          if (i == off.size()) break;
          ++off[i];
        }
      }
    }
  } else {
    for (std::size_t c = 0; c < opt.scope.cases; ++c) {
      const CounterRng rng = root.substream(c);
      Case cs;
      cs.iota = rng.below(p.m, 0);
      std::vector<std::size_t> ids(p.k);
      for (std::size_t j = 0; j < p.k; ++j) ids[j] = j;
      for (std::size_t i = 0; i < rep.byzantine_count; ++i) {
        std::swap(ids[i], ids[i + rng.below(p.k - i, 1 + i)]);
        cs.byzantine.push_back(ids[i]);
        cs.offsets.push_back(1 + rng.below(wrong, 1 + p.k + i));
      }
      std::sort(cs.byzantine.begin(), cs.byzantine.end());
      cases.push_back(std::move(cs));
    }
  }

  const bool randomized = opt.scope.kind == SweepScope::randomized;
  const auto verdict = run_cases(cases.size(), opt.policy, [&](std::size_t i) {
    if (!randomized) return check_case(p, db, clean[cases[i].iota], cases[i], opt.mode);
    const auto answers = honest_answers(p, db, cases[i].iota, root.substream(i).substream(1), opt.mode);
    return check_case(p, db, answers, cases[i], opt.mode);
  });

  rep.cases_total = cases.size();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!verdict[i]) continue;
    ++rep.cases_failed;
    rep.failures.push_back({cases[i].iota, cases[i].byzantine, cases[i].offsets, *verdict[i]});
  }
  return rep;
}

nlohmann::json to_json(const SchemeParams& p, const SweepReport& r) {
  auto failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    auto ids = nlohmann::json::array();
    for (auto j : f.byzantine) ids.push_back(j + 1);
    failures.push_back({{"iota", f.iota + 1}, {"byzantine_set", ids}, {"offsets", f.offsets}, {"reason", f.reason}});
  }
  return {{"params", params_summary(p)}, {"seed", r.seed},          {"byzantine_count", r.byzantine_count},
          {"cases_total", r.cases_total}, {"cases_failed", r.cases_failed}, {"failures", failures},
          {"max_tv_distance", nullptr}};
}

}  // namespace bpir::harness
