#include "bpir/harness/audit.hpp"

#include <map>

#include "bpir/gf/linalg.hpp"
#include "bpir/pir/query.hpp"

namespace bpir::harness {

std::vector<std::vector<std::size_t>> subsets(std::size_t k, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n > k) return out;
  std::vector<std::size_t> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == k - n + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

using View = std::vector<std::uint64_t>;
using Histogram = std::map<View, std::uint64_t>;

// histogram[entry] of the coalition's view of that entry, over every blinding
// value of the entry.
std::vector<Histogram> entry_histograms(const SchemeParams& p, const std::vector<std::size_t>& subset, std::size_t iota,
                                        std::uint64_t draws) {
  const auto& f = p.field;
  const std::size_t entries = p.m * p.delta;
  std::vector<Histogram> hist(entries);
  std::vector<Grid> blinding(p.t, Grid(p.m, p.delta, f.zero()));
  for (std::uint64_t d = 0; d < draws; ++d) {
    // Every entry gets the same blinding tuple; entries are independent, so
    // one evaluation covers all of them.
    std::uint64_t v = d;
    for (auto& g : blinding) {
      const ExtElem x = f.from_index(v % f.order());
      v /= f.order();
      for (auto& e : g.flat()) e = x;
    }
    const auto qs = pir::gen_queries_with_blinding(p, iota, blinding, pir::ExecPolicy::serial);
    for (std::size_t e = 0; e < entries; ++e) {
      View view;
      for (auto j : subset) view.push_back(f.index(qs.per_server[j].flat()[e]));
      ++hist[e][view];
    }
  }
  return hist;
}

Rational tv_distance(const Histogram& a, const Histogram& b, std::uint64_t draws) {
  Rational sum = 0;
  for (const auto& [view, n] : a) {
    const auto it = b.find(view);
    const std::uint64_t other = it == b.end() ? 0 : it->second;
    sum += n > other ? n - other : other - n;
  }
  for (const auto& [view, n] : b) {
    if (!a.contains(view)) sum += n;
  }
  return sum / (2 * Rational(draws));
}

void audit_exhaustive(const SchemeParams& p, const std::vector<std::size_t>& subset, AuditReport& rep) {
  std::uint64_t draws = 1;
  for (std::size_t h = 0; h < p.t; ++h) draws *= p.field.order();
  std::vector<std::vector<Histogram>> per_iota;
  for (std::size_t iota = 0; iota < p.m; ++iota) per_iota.push_back(entry_histograms(p, subset, iota, draws));
  for (std::size_t a = 0; a < p.m; ++a) {
    for (std::size_t b = a + 1; b < p.m; ++b) {
      for (std::size_t e = 0; e < p.m * p.delta; ++e) {
        const Rational d = tv_distance(per_iota[a][e], per_iota[b][e], draws);
        ++rep.cases_total;
        if (d > *rep.max_tv_distance) rep.max_tv_distance = d;
        if (d != 0) {
          ++rep.cases_failed;
          rep.failures.push_back({subset, "entry " + std::to_string(e + 1) + " distinguishes iota " + std::to_string(a + 1) +
                                              " from " + std::to_string(b + 1) + " (distance " + pir::to_string(d) + ")"});
        }
      }
    }
  }
}

void audit_transfer(const SchemeParams& p, const std::vector<std::size_t>& subset, AuditReport& rep) {
  // Row per coalition member, column per blinding array: mu_h(beta_j). The
  // deterministic indicator term only shifts the view, so uniformity holds iff
  // this map has full row rank (square and invertible when |subset| = t).
  const auto& f = p.field;
  gf::Matrix<ExtElem> m(subset.size(), p.t, f.zero());
  for (std::size_t r = 0; r < subset.size(); ++r) {
    const auto w = pir::curve_weights(p, p.beta(subset[r]));
    for (std::size_t h = 0; h < p.t; ++h) m(r, h) = w.mu[h];
  }
  ++rep.cases_total;
  if (gf::rank(f, m) != subset.size()) {
    ++rep.cases_failed;
    rep.failures.push_back({subset, "transfer matrix is singular"});
  }
}

}  // namespace

AuditReport privacy_audit(const SchemeParams& p, const std::vector<std::size_t>& subset, AuditMode mode,
                          std::uint64_t seed) {
  AuditReport rep;
  rep.mode = mode;
  rep.seed = seed;
  for (auto j : subset) {
    if (j >= p.k) throw IndexOutOfRange("server " + std::to_string(j + 1) + " outside [1, " + std::to_string(p.k) + "]");
  }
  if (subset.size() > p.t) {
    rep.verdict = "beyond threshold, privacy not claimed";
    return rep;
  }
  if (mode == AuditMode::exhaustive) {
    std::uint64_t draws = 1;
    for (std::size_t h = 0; h < p.t; ++h) {
      draws *= p.field.order();
      if (draws > kAuditEnumerationLimit) {
        throw EnumerationTooLarge("exhaustive audit needs (q^s)^t ≤ 2^16 blinding values per entry; use transfer-matrix mode");
      }
    }
    rep.max_tv_distance = Rational(0);
  }
  const auto coalitions = subset.empty() ? subsets(p.k, p.t) : std::vector<std::vector<std::size_t>>{subset};
  for (const auto& c : coalitions) {
    if (mode == AuditMode::exhaustive) {
      audit_exhaustive(p, c, rep);
    } else {
      audit_transfer(p, c, rep);
    }
  }
  rep.verdict = rep.cases_failed == 0 ? "private" : "privacy violated";
  return rep;
}

nlohmann::json to_json(const SchemeParams& p, const AuditReport& r) {
  auto failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    auto ids = nlohmann::json::array();
    for (auto j : f.subset) ids.push_back(j + 1);
    failures.push_back({{"subset", ids}, {"detail", f.detail}});
  }
  return {{"params", params_summary(p)},
          {"mode", r.mode == AuditMode::exhaustive ? "exhaustive" : "transfer-matrix"},
          {"seed", r.seed},
          {"cases_total", r.cases_total},
          {"cases_failed", r.cases_failed},
          {"failures", failures},
          {"max_tv_distance", r.max_tv_distance ? nlohmann::json(pir::to_string(*r.max_tv_distance)) : nlohmann::json(nullptr)},
          {"verdict", r.verdict}};
}

}  // namespace bpir::harness
