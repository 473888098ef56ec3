#include "bpir/pir/retrieve.hpp"

#include <algorithm>

namespace bpir::pir {
namespace {

void require_distinct_servers(const SchemeParams& p, const AnswerSet& answers) {
  if (answers.servers.size() != answers.values.size()) throw DimensionMismatch("one value per responding server");
  std::vector<bool> seen(p.k, false);
  for (auto j : answers.servers) {
    if (j >= p.k) throw IndexOutOfRange("server " + std::to_string(j + 1) + " outside [1, " + std::to_string(p.k) + "]");
    if (seen[j]) throw InvalidParameters("server " + std::to_string(j + 1) + " answered twice");
    seen[j] = true;
  }
}

}  // namespace

rs::GrsCode<std::uint32_t> trace_code(const SchemeParams& p) {
  const auto& base = p.base();
  auto [unused, w] = rs::dual_multipliers(base, std::span<const std::uint32_t>{}, std::span<const std::uint32_t>(p.omega_beta));
  return rs::make_grs(base, p.omega_beta, std::move(w), p.k - 2 * p.b);
}

Retrieval retrieve_from_r(const SchemeParams& p, const AnswerSet& answers) {
  if (answers.mode != AnswerMode::full) throw InvalidParameters("retrieval from r servers needs full-mode answers");
  require_distinct_servers(p, answers);
  if (answers.servers.size() != p.r) {
    throw DimensionMismatch("expected answers from exactly r=" + std::to_string(p.r) + " servers, got " +
                            std::to_string(answers.servers.size()));
  }
  const auto& f = p.field;
  std::vector<ExtElem> points;
  for (auto j : answers.servers) points.push_back(p.beta(j));
  const auto code = rs::make_rs(f, std::move(points), p.r - 2 * p.b);
  rs::DecodeResult<ExtElem> decoded;
  try {
    decoded = rs::grs_decode(f, code, std::span<const ExtElem>(answers.values));
  } catch (const DecodeFailure& e) {
    throw ByzantineBudgetExceeded(std::string("byzantine budget exceeded: ") + e.what());
  }
  Retrieval out;
  for (auto alpha : p.omega_alpha) out.file.push_back(gf::poly_eval(f, decoded.message, alpha));
  for (auto pos : decoded.error_positions) out.error_servers.push_back(answers.servers[pos]);
  std::sort(out.error_servers.begin(), out.error_servers.end());
  return out;
}

Retrieval retrieve_from_k(const SchemeParams& p, const AnswerSet& answers) {
  if (answers.mode != AnswerMode::trace) throw InvalidParameters("retrieval from k servers needs trace-mode answers");
  require_distinct_servers(p, answers);
  if (answers.servers.size() != p.k) {
    throw DimensionMismatch("trace retrieval needs all k=" + std::to_string(p.k) + " servers, got " +
                            std::to_string(answers.servers.size()));
  }
  const auto& base = p.base();
  const auto& f = p.field;

  std::vector<std::uint32_t> traces(p.k);
  for (std::size_t i = 0; i < p.k; ++i) traces[answers.servers[i]] = f.to_base(answers.values[i]);

  std::vector<std::uint32_t> scale(p.k), scaled(p.k);
  for (std::size_t j = 0; j < p.k; ++j) {
    scale[j] = min_poly_product(p, p.omega_beta[j]);
    if (scale[j] == 0) throw InternalError("minimal polynomial vanishes at a server point");
    scaled[j] = base.mul(scale[j], traces[j]);
  }
  rs::DecodeResult<std::uint32_t> decoded;
  try {
    decoded = rs::grs_decode(base, trace_code(p), std::span<const std::uint32_t>(scaled));
  } catch (const DecodeFailure& e) {
    throw ByzantineBudgetExceeded(std::string("byzantine budget exceeded: ") + e.what());
  }
  for (std::size_t j = 0; j < p.k; ++j) traces[j] = base.div(decoded.corrected[j], scale[j]);

  Retrieval out;
  out.error_servers = decoded.error_positions;
  for (std::size_t i = 0; i < p.delta; ++i) {
    std::vector<std::uint32_t> weight(p.k);
    for (std::size_t j = 0; j < p.k; ++j) weight[j] = base.mul(traces[j], min_poly_product(p, p.omega_beta[j], i));
    ExtElem x = f.zero();
    for (std::size_t d = 0; d < p.s; ++d) {
      std::uint32_t tr = 0;  // Tr(eta_d phi(alpha_i)) up to sign
      for (std::size_t j = 0; j < p.k; ++j) {
        tr = base.add(tr, base.mul(gf::eval_base(base, p.recovery_polys[i][d], p.omega_beta[j]), weight[j]));
      }
      x = f.sub(x, f.mul(p.dual_pair.theta[d], f.embed(tr)));
    }
    out.file.push_back(x);
  }
  return out;
}

Retrieval retrieve(const SchemeParams& p, const AnswerSet& answers) {
  return answers.mode == AnswerMode::full ? retrieve_from_r(p, answers) : retrieve_from_k(p, answers);
}

}  // namespace bpir::pir
