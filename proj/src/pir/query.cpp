#include "bpir/pir/query.hpp"

#include "bpir/rs/grs.hpp"

namespace bpir::pir {

CurveWeights curve_weights(const SchemeParams& p, ExtElem x) {
  const auto& f = p.field;
  std::vector<ExtElem> nodes = p.omega_alpha;
  nodes.insert(nodes.end(), p.omega_chi.begin(), p.omega_chi.end());
  std::vector<ExtElem> weights(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ExtElem num = f.one(), den = f.one();
    for (std::size_t l = 0; l < nodes.size(); ++l) {
      if (l == i) continue;
      num = f.mul(num, f.sub(x, nodes[l]));
      den = f.mul(den, f.sub(nodes[i], nodes[l]));
    }
    weights[i] = f.div(num, den);
  }
  CurveWeights w;
  w.lambda.assign(weights.begin(), weights.begin() + static_cast<std::ptrdiff_t>(p.delta));
  w.mu.assign(weights.begin() + static_cast<std::ptrdiff_t>(p.delta), weights.end());
  return w;
}

QuerySet gen_queries(const SchemeParams& p, std::size_t iota, const CounterRng& rng, ExecPolicy policy) {
  std::vector<Grid> blinding;
  blinding.reserve(p.t);
  for (std::size_t h = 0; h < p.t; ++h) blinding.push_back(draw_uniform_grid(p.field, rng.substream(h + 1), p.m, p.delta, policy));
  return gen_queries_with_blinding(p, iota, std::move(blinding), policy);
}

QuerySet gen_queries_with_blinding(const SchemeParams& p, std::size_t iota, std::vector<Grid> blinding,
                                   ExecPolicy policy) {
  if (iota >= p.m) throw IndexOutOfRange("file index " + std::to_string(iota + 1) + " outside [1, " + std::to_string(p.m) + "]");
  if (blinding.size() != p.t) throw DimensionMismatch("need exactly t blinding arrays");
  QuerySet qs;
  qs.iota = iota;
  qs.blinding = std::move(blinding);
  qs.per_server.reserve(p.k);
  for (std::size_t j = 0; j < p.k; ++j) {
    const auto w = curve_weights(p, p.beta(j));
    Grid out(p.m, p.delta);
    evaluate_curve(p.field, iota, w.lambda, w.mu, qs.blinding, out, policy);
    qs.per_server.push_back(std::move(out));
  }
  return qs;
}

gf::Poly<ExtElem> entry_curve(const SchemeParams& p, const QuerySet& qs, std::size_t row, std::size_t col) {
  std::vector<ExtElem> xs = p.omega_alpha, ys;
  for (std::size_t i = 0; i < p.delta; ++i) ys.push_back(row == qs.iota && col == i ? p.field.one() : p.field.zero());
  for (std::size_t h = 0; h < p.t; ++h) {
    xs.push_back(p.omega_chi[h]);
    ys.push_back(qs.blinding[h](row, col));
  }
  return rs::lagrange_interpolate(p.field, std::span<const ExtElem>(xs), std::span<const ExtElem>(ys));
}

}  // namespace bpir::pir
