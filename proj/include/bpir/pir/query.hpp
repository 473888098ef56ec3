#pragma once

#include <cstddef>
#include <vector>

#include "bpir/gf/poly.hpp"
#include "bpir/pir/kernels.hpp"
#include "bpir/pir/params.hpp"
#include "bpir/pir/rng.hpp"

namespace bpir::pir {

// Lagrange weights of the query curve at a point x: the curve value there is
// [row == iota] * lambda[c] + sum_h mu[h] * blinding[h](row, c).
struct CurveWeights {
  std::vector<ExtElem> lambda;  // one per alpha point
  std::vector<ExtElem> mu;      // one per chi point
};

CurveWeights curve_weights(const SchemeParams& p, ExtElem x);

struct QuerySet {
  std::vector<Grid> per_server;  // query to server j is the curve at beta_j
  // Client-side secrets, never sent.
  std::size_t iota = 0;
  std::vector<Grid> blinding;
};

// Draws t uniform m x delta blinding arrays from rng and evaluates the curve at
// every beta_j. iota is 0-based.
QuerySet gen_queries(const SchemeParams& p, std::size_t iota, const CounterRng& rng,
                     ExecPolicy policy = ExecPolicy::parallel);

// Same with caller-chosen blinding arrays (zero arrays expose phi directly).
QuerySet gen_queries_with_blinding(const SchemeParams& p, std::size_t iota, std::vector<Grid> blinding,
                                   ExecPolicy policy = ExecPolicy::parallel);

// The degree <= t + delta - 1 curve of one database entry, interpolated from
// its alpha and chi constraints.
gf::Poly<ExtElem> entry_curve(const SchemeParams& p, const QuerySet& qs, std::size_t row, std::size_t col);

}  // namespace bpir::pir
