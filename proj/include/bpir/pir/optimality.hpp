#pragma once

#include <cstddef>

#include "bpir/pir/params.hpp"

namespace bpir::pir {

// File-size lower bound for balanced, rate-optimal byzantine-resistant PIR:
// (r-2b-t) | (k-2b-t) and s * delta >= k-2b-t.
struct OptimalityReport {
  bool balanced = false;            // one F_q symbol per server
  bool rate_optimal = false;        // delta == r-2b-t
  bool divisibility = false;        // (r-2b-t) | (k-2b-t)
  bool lower_bound = false;         // s * delta >= k-2b-t
  bool file_size_optimal = false;   // s * delta == k-2b-t

  bool accepted() const noexcept { return balanced && rate_optimal && divisibility && file_size_optimal; }
};

struct OptimalityInput {
  std::size_t k, t, b, r, delta, s;
};

OptimalityReport validate_optimality(const OptimalityInput& in);
OptimalityReport validate_optimality(const SchemeParams& p);

// delta = r-2b-t and the smallest s meeting the lower bound.
OptimalityInput optimality_input(std::size_t k, std::size_t t, std::size_t b, std::size_t r);

}  // namespace bpir::pir
