#include "bpir/pir/optimality.hpp"

namespace bpir::pir {

OptimalityReport validate_optimality(const OptimalityInput& in) {
  OptimalityReport rep;
  if (in.k < 2 * in.b + in.t || in.r < 2 * in.b + in.t) return rep;
  const std::size_t payload = in.k - 2 * in.b - in.t;
  const std::size_t sub = in.r - 2 * in.b - in.t;
  rep.balanced = true;
  rep.rate_optimal = in.delta == sub && sub > 0;
  rep.divisibility = sub > 0 && payload % sub == 0;
  rep.lower_bound = in.s * in.delta >= payload;
  rep.file_size_optimal = in.s * in.delta == payload;
  return rep;
}

OptimalityReport validate_optimality(const SchemeParams& p) {
  return validate_optimality(OptimalityInput{p.k, p.t, p.b, p.r, p.delta, p.s});
}

OptimalityInput optimality_input(std::size_t k, std::size_t t, std::size_t b, std::size_t r) {
  OptimalityInput in{k, t, b, r, 0, 0};
  if (r <= 2 * b + t || k < 2 * b + t) return in;
  in.delta = r - 2 * b - t;
  const std::size_t payload = k - 2 * b - t;
  in.s = (payload + in.delta - 1) / in.delta;
  return in;
}

}  // namespace bpir::pir
