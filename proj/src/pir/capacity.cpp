#include "bpir/pir/capacity.hpp"

#include "bpir/errors.hpp"

namespace bpir::pir {
namespace {

void require_feasible(std::size_t t, std::size_t b, std::size_t k) {
  if (2 * b + t >= k) {
    throw InvalidParameters("2b+t < k violated (t=" + std::to_string(t) + ", b=" + std::to_string(b) +
                            ", k=" + std::to_string(k) + ")");
  }
}

}  // namespace

Rational capacity(std::size_t t, std::size_t b, std::size_t k) {
  require_feasible(t, b, k);
  return Rational(static_cast<long long>(k - 2 * b - t), static_cast<long long>(k));
}

Rational capacity_finite(std::size_t t, std::size_t b, std::size_t k, std::size_t m) {
  require_feasible(t, b, k);
  if (m < 1) throw InvalidParameters("m ≥ 1 violated");
  const Rational honest(static_cast<long long>(k - 2 * b), static_cast<long long>(k));
  const Rational rho(static_cast<long long>(t), static_cast<long long>(k - 2 * b));
  Rational rho_m = 1;
  for (std::size_t i = 0; i < m; ++i) rho_m *= rho;
  return honest * (1 - rho) / (1 - rho_m);
}

std::string to_string(const Rational& x) {
  const auto num = boost::multiprecision::numerator(x);
  const auto den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace bpir::pir
