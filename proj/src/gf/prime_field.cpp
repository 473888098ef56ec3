#include "bpir/gf/prime_field.hpp"

#include <charconv>

namespace bpir::gf {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t next_prime(std::uint32_t n) {
  std::uint64_t c = n < 2 ? 2 : n;
  while (!is_prime(c)) ++c;
  if (c > PrimeField::kMaxModulus) throw InvalidParameters("no prime below 2^31 at or above " + std::to_string(n));
  return static_cast<std::uint32_t>(c);
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q < 2 || q > kMaxModulus) throw InvalidParameters("field modulus out of range: " + std::to_string(q));
  if (!is_prime(q)) throw InvalidParameters("field modulus is not prime: " + std::to_string(q));
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  check(a);
  if (a == 0) throw DivisionByZero();
  // Extended Euclid on (a, q).
  std::int64_t r0 = q_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - quot * s1;
    s0 = s1;
    s1 = tmp;
  }
  return from_int(s0);
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const {
  check(a);
  std::uint64_t result = 1 % q_, base = a;
  while (e != 0) {
    if (e & 1) result = result * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return static_cast<value_type>(result);
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::from_index(std::uint64_t i) const {
  if (i >= q_) throw IndexOutOfRange("element index " + std::to_string(i) + " outside F_" + std::to_string(q_));
  return static_cast<value_type>(i);
}

PrimeField::value_type PrimeField::parse_element(const std::string& text) const {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) throw ParseError("not a field element: '" + text + "'");
  if (v >= q_) throw FieldMismatch("value " + text + " is not in F_" + std::to_string(q_));
  return static_cast<value_type>(v);
}

}  // namespace bpir::gf
