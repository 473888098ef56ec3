#pragma once

#include <cstdint>
#include <string>

#include "bpir/errors.hpp"

namespace bpir::gf {

bool is_prime(std::uint64_t n) noexcept;

// Smallest prime >= n.
std::uint32_t next_prime(std::uint32_t n);

// The prime field F_q. Elements are canonical representatives in [0, q).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  static constexpr std::uint32_t kMaxModulus = 1u << 31;

  explicit PrimeField(std::uint32_t q);

  std::uint32_t characteristic() const noexcept { return q_; }
  std::uint64_t order() const noexcept { return q_; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  bool contains(value_type a) const noexcept { return a < q_; }
  bool is_zero(value_type a) const noexcept { return a == 0; }

  value_type add(value_type a, value_type b) const {
    check(a);
    check(b);
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= q_ ? s - q_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    check(a);
    check(b);
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + q_ - b);
  }
  value_type neg(value_type a) const {
    check(a);
    return a == 0 ? 0 : q_ - a;
  }
  value_type mul(value_type a, value_type b) const {
    check(a);
    check(b);
    return static_cast<value_type>(std::uint64_t{a} * b % q_);
  }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type pow(value_type a, std::uint64_t e) const;

  // Reduces an arbitrary integer into the field.
  value_type from_int(std::int64_t v) const noexcept;

  // Enumeration order used by exhaustive searches: element i is the integer i.
  value_type from_index(std::uint64_t i) const;
  std::uint64_t index(value_type a) const { return a; }

  std::string format(value_type a) const { return std::to_string(a); }
  value_type parse_element(const std::string& text) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  void check(value_type a) const {
    if (a >= q_) throw FieldMismatch("value " + std::to_string(a) + " is not in F_" + std::to_string(q_));
  }

  std::uint32_t q_;
};

}  // namespace bpir::gf
