#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bpir/gf/poly.hpp"
#include "bpir/gf/prime_field.hpp"

namespace bpir::gf {

// Element of F_{q^s}, packed as the integer sum_d c_d q^d of its coordinates
// c_d with respect to the power basis of the construction modulus.
struct ExtElem {
  std::uint64_t code = 0;

  friend auto operator<=>(const ExtElem&, const ExtElem&) = default;
};

using BasePoly = Poly<std::uint32_t>;

// F_{q^s} = F_q[xi] / (modulus). With s = 1 this is F_q itself.
class ExtField {
 public:
  using value_type = ExtElem;
  using Coords = std::array<std::uint32_t, 32>;

  static constexpr unsigned kMaxDegree = 32;
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;

  // modulus must be monic and irreducible over base; q^s <= 2^32.
  ExtField(PrimeField base, BasePoly modulus);

  // Extension built on the lexicographically first monic irreducible of degree s.
  static ExtField with_degree(PrimeField base, unsigned s);

  // Inverse of description(): "q=<prime>;s=<deg>;mod=<c0:c1:...:1>".
  static ExtField from_description(std::string_view text);
  std::string description() const;

  const PrimeField& base() const noexcept { return base_; }
  unsigned degree() const noexcept { return s_; }
  const BasePoly& modulus() const noexcept { return modulus_; }
  std::uint64_t order() const noexcept { return order_; }

  ExtElem zero() const noexcept { return {}; }
  ExtElem one() const noexcept { return {1}; }
  bool is_zero(ExtElem a) const noexcept { return a.code == 0; }
  bool contains(ExtElem a) const noexcept { return a.code < order_; }

  ExtElem add(ExtElem a, ExtElem b) const;
  ExtElem sub(ExtElem a, ExtElem b) const;
  ExtElem neg(ExtElem a) const;
  ExtElem mul(ExtElem a, ExtElem b) const;
  ExtElem inv(ExtElem a) const;
  ExtElem div(ExtElem a, ExtElem b) const { return mul(a, inv(b)); }
  ExtElem pow(ExtElem a, std::uint64_t e) const;

  // x -> x^q.
  ExtElem frobenius(ExtElem a) const { return pow(a, base_.characteristic()); }
  // sum_{i<s} x^{q^i}; always lands in F_q.
  std::uint32_t trace(ExtElem a) const;

  ExtElem embed(std::uint32_t a) const;
  bool in_base(ExtElem a) const noexcept { return a.code < base_.characteristic(); }
  // Throws FieldMismatch when a has nonzero coordinates above degree 0.
  std::uint32_t to_base(ExtElem a) const;
  // The class of xi.
  ExtElem generator() const;

  Coords coords(ExtElem a) const;
  ExtElem from_coords(std::span<const std::uint32_t> c) const;

  ExtElem from_index(std::uint64_t i) const;
  std::uint64_t index(ExtElem a) const { return a.code; }

  // Decimal coordinates joined by ':' lowest degree first, e.g. "3:0:1".
  std::string format(ExtElem a) const;
  ExtElem parse_element(std::string_view text) const;

  friend bool operator==(const ExtField& a, const ExtField& b) {
    return a.base_ == b.base_ && a.modulus_ == b.modulus_;
  }

 private:
  void check(ExtElem a) const;

  PrimeField base_;
  BasePoly modulus_;
  unsigned s_;
  std::uint64_t order_;
};

// Base-field polynomial evaluated at an extension point.
std::uint32_t eval_base(const PrimeField& f, const BasePoly& p, std::uint32_t x);
ExtElem eval_at_ext(const ExtField& ext, const BasePoly& p, ExtElem x);
Poly<ExtElem> embed_poly(const ExtField& ext, const BasePoly& p);

std::string format_base_poly(const BasePoly& p);

}  // namespace bpir::gf
