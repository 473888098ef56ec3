#pragma once

#include <concepts>
#include <cstdint>

namespace bpir::gf {

// Operations shared by PrimeField and ExtField. Element zero must be the
// value-initialized element so that polynomials can normalize without a field.
template <class F>
concept FiniteField = requires(const F& f, typename F::value_type a, std::uint64_t i) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.order() } -> std::same_as<std::uint64_t>;
  { f.from_index(i) } -> std::same_as<typename F::value_type>;
  { f.index(a) } -> std::same_as<std::uint64_t>;
};

template <FiniteField F>
using elem_t = typename F::value_type;

}  // namespace bpir::gf
