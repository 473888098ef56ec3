#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bpir/errors.hpp"
#include "bpir/gf/field.hpp"

namespace bpir::gf {

// Dense univariate polynomial, lowest degree first. The zero polynomial has no
// coefficients; otherwise the leading coefficient is nonzero.
template <class V>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<V> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<V> coeffs) : coeffs_(coeffs) { normalize(); }

  static Poly constant(V c) { return Poly(std::vector<V>{c}); }
  static Poly monomial(std::size_t degree, V c) {
    std::vector<V> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<V>& coeffs() const noexcept { return coeffs_; }
  // Coefficient of xi^d; zero beyond the degree.
  V coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : V{}; }
  V leading() const { return coeffs_.empty() ? V{} : coeffs_.back(); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == V{}) coeffs_.pop_back();
  }

  std::vector<V> coeffs_;
};

template <FiniteField F>
Poly<elem_t<F>> poly_add(const F& f, const Poly<elem_t<F>>& a, const Poly<elem_t<F>>& b) {
  std::vector<elem_t<F>> out(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly<elem_t<F>>(std::move(out));
}

template <FiniteField F>
Poly<elem_t<F>> poly_sub(const F& f, const Poly<elem_t<F>>& a, const Poly<elem_t<F>>& b) {
  std::vector<elem_t<F>> out(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly<elem_t<F>>(std::move(out));
}

template <FiniteField F>
Poly<elem_t<F>> poly_scale(const F& f, const Poly<elem_t<F>>& a, elem_t<F> c) {
  std::vector<elem_t<F>> out(a.coeffs());
  for (auto& x : out) x = f.mul(x, c);
  return Poly<elem_t<F>>(std::move(out));
}

template <FiniteField F>
Poly<elem_t<F>> poly_mul(const F& f, const Poly<elem_t<F>>& a, const Poly<elem_t<F>>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<elem_t<F>> out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a.coeffs()[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return Poly<elem_t<F>>(std::move(out));
}

// Quotient and remainder of a by nonzero b.
template <FiniteField F>
std::pair<Poly<elem_t<F>>, Poly<elem_t<F>>> poly_divmod(const F& f, const Poly<elem_t<F>>& a,
                                                          const Poly<elem_t<F>>& b) {
  using V = elem_t<F>;
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {Poly<V>{}, a};
  std::vector<V> rem(a.coeffs());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<V> quot(rem.size() - db, f.zero());
  const V lead_inv = f.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const V c = f.mul(rem[i], lead_inv);
    quot[i - db] = c;
    if (f.is_zero(c)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeffs()[j]));
  }
  rem.resize(db);
  return {Poly<V>(std::move(quot)), Poly<V>(std::move(rem))};
}

template <FiniteField F>
Poly<elem_t<F>> poly_mod(const F& f, const Poly<elem_t<F>>& a, const Poly<elem_t<F>>& b) {
  return poly_divmod(f, a, b).second;
}

// Horner evaluation.
template <FiniteField F>
elem_t<F> poly_eval(const F& f, const Poly<elem_t<F>>& p, elem_t<F> x) {
  elem_t<F> acc = f.zero();
  for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p.coeffs()[i]);
  return acc;
}

template <FiniteField F>
Poly<elem_t<F>> poly_monic(const F& f, const Poly<elem_t<F>>& p) {
  if (p.is_zero()) return p;
  return poly_scale(f, p, f.inv(p.leading()));
}

// Monic gcd; gcd(0, 0) = 0.
template <FiniteField F>
Poly<elem_t<F>> poly_gcd(const F& f, Poly<elem_t<F>> a, Poly<elem_t<F>> b) {
  while (!b.is_zero()) {
    auto r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

// base^e mod m.
template <FiniteField F>
Poly<elem_t<F>> poly_powmod(const F& f, Poly<elem_t<F>> base, std::uint64_t e, const Poly<elem_t<F>>& m) {
  Poly<elem_t<F>> result = poly_mod(f, Poly<elem_t<F>>::constant(f.one()), m);
  base = poly_mod(f, base, m);
  while (e != 0) {
    if (e & 1) result = poly_mod(f, poly_mul(f, result, base), m);
    base = poly_mod(f, poly_mul(f, base, base), m);
    e >>= 1;
  }
  return result;
}

// prod_i (xi - roots[i]).
template <FiniteField F>
Poly<elem_t<F>> poly_from_roots(const F& f, std::span<const elem_t<F>> roots) {
  Poly<elem_t<F>> acc = Poly<elem_t<F>>::constant(f.one());
  for (const auto& r : roots) acc = poly_mul(f, acc, Poly<elem_t<F>>{f.neg(r), f.one()});
  return acc;
}

}  // namespace bpir::gf
