#pragma once

// Reed-Solomon / generalized Reed-Solomon machinery over any FiniteField:
// interpolation, encoding, Berlekamp-Welch bounded-distance decoding, an
// exhaustive oracle decoder, and dual column multipliers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bpir/errors.hpp"
#include "bpir/gf/field.hpp"
#include "bpir/gf/linalg.hpp"
#include "bpir/gf/poly.hpp"

namespace bpir::rs {

using gf::elem_t;
using gf::FiniteField;
using gf::Poly;

namespace detail {

template <FiniteField F>
void require_distinct(const F& f, std::span<const elem_t<F>> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) {
        throw DuplicatePoint("evaluation points " + std::to_string(i) + " and " + std::to_string(j) +
                             " coincide (element index " + std::to_string(f.index(xs[i])) + ")");
      }
    }
  }
}

}  // namespace detail

// Unique polynomial of degree < n through (xs[i], ys[i]).
template <FiniteField F>
Poly<elem_t<F>> lagrange_interpolate(const F& f, std::span<const elem_t<F>> xs, std::span<const elem_t<F>> ys) {
  using V = elem_t<F>;
  if (xs.empty()) throw DimensionMismatch("interpolation needs at least one point");
  if (xs.size() != ys.size()) throw DimensionMismatch("interpolation abscissae and values differ in length");
  detail::require_distinct(f, xs);
  Poly<V> acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (f.is_zero(ys[i])) continue;
    Poly<V> basis = Poly<V>::constant(f.one());
    V denom = f.one();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = gf::poly_mul(f, basis, Poly<V>{f.neg(xs[j]), f.one()});
      denom = f.mul(denom, f.sub(xs[i], xs[j]));
    }
    acc = gf::poly_add(f, acc, gf::poly_scale(f, basis, f.mul(ys[i], f.inv(denom))));
  }
  return acc;
}

// {(m_1 h(x_1), ..., m_n h(x_n)) : deg h < dim}.
template <class V>
struct GrsCode {
  std::vector<V> points;
  std::vector<V> multipliers;
  std::size_t dim = 0;

  std::size_t length() const noexcept { return points.size(); }
  // floor((n - dim) / 2).
  std::size_t radius() const noexcept { return (points.size() - dim) / 2; }
};

template <FiniteField F>
GrsCode<elem_t<F>> make_grs(const F& f, std::vector<elem_t<F>> points, std::vector<elem_t<F>> multipliers,
                            std::size_t dim) {
  if (points.size() != multipliers.size()) throw DimensionMismatch("one column multiplier per evaluation point");
  if (dim < 1 || dim > points.size()) throw InvalidParameters("code dimension must lie in [1, n]");
  if (points.size() > f.order()) throw InvalidParameters("code longer than the field");
  detail::require_distinct(f, std::span<const elem_t<F>>(points));
  for (const auto& m : multipliers) {
    if (f.is_zero(m)) throw InvalidParameters("column multipliers must be nonzero");
  }
  return {std::move(points), std::move(multipliers), dim};
}

// Plain Reed-Solomon: all multipliers one.
template <FiniteField F>
GrsCode<elem_t<F>> make_rs(const F& f, std::vector<elem_t<F>> points, std::size_t dim) {
  std::vector<elem_t<F>> ones(points.size(), f.one());
  return make_grs(f, std::move(points), std::move(ones), dim);
}

template <FiniteField F>
std::vector<elem_t<F>> grs_encode(const F& f, const GrsCode<elem_t<F>>& code, const Poly<elem_t<F>>& message) {
  if (message.degree() >= static_cast<int>(code.dim)) {
    throw DegreeTooHigh("message degree " + std::to_string(message.degree()) + " not below dimension " +
                        std::to_string(code.dim));
  }
  std::vector<elem_t<F>> word(code.length());
  for (std::size_t i = 0; i < word.size(); ++i) {
    word[i] = f.mul(code.multipliers[i], gf::poly_eval(f, message, code.points[i]));
  }
  return word;
}

template <class V>
struct DecodeResult {
  Poly<V> message;
  std::vector<std::size_t> error_positions;
  std::vector<V> corrected;

  friend bool operator==(const DecodeResult&, const DecodeResult&) = default;
};

namespace detail {

template <FiniteField F>
DecodeResult<elem_t<F>> finish(const F& f, const GrsCode<elem_t<F>>& code, Poly<elem_t<F>> message,
                               std::span<const elem_t<F>> received) {
  DecodeResult<elem_t<F>> out;
  out.corrected = grs_encode(f, code, message);
  out.message = std::move(message);
  for (std::size_t i = 0; i < received.size(); ++i) {
    if (out.corrected[i] != received[i]) out.error_positions.push_back(i);
  }
  return out;
}

}  // namespace detail

// Errors-only Berlekamp-Welch decoding up to radius floor((n - dim) / 2).
// Throws DecodeFailure when no codeword lies within the radius.
template <FiniteField F>
DecodeResult<elem_t<F>> grs_decode(const F& f, const GrsCode<elem_t<F>>& code, std::span<const elem_t<F>> received) {
  using V = elem_t<F>;
  const std::size_t n = code.length();
  if (received.size() != n) throw DimensionMismatch("received word has the wrong length");
  const std::size_t k = code.dim;
  const std::size_t tau_max = code.radius();

  std::vector<V> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = f.div(received[i], code.multipliers[i]);

  for (std::size_t tau = tau_max + 1; tau-- > 0;) {
    // Unknowns: N_0..N_{k+tau-1}, then E_0..E_{tau-1}; E is monic of degree tau.
    const std::size_t unknowns = k + 2 * tau;
    gf::Matrix<V> a(n, unknowns, f.zero());
    std::vector<V> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      V p = f.one();
      for (std::size_t d = 0; d < k + tau; ++d) {
        a(i, d) = p;
        if (d < tau) a(i, k + tau + d) = f.neg(f.mul(r[i], p));
        if (d == tau) rhs[i] = f.mul(r[i], p);
        p = f.mul(p, code.points[i]);
      }
    }
    const auto sol = gf::solve(f, a, rhs);
    if (!sol) continue;
    Poly<V> numer(std::vector<V>(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(k + tau)));
    std::vector<V> e_coeffs(sol->begin() + static_cast<std::ptrdiff_t>(k + tau), sol->end());
    e_coeffs.push_back(f.one());
    Poly<V> locator(std::move(e_coeffs));
    auto [quot, rem] = gf::poly_divmod(f, numer, locator);
    if (!rem.is_zero() || quot.degree() >= static_cast<int>(k)) continue;
    auto result = detail::finish(f, code, std::move(quot), received);
    if (result.error_positions.size() > tau_max) continue;
    return result;
  }
  throw DecodeFailure("no codeword within distance " + std::to_string(tau_max) + " of the received word");
}

// Exhaustive decoder over the full codebook; reference for grs_decode.
template <FiniteField F>
class OracleDecoder {
 public:
  using V = elem_t<F>;
  static constexpr std::uint64_t kMaxCodewords = std::uint64_t{1} << 20;

  OracleDecoder(const F& f, GrsCode<V> code) : field_(f), code_(std::move(code)) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code_.dim; ++i) {
      total *= f.order();
      if (total > kMaxCodewords) throw EnumerationTooLarge("oracle decoding needs more than 2^20 codewords");
    }
    codebook_.reserve(total);
    std::vector<V> coeffs(code_.dim);
    for (std::uint64_t m = 0; m < total; ++m) {
      std::uint64_t v = m;
      for (auto& c : coeffs) {
        c = f.from_index(v % f.order());
        v /= f.order();
      }
      codebook_.emplace(key(grs_encode(f, code_, Poly<V>(coeffs))), m);
    }
    codewords_ = total;
  }

  // The unique codeword within the radius, or nullopt.
  std::optional<DecodeResult<V>> decode(std::span<const V> received) const {
    if (received.size() != code_.length()) throw DimensionMismatch("received word has the wrong length");
    std::vector<std::uint64_t> found;
    if (ball_size() <= codewords_) {
      search_ball(received, found);
    } else {
      scan(received, found);
    }
    if (found.empty()) return std::nullopt;
    if (found.size() > 1) throw InternalError("two codewords inside the unique-decoding radius");
    std::vector<V> coeffs(code_.dim);
    std::uint64_t v = found.front();
    for (auto& c : coeffs) {
      c = field_.from_index(v % field_.order());
      v /= field_.order();
    }
    return detail::finish(field_, code_, Poly<V>(std::move(coeffs)), received);
  }

  std::uint64_t codewords() const noexcept { return codewords_; }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const noexcept {
      std::uint64_t h = 1469598103934665603ull;
      for (auto x : k) h = (h ^ x) * 1099511628211ull;
      return static_cast<std::size_t>(h);
    }
  };

  std::vector<std::uint64_t> key(const std::vector<V>& word) const {
    std::vector<std::uint64_t> k(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) k[i] = field_.index(word[i]);
    return k;
  }

  // Words within the radius of a point.
  double ball_size() const {
    const double n = static_cast<double>(code_.length());
    const double q1 = static_cast<double>(field_.order() - 1);
    double total = 0, binom = 1, pw = 1;
    for (std::size_t w = 0; w <= code_.radius(); ++w) {
      total += binom * pw;
      binom = binom * (n - static_cast<double>(w)) / static_cast<double>(w + 1);
      pw *= q1;
    }
    return total;
  }

  void search_ball(std::span<const V> received, std::vector<std::uint64_t>& found) const {
    std::vector<std::uint64_t> word = key(std::vector<V>(received.begin(), received.end()));
    const std::vector<std::uint64_t> original = word;
    std::vector<std::size_t> positions;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
      if (auto it = codebook_.find(word); it != codebook_.end()) {
        if (std::find(found.begin(), found.end(), it->second) == found.end()) found.push_back(it->second);
      }
      if (left == 0) return;
      for (std::size_t p = start; p < word.size(); ++p) {
        for (std::uint64_t v = 0; v < field_.order(); ++v) {
          if (v == original[p]) continue;
          word[p] = v;
          rec(p + 1, left - 1);
        }
        word[p] = original[p];
      }
    };
    rec(0, code_.radius());
  }

  void scan(std::span<const V> received, std::vector<std::uint64_t>& found) const {
    const auto target = key(std::vector<V>(received.begin(), received.end()));
    for (const auto& [word, m] : codebook_) {
      std::size_t dist = 0;
      for (std::size_t i = 0; i < word.size(); ++i) dist += word[i] != target[i];
      if (dist <= code_.radius()) found.push_back(m);
    }
  }

  F field_;
  GrsCode<V> code_;
  std::unordered_map<std::vector<std::uint64_t>, std::uint64_t, KeyHash> codebook_;
  std::uint64_t codewords_ = 0;
};

template <FiniteField F>
std::optional<DecodeResult<elem_t<F>>> oracle_decode(const F& f, const GrsCode<elem_t<F>>& code,
                                                     std::span<const elem_t<F>> received) {
  return OracleDecoder<F>(f, code).decode(received);
}

// Column multipliers of the dual of RS over alpha ++ beta:
// u_i = prod_{l != i}(a_i - a_l)^-1 prod_j (a_i - b_j)^-1,
// v_j = prod_l (b_j - a_l)^-1 prod_{l != j}(b_j - b_l)^-1.
template <FiniteField F>
std::pair<std::vector<elem_t<F>>, std::vector<elem_t<F>>> dual_multipliers(const F& f,
                                                                            std::span<const elem_t<F>> alpha,
                                                                            std::span<const elem_t<F>> beta) {
  using V = elem_t<F>;
  std::vector<V> all(alpha.begin(), alpha.end());
  all.insert(all.end(), beta.begin(), beta.end());
  detail::require_distinct(f, std::span<const V>(all));
  std::vector<V> mult(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    V prod = f.one();
    for (std::size_t l = 0; l < all.size(); ++l) {
      if (l != i) prod = f.mul(prod, f.sub(all[i], all[l]));
    }
    mult[i] = f.inv(prod);
  }
  std::vector<V> u(mult.begin(), mult.begin() + static_cast<std::ptrdiff_t>(alpha.size()));
  std::vector<V> v(mult.begin() + static_cast<std::ptrdiff_t>(alpha.size()), mult.end());
  return {std::move(u), std::move(v)};
}

}  // namespace bpir::rs
