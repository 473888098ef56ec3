#include "bpir/gf/irreducible.hpp"

#include <algorithm>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace bpir::gf {
namespace {

std::vector<unsigned> proper_divisors(unsigned s) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d < s; ++d) {
    if (s % d == 0) out.push_back(d);
  }
  return out;
}

int moebius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Splits a monic product of distinct linear factors over ext until one root
// remains.
ExtElem one_root(const ExtField& ext, Poly<ExtElem> g) {
  const std::uint64_t order = ext.order();
  const bool even = order % 2 == 0;
  const Poly<ExtElem> y{ext.zero(), ext.one()};
  std::uint64_t counter = 0;
  while (g.degree() > 1) {
    if (counter > 64 * (order + 64)) throw InternalError("root splitting did not converge");
    const ExtElem delta = ext.from_index(mix64(counter++) % order);
    Poly<ExtElem> h;
    if (even) {
      // Absolute trace of delta*y modulo g.
      Poly<ExtElem> term = poly_mod(ext, Poly<ExtElem>{ext.zero(), delta}, g);
      h = term;
      std::uint64_t bits = 1;
      while ((std::uint64_t{1} << bits) < order) {
        term = poly_mod(ext, poly_mul(ext, term, term), g);
        h = poly_add(ext, h, term);
        ++bits;
      }
    } else {
      h = poly_powmod(ext, Poly<ExtElem>{delta, ext.one()}, (order - 1) / 2, g);
      h = poly_sub(ext, h, Poly<ExtElem>::constant(ext.one()));
    }
    auto d = poly_gcd(ext, g, h);
    if (d.degree() <= 0 || d.degree() >= g.degree()) continue;
    auto other = poly_monic(ext, poly_divmod(ext, g, d).first);
    g = d.degree() <= other.degree() ? std::move(d) : std::move(other);
  }
  if (g.degree() != 1) throw InternalError("polynomial has no root in the extension");
  return ext.neg(ext.div(g.coeff(0), g.coeff(1)));
}

}  // namespace

bool is_irreducible(const PrimeField& f, const BasePoly& poly) {
  const int deg = poly.degree();
  if (deg < 1) return false;
  if (deg == 1) return true;
  const auto monic = poly_monic(f, poly);
  const BasePoly xi{0u, 1u};
  const unsigned s = static_cast<unsigned>(deg);
  const auto divisors = proper_divisors(s);
  BasePoly power = xi;  // xi^{q^d} mod poly
  for (unsigned d = 1; d <= s; ++d) {
    power = poly_powmod(f, power, f.characteristic(), monic);
    if (d < s && std::find(divisors.begin(), divisors.end(), d) != divisors.end()) {
      if (poly_gcd(f, poly_sub(f, power, xi), monic).degree() != 0) return false;
    }
  }
  return poly_sub(f, power, xi).is_zero();
}

std::uint64_t count_irreducibles(std::uint32_t q, unsigned s) {
  using boost::multiprecision::cpp_int;
  if (s == 0) return 0;
  cpp_int total = 0;
  for (unsigned d = 1; d <= s; ++d) {
    if (s % d != 0) continue;
    const int mu = moebius(d);
    if (mu == 0) continue;
    cpp_int p = boost::multiprecision::pow(cpp_int(q), s / d);
    total += mu * p;
  }
  total /= s;
  if (total > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return total.convert_to<std::uint64_t>();
}

std::vector<BasePoly> find_irreducibles(const PrimeField& f, unsigned s, std::size_t n) {
  if (s == 0) throw InvalidParameters("degree must be at least 1");
  const auto available = count_irreducibles(f.characteristic(), s);
  if (n > available) {
    throw ExhaustionError("only " + std::to_string(available) + " monic irreducibles of degree " + std::to_string(s) +
                          " over F_" + std::to_string(f.characteristic()) + ", " + std::to_string(n) + " requested");
  }
  std::vector<BasePoly> out;
  const std::uint64_t q = f.characteristic();
  std::vector<std::uint32_t> coeffs(s + 1, 0);
  coeffs[s] = 1;
  for (std::uint64_t code = 0; out.size() < n; ++code) {
    std::uint64_t v = code;
    for (unsigned d = 0; d < s; ++d) {
      coeffs[d] = static_cast<std::uint32_t>(v % q);
      v /= q;
    }
    if (v != 0) break;
    BasePoly candidate(coeffs);
    if (is_irreducible(f, candidate)) out.push_back(std::move(candidate));
  }
  if (out.size() < n) throw ExhaustionError("irreducible scan exhausted");
  return out;
}

std::vector<ExtElem> conjugates(const ExtField& ext, ExtElem a) {
  std::vector<ExtElem> orbit{a};
  for (ExtElem c = ext.frobenius(a); c != a; c = ext.frobenius(c)) orbit.push_back(c);
  return orbit;
}

BasePoly minimal_poly(const ExtField& ext, ExtElem a) {
  const auto orbit = conjugates(ext, a);
  const auto product = poly_from_roots(ext, std::span<const ExtElem>(orbit));
  std::vector<std::uint32_t> coeffs;
  for (auto c : product.coeffs()) {
    if (!ext.in_base(c)) throw InternalError("minimal polynomial coefficient outside the base field");
    coeffs.push_back(ext.to_base(c));
  }
  return BasePoly(std::move(coeffs));
}

std::vector<ExtElem> roots_of_irreducible(const ExtField& ext, const BasePoly& poly) {
  if (poly.degree() < 1) throw InvalidParameters("constant polynomial has no roots");
  if (ext.degree() % static_cast<unsigned>(poly.degree()) != 0) {
    throw InvalidParameters("degree " + std::to_string(poly.degree()) + " does not divide the extension degree");
  }
  if (!is_irreducible(ext.base(), poly)) throw InvalidParameters("polynomial is not irreducible: " + format_base_poly(poly));
  const auto root = one_root(ext, poly_monic(ext, embed_poly(ext, poly)));
  auto orbit = conjugates(ext, root);
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

ExtElem canonical_root(const ExtField& ext, const BasePoly& poly) { return roots_of_irreducible(ext, poly).front(); }

}  // namespace bpir::gf
