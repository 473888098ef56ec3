#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include "bpir/gf/dual_basis.hpp"
#include "bpir/gf/ext_field.hpp"
#include "bpir/gf/irreducible.hpp"
#include "bpir/gf/linalg.hpp"
#include "bpir/gf/prime_field.hpp"

namespace bpir::gf {
namespace {

using boost::multiprecision::cpp_int;

// Naive reference: multiply coefficient vectors with big integers, reduce by
// the modulus with big-integer long division, then reduce mod q.
std::vector<std::uint32_t> reference_mul(std::uint32_t q, const std::vector<std::uint32_t>& modulus,
                                         const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  const std::size_t s = modulus.size() - 1;
  std::vector<cpp_int> prod(2 * s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) prod[i + j] += cpp_int(a[i]) * b[j];
  }
  for (std::size_t d = 2 * s - 1; d >= s; --d) {
    const cpp_int c = prod[d];
    for (std::size_t i = 0; i <= s; ++i) prod[d - s + i] -= c * modulus[i];
    if (d == s) break;
  }
  std::vector<std::uint32_t> out(s);
  for (std::size_t i = 0; i < s; ++i) {
    cpp_int v = prod[i] % q;
    if (v < 0) v += q;
    out[i] = v.convert_to<std::uint32_t>();
  }
  return out;
}

std::vector<std::uint32_t> coord_vec(const ExtField& f, ExtElem x) {
  const auto c = f.coords(x);
  return {c.begin(), c.begin() + f.degree()};
}

// Brute force: a monic polynomial of degree s is reducible iff it equals a
// product of two monic polynomials of positive degree.
bool brute_irreducible(const PrimeField& f, const BasePoly& p) {
  const unsigned s = static_cast<unsigned>(p.degree());
  const std::uint64_t q = f.characteristic();
  for (unsigned d = 1; d <= s / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> c(d + 1);
      std::uint64_t v = code;
      for (unsigned i = 0; i < d; ++i, v /= q) c[i] = static_cast<std::uint32_t>(v % q);
      c[d] = 1;
      if (poly_mod(f, p, BasePoly(c)).is_zero()) return false;
    }
  }
  return true;
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(1), InvalidParameters);
  EXPECT_THROW(PrimeField(9), InvalidParameters);
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(2147483647u));
}

TEST(PrimeField, InverseOfThreeModSeven) {
  const PrimeField f(7);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_THROW(f.inv(0), DivisionByZero);
}

TEST(PrimeField, MixedOperandsRejected) {
  const PrimeField f(7);
  EXPECT_THROW(f.add(7, 1), FieldMismatch);
  EXPECT_THROW(f.mul(1, 11), FieldMismatch);
}

TEST(PrimeField, InverseAgreesWithFermat) {
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 65537u, 2147483647u}) {
    const PrimeField f(q);
    std::mt19937_64 gen(q);
    for (int i = 0; i < 200; ++i) {
      const auto a = static_cast<std::uint32_t>(1 + gen() % (q - 1));
      EXPECT_EQ(f.inv(a), f.pow(a, q - 2));
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    }
  }
}

TEST(PrimeField, PolyEvalAtRoot) {
  const PrimeField f(5);
  EXPECT_EQ(poly_eval(f, BasePoly{1u, 0u, 1u}, 2u), 0u);
}

TEST(ExtField, AdditiveIdentity) {
  const auto f = ExtField::with_degree(PrimeField(7), 3);
  for (std::uint64_t i = 0; i < f.order(); i += 17) EXPECT_EQ(f.add(f.from_index(i), f.zero()), f.from_index(i));
}

TEST(ExtField, MultiplicationMatchesBigIntegerReference) {
  for (auto [q, s] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 5}, {3, 4}, {7, 2}, {11, 3}, {65521, 2}, {251, 4}}) {
    const auto f = ExtField::with_degree(PrimeField(q), s);
    const auto& mod = f.modulus().coeffs();
    std::mt19937_64 gen(q * 31 + s);
    for (int i = 0; i < 300; ++i) {
      const ExtElem a = f.from_index(gen() % f.order());
      const ExtElem b = f.from_index(gen() % f.order());
      const auto expect = reference_mul(q, mod, coord_vec(f, a), coord_vec(f, b));
      EXPECT_EQ(coord_vec(f, f.mul(a, b)), expect) << f.description();
      EXPECT_EQ(f.sub(f.add(a, b), b), a);
      if (!f.is_zero(a)) EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
    }
  }
}

TEST(ExtField, InverseOfZeroThrows) {
  const auto f = ExtField::with_degree(PrimeField(3), 2);
  EXPECT_THROW(f.inv(f.zero()), DivisionByZero);
}

TEST(ExtField, ForeignElementRejected) {
  const auto f = ExtField::with_degree(PrimeField(3), 2);
  EXPECT_THROW(f.add(ExtElem{9}, f.one()), FieldMismatch);
  EXPECT_THROW(f.to_base(f.generator()), FieldMismatch);
}

TEST(ExtField, DegreeOneMatchesPrimeField) {
  const PrimeField p(13);
  const auto f = ExtField::with_degree(p, 1);
  for (std::uint32_t a = 0; a < 13; ++a) {
    for (std::uint32_t b = 0; b < 13; ++b) {
      EXPECT_EQ(f.mul(f.embed(a), f.embed(b)).code, p.mul(a, b));
      EXPECT_EQ(f.sub(f.embed(a), f.embed(b)).code, p.sub(a, b));
    }
    EXPECT_EQ(f.trace(f.embed(a)), a);
  }
}

TEST(ExtField, RejectsReducibleModulus) {
  EXPECT_THROW(ExtField(PrimeField(2), BasePoly{1u, 0u, 1u}), InvalidParameters);
  EXPECT_THROW(ExtField(PrimeField(2), BasePoly{1u, 0u, 0u, 1u}), InvalidParameters);
}

TEST(ExtField, DescriptionRoundTrip) {
  const auto f = ExtField::with_degree(PrimeField(7), 2);
  EXPECT_EQ(f.description(), "q=7;s=2;mod=1:0:1");
  EXPECT_EQ(ExtField::from_description(f.description()), f);
  EXPECT_THROW(ExtField::from_description("q=7;s=3;mod=1:0:1"), ParseError);
  EXPECT_THROW(ExtField::from_description("q=8;s=1;mod=0:1"), InvalidParameters);
}

TEST(ExtField, ElementFormat) {
  const auto f = ExtField::with_degree(PrimeField(7), 3);
  const ExtElem x = f.from_coords(std::vector<std::uint32_t>{3, 0, 1});
  EXPECT_EQ(f.format(x), "3:0:1");
  EXPECT_EQ(f.parse_element("3:0:1"), x);
  EXPECT_THROW(f.parse_element("3:0"), ParseError);
  EXPECT_THROW(f.parse_element("3:0:7"), ParseError);
  EXPECT_THROW(f.parse_element("3:x:1"), ParseError);
}

// q = 2, s = 2 over xi^2 + xi + 1; omega is the class of xi.
class Gf4 : public ::testing::Test {
 protected:
  ExtField f = ExtField(PrimeField(2), BasePoly{1u, 1u, 1u});
  ExtElem omega = f.generator();
};

TEST_F(Gf4, TraceValues) {
  EXPECT_EQ(f.trace(f.zero()), 0u);
  EXPECT_EQ(f.trace(omega), 1u);
  EXPECT_EQ(f.trace(f.one()), 0u);
}

TEST_F(Gf4, MinimalPolyOfOmega) { EXPECT_EQ(minimal_poly(f, omega), (BasePoly{1u, 1u, 1u})); }

TEST_F(Gf4, DualOfOneOmega) {
  const auto pair = dual_basis(f, {f.one(), omega});
  const ExtElem omega2 = f.mul(omega, omega);
  EXPECT_EQ(pair.eta, (std::vector<ExtElem>{omega2, f.one()}));
}

TEST_F(Gf4, DependentBasisRejected) { EXPECT_THROW(dual_basis(f, {omega, omega}), SingularBasis); }

TEST(Trace, LinearAndBaseValued) {
  for (auto [q, s] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 3}, {7, 2}, {5, 5}}) {
    const auto f = ExtField::with_degree(PrimeField(q), s);
    std::mt19937_64 gen(q + s);
    for (int i = 0; i < 200; ++i) {
      const ExtElem x = f.from_index(gen() % f.order());
      const ExtElem y = f.from_index(gen() % f.order());
      const auto c = static_cast<std::uint32_t>(gen() % q);
      const auto& base = f.base();
      EXPECT_EQ(f.trace(f.add(x, y)), base.add(f.trace(x), f.trace(y)));
      EXPECT_EQ(f.trace(f.mul(f.embed(c), x)), base.mul(c, f.trace(x)));
      const ExtElem tr = f.embed(f.trace(x));
      EXPECT_EQ(f.frobenius(tr), tr);
    }
  }
}

TEST(Irreducibles, DegreeOneOverF2) {
  const auto found = find_irreducibles(PrimeField(2), 1, 2);
  EXPECT_EQ(found, (std::vector<BasePoly>{BasePoly{0u, 1u}, BasePoly{1u, 1u}}));
}

TEST(Irreducibles, OnlyQuadraticOverF2) {
  EXPECT_EQ(find_irreducibles(PrimeField(2), 2, 1), (std::vector<BasePoly>{BasePoly{1u, 1u, 1u}}));
  EXPECT_THROW(find_irreducibles(PrimeField(2), 2, 2), ExhaustionError);
}

TEST(Irreducibles, FirstThreeQuadraticsOverF3) {
  const std::vector<BasePoly> expect{BasePoly{1u, 0u, 1u}, BasePoly{2u, 1u, 1u}, BasePoly{2u, 2u, 1u}};
  EXPECT_EQ(find_irreducibles(PrimeField(3), 2, 3), expect);
}

TEST(Irreducibles, RabinAgreesWithFactorSearch) {
  for (auto [q, s] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
    const PrimeField f(q);
    std::uint64_t total = 1;
    for (unsigned i = 0; i < s; ++i) total *= q;
    std::uint64_t irreducible = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<std::uint32_t> c(s + 1);
      std::uint64_t v = code;
      for (unsigned i = 0; i < s; ++i, v /= q) c[i] = static_cast<std::uint32_t>(v % q);
      c[s] = 1;
      const BasePoly p(c);
      const bool brute = brute_irreducible(f, p);
      EXPECT_EQ(is_irreducible(f, p), brute) << format_base_poly(p);
      irreducible += brute;
    }
    EXPECT_EQ(count_irreducibles(q, s), irreducible);
  }
}

TEST(MinimalPoly, BaseElement) {
  const auto f = ExtField::with_degree(PrimeField(5), 3);
  EXPECT_EQ(minimal_poly(f, f.embed(3)), (BasePoly{2u, 1u}));
}

TEST(MinimalPoly, RootOfXSquaredPlusOneOverF3) {
  const auto f = ExtField(PrimeField(3), BasePoly{1u, 0u, 1u});
  EXPECT_EQ(minimal_poly(f, f.generator()), (BasePoly{1u, 0u, 1u}));
}

TEST(MinimalPoly, VanishesAndDegreeDividesS) {
  const auto f = ExtField::with_degree(PrimeField(2), 6);
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    const auto p = minimal_poly(f, f.from_index(i));
    EXPECT_EQ(6 % p.degree(), 0);
    EXPECT_EQ(p.leading(), 1u);
    EXPECT_TRUE(f.is_zero(eval_at_ext(f, p, f.from_index(i))));
    EXPECT_TRUE(is_irreducible(f.base(), p));
  }
}

TEST(Roots, CanonicalRootMatchesExhaustiveScan) {
  for (auto [q, s] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 2}, {3, 3}, {7, 2}, {11, 2}, {5, 3}}) {
    const PrimeField base(q);
    const auto f = ExtField::with_degree(base, s);
    for (const auto& poly : find_irreducibles(base, s, std::min<std::uint64_t>(6, count_irreducibles(q, s)))) {
      std::vector<ExtElem> brute;
      for (std::uint64_t i = 0; i < f.order(); ++i) {
        if (f.is_zero(eval_at_ext(f, poly, f.from_index(i)))) brute.push_back(f.from_index(i));
      }
      EXPECT_EQ(roots_of_irreducible(f, poly), brute) << format_base_poly(poly);
      EXPECT_EQ(canonical_root(f, poly), brute.front());
    }
  }
}

TEST(DualBasis, DegreeOneIsInverse) {
  const auto f = ExtField::with_degree(PrimeField(11), 1);
  const auto pair = dual_basis(f, {f.embed(4)});
  EXPECT_EQ(pair.eta.front(), f.inv(f.embed(4)));
}

TEST(DualBasis, GramIdentityAndReconstruction) {
  for (auto [q, s] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 3}, {7, 2}, {5, 4}}) {
    const auto f = ExtField::with_degree(PrimeField(q), s);
    const auto pair = dual_basis(f, power_basis(f));
    for (unsigned i = 0; i < s; ++i) {
      for (unsigned j = 0; j < s; ++j) EXPECT_EQ(f.trace(f.mul(pair.theta[i], pair.eta[j])), i == j ? 1u : 0u);
    }
    EXPECT_EQ(rank(f.base(), [&] {
                Matrix<std::uint32_t> m(s, s);
                for (unsigned i = 0; i < s; ++i) {
                  const auto c = f.coords(pair.eta[i]);
                  for (unsigned d = 0; d < s; ++d) m(i, d) = c[d];
                }
                return m;
              }()),
              s);
    // Exhaustive for q^s <= 2^16.
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      EXPECT_EQ(reconstruct_from_traces(f, pair, f.from_index(i)), f.from_index(i));
    }
  }
}

TEST(Linalg, SolveAndInverse) {
  const PrimeField f(7);
  Matrix<std::uint32_t> a(2, 2, std::vector<std::uint32_t>{1, 2, 3, 4});
  const auto x = solve(f, a, {5, 6});
  ASSERT_TRUE(x);
  EXPECT_EQ(f.add(f.mul(1, (*x)[0]), f.mul(2, (*x)[1])), 5u);
  EXPECT_EQ(f.add(f.mul(3, (*x)[0]), f.mul(4, (*x)[1])), 6u);
  Matrix<std::uint32_t> singular(2, 2, std::vector<std::uint32_t>{1, 2, 2, 4});
  EXPECT_FALSE(inverse(f, singular));
  EXPECT_FALSE(solve(f, singular, {1, 0}));
  EXPECT_EQ(rank(f, singular), 1u);
}

}  // namespace
}  // namespace bpir::gf
