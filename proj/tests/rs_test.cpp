#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bpir/gf/ext_field.hpp"
#include "bpir/gf/linalg.hpp"
#include "bpir/gf/prime_field.hpp"
#include "bpir/rs/grs.hpp"

namespace bpir::rs {
namespace {

using gf::PrimeField;
using P = gf::Poly<std::uint32_t>;
using Word = std::vector<std::uint32_t>;

GrsCode<std::uint32_t> rs_code(const PrimeField& f, std::size_t n, std::size_t dim, std::uint32_t first = 0) {
  Word pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<std::uint32_t>(first + i);
  return make_rs(f, pts, dim);
}

P random_poly(const PrimeField& f, std::size_t dim, std::mt19937_64& gen) {
  Word c(dim);
  for (auto& x : c) x = static_cast<std::uint32_t>(gen() % f.characteristic());
  return P(c);
}

std::size_t distance(const Word& a, const Word& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

// Agreement of both decoders on one received word, success and output.
void expect_agree(const PrimeField& f, const GrsCode<std::uint32_t>& code, const OracleDecoder<PrimeField>& oracle,
                  const Word& received) {
  const auto expect = oracle.decode(received);
  if (expect) {
    const auto got = grs_decode(f, code, std::span<const std::uint32_t>(received));
    EXPECT_EQ(got, *expect);
  } else {
    EXPECT_THROW(grs_decode(f, code, std::span<const std::uint32_t>(received)), DecodeFailure);
  }
}

TEST(Lagrange, IdentityLine) {
  const PrimeField f(7);
  const Word xs{1, 2}, ys{1, 2};
  EXPECT_EQ(lagrange_interpolate(f, std::span<const std::uint32_t>(xs), std::span<const std::uint32_t>(ys)), (P{0u, 1u}));
}

TEST(Lagrange, SinglePointIsConstant) {
  const PrimeField f(7);
  const Word xs{4}, ys{6};
  EXPECT_EQ(lagrange_interpolate(f, std::span<const std::uint32_t>(xs), std::span<const std::uint32_t>(ys)), P::constant(6));
}

TEST(Lagrange, QuadraticMatchesVandermondeSolve) {
  const PrimeField f(5);
  const Word xs{0, 1, 2}, ys{1, 0, 0};
  const auto p = lagrange_interpolate(f, std::span<const std::uint32_t>(xs), std::span<const std::uint32_t>(ys));
  // Brute force over all 125 quadratics.
  std::vector<P> fits;
  for (std::uint32_t a = 0; a < 5; ++a)
    for (std::uint32_t b = 0; b < 5; ++b)
      for (std::uint32_t c = 0; c < 5; ++c) {
        const P cand{a, b, c};
        bool ok = true;
        for (std::size_t i = 0; i < 3; ++i) ok = ok && gf::poly_eval(f, cand, xs[i]) == ys[i];
        if (ok) fits.push_back(cand);
      }
  ASSERT_EQ(fits.size(), 1u);
  EXPECT_EQ(p, fits.front());
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(gf::poly_eval(f, p, xs[i]), ys[i]);
}

TEST(Lagrange, DuplicatePointRejected) {
  const PrimeField f(7);
  const Word xs{3, 3}, ys{1, 2};
  EXPECT_THROW(lagrange_interpolate(f, std::span<const std::uint32_t>(xs), std::span<const std::uint32_t>(ys)), DuplicatePoint);
}

TEST(Lagrange, RoundTripOverExtension) {
  const auto f = gf::ExtField::with_degree(PrimeField(3), 3);
  std::mt19937_64 gen(9);
  std::vector<gf::ExtElem> xs, ys;
  for (std::uint64_t i = 0; i < 12; ++i) {
    xs.push_back(f.from_index(i * 2 + 1));
    ys.push_back(f.from_index(gen() % f.order()));
  }
  const auto p = lagrange_interpolate(f, std::span<const gf::ExtElem>(xs), std::span<const gf::ExtElem>(ys));
  EXPECT_LT(p.degree(), 12);
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(gf::poly_eval(f, p, xs[i]), ys[i]);
}

TEST(Encode, ZeroPolyGivesZeroWord) {
  const PrimeField f(7);
  const auto code = rs_code(f, 4, 2, 1);
  EXPECT_EQ(grs_encode(f, code, P{}), Word(4, 0));
}

TEST(Encode, IdentityPolyOnOneToFour) {
  const PrimeField f(7);
  const auto code = rs_code(f, 4, 2, 1);
  EXPECT_EQ(grs_encode(f, code, P{0u, 1u}), (Word{1, 2, 3, 4}));
  EXPECT_THROW(grs_encode(f, code, P{0u, 0u, 1u}), DegreeTooHigh);
}

TEST(Encode, FullDimensionRoundTrips) {
  const PrimeField f(11);
  const auto code = make_grs(f, Word{1, 3, 5, 7}, Word{2, 9, 4, 1}, 4);
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto msg = random_poly(f, 4, gen);
    const auto word = grs_encode(f, code, msg);
    Word scaled(4);
    for (std::size_t i = 0; i < 4; ++i) scaled[i] = f.div(word[i], code.multipliers[i]);
    EXPECT_EQ(lagrange_interpolate(f, std::span<const std::uint32_t>(code.points), std::span<const std::uint32_t>(scaled)), msg);
  }
}

TEST(Encode, CodebookRankEqualsDimension) {
  const PrimeField f(7);
  const auto code = make_grs(f, Word{0, 1, 2, 3, 4}, Word{1, 2, 3, 4, 5}, 3);
  gf::Matrix<std::uint32_t> gen(3, 5);
  for (std::size_t d = 0; d < 3; ++d) {
    const auto row = grs_encode(f, code, P::monomial(d, 1));
    for (std::size_t c = 0; c < 5; ++c) gen(d, c) = row[c];
  }
  EXPECT_EQ(gf::rank(f, gen), 3u);
}

TEST(MakeGrs, RejectsMalformed) {
  const PrimeField f(7);
  EXPECT_THROW(make_grs(f, Word{1, 1, 2}, Word{1, 1, 1}, 2), DuplicatePoint);
  EXPECT_THROW(make_grs(f, Word{1, 2, 3}, Word{1, 0, 1}, 2), InvalidParameters);
  EXPECT_THROW(make_grs(f, Word{1, 2, 3}, Word{1, 1, 1}, 4), InvalidParameters);
  EXPECT_THROW(make_grs(f, Word{1, 2, 3}, Word{1, 1}, 2), DimensionMismatch);
}

TEST(Decode, CleanCodewordHasNoErrors) {
  const PrimeField f(7);
  const auto code = rs_code(f, 5, 3);
  const auto word = grs_encode(f, code, P{3u, 1u, 4u});
  const auto res = grs_decode(f, code, std::span<const std::uint32_t>(word));
  EXPECT_TRUE(res.error_positions.empty());
  EXPECT_EQ(res.corrected, word);
  EXPECT_EQ(res.message, (P{3u, 1u, 4u}));
}

TEST(Decode, AllZeroReceived) {
  const PrimeField f(7);
  const auto code = rs_code(f, 5, 3);
  const auto res = oracle_decode(f, code, std::span<const std::uint32_t>(Word(5, 0)));
  ASSERT_TRUE(res);
  EXPECT_TRUE(res->message.is_zero());
  EXPECT_TRUE(res->error_positions.empty());
}

TEST(Decode, EverySingleErrorOnN5K3F7) {
  const PrimeField f(7);
  const auto code = rs_code(f, 5, 3);
  const OracleDecoder<PrimeField> oracle(f, code);
  const auto word = grs_encode(f, code, P{2u, 5u, 1u});
  for (std::size_t pos = 0; pos < 5; ++pos) {
    for (std::uint32_t e = 1; e < 7; ++e) {
      Word rx = word;
      rx[pos] = f.add(rx[pos], e);
      const auto res = grs_decode(f, code, std::span<const std::uint32_t>(rx));
      EXPECT_EQ(res.corrected, word);
      EXPECT_EQ(res.error_positions, std::vector<std::size_t>{pos});
      expect_agree(f, code, oracle, rx);
    }
  }
}

TEST(Decode, EveryDoubleErrorMatchesOracle) {
  const PrimeField f(7);
  const auto code = rs_code(f, 5, 3);
  const OracleDecoder<PrimeField> oracle(f, code);
  const auto word = grs_encode(f, code, P{6u, 0u, 3u});
  for (std::size_t p1 = 0; p1 < 5; ++p1)
    for (std::size_t p2 = p1 + 1; p2 < 5; ++p2)
      for (std::uint32_t e1 = 1; e1 < 7; ++e1)
        for (std::uint32_t e2 = 1; e2 < 7; ++e2) {
          Word rx = word;
          rx[p1] = f.add(rx[p1], e1);
          rx[p2] = f.add(rx[p2], e2);
          expect_agree(f, code, oracle, rx);
        }
}

// Every error vector of weight <= tau for n <= 6, q <= 7.
TEST(Decode, ExhaustiveErrorPatternsSmallCodes) {
  struct Case { std::uint32_t q; std::size_t n, k; };
  for (const auto c : {Case{5, 5, 1}, Case{5, 5, 3}, Case{7, 6, 2}, Case{7, 6, 4}, Case{3, 3, 1}}) {
    const PrimeField f(c.q);
    const auto code = rs_code(f, c.n, c.k);
    std::mt19937_64 gen(c.q * 100 + c.n * 10 + c.k);
    const auto msg = random_poly(f, c.k, gen);
    const auto word = grs_encode(f, code, msg);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.n; ++i) total *= c.q;
    for (std::uint64_t ev = 0; ev < total; ++ev) {
      Word e(c.n);
      std::uint64_t v = ev;
      std::size_t weight = 0;
      for (auto& x : e) {
        x = static_cast<std::uint32_t>(v % c.q);
        v /= c.q;
        weight += x != 0;
      }
      if (weight > code.radius()) continue;
      Word rx = word;
      for (std::size_t i = 0; i < c.n; ++i) rx[i] = f.add(rx[i], e[i]);
      EXPECT_EQ(grs_decode(f, code, std::span<const std::uint32_t>(rx)).message, msg);
    }
  }
}

TEST(Decode, RandomWordsMatchOracleAndStayInRadius) {
  const PrimeField f(7);
  const auto code = make_grs(f, Word{0, 1, 2, 3, 4, 5}, Word{3, 1, 4, 1, 5, 2}, 2);
  const OracleDecoder<PrimeField> oracle(f, code);
  std::mt19937_64 gen(77);
  for (int trial = 0; trial < 3000; ++trial) {
    Word rx(6);
    for (auto& x : rx) x = static_cast<std::uint32_t>(gen() % 7);
    expect_agree(f, code, oracle, rx);
    try {
      const auto res = grs_decode(f, code, std::span<const std::uint32_t>(rx));
      EXPECT_LE(distance(res.corrected, rx), code.radius());
    } catch (const DecodeFailure&) {
    }
  }
}

TEST(Decode, MidpointBetweenNearestCodewords) {
  const PrimeField f(7);
  const auto code = rs_code(f, 5, 3);
  const OracleDecoder<PrimeField> oracle(f, code);
  // Two codewords at minimum distance 3; walk from one toward the other.
  const auto a = grs_encode(f, code, P{});
  const auto b = grs_encode(f, code, gf::poly_from_roots(f, std::vector<std::uint32_t>{0, 1}));
  ASSERT_EQ(distance(a, b), 3u);
  Word rx = a;
  for (std::size_t i = 0, moved = 0; i < 5 && moved < 2; ++i) {
    if (a[i] != b[i]) {
      rx[i] = b[i];
      ++moved;
    }
  }
  expect_agree(f, code, oracle, rx);
  Word mid = a;
  for (std::size_t i = 0; i < 5; ++i) {
    if (a[i] != b[i]) {
      mid[i] = f.add(b[i], 1) == a[i] ? f.add(b[i], 2) : f.add(b[i], 1);
      break;
    }
  }
  expect_agree(f, code, oracle, mid);
}

TEST(Decode, OracleEnumerationGuard) {
  const PrimeField f(11);
  EXPECT_THROW(OracleDecoder<PrimeField>(f, rs_code(f, 10, 6)), EnumerationTooLarge);
}

TEST(Decode, ExtensionFieldCode) {
  const auto f = gf::ExtField::with_degree(PrimeField(2), 4);
  std::vector<gf::ExtElem> pts;
  for (std::uint64_t i = 0; i < 9; ++i) pts.push_back(f.from_index(i));
  const auto code = make_rs(f, pts, 3);
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    gf::Poly<gf::ExtElem> msg(std::vector<gf::ExtElem>{f.from_index(gen() % 16), f.from_index(gen() % 16), f.from_index(gen() % 16)});
    auto rx = grs_encode(f, code, msg);
    for (int e = 0; e < 3; ++e) rx[gen() % 9] = f.from_index(gen() % 16);
    EXPECT_EQ(grs_decode(f, code, std::span<const gf::ExtElem>(rx)).message, msg);
  }
}

TEST(DualMultipliers, F5Example) {
  const PrimeField f(5);
  const Word alpha{2}, beta{0, 1};
  const auto [u, v] = dual_multipliers(f, std::span<const std::uint32_t>(alpha), std::span<const std::uint32_t>(beta));
  EXPECT_EQ(u, Word{3});
  EXPECT_EQ(v, (Word{3, 4}));
}

TEST(DualMultipliers, EmptyAlphaIsClassicalDual) {
  const PrimeField f(11);
  const Word beta{1, 4, 6, 9};
  const auto [u, v] = dual_multipliers(f, std::span<const std::uint32_t>(), std::span<const std::uint32_t>(beta));
  EXPECT_TRUE(u.empty());
  for (std::size_t j = 0; j < beta.size(); ++j) {
    std::uint32_t prod = 1;
    for (std::size_t l = 0; l < beta.size(); ++l)
      if (l != j) prod = f.mul(prod, f.sub(beta[j], beta[l]));
    EXPECT_EQ(v[j], f.inv(prod));
  }
}

TEST(DualMultipliers, CoincidentPointsRejected) {
  const PrimeField f(7);
  const Word alpha{2}, beta{2, 3};
  EXPECT_THROW(dual_multipliers(f, std::span<const std::uint32_t>(alpha), std::span<const std::uint32_t>(beta)), DuplicatePoint);
}

// sum_i u_i h(a_i) phi(a_i) + sum_j v_j h(b_j) phi(b_j) = 0 when deg h + deg phi < n - 1.
TEST(DualMultipliers, ResidueIdentity) {
  const auto f = gf::ExtField::with_degree(PrimeField(7), 2);
  std::vector<gf::ExtElem> alpha{f.from_index(20), f.from_index(33)};
  std::vector<gf::ExtElem> beta;
  for (std::uint32_t j = 0; j < 7; ++j) beta.push_back(f.embed(j));
  const auto [u, v] = dual_multipliers(f, std::span<const gf::ExtElem>(alpha), std::span<const gf::ExtElem>(beta));
  std::mt19937_64 gen(12);
  const std::size_t r = 5, k = beta.size(), delta = alpha.size();
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<gf::ExtElem> pc(r), hc(k + delta - r);
    for (auto& x : pc) x = f.from_index(gen() % f.order());
    for (auto& x : hc) x = f.from_index(gen() % f.order());
    const gf::Poly<gf::ExtElem> phi(pc), h(hc);
    gf::ExtElem acc = f.zero();
    for (std::size_t i = 0; i < delta; ++i)
      acc = f.add(acc, f.mul(u[i], f.mul(gf::poly_eval(f, h, alpha[i]), gf::poly_eval(f, phi, alpha[i]))));
    for (std::size_t j = 0; j < k; ++j)
      acc = f.add(acc, f.mul(v[j], f.mul(gf::poly_eval(f, h, beta[j]), gf::poly_eval(f, phi, beta[j]))));
    EXPECT_EQ(acc, f.zero());
  }
}

}  // namespace
}  // namespace bpir::rs
