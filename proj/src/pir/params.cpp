#include "bpir/pir/params.hpp"

#include "bpir/gf/irreducible.hpp"
#include "bpir/gf/linalg.hpp"
#include "bpir/rs/grs.hpp"

namespace bpir::pir {
namespace {

std::uint64_t checked_power(std::uint64_t q, std::size_t s) {
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < s; ++i) {
    order *= q;
    if (order > ExtField::kMaxOrder) return ExtField::kMaxOrder + 1;
  }
  return order;
}

// Enough room in F_q (s = 1) or enough degree-s irreducibles (s >= 2).
bool field_fits(std::uint32_t q, std::size_t k, std::size_t t, std::size_t delta, std::size_t s) {
  if (q < k) return false;
  if (checked_power(q, s) > ExtField::kMaxOrder) return false;
  if (s == 1) return q >= k + delta + t;
  return gf::count_irreducibles(q, static_cast<unsigned>(s)) >= delta + t;
}

std::vector<std::vector<BasePoly>> build_recovery_polys(const SchemeParams& p) {
  const auto& ext = p.field;
  const auto& base = p.base();
  std::vector<std::vector<BasePoly>> out(p.delta);
  for (std::size_t i = 0; i < p.delta; ++i) {
    const ExtElem alpha = p.omega_alpha[i];
    // Column d holds the coordinates of alpha^d; the map is a bijection since
    // alpha has degree exactly s.
    gf::Matrix<std::uint32_t> powers(p.s, p.s);
    ExtElem pw = ext.one();
    for (std::size_t d = 0; d < p.s; ++d) {
      const auto c = ext.coords(pw);
      for (std::size_t row = 0; row < p.s; ++row) powers(row, d) = c[row];
      pw = ext.mul(pw, alpha);
    }
    const ExtElem others = min_poly_product(p, alpha, i);
    const ExtElem scale = ext.inv(ext.mul(p.u[i], others));
    for (std::size_t d = 0; d < p.s; ++d) {
      const ExtElem target = ext.mul(scale, p.dual_pair.eta[d]);
      const auto c = ext.coords(target);
      const auto h = gf::solve(base, powers, std::vector<std::uint32_t>(c.begin(), c.begin() + p.s));
      if (!h) throw InternalError("alpha does not generate F_{q^s}");
      BasePoly poly(*h);
      if (ext.mul(gf::eval_at_ext(ext, poly, alpha), others) != ext.mul(ext.inv(p.u[i]), p.dual_pair.eta[d])) {
        throw InternalError("recovery polynomial misses its target");
      }
      out[i].push_back(std::move(poly));
    }
  }
  return out;
}

}  // namespace

std::optional<std::string> check_constraints(std::size_t k, std::size_t t, std::size_t b, std::size_t r) {
  if (t < 1) return "t ≥ 1";
  if (r < 2 * b + t + 1) return "t < r−2b";
  if (k < 2 * b + t + 1) return "2b+t < k";
  const std::size_t delta = r - 2 * b - t;
  if ((k - 2 * b - t) % delta != 0) return "Δ ∤ (k−2b−t)";
  if (r > k) return "r ≤ k";
  return std::nullopt;
}

SchemeParams setup(const SchemeConfig& cfg) {
  if (auto violated = check_constraints(cfg.k, cfg.t, cfg.b, cfg.r)) {
    throw InvalidParameters(*violated + " violated (k=" + std::to_string(cfg.k) + ", t=" + std::to_string(cfg.t) +
                            ", b=" + std::to_string(cfg.b) + ", r=" + std::to_string(cfg.r) + ")");
  }
  if (cfg.m < 1) throw InvalidParameters("m ≥ 1 violated");
  const std::size_t delta = cfg.r - 2 * cfg.b - cfg.t;
  const std::size_t s = (cfg.k - 2 * cfg.b - cfg.t) / delta;
  if (s > ExtField::kMaxDegree) throw InvalidParameters("s ≤ 32 violated");

  std::uint32_t q = 0;
  if (cfg.q) {
    q = *cfg.q;
    if (!gf::is_prime(q)) throw InvalidParameters("q prime violated (q=" + std::to_string(q) + ")");
    const std::size_t minimum = s == 1 ? cfg.k + delta + cfg.t : cfg.k;
    if (q < minimum) throw InvalidParameters("q ≥ " + std::to_string(minimum) + " violated (q=" + std::to_string(q) + ")");
    if (!field_fits(q, cfg.k, cfg.t, delta, s)) throw InvalidParameters("q^s ≤ 2^32 violated (q=" + std::to_string(q) + ")");
  } else {
    q = gf::next_prime(static_cast<std::uint32_t>(s == 1 ? cfg.k + delta + cfg.t : cfg.k));
    while (!field_fits(q, cfg.k, cfg.t, delta, s)) {
      if (checked_power(q, s) > ExtField::kMaxOrder) throw InvalidParameters("q^s ≤ 2^32 violated");
      q = gf::next_prime(q + 1);
    }
  }
  const PrimeField base(q);

  std::vector<BasePoly> irreducibles;
  if (s >= 2) irreducibles = gf::find_irreducibles(base, static_cast<unsigned>(s), delta + cfg.t);
  ExtField field = s >= 2 ? ExtField(base, irreducibles.front()) : ExtField::with_degree(base, 1);

  SchemeParams p{cfg.k, cfg.t, cfg.b, cfg.r, delta, s, cfg.m, std::move(field), {}, {}, {}, {}, {}, {}, {}, {}};
  const auto& ext = p.field;
  for (std::size_t j = 0; j < p.k; ++j) p.omega_beta.push_back(static_cast<std::uint32_t>(j));
  if (s == 1) {
    for (std::size_t h = 0; h < p.t; ++h) p.omega_chi.push_back(ext.embed(static_cast<std::uint32_t>(p.k + h)));
    for (std::size_t i = 0; i < delta; ++i) {
      const auto a = static_cast<std::uint32_t>(p.k + p.t + i);
      p.omega_alpha.push_back(ext.embed(a));
      p.min_polys.push_back(BasePoly{base.neg(a), 1u});
    }
  } else {
    for (std::size_t i = 0; i < delta; ++i) {
      p.omega_alpha.push_back(gf::canonical_root(ext, irreducibles[i]));
      p.min_polys.push_back(irreducibles[i]);
    }
    for (std::size_t h = 0; h < p.t; ++h) p.omega_chi.push_back(gf::canonical_root(ext, irreducibles[delta + h]));
  }
  for (std::size_t i = 0; i < delta; ++i) {
    if (gf::minimal_poly(ext, p.omega_alpha[i]) != p.min_polys[i]) throw InternalError("alpha has the wrong minimal polynomial");
  }

  std::vector<ExtElem> betas;
  for (std::size_t j = 0; j < p.k; ++j) betas.push_back(p.beta(j));
  std::vector<ExtElem> all = p.omega_alpha;
  all.insert(all.end(), p.omega_chi.begin(), p.omega_chi.end());
  all.insert(all.end(), betas.begin(), betas.end());
  rs::detail::require_distinct(ext, std::span<const ExtElem>(all));

  std::tie(p.u, p.v) = rs::dual_multipliers(ext, std::span<const ExtElem>(p.omega_alpha), std::span<const ExtElem>(betas));
  p.dual_pair = gf::dual_basis(ext, gf::power_basis(ext));
  p.recovery_polys = build_recovery_polys(p);
  return p;
}

std::uint32_t min_poly_product(const SchemeParams& p, std::uint32_t x, std::optional<std::size_t> skip) {
  std::uint32_t acc = 1;
  for (std::size_t l = 0; l < p.delta; ++l) {
    if (skip && *skip == l) continue;
    acc = p.base().mul(acc, gf::eval_base(p.base(), p.min_polys[l], x));
  }
  return acc;
}

ExtElem min_poly_product(const SchemeParams& p, ExtElem x, std::optional<std::size_t> skip) {
  ExtElem acc = p.field.one();
  for (std::size_t l = 0; l < p.delta; ++l) {
    if (skip && *skip == l) continue;
    acc = p.field.mul(acc, gf::eval_at_ext(p.field, p.min_polys[l], x));
  }
  return acc;
}

}  // namespace bpir::pir
