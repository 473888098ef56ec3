#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bpir/gf/dual_basis.hpp"
#include "bpir/gf/ext_field.hpp"

namespace bpir::pir {

using gf::BasePoly;
using gf::ExtElem;
using gf::ExtField;
using gf::PrimeField;

// Integer inputs to setup(). q overrides the automatic prime choice.
struct SchemeConfig {
  std::size_t k = 0;  // servers
  std::size_t t = 0;  // collusion bound
  std::size_t b = 0;  // byzantine bound
  std::size_t r = 0;  // retrieval threshold
  std::size_t m = 1;  // files
  std::optional<std::uint32_t> q{};
};

// Public parameters shared by the client and all servers. Immutable after
// setup(); safe to share across threads.
struct SchemeParams {
  std::size_t k, t, b, r, delta, s, m;
  ExtField field;  // F_{q^s}; field.base() is F_q

  std::vector<ExtElem> omega_alpha;         // delta points, file symbols live here
  std::vector<ExtElem> omega_chi;           // t points carrying the blinding arrays
  std::vector<std::uint32_t> omega_beta;    // k server points in F_q
  std::vector<BasePoly> min_polys;          // minimal polynomial of each alpha
  std::vector<ExtElem> u;                   // dual multipliers at alpha
  std::vector<ExtElem> v;                   // dual multipliers at beta
  gf::DualBasisPair dual_pair;              // theta = power basis, eta = trace dual
  std::vector<std::vector<BasePoly>> recovery_polys;  // [i][d], degree < s

  const PrimeField& base() const noexcept { return field.base(); }
  std::uint32_t q() const noexcept { return field.base().characteristic(); }
  ExtElem beta(std::size_t j) const { return field.embed(omega_beta.at(j)); }
  // F_q symbols in one file: delta * s = k - 2b - t.
  std::size_t file_symbols() const noexcept { return delta * s; }
};

// Deterministic construction. Throws InvalidParameters naming the violated
// constraint.
SchemeParams setup(const SchemeConfig& config);

// Checks the integer constraint chain only; returns the violated constraint or
// nullopt. Used by setup() and the comparison table.
std::optional<std::string> check_constraints(std::size_t k, std::size_t t, std::size_t b, std::size_t r);

// prod_{l in [delta]} f_l(x) over F_q, optionally skipping one index.
std::uint32_t min_poly_product(const SchemeParams& p, std::uint32_t x, std::optional<std::size_t> skip = std::nullopt);
ExtElem min_poly_product(const SchemeParams& p, ExtElem x, std::optional<std::size_t> skip = std::nullopt);

}  // namespace bpir::pir
