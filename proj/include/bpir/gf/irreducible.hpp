#pragma once

#include <cstdint>
#include <vector>

#include "bpir/gf/ext_field.hpp"

namespace bpir::gf {

// Rabin's test: monic f of degree s is irreducible iff xi^{q^s} = xi mod f and
// gcd(xi^{q^d} - xi, f) = 1 for every proper divisor d of s.
bool is_irreducible(const PrimeField& f, const BasePoly& poly);

// Number of monic irreducible polynomials of degree s over F_q (Gauss's formula).
std::uint64_t count_irreducibles(std::uint32_t q, unsigned s);

// First n monic irreducibles of degree s, scanning lower coefficient vectors
// (c_0, ..., c_{s-1}) by increasing sum_d c_d q^d.
std::vector<BasePoly> find_irreducibles(const PrimeField& f, unsigned s, std::size_t n);

// The distinct conjugates a, a^q, a^{q^2}, ... in orbit order.
std::vector<ExtElem> conjugates(const ExtField& ext, ExtElem a);

// Monic lowest-degree base polynomial vanishing at a.
BasePoly minimal_poly(const ExtField& ext, ExtElem a);

// All roots in ext of a monic irreducible base polynomial whose degree divides
// [ext : F_q], sorted by element code. Uses equal-degree splitting.
std::vector<ExtElem> roots_of_irreducible(const ExtField& ext, const BasePoly& poly);

// Smallest-code root; the same for any splitting path.
ExtElem canonical_root(const ExtField& ext, const BasePoly& poly);

}  // namespace bpir::gf
