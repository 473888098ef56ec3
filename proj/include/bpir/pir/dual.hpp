#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bpir/gf/poly.hpp"
#include "bpir/pir/params.hpp"

namespace bpir::pir {

// Words of the dual GRS code of RS_{r-2b} on alpha ++ beta that drive
// trace retrieval. Each must be orthogonal to every rs_codeword.

// (phi(alpha_1..delta), phi(beta_1..k)).
std::vector<ExtElem> rs_codeword(const SchemeParams& p, const gf::Poly<ExtElem>& phi);

// Built from h_{i,d} * prod_{l != i} f_l.
std::vector<ExtElem> recovery_dual_word(const SchemeParams& p, std::size_t i, std::size_t d);

// Built from xi^e * prod_l f_l, e < 2b.
std::vector<ExtElem> check_dual_word(const SchemeParams& p, std::size_t e);

ExtElem inner_product(const ExtField& f, std::span<const ExtElem> a, std::span<const ExtElem> b);

}  // namespace bpir::pir
