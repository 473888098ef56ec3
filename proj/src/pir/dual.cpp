#include "bpir/pir/dual.hpp"

namespace bpir::pir {
namespace {

template <class Fn>
std::vector<ExtElem> scaled_word(const SchemeParams& p, Fn&& h) {
  const auto& f = p.field;
  std::vector<ExtElem> word;
  word.reserve(p.delta + p.k);
  for (std::size_t n = 0; n < p.delta; ++n) word.push_back(f.mul(p.u[n], h(p.omega_alpha[n])));
  for (std::size_t j = 0; j < p.k; ++j) word.push_back(f.mul(p.v[j], h(p.beta(j))));
  return word;
}

}  // namespace

std::vector<ExtElem> rs_codeword(const SchemeParams& p, const gf::Poly<ExtElem>& phi) {
  std::vector<ExtElem> word;
  for (auto a : p.omega_alpha) word.push_back(gf::poly_eval(p.field, phi, a));
  for (std::size_t j = 0; j < p.k; ++j) word.push_back(gf::poly_eval(p.field, phi, p.beta(j)));
  return word;
}

std::vector<ExtElem> recovery_dual_word(const SchemeParams& p, std::size_t i, std::size_t d) {
  const auto& h = p.recovery_polys.at(i).at(d);
  return scaled_word(p, [&](ExtElem x) { return p.field.mul(gf::eval_at_ext(p.field, h, x), min_poly_product(p, x, i)); });
}

std::vector<ExtElem> check_dual_word(const SchemeParams& p, std::size_t e) {
  return scaled_word(p, [&](ExtElem x) { return p.field.mul(p.field.pow(x, e), min_poly_product(p, x)); });
}

ExtElem inner_product(const ExtField& f, std::span<const ExtElem> a, std::span<const ExtElem> b) {
  if (a.size() != b.size()) throw DimensionMismatch("inner product of different lengths");
  ExtElem acc = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

}  // namespace bpir::pir
