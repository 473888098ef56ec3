#include "bpir/gf/dual_basis.hpp"

#include "bpir/gf/linalg.hpp"

namespace bpir::gf {

DualBasisPair dual_basis(const ExtField& ext, const std::vector<ExtElem>& theta) {
  const std::size_t s = ext.degree();
  if (theta.size() != s) throw DimensionMismatch("a basis of F_{q^s} needs exactly s elements");
  const auto& base = ext.base();
  Matrix<std::uint32_t> gram(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) gram(i, j) = ext.trace(ext.mul(theta[i], theta[j]));
  }
  const auto inv = inverse(base, gram);
  if (!inv) throw SingularBasis("basis elements are linearly dependent over F_q");
  DualBasisPair pair{theta, std::vector<ExtElem>(s, ext.zero())};
  for (std::size_t j = 0; j < s; ++j) {
    ExtElem acc = ext.zero();
    for (std::size_t i = 0; i < s; ++i) acc = ext.add(acc, ext.mul(ext.embed((*inv)(i, j)), theta[i]));
    pair.eta[j] = acc;
  }
  return pair;
}

std::vector<ExtElem> power_basis(const ExtField& ext) {
  std::vector<ExtElem> out;
  ExtElem p = ext.one();
  for (unsigned d = 0; d < ext.degree(); ++d) {
    out.push_back(p);
    p = ext.mul(p, ext.generator());
  }
  return out;
}

ExtElem reconstruct_from_traces(const ExtField& ext, const DualBasisPair& pair, ExtElem x) {
  ExtElem acc = ext.zero();
  for (std::size_t d = 0; d < pair.theta.size(); ++d) {
    acc = ext.add(acc, ext.mul(pair.theta[d], ext.embed(ext.trace(ext.mul(pair.eta[d], x)))));
  }
  return acc;
}

}  // namespace bpir::gf
