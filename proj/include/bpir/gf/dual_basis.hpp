#pragma once

#include <vector>

#include "bpir/gf/ext_field.hpp"

namespace bpir::gf {

// Bases {theta}, {eta} of F_{q^s} over F_q with Tr(theta_i eta_j) = [i == j].
struct DualBasisPair {
  std::vector<ExtElem> theta;
  std::vector<ExtElem> eta;
};

// Inverts the trace Gram matrix G_ij = Tr(theta_i theta_j) and sets
// eta_j = sum_i (G^-1)_ij theta_i. Throws SingularBasis if theta is dependent.
DualBasisPair dual_basis(const ExtField& ext, const std::vector<ExtElem>& theta);

// {1, g, ..., g^{s-1}} for the class g of xi.
std::vector<ExtElem> power_basis(const ExtField& ext);

// sum_d theta_d Tr(eta_d x).
ExtElem reconstruct_from_traces(const ExtField& ext, const DualBasisPair& pair, ExtElem x);

}  // namespace bpir::gf
