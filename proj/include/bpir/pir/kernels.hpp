#pragma once

// Data-parallel inner loops of the scheme. Every kernel has a serial reference
// path and an OpenMP path; both produce identical results.

#include <cstddef>
#include <span>
#include <vector>

#include "bpir/gf/ext_field.hpp"
#include "bpir/gf/matrix.hpp"
#include "bpir/pir/rng.hpp"

namespace bpir::pir {

enum class ExecPolicy { serial, parallel };

using Grid = gf::Matrix<gf::ExtElem>;

// rows x cols uniform elements; entry (i, j) uses counter i * cols + j.
Grid draw_uniform_grid(const gf::ExtField& field, const CounterRng& rng, std::size_t rows, std::size_t cols,
                       ExecPolicy policy = ExecPolicy::parallel);

// out(a, c) = [a == iota] * lambda[c] + sum_h mu[h] * blinding[h](a, c).
void evaluate_curve(const gf::ExtField& field, std::size_t iota, std::span<const gf::ExtElem> lambda,
                    std::span<const gf::ExtElem> mu, std::span<const Grid> blinding, Grid& out,
                    ExecPolicy policy = ExecPolicy::parallel);

// Frobenius inner product sum_{a,c} lhs(a, c) * rhs(a, c).
gf::ExtElem frobenius_product(const gf::ExtField& field, const Grid& lhs, const Grid& rhs,
                              ExecPolicy policy = ExecPolicy::parallel);

}  // namespace bpir::pir
