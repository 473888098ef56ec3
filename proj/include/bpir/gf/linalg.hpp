#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bpir/gf/field.hpp"
#include "bpir/gf/matrix.hpp"

namespace bpir::gf {

namespace detail {

// In-place Gauss-Jordan elimination. Returns pivot column per pivot row.
template <FiniteField F>
std::vector<std::size_t> reduce_rows(const F& f, Matrix<elem_t<F>>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const auto inv = f.inv(m(row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <FiniteField F>
std::size_t rank(const F& f, Matrix<elem_t<F>> m) {
  return detail::reduce_rows(f, m).size();
}

template <FiniteField F>
bool is_invertible(const F& f, const Matrix<elem_t<F>>& m) {
  return m.rows() == m.cols() && rank(f, m) == m.rows();
}

// One solution of a x = b (free variables set to zero), or nullopt when the
// system is inconsistent.
template <FiniteField F>
std::optional<std::vector<elem_t<F>>> solve(const F& f, const Matrix<elem_t<F>>& a, const std::vector<elem_t<F>>& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length does not match matrix rows");
  Matrix<elem_t<F>> aug(a.rows(), a.cols() + 1, f.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = detail::reduce_rows(f, aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<elem_t<F>> x(a.cols(), f.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

template <FiniteField F>
std::optional<Matrix<elem_t<F>>> inverse(const F& f, const Matrix<elem_t<F>>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("only square matrices have inverses");
  const std::size_t n = a.rows();
  Matrix<elem_t<F>> aug(n, 2 * n, f.zero());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = f.one();
  }
  const auto pivots = detail::reduce_rows(f, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<elem_t<F>> out(n, n, f.zero());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  }
  return out;
}

}  // namespace bpir::gf
