#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bpir/errors.hpp"

namespace bpir::gf {

// Row-major dense matrix of field elements.
template <class V>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, V fill = V{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<V> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw DimensionMismatch("matrix data size does not match its shape");
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  V& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const V& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<V> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const V> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<V> flat() noexcept { return data_; }
  std::span<const V> flat() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<V> data_;
};

}  // namespace bpir::gf
