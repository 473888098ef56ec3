#include "bpir/pir/kernels.hpp"

#include <omp.h>

#include "bpir/errors.hpp"

namespace bpir::pir {

using gf::ExtElem;

Grid draw_uniform_grid(const gf::ExtField& field, const CounterRng& rng, std::size_t rows, std::size_t cols,
                       ExecPolicy policy) {
  Grid out(rows, cols);
  auto flat = out.flat();
  const auto n = static_cast<std::ptrdiff_t>(flat.size());
  if (policy == ExecPolicy::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) flat[i] = rng.uniform(field, static_cast<std::uint64_t>(i));
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) flat[i] = rng.uniform(field, static_cast<std::uint64_t>(i));
  }
  return out;
}

namespace {

// Field ops throw on foreign elements; exceptions must not escape an OpenMP
// region, so inputs are screened up front.
void require_in_field(const gf::ExtField& field, const Grid& g) {
  for (auto e : g.flat()) {
    if (!field.contains(e)) throw FieldMismatch("array entry outside " + field.description());
  }
}

ExtElem curve_entry(const gf::ExtField& field, std::size_t iota, std::span<const ExtElem> lambda,
                    std::span<const ExtElem> mu, std::span<const Grid> blinding, std::size_t a, std::size_t c) {
  ExtElem acc = a == iota ? lambda[c] : field.zero();
  for (std::size_t h = 0; h < mu.size(); ++h) acc = field.add(acc, field.mul(mu[h], blinding[h](a, c)));
  return acc;
}

}  // namespace

void evaluate_curve(const gf::ExtField& field, std::size_t iota, std::span<const ExtElem> lambda,
                    std::span<const ExtElem> mu, std::span<const Grid> blinding, Grid& out, ExecPolicy policy) {
  if (lambda.size() != out.cols() || blinding.size() != mu.size()) throw DimensionMismatch("curve weights do not match the grid");
  for (const auto& g : blinding) {
    if (g.rows() != out.rows() || g.cols() != out.cols()) throw DimensionMismatch("blinding array shape mismatch");
    require_in_field(field, g);
  }
  for (auto e : lambda) if (!field.contains(e)) throw FieldMismatch("curve weight outside the field");
  for (auto e : mu) if (!field.contains(e)) throw FieldMismatch("curve weight outside the field");
  const auto rows = static_cast<std::ptrdiff_t>(out.rows());
  const std::size_t cols = out.cols();
  if (policy == ExecPolicy::serial) {
    for (std::ptrdiff_t a = 0; a < rows; ++a) {
      for (std::size_t c = 0; c < cols; ++c) out(a, c) = curve_entry(field, iota, lambda, mu, blinding, a, c);
    }
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t a = 0; a < rows; ++a) {
      for (std::size_t c = 0; c < cols; ++c) {
        out(a, c) = curve_entry(field, iota, lambda, mu, blinding, static_cast<std::size_t>(a), c);
      }
    }
  }
}

ExtElem frobenius_product(const gf::ExtField& field, const Grid& lhs, const Grid& rhs, ExecPolicy policy) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) throw DimensionMismatch("inner product of differently shaped arrays");
  require_in_field(field, lhs);
  require_in_field(field, rhs);
  const auto a = lhs.flat();
  const auto b = rhs.flat();
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  if (policy == ExecPolicy::serial) {
    ExtElem acc = field.zero();
    for (std::ptrdiff_t i = 0; i < n; ++i) acc = field.add(acc, field.mul(a[i], b[i]));
    return acc;
  }
  std::vector<ExtElem> partial(static_cast<std::size_t>(omp_get_max_threads()), field.zero());
#pragma omp parallel
  {
    ExtElem local = field.zero();
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) local = field.add(local, field.mul(a[i], b[i]));
    partial[static_cast<std::size_t>(omp_get_thread_num())] = local;
  }
  ExtElem acc = field.zero();
  for (auto p : partial) acc = field.add(acc, p);
  return acc;
}

}  // namespace bpir::pir
