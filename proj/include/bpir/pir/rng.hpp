#pragma once

#include <cstdint>
#include <limits>

#include "bpir/gf/field.hpp"

namespace bpir::pir {

// Counter-based generator: the value at (seed, stream, counter) is a pure
// function, so draws can be produced in any order or in parallel and still
// match bit for bit.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept : seed_(seed), stream_(stream) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  // Independent generator for a named sub-purpose.
  CounterRng substream(std::uint64_t id) const noexcept { return CounterRng(seed_, mix(stream_ ^ mix(id + 1))); }

  std::uint64_t bits(std::uint64_t counter, std::uint64_t attempt = 0) const noexcept {
    return mix(mix(mix(seed_) ^ stream_) ^ mix(counter) ^ (attempt * 0xD1B54A32D192ED03ull));
  }

  // Uniform in [0, n) by rejection sampling.
  std::uint64_t below(std::uint64_t n, std::uint64_t counter) const noexcept {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    for (std::uint64_t attempt = 0;; ++attempt) {
      const std::uint64_t x = bits(counter, attempt);
      if (x < limit) return x % n;
    }
  }

  template <gf::FiniteField F>
  gf::elem_t<F> uniform(const F& f, std::uint64_t counter) const {
    return f.from_index(below(f.order(), counter));
  }

  static std::uint64_t mix(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

}  // namespace bpir::pir
