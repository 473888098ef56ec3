#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bpir::pir {

using Rational = boost::multiprecision::cpp_rational;

// C(t, b, k) = (k - 2b - t) / k, the limit of capacity_finite as m grows.
Rational capacity(std::size_t t, std::size_t b, std::size_t k);

// C_m(t, b, k) = ((k-2b)/k) (1 - rho) / (1 - rho^m) with rho = t / (k - 2b).
Rational capacity_finite(std::size_t t, std::size_t b, std::size_t k, std::size_t m);

// "num/den", or "num" for integers.
std::string to_string(const Rational& x);
double to_double(const Rational& x);

}  // namespace bpir::pir
