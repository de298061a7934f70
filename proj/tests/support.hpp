#pragma once

// Shared helpers for the test binaries: random generators and a floating
// point evaluation used as an independent oracle for exact results.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "mctool/linalg.hpp"

namespace mctool::testkit {

using Complex = std::complex<long double>;

/// Numerical value of x under z -> exp(2 pi i / N).
inline Complex to_complex(const CycNum& x) {
  const long double angle = 2 * std::numbers::pi_v<long double> / static_cast<long double>(x.order());
  Complex sum = 0;
  const auto cs = x.coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    sum += static_cast<long double>(cs[k].get_d()) * std::polar(1.0L, angle * static_cast<long double>(k));
  }
  return sum;
}

inline bool close(Complex a, Complex b, long double tol = 1e-9L) { return std::abs(a - b) < tol; }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long bound = 5) {
    long den = integer(1, bound);
    return Rational(integer(-bound, bound), den);
  }

  CycNum scalar(std::uint64_t order, long bound = 5) {
    std::vector<Rational> cs;
    for (std::size_t k = 0; k < euler_phi(order); ++k) cs.push_back(coin() ? rational(bound) : Rational(0));
    return CycNum::from_coeffs(order, cs);
  }

  CycNum nonzero_scalar(std::uint64_t order, long bound = 5) {
    while (true) {
      CycNum x = scalar(order, bound);
      if (!x.is_zero()) return x;
    }
  }

  Mat matrix(std::size_t rows, std::size_t cols, std::uint64_t order, long bound = 3) {
    Mat m(rows, cols, order);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m.set(i, j, coin() ? scalar(order, bound) : CycNum::zero(order));
    }
    return m;
  }

  /// Random invertible matrix with small rational entries.
  Mat invertible(std::size_t n, std::uint64_t order = 1) {
    while (true) {
      Mat m(n, n, order);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, CycNum(integer(-2, 2)));
      }
      if (!det(m).is_zero()) return m;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mctool::testkit
