#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is stored in the power basis 1, z, ..., z^(phi(N)-1) where z is a
// primitive N-th root of unity, reduced modulo the N-th cyclotomic polynomial.
// Coefficients are kept as an integer vector over one positive common
// denominator, which is cheaper than a vector of independent fractions and is
// still canonical: gcd(den, num_0, ..., num_k) == 1.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mctool/error.hpp"

namespace mctool {

using Rational = mpq_class;
using Integer = mpz_class;

/// Integer polynomial, coefficients from low to high degree.
using IntPoly = std::vector<Integer>;

IntPoly cyclotomic_polynomial(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Upper bound on cyclotomic orders; MCTOOL_MAX_ORDER overrides the default 10^6.
std::uint64_t max_cyclotomic_order();

/// Least common multiple that raises OrderOverflow above max_cyclotomic_order().
std::uint64_t checked_order_lcm(std::uint64_t a, std::uint64_t b);

/// Per-order data shared by all elements of Q(zeta_N). Instances are interned
/// and never destroyed, so elements hold a plain pointer.
class CyclotomicField {
 public:
  static const CyclotomicField& get(std::uint64_t order);

  std::uint64_t order() const { return order_; }
  std::size_t degree() const { return degree_; }
  const IntPoly& modulus() const { return modulus_; }

  /// Reduces a coefficient vector of any length modulo Phi_N in place and
  /// truncates it to degree() entries.
  void reduce(std::vector<Integer>& coeffs) const;

 private:
  explicit CyclotomicField(std::uint64_t order);

  std::uint64_t order_;
  std::size_t degree_;
  IntPoly modulus_;
  // Nonzero terms of Phi_N below the leading one, for sparse long division.
  std::vector<std::pair<std::size_t, Integer>> tail_;
};

class CycNum {
 public:
  /// Zero of Q(zeta_1) = Q.
  CycNum();
  CycNum(long value);  // NOLINT(google-explicit-constructor): rationals embed implicitly
  explicit CycNum(const Rational& value, std::uint64_t order = 1);

  static CycNum zero(std::uint64_t order);
  static CycNum one(std::uint64_t order);
  /// Builds an element from rational power-basis coordinates (length <= phi(N)
  /// is padded; longer inputs are reduced modulo Phi_N).
  static CycNum from_coeffs(std::uint64_t order, const std::vector<Rational>& coeffs);

  std::uint64_t order() const { return field_->order(); }
  const CyclotomicField& field() const { return *field_; }

  /// Rational coordinate i in the power basis (lowest terms).
  Rational coeff(std::size_t i) const;
  std::vector<Rational> coeffs() const;
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in Q (only the constant coordinate is set).
  bool is_rational() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator/=(const CycNum& other);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  CycNum inv() const;
  CycNum pow(long long exponent) const;

  /// Same element viewed in Q(zeta_M); order() must divide M.
  CycNum embed(std::uint64_t target_order) const;
  /// Inverse of embed: the element rewritten in Q(zeta_M) for M | order().
  /// Throws NotADivisor if M does not divide the order, InternalCheckFailed
  /// if the element does not lie in the subfield.
  CycNum project(std::uint64_t target_order) const;

  /// Applies the Galois automorphism z -> z^k (gcd(k, N) == 1).
  CycNum galois(long long k) const;

  /// Multiplicative order if the element is a root of unity in its field, else 0.
  std::uint64_t root_of_unity_order() const;

  std::string to_string() const;

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

 private:
  CycNum(const CyclotomicField* field, std::vector<Integer> num, Integer den);
  void normalize();
  void scale_rational(const Integer& num, const Integer& den);
  static void align(CycNum& a, CycNum& b);

  const CyclotomicField* field_;
  std::vector<Integer> num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

/// zeta_N^k as an element of Q(zeta_N).
CycNum root_of_unity(std::uint64_t n, long long k);

/// Free-function spelling of CycNum::embed.
CycNum embed(const CycNum& a, std::uint64_t target_order);

/// Parses the scalar syntax: a polynomial in `z` (standing for zeta_N) with
/// rational coefficients, e.g. "1/2 - z^3", "-2*z", "3/4".
CycNum parse_cycnum(std::string_view text, std::uint64_t order);

/// Every root of unity contained in Q(zeta_N): the N-th roots for even N and
/// the 2N-th roots for odd N. Ordered by exponent of the generator.
std::vector<CycNum> roots_of_unity_in_field(std::uint64_t order);

}  // namespace mctool
