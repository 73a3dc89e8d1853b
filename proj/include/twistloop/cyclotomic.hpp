#pragma once

#include "twistloop/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace twistloop {

/// Coefficients of the M-th cyclotomic polynomial Phi_M, constant term first.
/// Computed by exact division of x^M - 1 by the Phi_d over proper divisors d | M.
std::vector<Integer> cyclotomic_polynomial(int order);

long euler_phi(int order);

/// An element of the cyclotomic field Q(zeta_M), stored in the power basis
/// 1, zeta, ..., zeta^{phi(M)-1} reduced modulo Phi_M. For M in {1,2} this is
/// plain Q. Values are immutable; mixed-order arithmetic lifts both operands
/// to the lcm of the orders via zeta_m = zeta_M^{M/m}.
class CycloScalar {
public:
  CycloScalar() : order_(1), coeffs_(1) {}
  CycloScalar(long value) : order_(1), coeffs_{make_rational(value)} {}
  CycloScalar(const Rational& value) : order_(1), coeffs_{value} {}

  static CycloScalar zero() { return CycloScalar(); }
  static CycloScalar one() { return CycloScalar(1); }

  /// zeta_M^k, reduced modulo Phi_M.
  static CycloScalar zeta_power(int order, long k);
  static CycloScalar zeta(int order) { return zeta_power(order, 1); }

  /// Builds from explicit power-basis coordinates (length phi(order)).
  static CycloScalar from_coeffs(int order, std::vector<Rational> coeffs);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_part() const { return coeffs_[0]; }

  /// Embeds into Q(zeta_M) for order_ | M.
  CycloScalar lifted(int order) const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& rhs);
  CycloScalar& operator-=(const CycloScalar& rhs);
  CycloScalar& operator*=(const CycloScalar& rhs);
  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }

  /// Throws Error(DivisionByZero) on zero.
  CycloScalar inverse() const;
  friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) {
    return a * b.inverse();
  }

  friend bool operator==(const CycloScalar& a, const CycloScalar& b);
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

  /// In-place a += b*c; the hot path of every bracket expansion.
  void add_mul(const CycloScalar& b, const CycloScalar& c);

  /// "a/b" for rationals, "(a + b*z + ...)" otherwise (z = zeta_order).
  std::string str() const;

private:
  int order_;
  std::vector<Rational> coeffs_; // length euler_phi(order_)
};

int lcm_order(int a, int b);

} // namespace twistloop
