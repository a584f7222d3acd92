#pragma once

#include <yh/rational.hpp>

#include <string>
#include <vector>

namespace yh {

/// Euler's totient; the degree of the d-th cyclotomic polynomial.
int euler_phi(int d);

/// Coefficients of the d-th cyclotomic polynomial, lowest degree first.
/// Computed once per d by dividing x^d - 1 by every proper cyclotomic factor.
const std::vector<Rational>& cyclotomic_polynomial(int d);

/// Exact element of Q(zeta_d), stored as a residue of Q[x] modulo Phi_d with
/// zeta_d the class of x. The coefficient vector always has length phi(d).
///
/// Binary operations accept operands from different fields when one embeds
/// into the other (rational values embed anywhere, Q(zeta_a) into Q(zeta_b)
/// when a divides b). Anything else throws std::invalid_argument.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(long value) : Cyclotomic(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value, int order = 1);          // NOLINT(google-explicit-constructor)

  /// Builds an element from coefficients on 1, zeta, ..., reducing modulo Phi_d.
  static Cyclotomic from_coeffs(int order, std::vector<Rational> coeffs);

  /// zeta_d^k for any integer k.
  static Cyclotomic root_of_unity(int order, long k);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant coefficient; equals the value when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  /// Re-expresses this value in Q(zeta_target); target must be a multiple of
  /// order() unless the value is rational.
  Cyclotomic embed(int target) const;

  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// "3/2" for rationals, otherwise a sum in powers of E(d), e.g. "1/2 + E(3)".
  std::string to_string() const;

 private:
  int order_ = 1;
  std::vector<Rational> coeffs_;

  void reduce(std::vector<Rational> raw);
  static int common_order(const Cyclotomic& a, const Cyclotomic& b);
};

/// The order both operands can be embedded into, or throws.
int compatible_order(int a, int b, bool a_rational, bool b_rational);

}  // namespace yh
