#pragma once

#include <yh/poly.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace yh {

/// Exact rational function num/den over Q(zeta_d) in the shared variables.
///
/// The stored form is canonical up to common non-monomial factors: the
/// denominator has no monomial content, a monomial denominator is folded into
/// the numerator, and the denominator's leading coefficient is 1. In a single
/// variable the fraction is fully reduced by gcd; otherwise the denominator is
/// divided out when it divides the numerator exactly. Equality never relies on
/// the canonical form: it compares by cross-multiplication.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly num);  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : RatFunc(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Cyclotomic& c) : RatFunc(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den);

  static RatFunc variable(int var) { return RatFunc(Poly::variable(var)); }
  /// Parses the textual form produced by to_string().
  static RatFunc parse(std::string_view text);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  unsigned variables() const { return num_.variables() | den_.variables(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  /// Cross-multiplication equality.
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Removes every power of `factor` common to numerator and denominator.
  RatFunc cancel_factor(const Poly& factor) const;

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_{1};

  void normalize();
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// a == b by cross-multiplication; throws std::invalid_argument when the two
/// live over incompatible cyclotomic fields.
bool ratfunc_eq(const RatFunc& a, const RatFunc& b);

/// Exact substitution var <- value. Throws std::domain_error when the
/// resulting denominator vanishes identically.
RatFunc substitute(const RatFunc& f, int var, const RatFunc& value);
RatFunc substitute(const Poly& f, int var, const RatFunc& value);

/// r * lambda^(half/2) for a fixed lambda; integer powers of lambda are
/// always folded into r so that half is 0 or 1.
class HalfPowerValue {
 public:
  struct Context {
    int d = 1;
    int size_d = 1;
    bool jones = false;  // z specialized so that lambda_D = u
    friend bool operator==(const Context&, const Context&) = default;
  };

  HalfPowerValue(RatFunc r, int half, Context context);

  const RatFunc& rational() const { return r_; }
  int half_flag() const { return half_; }
  const Context& context() const { return context_; }
  /// The lambda this value's square root refers to.
  RatFunc lambda() const;

  HalfPowerValue operator*(const HalfPowerValue& o) const;
  HalfPowerValue times_sqrt_lambda(int power) const;
  HalfPowerValue scaled(const RatFunc& c) const;
  /// Sum of two values with equal half flags (zero has either parity); throws
  /// std::invalid_argument otherwise.
  HalfPowerValue operator+(const HalfPowerValue& o) const;
  HalfPowerValue operator-(const HalfPowerValue& o) const;

  friend bool operator==(const HalfPowerValue& a, const HalfPowerValue& b);
  friend bool operator!=(const HalfPowerValue& a, const HalfPowerValue& b) { return !(a == b); }

  /// "<ratfunc>" or "<ratfunc> * sqrt(lambda_D)" ("sqrt(u)" once specialized).
  std::string to_string() const;

 private:
  RatFunc r_;
  int half_ = 0;
  Context context_;
};

/// lambda_D = (|D| z + 1 - u) / (|D| u z).
RatFunc lambda_d(int size_d);

}  // namespace yh
