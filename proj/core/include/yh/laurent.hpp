#pragma once

#include <yh/poly.hpp>
#include <yh/rational.hpp>

#include <string>
#include <vector>

namespace yh {

/// Laurent polynomial in u over Q, stored densely from the lowest exponent.
/// Every algebra coefficient lives here: the relations only ever introduce
/// u, u^-1 and 1/d.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c) : Laurent(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Laurent(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// c * u^e
  static Laurent monomial(const Rational& c, int e);
  static Laurent u(int e = 1) { return monomial(Rational(1), e); }

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int e) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent operator-() const;
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent scaled(const Rational& c) const;
  /// Adds c * o in place.
  void add_product(const Laurent& o, const Laurent& c);

  friend bool operator==(const Laurent&, const Laurent&) = default;

  Poly to_poly() const;
  std::string to_string() const { return to_poly().to_string(); }

 private:
  int low_ = 0;
  std::vector<Rational> c_;

  void trim();
};

}  // namespace yh
