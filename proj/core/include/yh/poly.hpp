#pragma once

#include <yh/cyclotomic.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace yh {

// Variable slots shared by every polynomial: u, z, then the framing
// parameters x_1, x_2, ...
inline constexpr int kMaxVars = 12;
inline constexpr int kVarU = 0;
inline constexpr int kVarZ = 1;
inline constexpr int x_var(int m) { return 1 + m; }  // m >= 1
std::string var_name(int var);

/// Exponent vector; negative exponents are allowed (Laurent monomials).
struct Monomial {
  std::array<std::int16_t, kMaxVars> exp{};

  int total_degree() const;
  bool is_one() const;
  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic comparison on (u, z, x_1, ...): true when a is the
/// larger monomial.
bool grlex_greater(const Monomial& a, const Monomial& b);

/// Sparse multivariate Laurent polynomial with coefficients in Q(zeta_d).
/// Terms are kept sorted in descending graded-lex order with no zeros.
class Poly {
 public:
  using Term = std::pair<Monomial, Cyclotomic>;

  Poly() = default;
  Poly(const Cyclotomic& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Cyclotomic(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c) : Poly(Cyclotomic(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly variable(int var, int power = 1);
  static Poly monomial(const Monomial& m, const Cyclotomic& c);
  /// Builds from unsorted terms, merging duplicates.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  /// Bit i set when variable i occurs with nonzero exponent.
  unsigned variables() const;
  int min_exponent(int var) const;
  int max_exponent(int var) const;
  /// Per-variable minimum exponent across all terms.
  Monomial min_monomial() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Cyclotomic& c) const;
  Poly shifted(const Monomial& m) const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Replaces a variable by a constant.
  Poly substitute_constant(int var, const Cyclotomic& value) const;

  /// Exact quotient a / b when b divides a in the Laurent ring, else nullopt.
  std::optional<Poly> divide_exact(const Poly& b) const;

  /// Dense coefficients in `var`, lowest degree first, shifted so index 0 is
  /// min_exponent(var). Requires that no other variable occurs.
  std::vector<Cyclotomic> univariate_coeffs(int var) const;
  static Poly from_univariate(int var, const std::vector<Cyclotomic>& coeffs, int low = 0);

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace yh
