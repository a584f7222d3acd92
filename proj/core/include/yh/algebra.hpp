#pragma once

#include <yh/braid.hpp>
#include <yh/laurent.hpp>
#include <yh/permutation.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace yh {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// t_1^{a_1} ... t_n^{a_n} g_w. Entries past the element's strand count are
/// zero framings and fixed points.
struct BasisWord {
  std::array<std::uint8_t, kMaxStrands> a{};
  Perm w = identity_perm();

  friend auto operator<=>(const BasisWord&, const BasisWord&) = default;
  friend bool operator==(const BasisWord&, const BasisWord&) = default;
};

/// Sparse element of Y_{d,n}(u) in split normal form.
class AlgebraElement {
 public:
  using Term = std::pair<BasisWord, Laurent>;

  AlgebraElement() = default;
  /// The zero element.
  AlgebraElement(int d, int n);
  /// Merges duplicate words, reduces framings mod d and drops zeros.
  static AlgebraElement from_terms(int d, int n, std::vector<Term> terms);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Laurent coefficient(const BasisWord& w) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement operator-() const;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement scaled(const Laurent& c) const;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  /// Terms in (framing, permutation) order, e.g. "(u - 1)*t1*t2^2*g[2,1]".
  std::string to_string() const;

 private:
  int d_ = 1;
  int n_ = 1;
  std::vector<Term> terms_;

  void check_same(const AlgebraElement& o) const;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement unit(int d, int n);
AlgebraElement gen_g(int d, int n, int i);
AlgebraElement gen_t(int d, int n, int j, long k = 1);
AlgebraElement inverse_g(int d, int n, int i);
/// e_i^{(k)} = (1/d) sum_s t_i^{k+s} t_{i+1}^{-s}; k = 0 gives e_i.
AlgebraElement idempotent_e(int d, int n, int i, int k = 0);
/// p_i = e_i (1 + g_i).
AlgebraElement singular_p(int d, int n, int i);

/// Right multiplication by a single generator, term by term.
AlgebraElement right_mul_g(const AlgebraElement& x, int i);
AlgebraElement right_mul_g_inv(const AlgebraElement& x, int i);
AlgebraElement right_mul_t(const AlgebraElement& x, int j, long k);
AlgebraElement right_mul_p(const AlgebraElement& x, int i);

/// The same element read in Y_{d,m}(u), m >= n.
AlgebraElement embed(const AlgebraElement& x, int m);

/// gamma, delta or eta according to the word's kind; framings reduced mod d.
AlgebraElement map_to_algebra(const BraidWord& b, int d);

enum class QuotientKind { ytl, ftl, ctl };
std::string to_string(QuotientKind kind);
QuotientKind parse_quotient_kind(std::string_view name);

/// Steinberg element g_{i,i+1} (ytl), e_i e_{i+1} g_{i,i+1} (ftl), or the sum
/// of t_i^a t_{i+1}^b t_{i+2}^c g_{i,i+1} over a + b + c = 0 mod d (ctl).
AlgebraElement quotient_generator(QuotientKind kind, int d, int n, int i);

/// Names accepted by verify_relation.
const std::vector<std::string>& relation_names();

/// Checks a named identity as an exact normal-form equality in Y_{d,n}(u)
/// for every applicable index, or as a polynomial identity for the two
/// factorizations. Throws AlgebraError for unknown names.
bool verify_relation(std::string_view name, int d, int n = 3);

}  // namespace yh
