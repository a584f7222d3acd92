#pragma once

#include <yh/algebra.hpp>
#include <yh/ratfunc.hpp>

#include <optional>
#include <string>
#include <vector>

namespace yh {

/// Trace parameters for a quotient check: z as a rational function of u and
/// the framing values x_0 .. x_{d-1} (x_0 = 1).
struct QuotientParams {
  RatFunc z;
  std::vector<Cyclotomic> x;
};

struct QuotientCheck {
  QuotientKind kind = QuotientKind::ytl;
  int d = 1;
  QuotientParams params;
  int n = 3;
};

/// A pair (a, b) of basis words with tr(a * gen * b) != 0.
struct VanishWitness {
  std::string a;
  std::string b;
  RatFunc value;
};

struct VanishResult {
  bool vanishes = true;
  std::optional<VanishWitness> witness;
};

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every basis word of Y_{d,n}(u), in (framing, permutation) order.
std::vector<BasisWord> basis_words(int d, int n);

/// Decides whether tr vanishes on the two-sided ideal generated by
/// quotient_generator(kind, d, n, 1). By tr(a g b) = tr(b a g) it suffices to
/// test tr(w g) for basis words w; `exhaustive` tests every pair (a, b)
/// instead. Throws BudgetError when the basis exceeds `budget` words.
VanishResult trace_vanishes_on_ideal(const QuotientCheck& check, bool exhaustive = false,
                                     std::size_t budget = 20000);

/// The closed-form trace-passing conditions for each quotient.
bool admissible(QuotientKind kind, int d, const QuotientParams& params);

/// True when `element` lies in the two-sided ideal generated by `generator`,
/// by exact elimination over Q(u). Throws BudgetError past `budget` words.
bool ideal_inclusion(const AlgebraElement& element, const AlgebraElement& generator, std::size_t budget = 2000);

/// Dimension over Q(u) of the two-sided ideal generated by `generator`.
std::size_t ideal_dimension(const AlgebraElement& generator, std::size_t budget = 2000);

}  // namespace yh
