#pragma once

#include <yh/braid.hpp>
#include <yh/esystem.hpp>
#include <yh/ratfunc.hpp>

#include <string>
#include <vector>

namespace yh {

struct InvariantMeta {
  std::string family;  // framed, classical, singular, homflypt, jones, framed-jones
  int d = 1;
  std::vector<int> D{0};
  friend bool operator==(const InvariantMeta&, const InvariantMeta&) = default;
};

struct InvariantValue {
  HalfPowerValue value;
  InvariantMeta meta;
  int n = 1;
  long epsilon = 0;

  std::string to_string() const { return value.to_string(); }
};

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Values are equal only when their metadata agree; comparing across
/// families or subsets throws InvariantError.
bool same_invariant(const InvariantValue& a, const InvariantValue& b);

/// lambda_D as a function of d and |D| (d only fixes the context).
RatFunc lambda_d(int d, int size_d);

/// Gamma_D (framed), Delta_D (classical) or H_D (singular) of the closure.
InvariantValue invariant(const BraidWord& b, BraidKind family, int d, const std::vector<int>& D);
/// Two-variable Homflypt value through the Ocneanu trace; z stands for zeta.
InvariantValue homflypt(const BraidWord& b);
/// Homflypt at zeta = -1/(u+1).
InvariantValue jones(const BraidWord& b);
/// Gamma_D at z = -1/((u+1)|D|).
InvariantValue framed_jones(const BraidWord& b, int d, const std::vector<int>& D);
/// An invariant value with z replaced by a rational function of u; the
/// result's sqrt refers to u when the substitution turns lambda_D into u.
InvariantValue specialize_z(const InvariantValue& v, const RatFunc& z_value);

enum class SkeinKind { framed, cubic, singular };
std::string to_string(SkeinKind kind);
SkeinKind parse_skein_kind(std::string_view name);

/// Builds the local variants of `base` at crossing position i and checks the
/// corresponding skein identity exactly. For the framed relation every s in
/// 0..d-1 enters the sum.
bool verify_skein(SkeinKind kind, const BraidWord& base, int i, int d, const std::vector<int>& D);

bool compare_links(const BraidWord& a, const BraidWord& b, BraidKind family, int d, const std::vector<int>& D);

}  // namespace yh
