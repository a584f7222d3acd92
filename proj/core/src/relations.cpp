#include <yh/algebra.hpp>

#include <cstdlib>
#include <functional>
#include <map>

namespace yh {

namespace {

using Check = std::function<bool(int d, int n)>;

bool braid_relations(int d, int n) {
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      const AlgebraElement gi = gen_g(d, n, i), gj = gen_g(d, n, j);
      if (std::abs(i - j) > 1 && !(gi * gj == gj * gi)) return false;
      if (std::abs(i - j) == 1 && !(gi * gj * gi == gj * gi * gj)) return false;
    }
  return true;
}

bool framing_relations(int d, int n) {
  for (int i = 1; i <= n; ++i) {
    const AlgebraElement ti = gen_t(d, n, i);
    if (!(gen_t(d, n, i, d) == unit(d, n))) return false;
    AlgebraElement power = unit(d, n);
    for (int k = 0; k < d; ++k) power = power * ti;
    if (!(power == unit(d, n))) return false;
    for (int j = 1; j <= n; ++j)
      if (!(ti * gen_t(d, n, j) == gen_t(d, n, j) * ti)) return false;
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int image = j == i ? i + 1 : (j == i + 1 ? i : j);
      if (!(gen_t(d, n, j) * gen_g(d, n, i) == gen_g(d, n, i) * gen_t(d, n, image))) return false;
    }
  return true;
}

Laurent um1() { return Laurent::u() - Laurent(1); }
Laurent uinvm1() { return Laurent::u(-1) - Laurent(1); }

bool quadratic(int d, int n) {
  for (int i = 1; i < n; ++i) {
    const AlgebraElement g = gen_g(d, n, i), e = idempotent_e(d, n, i);
    if (!(g * g == unit(d, n) + e.scaled(um1()) + (e * g).scaled(um1()))) return false;
  }
  return true;
}

bool inverse(int d, int n) {
  for (int i = 1; i < n; ++i) {
    const AlgebraElement g = gen_g(d, n, i), e = idempotent_e(d, n, i), inv = inverse_g(d, n, i);
    if (!(inv == g + e.scaled(uinvm1()) + (e * g).scaled(uinvm1()))) return false;
    if (!(g * inv == unit(d, n)) || !(inv * g == unit(d, n))) return false;
  }
  return true;
}

bool idempotents(int d, int n) {
  for (int i = 1; i < n; ++i) {
    const AlgebraElement e = idempotent_e(d, n, i), g = gen_g(d, n, i);
    if (!(e * e == e) || !(e * g == g * e)) return false;
  }
  return true;
}

bool cubic(int d, int n) {
  for (int i = 1; i < n; ++i) {
    const AlgebraElement g = gen_g(d, n, i), g2 = g * g;
    if (!(g2 * g == g2.scaled(Laurent::u()) + g - unit(d, n).scaled(Laurent::u()))) return false;
  }
  return true;
}

// The indeterminate of a univariate identity lives in the z slot; its
// coefficient ring variable (u or m) in the u slot.
Poly X(int e = 1) { return Poly::variable(kVarZ, e); }
Poly U() { return Poly::variable(kVarU); }

bool cubic_factorization(int d, int n) {
  const Poly lhs = X(3) - U() * X(2) - X() + U();
  const Poly rhs = (X() - Poly(1)) * (X(2) - (U() - Poly(1)) * X() - U());
  if (lhs != rhs) return false;
  for (int i = 1; i < n; ++i) {
    const AlgebraElement g = gen_g(d, n, i), one = unit(d, n);
    const AlgebraElement factored = (g - one) * (g * g - g.scaled(um1()) - one.scaled(Laurent::u()));
    if (!factored.is_zero()) return false;
  }
  return true;
}

bool bmw_quintic_factorization(int, int) {
  const Poly m = U();
  const Poly quartic = X(4) + m * X(3) + (m - Poly(2)) * X(2) + m * (m - Poly(1)) * X() - (m - Poly(1));
  return quartic == (X(2) + m * X() - Poly(1)) * (X(2) + m - Poly(1));
}

bool gipi(int d, int n) {
  for (int i = 1; i < n; ++i)
    if (!(inverse_g(d, n, i) - gen_g(d, n, i) == singular_p(d, n, i).scaled(uinvm1()))) return false;
  return true;
}

bool quadratic_p(int d, int n) {
  for (int i = 1; i < n; ++i) {
    const AlgebraElement g = gen_g(d, n, i);
    if (!(g * g == unit(d, n) + singular_p(d, n, i).scaled(um1()))) return false;
    if (!(singular_p(d, n, i) == idempotent_e(d, n, i) * (unit(d, n) + g))) return false;
  }
  return true;
}

bool eta_relations(int d, int n) {
  auto image = [&](const std::string& word) { return map_to_algebra(parse_braid(word).with_strands(n), d); };
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      const AlgebraElement gi = gen_g(d, n, i), gj = gen_g(d, n, j);
      const AlgebraElement pi = singular_p(d, n, i), pj = singular_p(d, n, j);
      if (std::abs(i - j) > 1) {
        if (!(gi * pj == pj * gi) || !(pi * pj == pj * pi)) return false;
      } else if (std::abs(i - j) == 1) {
        if (!(gi * gj * pi == pj * gi * gj)) return false;
        const std::string si = "s" + std::to_string(i), sj = "s" + std::to_string(j);
        if (!(image(si + " " + sj + " x" + std::to_string(i)) == image("x" + std::to_string(j) + " " + si + " " + sj)))
          return false;
      } else {
        if (!(gi * pi == pi * gi)) return false;
        if (!(image("-s" + std::to_string(i) + " x" + std::to_string(i)) ==
              image("x" + std::to_string(i) + " -s" + std::to_string(i))))
          return false;
      }
    }
  return true;
}

const std::map<std::string, Check, std::less<>>& registry() {
  static const std::map<std::string, Check, std::less<>> r = {
      {"braid", braid_relations},
      {"framing", framing_relations},
      {"quadratic", quadratic},
      {"inverse", inverse},
      {"idempotent", idempotents},
      {"cubic", cubic},
      {"cubic_factorization", cubic_factorization},
      {"gipi", gipi},
      {"quadratic_p", quadratic_p},
      {"eta_relations", eta_relations},
      {"bmw_quintic_factorization", bmw_quintic_factorization},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& relation_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, check] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool verify_relation(std::string_view name, int d, int n) {
  const auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) throw AlgebraError("unknown relation '" + std::string(name) + "'");
  return it->second(d, n);
}

}  // namespace yh
