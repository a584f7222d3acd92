#pragma once

#include <yh/algebra.hpp>
#include <yh/braid.hpp>
#include <yh/poly.hpp>

#include "../oracle/hecke_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace yh_test {

inline yh::Poly to_poly(const oracle::UZ& p) {
  std::vector<yh::Poly::Term> terms;
  for (const auto& [k, c] : p) {
    yh::Monomial m;
    m.exp[yh::kVarU] = static_cast<std::int16_t>(k.first);
    m.exp[yh::kVarZ] = static_cast<std::int16_t>(k.second);
    terms.emplace_back(m, yh::Cyclotomic(yh::Rational(c)));
  }
  return yh::Poly::from_terms(std::move(terms));
}

inline yh::BasisWord random_word(std::mt19937& rng, int d, int n) {
  yh::BasisWord w;
  std::uniform_int_distribution<int> frame(0, d - 1);
  for (int j = 0; j < n; ++j) w.a[j] = static_cast<std::uint8_t>(frame(rng));
  std::shuffle(w.w.begin(), w.w.begin() + n, rng);
  return w;
}

inline yh::Laurent random_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(-1, 1);
  int v = 0;
  while (v == 0) v = c(rng);
  return yh::Laurent::monomial(yh::Rational(v), e(rng));
}

/// A sum of up to `max_terms` random basis words with small coefficients.
inline yh::AlgebraElement random_element(std::mt19937& rng, int d, int n, int max_terms = 3) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::vector<yh::AlgebraElement::Term> terms;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) terms.emplace_back(random_word(rng, d, n), random_coeff(rng));
  return yh::AlgebraElement::from_terms(d, n, std::move(terms));
}

inline yh::BraidWord random_braid(std::mt19937& rng, yh::BraidKind kind, int n, int length, int d = 3) {
  std::vector<yh::Letter> letters;
  std::uniform_int_distribution<int> pick(0, 5), idx(1, std::max(1, n - 1)), strand(1, n), sign(0, 1);
  std::uniform_int_distribution<long> k(-d, 2 * d);
  for (int l = 0; l < length; ++l) {
    const int p = pick(rng);
    if (kind == yh::BraidKind::framed && p >= 4) {
      letters.emplace_back(yh::Framing{strand(rng), k(rng)});
    } else if (kind == yh::BraidKind::singular && p == 5 && n > 1) {
      letters.emplace_back(yh::Tau{idx(rng)});
    } else if (n > 1) {
      letters.emplace_back(yh::Sigma{idx(rng), sign(rng) ? 1 : -1});
    }
  }
  return yh::BraidWord(n, std::move(letters), kind);
}

/// Words over s_1^{+-1} .. s_{n-1}^{+-1} of length <= max_length with no
/// adjacent s_i s_i^{-1} pair.
inline std::vector<std::vector<yh::Letter>> reduced_sigma_words(int n, int max_length) {
  std::vector<yh::Letter> alphabet;
  for (int i = 1; i < n; ++i) {
    alphabet.emplace_back(yh::Sigma{i, 1});
    alphabet.emplace_back(yh::Sigma{i, -1});
  }
  std::vector<std::vector<yh::Letter>> out{{}};
  std::vector<std::vector<yh::Letter>> layer{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<yh::Letter>> next;
    for (const auto& w : layer) {
      for (const auto& l : alphabet) {
        if (!w.empty()) {
          const auto& last = std::get<yh::Sigma>(w.back());
          const auto& s = std::get<yh::Sigma>(l);
          if (last.i == s.i && last.sign == -s.sign) continue;
        }
        auto v = w;
        v.push_back(l);
        next.push_back(std::move(v));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace yh_test
