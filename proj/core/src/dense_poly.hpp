#pragma once

// Dense univariate polynomial helpers over a field. Coefficients are stored
// lowest degree first; the zero polynomial is the empty vector.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace yh::detail {

template <class T>
void trim(std::vector<T>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class T>
std::vector<T> dense_sub(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

template <class T>
std::vector<T> dense_mul(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> r(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Returns (quotient, remainder). b must be nonzero.
template <class T>
std::pair<std::vector<T>, std::vector<T>> dense_divmod(std::vector<T> a, const std::vector<T>& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  std::vector<T> q(a.size() - b.size() + 1, T(0));
  const T lead_inv = T(1) / b.back();
  const long top = static_cast<long>(b.size()) - 1;
  for (long k = static_cast<long>(a.size()) - 1; k >= top; --k) {
    if (a[k] == 0) continue;
    T c = a[k] * lead_inv;
    const long shift = k - top;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

template <class T>
std::vector<T> make_monic(std::vector<T> p) {
  trim(p);
  if (p.empty()) return p;
  T inv = T(1) / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

template <class T>
std::vector<T> dense_gcd(std::vector<T> a, std::vector<T> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = dense_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

// Returns s with a*s = gcd(a, m) (mod m); used for inversion when gcd is 1.
template <class T>
std::vector<T> dense_inverse_mod(const std::vector<T>& a, const std::vector<T>& m) {
  std::vector<T> r0 = m, r1 = a;
  std::vector<T> s0, s1{T(1)};
  trim(r1);
  if (r1.empty()) throw std::domain_error("inverse of zero");
  while (r1.size() > 1) {
    auto [q, r] = dense_divmod(r0, r1);
    auto s = dense_sub(s0, dense_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw std::domain_error("element is not invertible");
  }
  T inv = T(1) / r1[0];
  for (auto& c : s1) c *= inv;
  return dense_divmod(s1, m).second;
}

}  // namespace yh::detail
