#include <yh/cyclotomic.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dense_poly.hpp"

namespace yh {

int euler_phi(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic order must be positive");
  int result = d;
  int m = d;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Rational>& cyclotomic_polynomial(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<Rational>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return *it->second;
  }
  // x^d - 1 divided by Phi_e for every proper divisor e of d.
  std::vector<Rational> p(static_cast<std::size_t>(d) + 1, Rational(0));
  p[0] = -1;
  p[d] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto [q, r] = detail::dense_divmod(p, cyclotomic_polynomial(e));
    if (!r.empty()) throw std::logic_error("cyclotomic factor does not divide x^d - 1");
    p = std::move(q);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(d, std::make_unique<const std::vector<Rational>>(std::move(p)));
  return *it->second;
}

int compatible_order(int a, int b, bool a_rational, bool b_rational) {
  if (a == b) return a;
  if (a_rational) return b;
  if (b_rational) return a;
  if (b % a == 0) return b;
  if (a % b == 0) return a;
  std::ostringstream msg;
  msg << "mismatched cyclotomic fields Q(zeta_" << a << ") and Q(zeta_" << b << ")";
  throw std::invalid_argument(msg.str());
}

Cyclotomic::Cyclotomic(const Rational& value, int order) : order_(order) {
  coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), Rational(0));
  coeffs_[0] = value;
}

void Cyclotomic::reduce(std::vector<Rational> raw) {
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  // phi is monic, so subtracting multiples of it clears the top coefficients.
  for (std::size_t k = raw.size(); k-- > deg;) {
    if (raw[k] == 0) continue;
    Rational c = raw[k];
    const std::size_t shift = k - deg;
    for (std::size_t j = 0; j <= deg; ++j) raw[shift + j] -= c * phi[j];
  }
  raw.resize(deg, Rational(0));
  coeffs_ = std::move(raw);
}

Cyclotomic Cyclotomic::from_coeffs(int order, std::vector<Rational> coeffs) {
  Cyclotomic c(Rational(0), order);
  if (coeffs.empty()) return c;
  c.reduce(std::move(coeffs));
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(int order, long k) {
  if (order < 1) throw std::invalid_argument("root of unity order must be positive");
  long e = k % order;
  if (e < 0) e += order;
  std::vector<Rational> raw(static_cast<std::size_t>(e) + 1, Rational(0));
  raw[e] = 1;
  return from_coeffs(order, std::move(raw));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

Cyclotomic Cyclotomic::embed(int target) const {
  if (target == order_) return *this;
  if (is_rational()) return Cyclotomic(coeffs_[0], target);
  if (target % order_ != 0) {
    compatible_order(order_, target, false, false);  // throws
  }
  const int step = target / order_;
  std::vector<Rational> raw(static_cast<std::size_t>(step) * coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
  return from_coeffs(target, std::move(raw));
}

int Cyclotomic::common_order(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.order_;
  return compatible_order(a.order_, b.order_, a.is_rational(), b.is_rational());
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ == order_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  const int target = common_order(*this, o);
  *this = embed(target);
  const Cyclotomic other = o.embed(target);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    const int target = common_order(*this, o);
    if (o.is_rational() && target == order_) {
      for (auto& c : coeffs_) c *= o.coeffs_[0];
      return *this;
    }
    *this = embed(target);
    return *this *= o.embed(target);
  }
  if (coeffs_.size() == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  std::vector<Rational> raw(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) raw[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce(std::move(raw));
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
  if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0], order_);
  std::vector<Rational> a = coeffs_;
  detail::trim(a);
  auto s = detail::dense_inverse_mod(a, cyclotomic_polynomial(order_));
  return from_coeffs(order_, std::move(s));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  if (a.is_rational() != b.is_rational()) return false;
  const int target = compatible_order(a.order_, b.order_, false, false);
  return a.embed(target).coeffs_ == b.embed(target).coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "E(" << order_ << ")";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace yh
