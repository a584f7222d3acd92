#include <yh/laurent.hpp>

#include <algorithm>

namespace yh {

Laurent::Laurent(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Laurent Laurent::monomial(const Rational& c, int e) {
  Laurent r(c);
  if (!r.is_zero()) r.low_ = e;
  return r;
}

Rational Laurent::coeff(int e) const {
  if (c_.empty() || e < low_ || e > high()) return Rational(0);
  return c_[e - low_];
}

void Laurent::trim() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  while (c_.back() == 0) c_.pop_back();
  if (lead != 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  if (lo < low_) c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
  low_ = lo;
  c_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[o.low_ - lo + i] += o.c_[i];
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Laurent r;
  r.low_ = a.low_ + b.low_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Laurent Laurent::scaled(const Rational& c) const {
  if (c == 0) return {};
  Laurent r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

void Laurent::add_product(const Laurent& o, const Laurent& c) {
  if (o.is_zero() || c.is_zero()) return;
  if (c.c_.size() == 1 && !is_zero()) {
    const int lo = o.low_ + c.low_;
    const int hi = lo + static_cast<int>(o.c_.size()) - 1;
    if (lo >= low_ && hi <= high()) {
      for (std::size_t i = 0; i < o.c_.size(); ++i) c_[lo - low_ + i] += o.c_[i] * c.c_[0];
      trim();
      return;
    }
  }
  *this += o * c;
}

Poly Laurent::to_poly() const {
  std::vector<Cyclotomic> cs;
  cs.reserve(c_.size());
  for (const auto& c : c_) cs.emplace_back(c);
  return Poly::from_univariate(kVarU, cs, low_);
}

}  // namespace yh
