#include <yh/poly.hpp>

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace yh {

std::string var_name(int var) {
  if (var == kVarU) return "u";
  if (var == kVarZ) return "z";
  return "x" + std::to_string(var - 1);
}

int Monomial::total_degree() const {
  int s = 0;
  for (auto e : exp) s += e;
  return s;
}

bool Monomial::is_one() const {
  for (auto e : exp)
    if (e != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::int16_t>(exp[i] + o.exp[i]);
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::int16_t>(-exp[i]);
  return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  return false;
}

namespace {

bool divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::int16_t>(b.exp[i] - a.exp[i]);
  return r;
}

// Merges two sorted term lists, with b scaled by `sign`.
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                              bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      Cyclotomic c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(const Cyclotomic& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

Poly Poly::variable(int var, int power) {
  if (var < 0 || var >= kMaxVars) throw std::out_of_range("polynomial variable index out of range");
  Monomial m;
  m.exp[var] = static_cast<std::int16_t>(power);
  return monomial(m, Cyclotomic(1));
}

Poly Poly::monomial(const Monomial& m, const Cyclotomic& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

unsigned Poly::variables() const {
  unsigned mask = 0;
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < kMaxVars; ++i)
      if (m.exp[i] != 0) mask |= 1u << i;
  return mask;
}

int Poly::min_exponent(int var) const {
  if (terms_.empty()) return 0;
  int r = std::numeric_limits<int>::max();
  for (const auto& t : terms_) r = std::min<int>(r, t.first.exp[var]);
  return r;
}

int Poly::max_exponent(int var) const {
  if (terms_.empty()) return 0;
  int r = std::numeric_limits<int>::min();
  for (const auto& t : terms_) r = std::max<int>(r, t.first.exp[var]);
  return r;
}

Monomial Poly::min_monomial() const {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::int16_t>(min_exponent(i));
  return m;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
  std::vector<Poly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prods.emplace_back(ma * mb, ca * cb);
  return Poly::from_terms(std::move(prods));
}

Poly Poly::scaled(const Cyclotomic& c) const {
  if (c.is_zero()) return {};
  Poly r = *this;
  if (c.is_one()) return r;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::shifted(const Monomial& m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.first = t.first * m;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].first == b.terms_[i].first)) return false;
    if (a.terms_[i].second != b.terms_[i].second) return false;
  }
  return true;
}

Poly Poly::substitute_constant(int var, const Cyclotomic& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    const int e = m.exp[var];
    Monomial mm = m;
    mm.exp[var] = 0;
    if (e == 0) {
      out.emplace_back(mm, c);
      continue;
    }
    Cyclotomic factor(1);
    Cyclotomic base = e > 0 ? value : value.inverse();
    for (int k = 0; k < std::abs(e); ++k) factor *= base;
    out.emplace_back(mm, c * factor);
  }
  return from_terms(std::move(out));
}

std::optional<Poly> Poly::divide_exact(const Poly& b) const {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return Poly();
  const Monomial ma = min_monomial(), mb = b.min_monomial();
  Poly p = shifted(ma.inverse());
  const Poly d = b.shifted(mb.inverse());
  const Monomial lead = d.terms_.front().first;
  const Cyclotomic lead_inv = d.terms_.front().second.inverse();
  std::vector<Term> q;
  while (!p.is_zero()) {
    const auto& [pm, pc] = p.terms_.front();
    if (!divides(lead, pm)) return std::nullopt;
    Poly step = Poly::monomial(quotient(pm, lead), pc * lead_inv);
    q.push_back(step.terms_.front());
    p -= d * step;
  }
  Poly result = from_terms(std::move(q));
  return result.shifted(ma * mb.inverse());
}

std::vector<Cyclotomic> Poly::univariate_coeffs(int var) const {
  if ((variables() & ~(1u << var)) != 0) throw std::logic_error("polynomial is not univariate");
  if (terms_.empty()) return {};
  const int lo = min_exponent(var), hi = max_exponent(var);
  std::vector<Cyclotomic> out(static_cast<std::size_t>(hi - lo + 1), Cyclotomic(0));
  for (const auto& [m, c] : terms_) out[m.exp[var] - lo] = c;
  return out;
}

Poly Poly::from_univariate(int var, const std::vector<Cyclotomic>& coeffs, int low) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    Monomial m;
    m.exp[var] = static_cast<std::int16_t>(low + static_cast<int>(i));
    terms.emplace_back(m, coeffs[i]);
  }
  return from_terms(std::move(terms));
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < kMaxVars; ++i) {
    if (m.exp[i] == 0) continue;
    if (!first) out << "*";
    first = false;
    out << var_name(i);
    if (m.exp[i] != 1) out << "^" << m.exp[i];
  }
  return out.str();
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::string mono = monomial_text(m);
    if (c.is_rational()) {
      const Rational& r = c.rational_part();
      const bool neg = r < 0;
      Rational mag = abs(r);
      if (first)
        out << (neg ? "-" : "");
      else
        out << (neg ? " - " : " + ");
      if (mono.empty())
        out << mag.get_str();
      else if (mag == 1)
        out << mono;
      else
        out << mag.get_str() << "*" << mono;
    } else {
      if (!first) out << " + ";
      out << "(" << c.to_string() << ")";
      if (!mono.empty()) out << "*" << mono;
    }
    first = false;
  }
  return out.str();
}

}  // namespace yh
