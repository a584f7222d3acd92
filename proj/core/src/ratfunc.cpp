#include <yh/ratfunc.hpp>

#include <bit>
#include <cctype>
#include <sstream>

#include "dense_poly.hpp"

namespace yh {

namespace {

int field_order(const Poly& p) {
  int order = 1;
  for (const auto& [m, c] : p.terms()) {
    if (c.is_rational()) continue;
    order = compatible_order(order, c.order(), order == 1, false);
  }
  return order;
}

int field_order(const RatFunc& f) {
  const int a = field_order(f.num()), b = field_order(f.den());
  return compatible_order(a, b, a == 1, b == 1);
}

}  // namespace

RatFunc::RatFunc(Poly num) : num_(std::move(num)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Monomial content = den_.min_monomial();
  if (!content.is_one()) {
    const Monomial inv = content.inverse();
    num_ = num_.shifted(inv);
    den_ = den_.shifted(inv);
  }
  if (den_.size() > 1) {
    const unsigned vars = num_.variables() | den_.variables();
    if (std::popcount(vars) == 1) {
      const int var = std::countr_zero(vars);
      const Monomial num_content = num_.min_monomial();
      auto p = num_.shifted(num_content.inverse()).univariate_coeffs(var);
      auto q = den_.univariate_coeffs(var);
      auto g = detail::dense_gcd(p, q);
      if (g.size() > 1) {
        p = detail::dense_divmod(p, g).first;
        q = detail::dense_divmod(q, g).first;
        num_ = Poly::from_univariate(var, p).shifted(num_content);
        den_ = Poly::from_univariate(var, q);
      }
    } else if (auto quotient = num_.divide_exact(den_)) {
      num_ = std::move(*quotient);
      den_ = Poly(1);
      return;
    }
  }
  const Cyclotomic lead = den_.leading().second;
  if (!lead.is_one()) {
    const Cyclotomic inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r(num_.pow(static_cast<unsigned>(e)));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  r.normalize();
  return r;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_ && a.num_ == b.num_) return true;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool ratfunc_eq(const RatFunc& a, const RatFunc& b) {
  const int oa = field_order(a), ob = field_order(b);
  compatible_order(oa, ob, oa == 1, ob == 1);
  return a == b;
}

RatFunc RatFunc::cancel_factor(const Poly& factor) const {
  if (factor.is_constant()) return *this;
  RatFunc r = *this;
  while (!r.den_.is_constant()) {
    auto n = r.num_.divide_exact(factor);
    if (!n) break;
    auto d = r.den_.divide_exact(factor);
    if (!d) break;
    r.num_ = std::move(*n);
    r.den_ = std::move(*d);
    r.normalize();
  }
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_ == Poly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc substitute(const Poly& f, int var, const RatFunc& value) {
  if (f.is_zero()) return RatFunc();
  if ((f.variables() & (1u << var)) == 0) return RatFunc(f);
  const int lo = f.min_exponent(var), hi = f.max_exponent(var);
  const Poly& p = value.num();
  const Poly& q = value.den();
  if (p.is_zero() && lo < 0) throw std::domain_error("substitution produces a zero denominator");
  const int span = hi - lo;
  std::vector<Poly> p_pow{Poly(1)}, q_pow{Poly(1)};
  for (int k = 1; k <= span; ++k) {
    p_pow.push_back(p_pow.back() * p);
    q_pow.push_back(q_pow.back() * q);
  }
  // Group f by exponent of var.
  std::vector<std::vector<Poly::Term>> slices(static_cast<std::size_t>(span) + 1);
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    const int e = mm.exp[var];
    mm.exp[var] = 0;
    slices[e - lo].emplace_back(mm, c);
  }
  Poly numerator;
  for (int e = lo; e <= hi; ++e) {
    auto& slice = slices[e - lo];
    if (slice.empty()) continue;
    numerator += Poly::from_terms(std::move(slice)) * p_pow[e - lo] * q_pow[hi - e];
  }
  // f(p/q) = numerator * p^lo / q^hi
  Poly num = numerator, den(1);
  if (lo > 0) num = num * p.pow(static_cast<unsigned>(lo));
  if (lo < 0) den = den * p.pow(static_cast<unsigned>(-lo));
  if (hi > 0) den = den * q.pow(static_cast<unsigned>(hi));
  if (hi < 0) num = num * q.pow(static_cast<unsigned>(-hi));
  if (den.is_zero()) throw std::domain_error("substitution produces a zero denominator");
  return RatFunc(num, den);
}

RatFunc substitute(const RatFunc& f, int var, const RatFunc& value) {
  RatFunc den = substitute(f.den(), var, value);
  if (den.is_zero()) throw std::domain_error("substitution produces a zero denominator");
  return substitute(f.num(), var, value) / den;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int() {
    const std::string s = digits();
    if (s.size() > 6) fail("integer too large");
    return std::stoi(s);
  }

  RatFunc expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    RatFunc r = term();
    if (negate) r = -r;
    for (;;) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }

  RatFunc term() {
    RatFunc r = factor();
    for (;;) {
      if (accept('*')) {
        r *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RatFunc d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        r /= d;
      } else {
        return r;
      }
    }
  }

  RatFunc factor() {
    if (accept('-')) return -factor();
    RatFunc b = base();
    if (accept('^')) {
      bool neg = accept('-');
      int e = small_int();
      if (neg) {
        if (b.is_zero()) fail("zero to a negative power");
        e = -e;
      }
      b = b.pow(e);
    }
    return b;
  }

  RatFunc base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Rational(mpz_class(digits())));
    if (c == 'u') {
      ++pos_;
      return RatFunc::variable(kVarU);
    }
    if (c == 'z') {
      ++pos_;
      return RatFunc::variable(kVarZ);
    }
    if (c == 'x') {
      ++pos_;
      const int m = small_int();
      if (m < 1 || x_var(m) >= kMaxVars) fail("framing variable index out of range");
      return RatFunc::variable(x_var(m));
    }
    if (c == 'E') {
      ++pos_;
      expect('(');
      const int d = small_int();
      if (d < 1) fail("root of unity order must be positive");
      expect(')');
      return RatFunc(Cyclotomic::root_of_unity(d, 1));
    }
    fail("unexpected character");
  }
};

}  // namespace

RatFunc RatFunc::parse(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------

RatFunc lambda_d(int size_d) {
  if (size_d < 1) throw std::invalid_argument("|D| must be at least 1");
  const RatFunc u = RatFunc::variable(kVarU), z = RatFunc::variable(kVarZ);
  const RatFunc s(static_cast<long>(size_d));
  return (s * z + RatFunc(1) - u) / (s * u * z);
}

HalfPowerValue::HalfPowerValue(RatFunc r, int half, Context context)
    : r_(std::move(r)), half_(half), context_(context) {
  if (r_.is_zero()) {
    half_ = 0;
    return;
  }
  // Fold integer powers of lambda so that half_ is 0 or 1.
  int k = half_ >= 0 ? half_ / 2 : -((-half_ + 1) / 2);
  half_ -= 2 * k;
  if (k != 0) r_ *= lambda().pow(k);
}

RatFunc HalfPowerValue::lambda() const {
  if (context_.jones) return RatFunc::variable(kVarU);
  return lambda_d(context_.size_d);
}

HalfPowerValue HalfPowerValue::operator*(const HalfPowerValue& o) const {
  if (!(context_ == o.context_)) throw std::invalid_argument("half-power values from different contexts");
  return HalfPowerValue(r_ * o.r_, half_ + o.half_, context_);
}

HalfPowerValue HalfPowerValue::times_sqrt_lambda(int power) const {
  return HalfPowerValue(r_, half_ + power, context_);
}

HalfPowerValue HalfPowerValue::scaled(const RatFunc& c) const { return HalfPowerValue(r_ * c, half_, context_); }

HalfPowerValue HalfPowerValue::operator+(const HalfPowerValue& o) const {
  if (!(context_ == o.context_)) throw std::invalid_argument("half-power values from different contexts");
  if (r_.is_zero()) return o;
  if (o.r_.is_zero()) return *this;
  if (half_ != o.half_) throw std::invalid_argument("cannot add values with different sqrt(lambda) parity");
  return HalfPowerValue(r_ + o.r_, half_, context_);
}

HalfPowerValue HalfPowerValue::operator-(const HalfPowerValue& o) const {
  return *this + HalfPowerValue(-o.r_, o.half_, o.context_);
}

bool operator==(const HalfPowerValue& a, const HalfPowerValue& b) {
  return a.context_ == b.context_ && a.half_ == b.half_ && a.r_ == b.r_;
}

std::string HalfPowerValue::to_string() const {
  if (half_ == 0) return r_.to_string();
  std::string base = r_.to_string();
  if (!r_.is_polynomial() || r_.num().size() > 1) base = "(" + base + ")";
  return base + (context_.jones ? " * sqrt(u)" : " * sqrt(lambda_D)");
}

}  // namespace yh
