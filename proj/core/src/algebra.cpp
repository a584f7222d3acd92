#include <yh/algebra.hpp>

#include <map>
#include <sstream>

namespace yh {

namespace {

using Acc = std::map<BasisWord, Laurent>;

void check_params(int d, int n) {
  if (d < 1 || d > 255) throw AlgebraError("d must lie in 1..255");
  if (n < 1 || n > kMaxStrands) throw AlgebraError("strand count must lie in 1.." + std::to_string(kMaxStrands));
}

void check_g_index(int n, int i) {
  if (i < 1 || i > n - 1) throw AlgebraError("braiding generator index out of range");
}

void add(Acc& acc, const BasisWord& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

std::uint8_t mod_add(int a, long b, int d) {
  long r = (a + b) % d;
  if (r < 0) r += d;
  return static_cast<std::uint8_t>(r);
}

// Adds c * t^a g_w t_p^s t_q^{-s} summed over s with weight 1/d, where the
// framing factor has already been moved to the left of g_w: positions p, q
// are the images w(i), w(i+1).
void add_e_sum(Acc& acc, const BasisWord& x, int p, int q, const Laurent& c, int d) {
  if (c.is_zero()) return;
  for (int s = 0; s < d; ++s) {
    BasisWord y = x;
    y.a[p] = mod_add(y.a[p], s, d);
    y.a[q] = mod_add(y.a[q], -s, d);
    add(acc, y, c);
  }
}

Laurent quad_coeff(int d) { return (Laurent::u() - Laurent(1)).scaled(Rational(1, d)); }
Laurent inv_coeff(int d) { return (Laurent::u(-1) - Laurent(1)).scaled(Rational(1, d)); }

// acc += c * x g_i with i 1-based.
void add_times_g(Acc& acc, const BasisWord& x, int i, const Laurent& c, int d, const Laurent& k) {
  const int p = i - 1, q = i;
  BasisWord y = x;
  std::swap(y.w[p], y.w[q]);
  add(acc, y, c);
  if (x.w[p] < x.w[q]) return;
  const Laurent ck = c * k;
  add_e_sum(acc, y, y.w[p], y.w[q], ck, d);
  add_e_sum(acc, x, x.w[p], x.w[q], ck, d);
}

void add_times_g_inv(Acc& acc, const BasisWord& x, int i, const Laurent& c, int d, const Laurent& k) {
  const int p = i - 1, q = i;
  BasisWord y = x;
  std::swap(y.w[p], y.w[q]);
  add(acc, y, c);
  if (x.w[p] > x.w[q]) return;
  const Laurent ck = c * k;
  add_e_sum(acc, x, x.w[p], x.w[q], ck, d);
  add_e_sum(acc, y, y.w[p], y.w[q], ck, d);
}

AlgebraElement from_acc(int d, int n, Acc&& acc) {
  std::vector<AlgebraElement::Term> terms;
  terms.reserve(acc.size());
  for (auto& [w, c] : acc) terms.emplace_back(w, std::move(c));
  return AlgebraElement::from_terms(d, n, std::move(terms));
}

}  // namespace

AlgebraElement::AlgebraElement(int d, int n) : d_(d), n_(n) { check_params(d, n); }

AlgebraElement AlgebraElement::from_terms(int d, int n, std::vector<Term> terms) {
  AlgebraElement r(d, n);
  bool sorted = true;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (int j = 0; j < n; ++j)
      if (terms[i].first.a[j] >= d) terms[i].first.a[j] = static_cast<std::uint8_t>(terms[i].first.a[j] % d);
    if (terms[i].second.is_zero() || (i > 0 && !(terms[i - 1].first < terms[i].first))) sorted = false;
  }
  if (sorted) {
    r.terms_ = std::move(terms);
    return r;
  }
  Acc acc;
  for (auto& [w, c] : terms) add(acc, w, c);
  for (auto& [w, c] : acc) r.terms_.emplace_back(w, std::move(c));
  return r;
}

Laurent AlgebraElement::coefficient(const BasisWord& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const BasisWord& key) { return t.first < key; });
  if (it == terms_.end() || !(it->first == w)) return {};
  return it->second;
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (d_ != o.d_ || n_ != o.n_) throw AlgebraError("algebra elements live in different algebras");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      Laurent c = terms_[i].second + o.terms_[j].second;
      if (!c.is_zero()) out.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += -o; }

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

AlgebraElement AlgebraElement::scaled(const Laurent& c) const {
  AlgebraElement r(d_, n_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [w, x] : terms_) r.terms_.emplace_back(w, x * c);
  return r;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::vector<std::string> factors;
    for (int j = 0; j < n_; ++j) {
      if (w.a[j] == 0) continue;
      std::string f = "t" + std::to_string(j + 1);
      if (w.a[j] != 1) f += "^" + std::to_string(w.a[j]);
      factors.push_back(std::move(f));
    }
    if (perm_length(w.w, n_) != 0) factors.push_back("g" + perm_to_string(w.w, n_));
    const std::string coef = c.to_string();
    if (factors.empty()) {
      out << (c.coeffs().size() == 1 && c.low() == 0 ? coef : "(" + coef + ")");
      continue;
    }
    if (coef != "1") out << "(" << coef << ")*";
    for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
  }
  return out.str();
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_same(b);
  const int d = a.d_, n = a.n_;
  const Laurent k = quad_coeff(d);
  // g_w g_v expansions, shared by every pair of terms with these permutations.
  std::map<std::pair<Perm, Perm>, std::vector<AlgebraElement::Term>> products;
  auto product = [&](const Perm& w, const Perm& v) -> const std::vector<AlgebraElement::Term>& {
    auto [it, inserted] = products.try_emplace({w, v});
    if (!inserted) return it->second;
    Acc cur;
    BasisWord start;
    start.w = w;
    cur.emplace(start, Laurent(1));
    for (int i : reduced_word(v, n)) {
      Acc next;
      for (const auto& [x, c] : cur) add_times_g(next, x, i, c, d, k);
      cur = std::move(next);
    }
    it->second.assign(cur.begin(), cur.end());
    return it->second;
  };

  Acc acc;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      // t^a g_w t^b = t^{a + w.b} g_w
      BasisWord shift = wa;
      for (int j = 0; j < n; ++j) shift.a[wa.w[j]] = mod_add(shift.a[wa.w[j]], wb.a[j], d);
      const Laurent c = ca * cb;
      for (const auto& [x, cx] : product(wa.w, wb.w)) {
        BasisWord y = x;
        for (int j = 0; j < n; ++j) y.a[j] = mod_add(shift.a[j], x.a[j], d);
        add(acc, y, c * cx);
      }
    }
  }
  return from_acc(d, n, std::move(acc));
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

AlgebraElement unit(int d, int n) { return AlgebraElement::from_terms(d, n, {{BasisWord{}, Laurent(1)}}); }

AlgebraElement gen_g(int d, int n, int i) {
  check_params(d, n);
  check_g_index(n, i);
  BasisWord w;
  std::swap(w.w[i - 1], w.w[i]);
  return AlgebraElement::from_terms(d, n, {{w, Laurent(1)}});
}

AlgebraElement gen_t(int d, int n, int j, long k) {
  check_params(d, n);
  if (j < 1 || j > n) throw AlgebraError("framing generator index out of range");
  BasisWord w;
  w.a[j - 1] = mod_add(0, k, d);
  return AlgebraElement::from_terms(d, n, {{w, Laurent(1)}});
}

AlgebraElement inverse_g(int d, int n, int i) { return right_mul_g_inv(unit(d, n), i); }

AlgebraElement idempotent_e(int d, int n, int i, int k) {
  check_params(d, n);
  check_g_index(n, i);
  if (k < 0 || k >= d) throw AlgebraError("idempotent shift must lie in 0..d-1");
  Acc acc;
  BasisWord base;
  base.a[i - 1] = static_cast<std::uint8_t>(k);
  add_e_sum(acc, base, i - 1, i, Laurent(Rational(1, d)), d);
  return from_acc(d, n, std::move(acc));
}

AlgebraElement singular_p(int d, int n, int i) { return right_mul_p(unit(d, n), i); }

AlgebraElement right_mul_g(const AlgebraElement& x, int i) {
  check_g_index(x.n(), i);
  const Laurent k = quad_coeff(x.d());
  Acc acc;
  for (const auto& [w, c] : x.terms()) add_times_g(acc, w, i, c, x.d(), k);
  return from_acc(x.d(), x.n(), std::move(acc));
}

AlgebraElement right_mul_g_inv(const AlgebraElement& x, int i) {
  check_g_index(x.n(), i);
  const Laurent k = inv_coeff(x.d());
  Acc acc;
  for (const auto& [w, c] : x.terms()) add_times_g_inv(acc, w, i, c, x.d(), k);
  return from_acc(x.d(), x.n(), std::move(acc));
}

AlgebraElement right_mul_t(const AlgebraElement& x, int j, long k) {
  if (j < 1 || j > x.n()) throw AlgebraError("framing generator index out of range");
  std::vector<AlgebraElement::Term> terms = x.terms();
  for (auto& [w, c] : terms) {
    const int p = w.w[j - 1];
    w.a[p] = mod_add(w.a[p], k, x.d());
  }
  return AlgebraElement::from_terms(x.d(), x.n(), std::move(terms));
}

AlgebraElement right_mul_p(const AlgebraElement& x, int i) {
  check_g_index(x.n(), i);
  const Laurent w1(Rational(1, x.d()));
  Acc acc;
  for (const auto& [w, c] : x.terms()) add_e_sum(acc, w, w.w[i - 1], w.w[i], c * w1, x.d());
  AlgebraElement xe = from_acc(x.d(), x.n(), std::move(acc));
  return xe + right_mul_g(xe, i);
}

AlgebraElement embed(const AlgebraElement& x, int m) {
  if (m < x.n()) throw AlgebraError("cannot embed into fewer strands");
  return AlgebraElement::from_terms(x.d(), m, x.terms());
}

AlgebraElement map_to_algebra(const BraidWord& b, int d) {
  AlgebraElement x = unit(d, b.strands());
  for (const auto& letter : b.letters()) {
    if (const auto* s = std::get_if<Sigma>(&letter))
      x = s->sign > 0 ? right_mul_g(x, s->i) : right_mul_g_inv(x, s->i);
    else if (const auto* t = std::get_if<Framing>(&letter))
      x = right_mul_t(x, t->j, t->k);
    else
      x = right_mul_p(x, std::get<Tau>(letter).i);
  }
  return x;
}

std::string to_string(QuotientKind kind) {
  switch (kind) {
    case QuotientKind::ytl: return "ytl";
    case QuotientKind::ftl: return "ftl";
    case QuotientKind::ctl: return "ctl";
  }
  return "?";
}

QuotientKind parse_quotient_kind(std::string_view name) {
  if (name == "ytl") return QuotientKind::ytl;
  if (name == "ftl") return QuotientKind::ftl;
  if (name == "ctl") return QuotientKind::ctl;
  throw AlgebraError("unknown quotient kind '" + std::string(name) + "'");
}

AlgebraElement quotient_generator(QuotientKind kind, int d, int n, int i) {
  check_params(d, n);
  if (n < 3) throw AlgebraError("quotient generators need at least 3 strands");
  if (i < 1 || i > n - 2) throw AlgebraError("quotient generator index out of range");
  const AlgebraElement one = unit(d, n);
  const AlgebraElement gi = gen_g(d, n, i), gj = gen_g(d, n, i + 1);
  const AlgebraElement gij = right_mul_g(right_mul_g(gi, i + 1), i);
  const AlgebraElement steinberg = gij + right_mul_g(gj, i) + right_mul_g(gi, i + 1) + gi + gj + one;
  switch (kind) {
    case QuotientKind::ytl: return steinberg;
    case QuotientKind::ftl: return idempotent_e(d, n, i) * idempotent_e(d, n, i + 1) * steinberg;
    case QuotientKind::ctl: {
      AlgebraElement sum(d, n);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int c = 0; c < d; ++c) sum += gen_t(d, n, i, a) * gen_t(d, n, i + 1, b) * gen_t(d, n, i + 2, c);
      return sum * steinberg;
    }
  }
  throw AlgebraError("unknown quotient kind");
}

}  // namespace yh
