#include <yh/quotients.hpp>

#include "dense_poly.hpp"

#include <yh/esystem.hpp>
#include <yh/trace.hpp>

#include <algorithm>
#include <map>
#include <mutex>

namespace yh {

namespace {

std::size_t basis_size(int d, int n) {
  std::size_t size = 1;
  for (int j = 0; j < n; ++j) size *= static_cast<std::size_t>(d) * static_cast<std::size_t>(j + 1);
  return size;
}

std::string word_text(int d, int n, const BasisWord& w) {
  return AlgebraElement::from_terms(d, n, {{w, Laurent(1)}}).to_string();
}

AlgebraElement word_element(int d, int n, const BasisWord& w) {
  return AlgebraElement::from_terms(d, n, {{w, Laurent(1)}});
}

Poly specialize(Poly p, const QuotientParams& params) {
  for (int m = 1; m < static_cast<int>(params.x.size()); ++m) p = p.substitute_constant(x_var(m), params.x[m]);
  return p;
}

RatFunc evaluate(const Poly& generic, const QuotientParams& params) {
  return substitute(specialize(generic, params), kVarZ, params.z);
}

void check_params(int d, const QuotientParams& params) {
  if (static_cast<int>(params.x.size()) != d || !params.x[0].is_one())
    throw std::invalid_argument("quotient parameters need x_0 = 1 followed by x_1 .. x_{d-1}");
}

// tr(w * gen) in generic parameters for every basis word w.
const std::vector<Poly>& generic_values(QuotientKind kind, int d, int n) {
  static std::mutex mutex;
  static std::map<std::tuple<QuotientKind, int, int>, std::vector<Poly>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({kind, d, n});
  if (!inserted) return it->second;
  const AlgebraElement gen = quotient_generator(kind, d, n, 1);
  auto engine = trace_engine(TraceParams::generic_params(d));
  for (const auto& w : basis_words(d, n)) it->second.push_back(engine->trace(word_element(d, n, w) * gen));
  return it->second;
}

RatFunc u_var() { return RatFunc::variable(kVarU); }

bool ytl_admissible(int d, const QuotientParams& p) {
  const RatFunc u = u_var();
  const RatFunc z_jones = RatFunc(-1) / (u + RatFunc(1));
  bool case_one = false;
  for (int m1 = 0; m1 < d && !case_one; ++m1) {
    bool match = true;
    for (int l = 0; l < d && match; ++l) match = p.x[l] == Cyclotomic::root_of_unity(d, static_cast<long>(l) * m1);
    case_one = match;
  }
  if (case_one && (p.z == z_jones || p.z == RatFunc(-1))) return true;
  for (int m1 = 0; m1 < d; ++m1)
    for (int m2 = m1 + 1; m2 < d; ++m2) {
      bool match = true;
      for (int l = 0; l < d && match; ++l) {
        const Cyclotomic avg = (Cyclotomic::root_of_unity(d, static_cast<long>(l) * m1) +
                                Cyclotomic::root_of_unity(d, static_cast<long>(l) * m2)) *
                               Cyclotomic(Rational(1, 2));
        match = p.x[l] == avg;
      }
      if (match && p.z == RatFunc(Rational(-1, 2))) return true;
    }
  return false;
}

bool ftl_admissible(int d, const QuotientParams& p) {
  const RatFunc u = u_var(), one(1);
  const RatFunc dz = RatFunc(static_cast<long>(d)) * p.z;
  const FourierData f = fourier_transform(p.x);
  std::vector<int> d1, d2;
  for (int k : f.support) {
    const RatFunc y(f.y[k]);
    if (y == -dz)
      d1.push_back(k);
    else if (y == -dz * (u + one))
      d2.push_back(k);
    else
      return false;
  }
  const RatFunc expected_z =
      RatFunc(-1) / (RatFunc(static_cast<long>(d1.size())) + (u + one) * RatFunc(static_cast<long>(d2.size())));
  if (!(p.z == expected_z)) return false;
  for (int m = 0; m < d; ++m) {
    Cyclotomic s1(0), s2(0);
    for (int k : d1) s1 += Cyclotomic::root_of_unity(d, static_cast<long>(k) * m);
    for (int k : d2) s2 += Cyclotomic::root_of_unity(d, static_cast<long>(k) * m);
    if (!(RatFunc(p.x[m]) == -p.z * (RatFunc(s1) + (u + one) * RatFunc(s2)))) return false;
  }
  return true;
}

bool ctl_admissible(int d, const QuotientParams& p) {
  const RatFunc u = u_var();
  const TraceParams tp = TraceParams::specialized(d, std::vector<Cyclotomic>(p.x.begin() + 1, p.x.end()));
  Cyclotomic sum_x(0), sum_e(0);
  RatFunc sum_tr;
  for (int k = 0; k < d; ++k) {
    sum_x += p.x[k];
    sum_e += e_value(p.x, k);
    sum_tr += juyumaya_trace(idempotent_e(d, 3, 1, k) * idempotent_e(d, 3, 2), tp);
  }
  const RatFunc lhs = (u + RatFunc(1)) * p.z * p.z * RatFunc(sum_x) + (u + RatFunc(2)) * p.z * RatFunc(sum_e) + sum_tr;
  return lhs.is_zero();
}

// Rows over Q[u] kept primitive; pivots are the first nonzero column.
using UPoly = std::vector<Rational>;

class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }

  // Reduces v in place; returns true when v is independent (and keeps it).
  bool insert(std::vector<UPoly> v, bool keep = true) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot].empty()) continue;
      const UPoly a = row[pivot], b = v[pivot];
      for (std::size_t j = 0; j < dim_; ++j) {
        if (row[j].empty() && v[j].empty()) continue;
        v[j] = detail::dense_sub(detail::dense_mul(a, v[j]), detail::dense_mul(b, row[j]));
      }
      make_primitive(v);
    }
    std::size_t lead = 0;
    while (lead < dim_ && v[lead].empty()) ++lead;
    if (lead == dim_) return false;
    if (keep) rows_.emplace(lead, std::move(v));
    return true;
  }

  const std::map<std::size_t, std::vector<UPoly>>& rows() const { return rows_; }

 private:
  std::size_t dim_;
  std::map<std::size_t, std::vector<UPoly>> rows_;

  static void make_primitive(std::vector<UPoly>& v) {
    UPoly g;
    for (const auto& p : v) {
      if (p.empty()) continue;
      g = g.empty() ? detail::make_monic(p) : detail::dense_gcd(g, p);
      if (g.size() == 1) break;
    }
    if (g.size() > 1)
      for (auto& p : v)
        if (!p.empty()) p = detail::dense_divmod(p, g).first;
    // Scale so the leading entry's leading coefficient is 1.
    for (auto& p : v) {
      if (p.empty()) continue;
      const Rational inv = 1 / p.back();
      for (auto& row : v)
        for (auto& c : row) c *= inv;
      break;
    }
  }
};

class IdealSpace {
 public:
  IdealSpace(int d, int n, std::size_t budget) : d_(d), n_(n) {
    if (basis_size(d, n) > budget) throw BudgetError("basis exceeds the word budget");
    words_ = basis_words(d, n);
    for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);
  }

  std::vector<UPoly> to_vector(const AlgebraElement& e) const {
    std::vector<UPoly> v(words_.size());
    int low = 0;
    for (const auto& [w, c] : e.terms()) low = std::min(low, c.low());
    for (const auto& [w, c] : e.terms()) {
      UPoly p(static_cast<std::size_t>(c.high() - low + 1), Rational(0));
      for (int k = c.low(); k <= c.high(); ++k) p[k - low] = c.coeff(k);
      v[index_.at(w)] = std::move(p);
    }
    return v;
  }

  /// Closure of span{generator} under left and right multiplication.
  Echelon close(const AlgebraElement& generator) const {
    Echelon ech(words_.size());
    std::vector<AlgebraElement> queue;
    if (ech.insert(to_vector(generator))) queue.push_back(generator);
    std::vector<AlgebraElement> gens;
    for (int i = 1; i < n_; ++i) gens.push_back(gen_g(d_, n_, i));
    for (int j = 1; j <= n_ && d_ > 1; ++j) gens.push_back(gen_t(d_, n_, j, 1));
    while (!queue.empty() && !ech.full()) {
      const AlgebraElement x = std::move(queue.back());
      queue.pop_back();
      for (const auto& g : gens) {
        for (const AlgebraElement& y : {x * g, g * x}) {
          if (ech.insert(to_vector(y))) queue.push_back(y);
          if (ech.full()) return ech;
        }
      }
    }
    return ech;
  }

 private:
  int d_, n_;
  std::vector<BasisWord> words_;
  std::map<BasisWord, std::size_t> index_;
};

}  // namespace

std::vector<BasisWord> basis_words(int d, int n) {
  if (n < 1 || n > kMaxStrands) throw std::invalid_argument("strand count out of range");
  std::vector<Perm> perms;
  Perm w = identity_perm();
  do perms.push_back(w);
  while (std::next_permutation(w.begin(), w.begin() + n));
  std::vector<BasisWord> out;
  out.reserve(basis_size(d, n));
  BasisWord word;
  std::vector<int> a(n, 0);
  while (true) {
    for (int j = 0; j < n; ++j) word.a[j] = static_cast<std::uint8_t>(a[j]);
    for (const auto& p : perms) {
      word.w = p;
      out.push_back(word);
    }
    int j = n - 1;
    while (j >= 0 && ++a[j] == d) a[j--] = 0;
    if (j < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

VanishResult trace_vanishes_on_ideal(const QuotientCheck& check, bool exhaustive, std::size_t budget) {
  const int d = check.d, n = check.n;
  check_params(d, check.params);
  if (n < 3) throw std::invalid_argument("quotient checks need n >= 3");
  const std::size_t size = basis_size(d, n);
  if (size > budget || (exhaustive && size > 200))
    throw BudgetError("basis of Y_{" + std::to_string(d) + "," + std::to_string(n) + "} exceeds the budget");
  VanishResult result;
  const std::vector<BasisWord> words = basis_words(d, n);
  if (!exhaustive) {
    const auto& values = generic_values(check.kind, d, n);
    for (std::size_t i = 0; i < words.size(); ++i) {
      RatFunc v = evaluate(values[i], check.params);
      if (!v.is_zero()) {
        result.vanishes = false;
        result.witness = VanishWitness{word_text(d, n, words[i]), "1", std::move(v)};
        return result;
      }
    }
    return result;
  }
  const AlgebraElement gen = quotient_generator(check.kind, d, n, 1);
  auto engine = trace_engine(TraceParams::generic_params(d));
  for (const auto& a : words) {
    const AlgebraElement ag = word_element(d, n, a) * gen;
    for (const auto& b : words) {
      RatFunc v = evaluate(engine->trace(ag * word_element(d, n, b)), check.params);
      if (!v.is_zero()) {
        result.vanishes = false;
        result.witness = VanishWitness{word_text(d, n, a), word_text(d, n, b), std::move(v)};
        return result;
      }
    }
  }
  return result;
}

bool admissible(QuotientKind kind, int d, const QuotientParams& params) {
  check_params(d, params);
  switch (kind) {
    case QuotientKind::ytl: return ytl_admissible(d, params);
    case QuotientKind::ftl: return ftl_admissible(d, params);
    case QuotientKind::ctl: return ctl_admissible(d, params);
  }
  return false;
}

bool ideal_inclusion(const AlgebraElement& element, const AlgebraElement& generator, std::size_t budget) {
  if (element.d() != generator.d() || element.n() != generator.n())
    throw std::invalid_argument("elements live in different algebras");
  const IdealSpace space(generator.d(), generator.n(), budget);
  Echelon ech = space.close(generator);
  return !ech.insert(space.to_vector(element), false);
}

std::size_t ideal_dimension(const AlgebraElement& generator, std::size_t budget) {
  const IdealSpace space(generator.d(), generator.n(), budget);
  return space.close(generator).rank();
}

}  // namespace yh
