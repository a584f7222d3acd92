#include <yh/trace.hpp>

#include <stdexcept>

namespace yh {

TraceParams TraceParams::generic_params(int d) {
  if (d < 1 || d - 1 > kMaxVars - 2) throw std::invalid_argument("generic trace supports d in 1..11");
  return TraceParams{d, true, {}};
}

TraceParams TraceParams::specialized(int d, std::vector<Cyclotomic> x1_to_xd1) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (static_cast<int>(x1_to_xd1.size()) != d - 1) throw std::invalid_argument("expected d - 1 trace parameters");
  TraceParams p{d, false, {}};
  p.x.emplace_back(1);
  for (auto& v : x1_to_xd1) p.x.push_back(std::move(v));
  return p;
}

Poly TraceParams::x_value(int m) const {
  m = ((m % d) + d) % d;
  if (m == 0) return Poly(1);
  if (generic) return Poly::variable(x_var(m));
  return Poly(x[m]);
}

std::string TraceParams::key() const {
  std::string k = std::to_string(d) + (generic ? ":g" : ":s");
  for (const auto& v : x) k += "|" + v.to_string();
  return k;
}

TraceEngine::TraceEngine(TraceParams params) : params_(std::move(params)) {}

Poly TraceEngine::trace_word(int n, const BasisWord& w) {
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find({n, w});
    if (it != memo_.end()) return it->second;
  }
  Poly v = compute(n, w);
  std::lock_guard lock(mutex_);
  memo_.emplace(std::pair{n, w}, v);
  return v;
}

Poly TraceEngine::compute(int n, const BasisWord& w) {
  if (n == 1) return params_.x_value(w.a[0]);
  const int top = n - 1;
  if (w.w[top] == top) {
    BasisWord rest = w;
    rest.a[top] = 0;
    return params_.x_value(w.a[top]) * trace_word(n - 1, rest);
  }
  // w = v s_{n-1} s_{n-2} ... s_k with v fixing n and k = w^{-1}(n). Then
  // t^a g_w = A g_{n-1} B with A = t^{a'} g_v and
  // B = t_{n-1}^{a_n} g_{n-2} ... g_k, and tr(A g_{n-1} B) = z tr(A B).
  int kpos = 0;
  while (w.w[kpos] != top) ++kpos;
  BasisWord start;
  for (int j = 0; j < top; ++j) start.a[j] = w.a[j];
  for (int j = 0, src = 0; j < top; ++j, ++src) {
    if (src == kpos) ++src;
    start.w[j] = w.w[src];
  }
  const int d = params_.d;
  const int lift = start.w[top - 1];
  start.a[lift] = static_cast<std::uint8_t>((start.a[lift] + w.a[top]) % d);
  AlgebraElement ab = AlgebraElement::from_terms(d, n - 1, {{start, Laurent(1)}});
  for (int i = top - 1; i >= kpos + 1; --i) ab = right_mul_g(ab, i);
  std::vector<Poly::Term> acc;
  for (const auto& [word, c] : ab.terms()) {
    const Poly t = c.to_poly() * trace_word(n - 1, word);
    acc.insert(acc.end(), t.terms().begin(), t.terms().end());
  }
  return Poly::from_terms(std::move(acc)) * Poly::variable(kVarZ);
}

Poly TraceEngine::trace(const AlgebraElement& e) {
  if (e.d() != params_.d) throw std::invalid_argument("trace parameters are for a different d");
  std::vector<Poly::Term> acc;
  for (const auto& [word, c] : e.terms()) {
    const Poly t = c.to_poly() * trace_word(e.n(), word);
    acc.insert(acc.end(), t.terms().begin(), t.terms().end());
  }
  return Poly::from_terms(std::move(acc));
}

std::shared_ptr<TraceEngine> trace_engine(const TraceParams& params) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<TraceEngine>> engines;
  std::lock_guard lock(mutex);
  auto& slot = engines[params.key()];
  if (!slot) slot = std::make_shared<TraceEngine>(params);
  return slot;
}

RatFunc juyumaya_trace(const AlgebraElement& e, const TraceParams& params) {
  return RatFunc(trace_engine(params)->trace(e));
}

RatFunc ocneanu_trace(const AlgebraElement& e) {
  if (e.d() != 1) throw std::invalid_argument("the Ocneanu trace is defined for d = 1 only");
  return juyumaya_trace(e, TraceParams::generic_params(1));
}

TraceParams specialized_params(const ESolution& sol) {
  return TraceParams::specialized(sol.d, std::vector<Cyclotomic>(sol.x.begin() + 1, sol.x.end()));
}

}  // namespace yh
