#include <yh/invariants.hpp>

#include <yh/algebra.hpp>
#include <yh/trace.hpp>

#include <memory>

namespace yh {

namespace {

RatFunc z_power(int e) { return RatFunc(Poly::variable(kVarZ, e)); }

}  // namespace

bool same_invariant(const InvariantValue& a, const InvariantValue& b) {
  if (!(a.meta == b.meta)) throw InvariantError("invariant values with different families or subsets are not comparable");
  return a.value == b.value;
}

RatFunc lambda_d(int d, int size_d) {
  if (d < 1) throw InvariantError("d must be positive");
  if (size_d < 1 || size_d > d) throw InvariantError("|D| must lie in 1..d");
  return lambda_d(size_d);
}

InvariantValue invariant(const BraidWord& b, BraidKind family, int d, const std::vector<int>& D) {
  if (!kind_accepts(family, b.kind()))
    throw InvariantError("a " + to_string(b.kind()) + " braid has no " + to_string(family) + " invariant");
  const ESolution sol = build_solution(d, D);
  const int n = b.strands();
  const long eps = epsilon(b);
  const Poly tr = trace_engine(specialized_params(sol))->trace(map_to_algebra(b, d));
  const int size_d = static_cast<int>(sol.D.size());
  HalfPowerValue value(RatFunc(tr) * z_power(-(n - 1)), static_cast<int>(eps - n + 1), {d, size_d, false});
  return InvariantValue{std::move(value), InvariantMeta{to_string(family), d, sol.D}, n, eps};
}

InvariantValue homflypt(const BraidWord& b) {
  if (b.kind() != BraidKind::classical) throw InvariantError("the Homflypt polynomial needs a classical braid");
  const int n = b.strands();
  const long eps = epsilon(b);
  const HalfPowerValue::Context ctx{1, 1, false};
  // C^{n-1} with C = 1/(zeta sqrt(lambda)), then sqrt(lambda)^eps.
  const HalfPowerValue c_power(z_power(-(n - 1)), -(n - 1), ctx);
  const HalfPowerValue tau(ocneanu_trace(map_to_algebra(b, 1)), 0, ctx);
  return InvariantValue{(c_power * tau).times_sqrt_lambda(static_cast<int>(eps)), InvariantMeta{"homflypt", 1, {0}}, n,
                        eps};
}

InvariantValue specialize_z(const InvariantValue& v, const RatFunc& z_value) {
  const HalfPowerValue::Context& ctx = v.value.context();
  if (ctx.jones) throw InvariantError("value is already specialized");
  const RatFunc u = RatFunc::variable(kVarU);
  if (!(substitute(v.value.lambda(), kVarZ, z_value) == u))
    throw InvariantError("specialization must send lambda_D to u");
  HalfPowerValue out(substitute(v.value.rational(), kVarZ, z_value), v.value.half_flag(), {ctx.d, ctx.size_d, true});
  return InvariantValue{std::move(out), v.meta, v.n, v.epsilon};
}

InvariantValue jones(const BraidWord& b) {
  InvariantValue v = specialize_z(homflypt(b), RatFunc(-1) / (RatFunc::variable(kVarU) + RatFunc(1)));
  v.meta.family = "jones";
  return v;
}

InvariantValue framed_jones(const BraidWord& b, int d, const std::vector<int>& D) {
  const InvariantValue g = invariant(b, BraidKind::framed, d, D);
  const RatFunc size(static_cast<long>(g.meta.D.size()));
  InvariantValue v = specialize_z(g, RatFunc(-1) / ((RatFunc::variable(kVarU) + RatFunc(1)) * size));
  v.meta.family = "framed-jones";
  return v;
}

std::string to_string(SkeinKind kind) {
  switch (kind) {
    case SkeinKind::framed: return "framed";
    case SkeinKind::cubic: return "cubic";
    case SkeinKind::singular: return "singular";
  }
  return "?";
}

SkeinKind parse_skein_kind(std::string_view name) {
  if (name == "framed") return SkeinKind::framed;
  if (name == "cubic") return SkeinKind::cubic;
  if (name == "singular") return SkeinKind::singular;
  throw InvariantError("unknown skein relation '" + std::string(name) + "'");
}

namespace {

// Invariant values of base * extra, sharing the base's algebra image.
class SkeinVariants {
 public:
  SkeinVariants(const BraidWord& base, BraidKind family, int d, const std::vector<int>& D)
      : sol_(build_solution(d, D)),
        engine_(trace_engine(specialized_params(sol_))),
        image_(map_to_algebra(base, d)),
        n_(base.strands()),
        eps_(epsilon(base)),
        d_(d) {
    if (!kind_accepts(family, base.kind()))
      throw InvariantError(to_string(family) + " skein needs a " + to_string(family) + " base braid");
  }

  HalfPowerValue value(const std::vector<Letter>& extra) const {
    AlgebraElement x = image_;
    long eps = eps_;
    for (const auto& l : extra) {
      if (const auto* s = std::get_if<Sigma>(&l)) {
        x = s->sign > 0 ? right_mul_g(x, s->i) : right_mul_g_inv(x, s->i);
        eps += s->sign;
      } else if (const auto* t = std::get_if<Framing>(&l)) {
        x = right_mul_t(x, t->j, t->k);
      } else {
        x = right_mul_p(x, std::get<Tau>(l).i);
        eps += 1;
      }
    }
    const int size_d = static_cast<int>(sol_.D.size());
    return HalfPowerValue(RatFunc(engine_->trace(x)) * z_power(-(n_ - 1)), static_cast<int>(eps - n_ + 1),
                          {d_, size_d, false});
  }

 private:
  ESolution sol_;
  std::shared_ptr<TraceEngine> engine_;
  AlgebraElement image_;
  int n_;
  long eps_;
  int d_;
};

}  // namespace

bool verify_skein(SkeinKind kind, const BraidWord& base, int i, int d, const std::vector<int>& D) {
  if (i < 1 || i > base.strands() - 1) throw InvariantError("skein position out of range");
  const RatFunc u = RatFunc::variable(kVarU);
  const RatFunc c = u.inverse() - RatFunc(1);
  switch (kind) {
    case SkeinKind::framed: {
      const SkeinVariants v(base, BraidKind::framed, d, D);
      const HalfPowerValue lhs = v.value({Sigma{i, -1}}).times_sqrt_lambda(1);
      HalfPowerValue rhs = v.value({Sigma{i, 1}}).times_sqrt_lambda(-1);
      const RatFunc weight = c / RatFunc(static_cast<long>(d));
      for (int s = 0; s < d; ++s) {
        const std::vector<Letter> frame{Framing{i, s}, Framing{i + 1, d - s}};
        rhs = rhs + v.value(frame).scaled(weight);
        std::vector<Letter> crossed = frame;
        crossed.emplace_back(Sigma{i, 1});
        rhs = rhs + v.value(crossed).scaled(weight).times_sqrt_lambda(-1);
      }
      return lhs == rhs;
    }
    case SkeinKind::cubic: {
      if (base.kind() != BraidKind::classical) throw InvariantError("cubic skein needs a classical base braid");
      const SkeinVariants v(base, BraidKind::classical, d, D);
      const HalfPowerValue lhs = v.value({Sigma{i, -1}}).times_sqrt_lambda(1);
      const HalfPowerValue rhs =
          v.value({Sigma{i, 1}, Sigma{i, 1}}).scaled(RatFunc(-1) / u).times_sqrt_lambda(-2) +
          v.value({Sigma{i, 1}}).times_sqrt_lambda(-1) + v.value({}).scaled(u.inverse());
      return lhs == rhs;
    }
    case SkeinKind::singular: {
      const SkeinVariants v(base, BraidKind::singular, d, D);
      const HalfPowerValue lhs =
          v.value({Sigma{i, -1}}).times_sqrt_lambda(1) - v.value({Sigma{i, 1}}).times_sqrt_lambda(-1);
      const HalfPowerValue rhs = v.value({Tau{i}}).scaled(c).times_sqrt_lambda(-1);
      return lhs == rhs;
    }
  }
  throw InvariantError("unknown skein relation");
}

bool compare_links(const BraidWord& a, const BraidWord& b, BraidKind family, int d, const std::vector<int>& D) {
  return same_invariant(invariant(a, family, d, D), invariant(b, family, d, D));
}

}  // namespace yh
