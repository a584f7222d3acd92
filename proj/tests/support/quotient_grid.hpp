#pragma once

#include <yh/esystem.hpp>
#include <yh/quotients.hpp>

#include <string>
#include <vector>

namespace yh_test {

struct GridPoint {
  yh::QuotientCheck check;
  std::string label;
};

/// Every E-system solution for d in 1..max_d against a fixed list of z
/// values built from u and |D|.
inline std::vector<GridPoint> quotient_grid(yh::QuotientKind kind, int min_d, int max_d) {
  using yh::RatFunc;
  const RatFunc u = RatFunc::variable(yh::kVarU), one(1);
  std::vector<GridPoint> out;
  for (int d = min_d; d <= max_d; ++d) {
    for (const auto& sol : yh::enumerate_solutions(d)) {
      const RatFunc s(static_cast<long>(sol.D.size()));
      std::vector<std::pair<std::string, RatFunc>> zs{
          {"-1/((u+1)|D|)", RatFunc(-1) / ((u + one) * s)},
          {"-1/|D|", RatFunc(-1) / s},
          {"-1/2", RatFunc(yh::Rational(-1, 2))},
          {"-1/(u+1)", RatFunc(-1) / (u + one)},
          {"-1", RatFunc(-1)},
          {"2/7", RatFunc(yh::Rational(2, 7))},
          {"-1/(u+2)", RatFunc(-1) / (u + RatFunc(2))},
      };
      std::vector<RatFunc> seen;
      for (const auto& [name, z] : zs) {
        bool dup = false;
        for (const auto& o : seen) dup = dup || o == z;
        if (dup) continue;
        seen.push_back(z);
        GridPoint p;
        p.check.kind = kind;
        p.check.d = d;
        p.check.params = yh::QuotientParams{z, sol.x};
        p.label = "d=" + std::to_string(d) + " D={" + yh::subset_to_string(sol.D) + "} z=" + name;
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

}  // namespace yh_test
