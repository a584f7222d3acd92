#pragma once

#include <yh/algebra.hpp>
#include <yh/esystem.hpp>
#include <yh/ratfunc.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace yh {

/// Trace parameters: formal x_1..x_{d-1} (generic) or fixed values in
/// Q(zeta_d) (specialized). z stays formal in both modes.
struct TraceParams {
  int d = 1;
  bool generic = true;
  std::vector<Cyclotomic> x;  // specialized: x_0 .. x_{d-1} with x_0 = 1

  static TraceParams generic_params(int d);
  /// Takes x_1 .. x_{d-1}.
  static TraceParams specialized(int d, std::vector<Cyclotomic> x1_to_xd1);
  /// x_m with m taken mod d.
  Poly x_value(int m) const;
  std::string key() const;
};

/// Memoized trace evaluation for one parameter set. Values are polynomials
/// in z (and the formal x's) with Laurent coefficients in u.
class TraceEngine {
 public:
  explicit TraceEngine(TraceParams params);

  const TraceParams& params() const { return params_; }
  Poly trace_word(int n, const BasisWord& w);
  Poly trace(const AlgebraElement& e);

 private:
  TraceParams params_;
  std::mutex mutex_;
  std::map<std::pair<int, BasisWord>, Poly> memo_;

  Poly compute(int n, const BasisWord& w);
};

/// Shared engine per parameter set; memo tables persist across calls.
std::shared_ptr<TraceEngine> trace_engine(const TraceParams& params);

RatFunc juyumaya_trace(const AlgebraElement& e, const TraceParams& params);
/// d = 1 trace; z plays the role of zeta. Throws std::invalid_argument otherwise.
RatFunc ocneanu_trace(const AlgebraElement& e);
TraceParams specialized_params(const ESolution& sol);

}  // namespace yh
