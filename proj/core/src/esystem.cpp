#include <yh/esystem.hpp>

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace yh {

std::vector<int> normalize_subset(int d, std::vector<int> D) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (D.empty()) throw std::invalid_argument("subset D must be non-empty");
  for (int& k : D) k = ((k % d) + d) % d;
  std::sort(D.begin(), D.end());
  D.erase(std::unique(D.begin(), D.end()), D.end());
  return D;
}

std::vector<int> parse_subset(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("malformed subset '" + std::string(text) + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

std::string subset_to_string(const std::vector<int>& D) {
  std::string s;
  for (std::size_t i = 0; i < D.size(); ++i) s += (i ? "," : "") + std::to_string(D[i]);
  return s;
}

ESolution build_solution(int d, std::vector<int> D) {
  ESolution sol;
  sol.d = d;
  sol.D = normalize_subset(d, std::move(D));
  const Rational weight(1, static_cast<long>(sol.D.size()));
  for (int m = 0; m < d; ++m) {
    Cyclotomic sum(0);
    for (int k : sol.D) sum += Cyclotomic::root_of_unity(d, static_cast<long>(k) * m);
    sol.x.push_back(sum * Cyclotomic(weight));
  }
  if (!is_esystem_solution(sol.x)) throw std::logic_error("subset average failed the E-system");
  return sol;
}

Cyclotomic e_value(const std::vector<Cyclotomic>& x, int m) {
  const int d = static_cast<int>(x.size());
  Cyclotomic sum(0);
  for (int s = 0; s < d; ++s) sum += x[(m + s) % d] * x[(d - s) % d];
  return sum * Cyclotomic(Rational(1, d));
}

std::vector<Cyclotomic> esystem_residual(const std::vector<Cyclotomic>& x) {
  if (x.empty() || !x[0].is_one()) throw std::invalid_argument("x_0 must be 1");
  const Cyclotomic e = e_value(x, 0);
  std::vector<Cyclotomic> out;
  for (int m = 1; m < static_cast<int>(x.size()); ++m) out.push_back(e_value(x, m) - x[m] * e);
  return out;
}

bool is_esystem_solution(const std::vector<Cyclotomic>& x) {
  for (const auto& r : esystem_residual(x))
    if (!r.is_zero()) return false;
  return true;
}

std::vector<ESolution> enumerate_solutions(int d) {
  if (d < 1 || d > 20) throw std::invalid_argument("d must lie in 1..20");
  std::vector<ESolution> out;
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::vector<int> D;
    for (int k = 0; k < d; ++k)
      if (mask & (1u << k)) D.push_back(k);
    out.push_back(build_solution(d, D));
  }
  return out;
}

FourierData fourier_transform(const std::vector<Cyclotomic>& x) {
  const int d = static_cast<int>(x.size());
  FourierData f;
  for (int k = 0; k < d; ++k) {
    Cyclotomic sum(0);
    for (int m = 0; m < d; ++m) sum += x[m] * Cyclotomic::root_of_unity(d, -static_cast<long>(k) * m);
    if (!sum.is_zero()) f.support.push_back(k);
    f.y.push_back(std::move(sum));
  }
  return f;
}

std::vector<Cyclotomic> inverse_fourier_transform(const std::vector<Cyclotomic>& y) {
  const int d = static_cast<int>(y.size());
  std::vector<Cyclotomic> x;
  for (int m = 0; m < d; ++m) {
    Cyclotomic sum(0);
    for (int k = 0; k < d; ++k) sum += y[k] * Cyclotomic::root_of_unity(d, static_cast<long>(k) * m);
    x.push_back(sum * Cyclotomic(Rational(1, d)));
  }
  return x;
}

Rational e_d_value(const ESolution& sol) { return Rational(1, static_cast<long>(sol.D.size())); }

}  // namespace yh
