#pragma once

#include <yh/cyclotomic.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace yh {

/// The E-system solution indexed by a non-empty subset D of Z/dZ:
/// x_m = (1/|D|) sum_{k in D} zeta_d^{km}.
struct ESolution {
  int d = 1;
  std::vector<int> D;         // sorted residues
  std::vector<Cyclotomic> x;  // x_0 .. x_{d-1}, x_0 = 1
};

/// Sorted, deduplicated residues mod d; throws std::invalid_argument when empty.
std::vector<int> normalize_subset(int d, std::vector<int> D);
/// Comma-separated residues, e.g. "0,2".
std::vector<int> parse_subset(std::string_view text);
std::string subset_to_string(const std::vector<int>& D);

/// Builds the solution and checks its residuals; throws std::invalid_argument
/// for an empty subset.
ESolution build_solution(int d, std::vector<int> D);

/// E^{(m)} = (1/d) sum_s x_{m+s} x_{d-s}, indices mod d.
Cyclotomic e_value(const std::vector<Cyclotomic>& x, int m);
/// E^{(m)} - x_m E for m = 1 .. d-1.
std::vector<Cyclotomic> esystem_residual(const std::vector<Cyclotomic>& x);
bool is_esystem_solution(const std::vector<Cyclotomic>& x);

/// All 2^d - 1 solutions, ordered by subset bitmask.
std::vector<ESolution> enumerate_solutions(int d);

struct FourierData {
  std::vector<Cyclotomic> y;
  std::vector<int> support;
};

/// y_k = sum_m x_m zeta_d^{-km}.
FourierData fourier_transform(const std::vector<Cyclotomic>& x);
/// x_m = (1/d) sum_k y_k zeta_d^{km}.
std::vector<Cyclotomic> inverse_fourier_transform(const std::vector<Cyclotomic>& y);

/// E_D = 1/|D|.
Rational e_d_value(const ESolution& sol);

}  // namespace yh
