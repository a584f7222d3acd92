#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace yh {

inline constexpr int kMaxStrands = 10;

/// One-line form of a permutation of {0..n-1}; entries past n are fixed
/// points. s_i swaps i-1 and i (1-based generator index), and products apply
/// the rightmost factor first, so (x s_i) is x with positions i-1, i swapped.
using Perm = std::array<std::uint8_t, kMaxStrands>;

Perm identity_perm();
int perm_length(const Perm& w, int n);
Perm perm_inverse(const Perm& w, int n);
/// (a b)(j) = a(b(j)).
Perm perm_compose(const Perm& a, const Perm& b, int n);
/// A reduced word i_1 ... i_k (1-based) with w = s_{i_1} ... s_{i_k}.
std::vector<int> reduced_word(const Perm& w, int n);
/// Product s_{i_1} ... s_{i_k} of the given letters.
Perm perm_from_word(const std::vector<int>& letters);
/// "[2,1,3]" with 1-based entries.
std::string perm_to_string(const Perm& w, int n);

}  // namespace yh
