#include "sampling.hpp"

namespace yh::cli {

BraidWord random_word(std::mt19937& rng, BraidKind kind, int n, int length, int d) {
  std::vector<Letter> letters;
  std::uniform_int_distribution<int> pick(0, 5), idx(1, std::max(1, n - 1)), strand(1, n), sign(0, 1);
  std::uniform_int_distribution<long> k(-d, 2L * d);
  for (int l = 0; l < length; ++l) {
    const int p = pick(rng);
    if (kind == BraidKind::framed && p >= 4)
      letters.emplace_back(Framing{strand(rng), k(rng)});
    else if (kind == BraidKind::singular && p == 5 && n > 1)
      letters.emplace_back(Tau{idx(rng)});
    else if (n > 1)
      letters.emplace_back(Sigma{idx(rng), sign(rng) ? 1 : -1});
  }
  return BraidWord(n, std::move(letters), kind);
}

}  // namespace yh::cli
