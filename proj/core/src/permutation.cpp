#include <yh/permutation.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace yh {

Perm identity_perm() {
  Perm w{};
  std::iota(w.begin(), w.end(), std::uint8_t{0});
  return w;
}

int perm_length(const Perm& w, int n) {
  int len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] > w[j]) ++len;
  return len;
}

Perm perm_inverse(const Perm& w, int n) {
  Perm r = identity_perm();
  for (int i = 0; i < n; ++i) r[w[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Perm perm_compose(const Perm& a, const Perm& b, int n) {
  Perm r = identity_perm();
  for (int i = 0; i < n; ++i) r[i] = a[b[i]];
  return r;
}

std::vector<int> reduced_word(const Perm& w, int n) {
  // Strip right descents one at a time; each strip shortens x by one.
  std::vector<int> letters;
  Perm x = w;
  for (int i = 0; i + 1 < n;) {
    if (x[i] > x[i + 1]) {
      std::swap(x[i], x[i + 1]);
      letters.push_back(i + 1);
      i = std::max(0, i - 1);
    } else {
      ++i;
    }
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

Perm perm_from_word(const std::vector<int>& letters) {
  Perm x = identity_perm();
  for (int i : letters) {
    if (i < 1 || i >= kMaxStrands) throw std::out_of_range("generator index out of range");
    std::swap(x[i - 1], x[i]);
  }
  return x;
}

std::string perm_to_string(const Perm& w, int n) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < n; ++i) out << (i ? "," : "") << w[i] + 1;
  out << ']';
  return out.str();
}

}  // namespace yh
