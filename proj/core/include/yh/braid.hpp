#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace yh {

enum class BraidKind { classical, framed, singular };

std::string to_string(BraidKind kind);
BraidKind parse_kind(std::string_view name);

/// sigma_i^{+-1}; index is 1-based.
struct Sigma {
  int i = 1;
  int sign = 1;
  friend bool operator==(const Sigma&, const Sigma&) = default;
};

/// t_j^k; index is 1-based, k any integer.
struct Framing {
  int j = 1;
  long k = 1;
  friend bool operator==(const Framing&, const Framing&) = default;
};

/// The elementary singular braid tau_i.
struct Tau {
  int i = 1;
  friend bool operator==(const Tau&, const Tau&) = default;
};

using Letter = std::variant<Sigma, Framing, Tau>;

class BraidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BraidParseError : public BraidError {
 public:
  BraidParseError(const std::string& what, std::size_t position)
      : BraidError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A word in the generators of B_n, F_n or SB_n. Words are never reduced:
/// the algebra module does all normalization.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws BraidError if a letter is out of range or not allowed for `kind`.
  BraidWord(int strands, std::vector<Letter> letters, BraidKind kind);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  BraidKind kind() const { return kind_; }
  bool empty() const { return letters_.empty(); }

  /// Concatenation; strand count is the larger of the two and the kind is
  /// the more general one.
  BraidWord operator*(const BraidWord& o) const;
  /// Group inverse; throws for words containing tau letters.
  BraidWord inverse() const;
  /// Same letters on more strands (or a different compatible kind).
  BraidWord with_strands(int strands) const;
  BraidWord with_kind(BraidKind kind) const;

  /// Framing exponents reduced into [0, d); zero exponents dropped.
  BraidWord reduced_mod(int d) const;

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
  BraidKind kind_ = BraidKind::classical;
};

/// Smallest strand count that fits every letter of the word.
int minimal_strands(const std::vector<Letter>& letters);

/// Parses the whitespace-separated grammar: s<i>, -s<i>, t<j>[^<k>], x<i>,
/// with an optional leading n=<int>. Without an explicit kind, the kind is
/// framed if any t-letter occurs, singular if any x-letter occurs, else
/// classical.
BraidWord parse_braid(std::string_view text, std::optional<BraidKind> kind = std::nullopt);

/// Algebraic sum of sigma exponents, each tau counting +1.
long epsilon(const BraidWord& b);

/// Letter-level kind compatibility: a classical word is a valid framed or
/// singular word.
bool kind_accepts(BraidKind family, BraidKind word);

struct Conjugate {
  BraidWord by;
};
struct StabilizePos {};
struct StabilizeNeg {};
/// Appends t_j^{k d}, the identity in the d-modular framed braid group.
struct FramingShift {
  int j = 1;
  long k = 1;
  int d = 1;
};
using MarkovMove = std::variant<Conjugate, StabilizePos, StabilizeNeg, FramingShift>;

/// Conjugation gives by * b * by^{-1}; stabilization appends sigma_n^{+-1} on
/// n + 1 strands. Throws BraidError for moves invalid for the word's kind.
BraidWord apply_move(const BraidWord& b, const MarkovMove& move);

}  // namespace yh
