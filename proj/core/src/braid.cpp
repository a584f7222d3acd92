#include <yh/braid.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace yh {

std::string to_string(BraidKind kind) {
  switch (kind) {
    case BraidKind::classical: return "classical";
    case BraidKind::framed: return "framed";
    case BraidKind::singular: return "singular";
  }
  return "?";
}

BraidKind parse_kind(std::string_view name) {
  if (name == "classical") return BraidKind::classical;
  if (name == "framed") return BraidKind::framed;
  if (name == "singular") return BraidKind::singular;
  throw BraidError("unknown braid kind '" + std::string(name) + "'");
}

bool kind_accepts(BraidKind family, BraidKind word) {
  return family == word || word == BraidKind::classical;
}

namespace {

BraidKind join_kinds(BraidKind a, BraidKind b) {
  if (kind_accepts(a, b)) return a;
  if (kind_accepts(b, a)) return b;
  throw BraidError("cannot combine framed and singular braid words");
}

void check_letter(const Letter& letter, int strands, BraidKind kind) {
  if (const auto* s = std::get_if<Sigma>(&letter)) {
    if (s->sign != 1 && s->sign != -1) throw BraidError("sigma exponent must be +1 or -1");
    if (s->i < 1 || s->i > strands - 1) throw BraidError("sigma index out of range");
  } else if (const auto* t = std::get_if<Framing>(&letter)) {
    if (kind != BraidKind::framed) throw BraidError("framing letter in a " + to_string(kind) + " word");
    if (t->j < 1 || t->j > strands) throw BraidError("framing index out of range");
  } else {
    const auto& x = std::get<Tau>(letter);
    if (kind != BraidKind::singular) throw BraidError("singular letter in a " + to_string(kind) + " word");
    if (x.i < 1 || x.i > strands - 1) throw BraidError("singular crossing index out of range");
  }
}

}  // namespace

int minimal_strands(const std::vector<Letter>& letters) {
  int n = 1;
  for (const auto& letter : letters) {
    if (const auto* s = std::get_if<Sigma>(&letter))
      n = std::max(n, s->i + 1);
    else if (const auto* t = std::get_if<Framing>(&letter))
      n = std::max(n, t->j);
    else
      n = std::max(n, std::get<Tau>(letter).i + 1);
  }
  return n;
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters, BraidKind kind)
    : strands_(strands), letters_(std::move(letters)), kind_(kind) {
  if (strands_ < 1) throw BraidError("strand count must be positive");
  for (const auto& l : letters_) check_letter(l, strands_, kind_);
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(std::max(strands_, o.strands_), std::move(letters), join_kinds(kind_, o.kind_));
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> letters;
  letters.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    if (const auto* s = std::get_if<Sigma>(&*it))
      letters.emplace_back(Sigma{s->i, -s->sign});
    else if (const auto* t = std::get_if<Framing>(&*it))
      letters.emplace_back(Framing{t->j, -t->k});
    else
      throw BraidError("singular braids are not invertible");
  }
  return BraidWord(strands_, std::move(letters), kind_);
}

BraidWord BraidWord::with_strands(int strands) const { return BraidWord(strands, letters_, kind_); }

BraidWord BraidWord::with_kind(BraidKind kind) const { return BraidWord(strands_, letters_, kind); }

BraidWord BraidWord::reduced_mod(int d) const {
  if (d < 1) throw BraidError("modulus must be positive");
  std::vector<Letter> letters;
  for (const auto& l : letters_) {
    if (const auto* t = std::get_if<Framing>(&l)) {
      long k = t->k % d;
      if (k < 0) k += d;
      if (k != 0) letters.emplace_back(Framing{t->j, k});
    } else {
      letters.push_back(l);
    }
  }
  return BraidWord(strands_, std::move(letters), kind_);
}

std::string BraidWord::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << ' ';
    first = false;
  };
  if (strands_ != minimal_strands(letters_)) {
    sep();
    out << "n=" << strands_;
  }
  for (const auto& l : letters_) {
    sep();
    if (const auto* s = std::get_if<Sigma>(&l)) {
      out << (s->sign < 0 ? "-s" : "s") << s->i;
    } else if (const auto* t = std::get_if<Framing>(&l)) {
      out << 't' << t->j;
      if (t->k != 1) out << '^' << t->k;
    } else {
      out << 'x' << std::get<Tau>(l).i;
    }
  }
  return out.str();
}

namespace {

template <class Int>
Int parse_int(std::string_view s, std::size_t pos, bool allow_sign) {
  Int value{};
  if (s.empty()) throw BraidParseError("expected integer", pos);
  if (!allow_sign && (s[0] == '-' || s[0] == '+')) throw BraidParseError("expected unsigned integer", pos);
  const char* begin = s.data();
  if (*begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw BraidParseError("malformed integer", pos);
  return value;
}

}  // namespace

BraidWord parse_braid(std::string_view text, std::optional<BraidKind> kind) {
  std::vector<Letter> letters;
  std::optional<int> header;
  std::vector<std::size_t> positions;
  bool any_t = false, any_x = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view tok = text.substr(start, pos - start);

    if (tok.starts_with("n=")) {
      if (!letters.empty() || header) throw BraidParseError("strand header must come first", start);
      header = parse_int<int>(tok.substr(2), start + 2, false);
      if (*header < 1) throw BraidParseError("strand count must be positive", start);
      continue;
    }
    positions.push_back(start);
    if (tok.starts_with("-s")) {
      letters.emplace_back(Sigma{parse_int<int>(tok.substr(2), start + 2, false), -1});
    } else if (tok[0] == 's') {
      letters.emplace_back(Sigma{parse_int<int>(tok.substr(1), start + 1, false), 1});
    } else if (tok[0] == 'x') {
      letters.emplace_back(Tau{parse_int<int>(tok.substr(1), start + 1, false)});
      any_x = true;
    } else if (tok[0] == 't') {
      const auto caret = tok.find('^');
      const auto idx = tok.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1);
      const int j = parse_int<int>(idx, start + 1, false);
      long k = 1;
      if (caret != std::string_view::npos) k = parse_int<long>(tok.substr(caret + 1), start + caret + 1, true);
      letters.emplace_back(Framing{j, k});
      any_t = true;
    } else {
      throw BraidParseError("unknown token '" + std::string(tok) + "'", start);
    }
  }

  // Index range checks report the offending token's position.
  const int n = header.value_or(minimal_strands(letters));
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter& l = letters[i];
    bool bad = false;
    if (const auto* s = std::get_if<Sigma>(&l))
      bad = s->i < 1 || s->i > n - 1;
    else if (const auto* t = std::get_if<Framing>(&l))
      bad = t->j < 1 || t->j > n;
    else
      bad = std::get<Tau>(l).i < 1 || std::get<Tau>(l).i > n - 1;
    if (bad) throw BraidParseError("index out of range", positions[i]);
  }

  BraidKind resolved = BraidKind::classical;
  if (any_t && any_x) throw BraidParseError("word mixes framing and singular letters", 0);
  if (any_t) resolved = BraidKind::framed;
  if (any_x) resolved = BraidKind::singular;
  if (kind) {
    if (!kind_accepts(*kind, resolved))
      throw BraidError("word of kind " + to_string(resolved) + " is not a " + to_string(*kind) + " braid");
    resolved = *kind;
  }
  return BraidWord(n, std::move(letters), resolved);
}

long epsilon(const BraidWord& b) {
  long e = 0;
  for (const auto& l : b.letters()) {
    if (const auto* s = std::get_if<Sigma>(&l))
      e += s->sign;
    else if (std::holds_alternative<Tau>(l))
      e += 1;
  }
  return e;
}

BraidWord apply_move(const BraidWord& b, const MarkovMove& move) {
  if (const auto* c = std::get_if<Conjugate>(&move)) {
    if (c->by.kind() == BraidKind::singular && c->by.letters().size() > 0) {
      for (const auto& l : c->by.letters())
        if (std::holds_alternative<Tau>(l)) throw BraidError("conjugation by a non-invertible singular braid");
    }
    if (!kind_accepts(b.kind(), c->by.kind()) && !c->by.empty())
      throw BraidError("conjugating word has incompatible kind");
    if (c->by.strands() > b.strands()) throw BraidError("conjugating word uses more strands than the braid");
    const BraidWord by = c->by.with_kind(b.kind()).with_strands(b.strands());
    return by * b * by.inverse();
  }
  if (std::holds_alternative<StabilizePos>(move) || std::holds_alternative<StabilizeNeg>(move)) {
    const int sign = std::holds_alternative<StabilizePos>(move) ? 1 : -1;
    std::vector<Letter> letters = b.letters();
    letters.emplace_back(Sigma{b.strands(), sign});
    return BraidWord(b.strands() + 1, std::move(letters), b.kind());
  }
  const auto& shift = std::get<FramingShift>(move);
  if (b.kind() != BraidKind::framed) throw BraidError("framing shift is only valid for framed braids");
  if (shift.d < 1) throw BraidError("modulus must be positive");
  std::vector<Letter> letters = b.letters();
  letters.emplace_back(Framing{shift.j, shift.k * shift.d});
  return BraidWord(b.strands(), std::move(letters), b.kind());
}

}  // namespace yh
