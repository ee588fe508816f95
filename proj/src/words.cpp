#include "wordmap/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "wordmap/error.hpp"

namespace wordmap {

namespace {

constexpr std::size_t kMaxSyllables = std::size_t{1} << 22;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r) || r == std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow, "exponent overflow");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r) || r == std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow, "exponent overflow");
  }
  return r;
}

// Appends s to a freely reduced stack, cancelling or merging with the top.
void push_reduced(std::vector<Syllable>& stack, Syllable s) {
  if (s.exponent == 0) return;
  if (!stack.empty() && stack.back().gen == s.gen) {
    const std::int64_t e = checked_add(stack.back().exponent, s.exponent);
    if (e == 0) {
      stack.pop_back();
    } else {
      stack.back().exponent = e;
    }
    return;
  }
  stack.push_back(s);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = word();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == 'x' || c == 'y' || c == '(' || c == '[';
  }

  Word word() {
    if (!at_atom_start()) {
      fail(pos_ >= text_.size() ? "expected a factor, found end of input" : "expected a factor");
    }
    Word w;
    while (at_atom_start()) w = w * factor();
    return w;
  }

  Word factor() {
    Word a = atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return pow(a, exponent());
    }
    return a;
  }

  std::int64_t exponent() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected digits after '^'");
    }
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        throw Error(ErrorCode::Overflow, "exponent overflow at position " + std::to_string(pos_));
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Word atom() {
    skip_ws();
    const char c = text_[pos_];
    switch (c) {
      case 'x':
        ++pos_;
        return Word::generator(Gen::X);
      case 'y':
        ++pos_;
        return Word::generator(Gen::Y);
      case '(': {
        ++pos_;
        Word w = word();
        expect(')');
        return w;
      }
      case '[': {
        ++pos_;
        Word u = word();
        expect(',');
        Word v = word();
        expect(']');
        return commutator(u, v);
      }
      default:
        fail("expected a factor");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::int64_t> flatten(const PairList& pairs) {
  std::vector<std::int64_t> out;
  for (const auto& [a, b] : pairs) {
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

}  // namespace

Word Word::from_syllables(const std::vector<Syllable>& syllables) {
  Word w;
  for (const auto& s : syllables) push_reduced(w.syllables_, s);
  return w;
}

Word Word::generator(Gen g, std::int64_t exponent) { return from_syllables({{g, exponent}}); }

Word Word::from_pairs(const PairList& pairs) {
  std::vector<Syllable> s;
  for (const auto& [a, b] : pairs) {
    s.push_back({Gen::X, a});
    s.push_back({Gen::Y, b});
  }
  return from_syllables(s);
}

Word Word::inverse() const {
  Word w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    w.syllables_.push_back({it->gen, -it->exponent});
  }
  return w;
}

Word operator*(const Word& a, const Word& b) {
  if (a.size() + b.size() > kMaxSyllables) throw Error(ErrorCode::Overflow, "word too long");
  Word w = a;
  for (const auto& s : b.syllables_) push_reduced(w.syllables_, s);
  return w;
}

Word pow(const Word& w, std::int64_t e) {
  if (w.size() == 1) {
    const auto& s = w.syllables().front();
    return Word::generator(s.gen, checked_mul(s.exponent, e));
  }
  if (e < 0) return pow(w.inverse(), checked_mul(e, -1));
  Word result;
  Word base = w;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Word commutator(const Word& u, const Word& v) { return u.inverse() * v.inverse() * u * v; }

PairList to_pairs(const Word& w) {
  PairList pairs;
  for (const auto& s : w.syllables()) {
    if (s.gen == Gen::X) {
      pairs.emplace_back(s.exponent, 0);
    } else if (!pairs.empty() && pairs.back().second == 0) {
      pairs.back().second = s.exponent;
    } else {
      pairs.emplace_back(0, s.exponent);
    }
  }
  return pairs;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) os << ' ';
    first = false;
    os << (s.gen == Gen::X ? 'x' : 'y');
    if (s.exponent != 1) os << '^' << s.exponent;
  }
  return os.str();
}

Word parse_word(std::string_view text) { return Parser(text).parse(); }

CyclicForm cyclic_reduce(const Word& w) {
  std::vector<Syllable> s = w.syllables();
  // Conjugate by the leading syllable: it moves to the back and merges there.
  while (s.size() >= 2 && s.front().gen == s.back().gen) {
    const std::int64_t e = checked_add(s.back().exponent, s.front().exponent);
    s.erase(s.begin());
    if (e == 0) {
      s.pop_back();
    } else {
      s.back().exponent = e;
    }
  }
  if (s.empty()) return Trivial{};
  if (s.size() == 1) return GeneratorPower{s.front().gen, s.front().exponent};

  const std::size_t n = s.size();
  PairList best;
  std::vector<std::int64_t> best_key;
  for (std::size_t start = 0; start < n; ++start) {
    if (s[start].gen != Gen::X) continue;
    PairList pairs;
    for (std::size_t i = 0; i < n; i += 2) {
      pairs.emplace_back(s[(start + i) % n].exponent, s[(start + i + 1) % n].exponent);
    }
    auto key = flatten(pairs);
    if (best.empty() || key < best_key) {
      best = std::move(pairs);
      best_key = std::move(key);
    }
  }
  return Reduced{std::move(best)};
}

Word swap_generators(const Word& w) {
  std::vector<Syllable> s = w.syllables();
  for (auto& x : s) x.gen = x.gen == Gen::X ? Gen::Y : Gen::X;
  return Word::from_syllables(s);
}

Word double_commutator(std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n) {
  const Word x = Word::generator(Gen::X);
  const Word y = Word::generator(Gen::Y);
  return commutator(commutator(pow(x, k), pow(y, l)), commutator(pow(x, m), pow(y, n)));
}

PairList double_commutator_cyclic_pairs(std::int64_t k, std::int64_t l, std::int64_t m,
                                        std::int64_t n) {
  return {{m, n - l}, {-k, l}, {k, -n}, {-m, n}, {m - k, -l}, {k, l}, {-m, -n}};
}

}  // namespace wordmap
