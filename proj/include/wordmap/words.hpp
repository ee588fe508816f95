#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace wordmap {

enum class Gen : std::uint8_t { X, Y };

struct Syllable {
  Gen gen;
  std::int64_t exponent;  // nonzero
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Exponent pairs (a_i, b_i) of a word prod x^{a_i} y^{b_i}.
using PairList = std::vector<std::pair<std::int64_t, std::int64_t>>;

/// Freely reduced element of the free group on x, y. Adjacent syllables
/// always have distinct generators; the empty word is the identity.
class Word {
 public:
  Word() = default;
  /// Freely reduces an arbitrary syllable sequence (zero exponents allowed).
  static Word from_syllables(const std::vector<Syllable>& syllables);
  static Word generator(Gen g, std::int64_t exponent = 1);
  /// prod x^{a_i} y^{b_i}; zero entries are allowed and elided.
  static Word from_pairs(const PairList& pairs);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  std::size_t size() const noexcept { return syllables_.size(); }
  bool empty() const noexcept { return syllables_.empty(); }

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

/// w^e by repeated squaring. Throws Error(Overflow) for absurdly long results.
Word pow(const Word& w, std::int64_t e);
/// [u, v] = u^-1 v^-1 u v
Word commutator(const Word& u, const Word& v);
/// Groups syllables into (x-exponent, y-exponent) pairs, padding with zeros
/// when the word starts with y or ends with x.
PairList to_pairs(const Word& w);

/// "x^3 y^-2"; the identity renders as "1".
std::string to_string(const Word& w);

/// Grammar: word := factor+ ; factor := atom power? ;
/// atom := 'x' | 'y' | '(' word ')' | '[' word ',' word ']' ; power := '^' '-'? digit+.
/// Throws ParseError (with position) or Error(Overflow).
Word parse_word(std::string_view text);

struct Trivial {
  friend bool operator==(const Trivial&, const Trivial&) = default;
};
struct GeneratorPower {
  Gen gen;
  std::int64_t exponent;
  friend bool operator==(const GeneratorPower&, const GeneratorPower&) = default;
};
/// Cyclically reduced word prod x^{a_i} y^{b_i}, every a_i, b_i nonzero.
struct Reduced {
  PairList pairs;
  friend bool operator==(const Reduced&, const Reduced&) = default;
};
using CyclicForm = std::variant<Trivial, GeneratorPower, Reduced>;

/// Conjugacy-invariant representative: strips conjugating pairs, then picks the
/// lexicographically least rotation that starts with an x-syllable.
CyclicForm cyclic_reduce(const Word& w);

/// Exchanges x and y in every syllable.
Word swap_generators(const Word& w);

/// Freely reduced [[x^k, y^l], [x^m, y^n]]; empty when trivial.
Word double_commutator(std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n);

/// The cyclic conjugate of [[x^k, y^l], [x^m, y^n]] written as
///   x^m y^{n-l} x^-k y^l x^k y^-n x^-m y^n x^{m-k} y^-l x^k y^l x^-m y^-n,
/// seven pairs, some exponents possibly zero.
PairList double_commutator_cyclic_pairs(std::int64_t k, std::int64_t l, std::int64_t m,
                                        std::int64_t n);

}  // namespace wordmap
