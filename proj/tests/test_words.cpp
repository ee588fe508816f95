#include <doctest.h>

#include "oracles.hpp"
#include "wordmap/error.hpp"
#include "wordmap/words.hpp"

using namespace wordmap;

namespace {

std::string power_letters(char c, std::int64_t e) {
  const char l = e > 0 ? c : static_cast<char>(c - 'a' + 'A');
  return std::string(static_cast<std::size_t>(e > 0 ? e : -e), l);
}

std::string inverse_letters(const std::string& s) {
  std::string out(s.rbegin(), s.rend());
  for (auto& c : out) c = static_cast<char>(c ^ 0x20);
  return out;
}

std::string commutator_letters(const std::string& u, const std::string& v) {
  return inverse_letters(u) + inverse_letters(v) + u + v;
}

std::string dc_letters(std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n) {
  const std::string u = commutator_letters(power_letters('x', k), power_letters('y', l));
  const std::string v = commutator_letters(power_letters('x', m), power_letters('y', n));
  return oracle::reduce_letters(commutator_letters(u, v));
}

std::size_t runs(const std::string& s) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == 0 || (s[i] | 0x20) != (s[i - 1] | 0x20)) ++r;
  }
  return r;
}

std::size_t parse_error_position(std::string_view text) {
  try {
    parse_word(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("parsing") {
    const Word w = parse_word("x^3 y^-2");
    REQUIRE(w.size() == 2);
    CHECK(w.syllables()[0] == Syllable{Gen::X, 3});
    CHECK(w.syllables()[1] == Syllable{Gen::Y, -2});
    CHECK(to_string(w) == "x^3 y^-2");

    CHECK(oracle::letters(parse_word("[x,y]")) == "XYxy");
    CHECK(parse_word("x y y^-1 x^-1").empty());
    CHECK(to_string(parse_word("x y y^-1 x^-1")) == "1");
    CHECK(parse_word("(x y)^-2") == parse_word("y^-1 x^-1 y^-1 x^-1"));
    CHECK(parse_word("[[x,y],[x^2,y]]") == commutator(commutator(parse_word("x"), parse_word("y")),
                                                      commutator(parse_word("x^2"), parse_word("y"))));
  }

  TEST_CASE("parse errors carry positions") {
    CHECK(parse_error_position("xz") == 1);
    CHECK(parse_error_position("x^") == 2);
    CHECK(parse_error_position("[x,y") == 4);
    CHECK(parse_error_position("") == 0);
    CHECK_THROWS_AS(parse_word("x^99999999999999999999999"), Error);
    try {
      parse_word("x^99999999999999999999999");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Overflow);
    }
  }

  TEST_CASE("free reduction matches the letter oracle") {
    oracle::Rng rng(31);
    for (int i = 0; i < 200; ++i) {
      const Word a = oracle::random_word(rng, 6, 4);
      const Word b = oracle::random_word(rng, 6, 4);
      CHECK(oracle::letters(a * b) == oracle::reduce_letters(oracle::letters(a) + oracle::letters(b)));
      CHECK((a * a.inverse()).empty());
      CHECK(oracle::letters(pow(a, -3)) ==
            oracle::reduce_letters(inverse_letters(oracle::letters(a) + oracle::letters(a) + oracle::letters(a))));
      CHECK(Word::from_pairs(to_pairs(a)) == a);
    }
  }

  TEST_CASE("cyclic reduction") {
    const Word dc = double_commutator(1, 2, 3, 4);
    const CyclicForm cf = cyclic_reduce(dc);
    const auto* r = std::get_if<Reduced>(&cf);
    REQUIRE(r != nullptr);
    CHECK(r->pairs.size() == 7);
    for (const auto& [a, b] : r->pairs) CHECK((a != 0 && b != 0));
    CHECK(oracle::conjugacy_key(oracle::letters(Word::from_pairs(r->pairs))) ==
          oracle::conjugacy_key(oracle::letters(dc)));
    CHECK(oracle::conjugacy_key(oracle::letters(Word::from_pairs(double_commutator_cyclic_pairs(1, 2, 3, 4)))) ==
          oracle::conjugacy_key(oracle::letters(dc)));

    CHECK(cyclic_reduce(parse_word("y x^5 y^-1")) == CyclicForm{GeneratorPower{Gen::X, 5}});
    CHECK(cyclic_reduce(parse_word("x y x^-1 y^-1 y x y^-1 x^-1")) == CyclicForm{Trivial{}});

    oracle::Rng rng(32);
    for (int i = 0; i < 200; ++i) {
      const Word w = oracle::random_word(rng, 6, 3);
      const Word c = oracle::random_word(rng, 4, 3);
      const Word conj = c.inverse() * w * c;
      const CyclicForm form = cyclic_reduce(conj);
      CHECK(form == cyclic_reduce(w));
      if (const auto* red = std::get_if<Reduced>(&form)) {
        CHECK(oracle::conjugacy_key(oracle::letters(Word::from_pairs(red->pairs))) ==
              oracle::conjugacy_key(oracle::letters(w)));
      }
    }
  }

  TEST_CASE("generator swap") {
    CHECK(swap_generators(parse_word("x^2 y^-3 x")) == parse_word("y^2 x^-3 y"));
    oracle::Rng rng(33);
    for (int i = 0; i < 50; ++i) {
      const Word w = oracle::random_word(rng, 6, 4);
      CHECK(swap_generators(swap_generators(w)) == w);
    }
  }

  TEST_CASE("double commutator against the letter oracle") {
    for (int k = -2; k <= 2; ++k)
      for (int l = -2; l <= 2; ++l)
        for (int m = -2; m <= 2; ++m)
          for (int n = -2; n <= 2; ++n) {
            const Word w = double_commutator(k, l, m, n);
            const std::string expected = dc_letters(k, l, m, n);
            CHECK(oracle::letters(w) == expected);
            const bool trivial = k * l * m * n == 0 || (k == m && l == n);
            CHECK(w.empty() == trivial);
            if (!trivial) {
              CHECK(oracle::conjugacy_key(oracle::letters(Word::from_pairs(double_commutator_cyclic_pairs(k, l, m, n)))) ==
                    oracle::conjugacy_key(expected));
            }
          }
    CHECK(double_commutator(1, 1, 2, 3).size() == runs(dc_letters(1, 1, 2, 3)));
    CHECK(runs(dc_letters(1, 1, 2, 3)) == 15);
  }
}
