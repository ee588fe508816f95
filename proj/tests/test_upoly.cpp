#include <doctest.h>

#include "oracles.hpp"
#include "wordmap/error.hpp"
#include "wordmap/resultant.hpp"
#include "wordmap/upoly.hpp"

using namespace wordmap;

namespace {
const QPoly t = QPoly::t();
const TPoly T = TPoly::t();
const LaurentPoly L = LaurentPoly::lambda();
const LaurentPoly M = LaurentPoly::mu();

Rat resultant_by_roots(const Rat& lc, const std::vector<Rat>& roots, const QPoly& g) {
  Rat r = pow(lc, g.degree());
  for (const auto& a : roots) r *= horner(g, a);
  return r;
}
}  // namespace

TEST_SUITE("upoly") {
  TEST_CASE("specialization") {
    CHECK(specialize(TPoly(L) * T + TPoly(M), 2, 3) == make_rat(2) * t + QPoly(3));
    const TPoly p = TPoly(L * L - LaurentPoly(4)) * T * T + T;
    const QPoly s = specialize(p, 2, 5);
    CHECK(s == t);
    CHECK(s.degree() == 1);
    CHECK_THROWS_AS(specialize(p, 0, 5), Error);
  }

  TEST_CASE("exact division") {
    CHECK(exact_div(t * t + t, t + QPoly(1)) == t);
    oracle::Rng rng(21);
    for (int i = 0; i < 50; ++i) {
      const QPoly q = oracle::random_qpoly(rng, static_cast<int>(oracle::random_int(rng, 0, 5)));
      const QPoly g = oracle::random_qpoly(rng, static_cast<int>(oracle::random_int(rng, 0, 4)));
      CHECK(exact_div(q * g, g) == q);
      CHECK(exact_div(g, g) == QPoly(1));
    }
    const TPoly f = TPoly(L + M) * T * T + TPoly(L * M) * T + TPoly(M);
    const TPoly g = T + TPoly(L);
    CHECK(exact_div(f * g, g) == f);
    CHECK(exact_div(f, f) == TPoly(1));
    CHECK_THROWS_AS(exact_div(t * t + QPoly(1), t + QPoly(1)), Error);
    // Quotient outside R0[t]: (2t + 2) / (2t) is not exact, (t + 1)/ (L t + L) needs 1/L which is a unit.
    CHECK(exact_div(T + TPoly(1), TPoly(L) * T + TPoly(L)) == TPoly(LaurentPoly::lambda(-1)));
    CHECK_THROWS_AS(exact_div(T + TPoly(1), TPoly(L + 1) * T + TPoly(L + 1)), Error);
  }

  TEST_CASE("gcd over Q") {
    CHECK(gcd_q(t * t - QPoly(1), t - QPoly(1)) == t - QPoly(1));
    const QPoly f = make_rat(3) * t * t + QPoly(6);
    CHECK(gcd_q(f, QPoly()) == monic(f));
    CHECK_THROWS_AS(gcd_q(QPoly(), QPoly()), Error);

    oracle::Rng rng(22);
    for (int i = 0; i < 40; ++i) {
      std::vector<Rat> ra, rb, shared;
      for (int j = 0; j < 3; ++j) ra.push_back(make_rat(3 * j + 1, 7));
      for (int j = 0; j < 3; ++j) rb.push_back(make_rat(-3 * j - 2, 5));
      shared.push_back(oracle::random_rat(rng, 30));
      const QPoly a = oracle::poly_from_roots(oracle::random_rat(rng, 9, true), ra);
      const QPoly b = oracle::poly_from_roots(oracle::random_rat(rng, 9, true), rb);
      const QPoly c = oracle::poly_from_roots(1, shared);
      CHECK(gcd_q(a, b) == QPoly(1));
      CHECK(gcd_q(a * c, b * c) == c);
    }
  }

  TEST_CASE("squarefree part and primitive form") {
    const QPoly f = oracle::poly_from_roots(make_rat(6), {Rat(1), Rat(1), make_rat(2, 3), make_rat(2, 3), Rat(-5)});
    CHECK(squarefree_part(f) == oracle::poly_from_roots(1, {Rat(1), make_rat(2, 3), Rat(-5)}));
    const QPoly p = make_rat(-1, 2) * t * t + make_rat(3, 4) * t + make_rat(1, 6);
    const QPoly ip = integer_primitive(p);
    CHECK(ip == make_rat(6) * t * t - make_rat(9) * t - QPoly(2));
    CHECK(exact_div(ip, p).degree() == 0);
  }

  TEST_CASE("inverse modulo") {
    const QPoly m = t * t * t - QPoly(2);
    oracle::Rng rng(23);
    for (int i = 0; i < 30; ++i) {
      const QPoly a = oracle::random_qpoly(rng, 2);
      const auto inv = inverse_mod(a, m);
      REQUIRE(inv.has_value());
      CHECK(divmod(a * *inv, m).second == QPoly(1));
    }
    CHECK_FALSE(inverse_mod(t - QPoly(1), (t - QPoly(1)) * (t + QPoly(3))).has_value());
  }

  TEST_CASE("resultant") {
    const Rat a = make_rat(3, 7), b = make_rat(-5, 2);
    CHECK(resultant(t - QPoly(a), t - QPoly(b)) == a - b);
    CHECK(resultant_bareiss(t - QPoly(a), t - QPoly(b)) == a - b);

    oracle::Rng rng(24);
    for (int i = 0; i < 40; ++i) {
      const int df = static_cast<int>(oracle::random_int(rng, 1, 4));
      const int dg = static_cast<int>(oracle::random_int(rng, 1, 5));
      std::vector<Rat> roots;
      for (int j = 0; j < df; ++j) roots.push_back(oracle::random_rat(rng, 9));
      const Rat lc = oracle::random_rat(rng, 9, true);
      const QPoly f = oracle::poly_from_roots(lc, roots);
      const QPoly g = oracle::random_qpoly(rng, dg);
      const Rat expected = resultant_by_roots(lc, roots, g);
      CHECK(resultant(f, g) == expected);
      CHECK(resultant_bareiss(f, g) == expected);
      // A shared root forces zero.
      const QPoly g2 = g * (t - QPoly(roots.front()));
      CHECK(resultant(f, g2) == 0);
      CHECK(gcd_q(f, g2).degree() > 0);
    }
  }

  TEST_CASE("resultant over Laurent coefficients agrees with specialization") {
    oracle::Rng rng(25);
    for (int i = 0; i < 10; ++i) {
      TPoly f, g;
      for (int j = 0; j <= 3; ++j) f = f + TPoly(oracle::random_laurent(rng, 2, 2)) * pow(T, static_cast<unsigned>(j));
      for (int j = 0; j <= 2; ++j) g = g + TPoly(oracle::random_laurent(rng, 2, 2)) * pow(T, static_cast<unsigned>(j));
      if (f.degree() < 1 || g.degree() < 1) continue;
      const LaurentPoly r = resultant(f, g);
      CHECK(r == resultant_bareiss(f, g));
      const Rat l0 = oracle::random_generic(rng), m0 = oracle::random_generic(rng);
      const QPoly fs = specialize(f, l0, m0), gs = specialize(g, l0, m0);
      if (fs.degree() == f.degree() && gs.degree() == g.degree()) {
        CHECK(r.evaluate(l0, m0) == resultant_bareiss(fs, gs));
      }
    }
  }

  TEST_CASE("sigma on polynomials in t") {
    const TPoly p = TPoly(L * M) * T + TPoly(LaurentPoly::lambda(-2));
    CHECK(sigma(p) == TPoly(LaurentPoly::monomial(1, -1, -1)) * T + TPoly(LaurentPoly::lambda(2)));
    CHECK(sigma(sigma(p)) == p);
  }
}
