#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace oracle {

using wordmap::Gen;
using wordmap::Word;

std::int64_t random_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rat random_rat(Rng& rng, int bound, bool nonzero) {
  std::int64_t p = 0;
  do {
    p = random_int(rng, -bound, bound);
  } while (nonzero && p == 0);
  return wordmap::make_rat(p, random_int(rng, 1, bound));
}

Rat random_generic(Rng& rng, int bound) {
  Rat r;
  do {
    r = random_rat(rng, bound, true);
  } while (r == 1 || r == -1);
  return r;
}

LaurentPoly random_laurent(Rng& rng, int terms, int exp_bound) {
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) {
    p += LaurentPoly::monomial(random_rat(rng, 9), random_int(rng, -exp_bound, exp_bound),
                               random_int(rng, -exp_bound, exp_bound));
  }
  return p;
}

QPoly random_qpoly(Rng& rng, int degree, int bound) {
  std::vector<Rat> c;
  for (int i = 0; i < degree; ++i) c.push_back(random_rat(rng, bound));
  c.push_back(random_rat(rng, bound, true));
  return QPoly(c);
}

Word random_word(Rng& rng, int syllables, int exp_bound) {
  std::vector<wordmap::Syllable> s;
  const int count = static_cast<int>(random_int(rng, 1, syllables));
  for (int i = 0; i < count; ++i) {
    std::int64_t e = 0;
    while (e == 0) e = random_int(rng, -exp_bound, exp_bound);
    s.push_back({random_int(rng, 0, 1) == 0 ? Gen::X : Gen::Y, e});
  }
  return Word::from_syllables(s);
}

QMat random_unimodular(Rng& rng) {
  if (random_int(rng, 0, 5) == 0) {
    // a = 0 forces bc = -1.
    const Rat b = random_rat(rng, 9, true);
    return {Rat(0), b, Rat(-1 / b), random_rat(rng, 9)};
  }
  const Rat a = random_rat(rng, 9, true);
  const Rat b = random_rat(rng, 9);
  const Rat c = random_rat(rng, 9);
  return {a, b, c, Rat((1 + b * c) / a)};
}

Rat eval_naive(const LaurentPoly& p, const Rat& lambda0, const Rat& mu0) {
  auto power = [](const Rat& base, std::int64_t e) {
    Rat r = 1;
    const Rat b = e < 0 ? Rat(1 / base) : base;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
    return r;
  };
  Rat sum = 0;
  for (const auto& t : p.terms()) sum += t.coeff * power(lambda0, t.exp.lambda) * power(mu0, t.exp.mu);
  return sum;
}

LaurentPoly mul_naive(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<std::pair<std::int64_t, std::int64_t>, Rat> acc;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      acc[{s.exp.lambda + t.exp.lambda, s.exp.mu + t.exp.mu}] += s.coeff * t.coeff;
    }
  }
  LaurentPoly out;
  for (const auto& [e, c] : acc) out += LaurentPoly::monomial(c, e.first, e.second);
  return out;
}

std::string letters(const Word& w) {
  std::string s;
  for (const auto& syl : w.syllables()) {
    const char up = syl.gen == Gen::X ? 'x' : 'y';
    const char c = syl.exponent > 0 ? up : static_cast<char>(up - 'a' + 'A');
    s.append(static_cast<std::size_t>(syl.exponent > 0 ? syl.exponent : -syl.exponent), c);
  }
  return s;
}

namespace {
char inv(char c) { return static_cast<char>(c ^ 0x20); }
}  // namespace

std::string reduce_letters(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!out.empty() && out.back() == inv(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string conjugacy_key(const std::string& s) {
  std::string r = reduce_letters(s);
  while (r.size() >= 2 && r.front() == inv(r.back())) r = r.substr(1, r.size() - 2);
  std::string best = r;
  for (std::size_t i = 1; i < r.size(); ++i) best = std::min(best, r.substr(i) + r.substr(0, i));
  return best;
}

QMat eval_letters(const std::string& s, const QMat& x, const QMat& y) {
  const QMat xi = wordmap::adjugate(x);
  const QMat yi = wordmap::adjugate(y);
  QMat r = QMat::identity();
  for (char c : s) r = r * (c == 'x' ? x : c == 'X' ? xi : c == 'y' ? y : yi);
  return r;
}

QPoly poly_from_roots(const Rat& lc, const std::vector<Rat>& roots) {
  QPoly p(lc);
  for (const auto& r : roots) p = p * (QPoly::t() - QPoly(r));
  return p;
}

DCSymbols::DCSymbols(std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n)
    : lk(LaurentPoly::lambda(2 * k)),
      lm(LaurentPoly::lambda(2 * m)),
      ul(LaurentPoly::mu(2 * l)),
      un(LaurentPoly::mu(2 * n)) {}

std::vector<LaurentPoly> closed_alpha_table(std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n) {
  const DCSymbols s(k, l, m, n);
  const auto &K = s.lk, &M = s.lm, &U = s.ul, &V = s.un;
  const LaurentPoly one(1), two(2), three(3);
  const LaurentPoly a0 = K * M * M * U * V * V - K * K * M * U * U * V;
  const LaurentPoly a1 =
      -M * (U * V * (U - one) * (V - one) * K - U * (U - one) * (U - three * V + V * V) * K * K +
            U * (U - one) * (U - V) * K * K * K - V * V * (U - one) * (U - one) * M -
            V * V * (U - one) * M * M + (V * V + U * U * V * V + U * U * V - three * U * V * V) * K * M +
            U * V * (-two * U + V + one) * K * K * M + V * V * (U - one) * K * M * M);
  const LaurentPoly a2 =
      M * (K - one) * (U - one) *
      (-(V - one) * (U * U + V - three * U * V) * K +
       (U - three * U * U - V + three * U * V + U * U * V - U * V * V) * K * K -
       V * (U - one) * (-U + three * V - one) * M + V * (U - three * V + U * V + one) * M * M -
       U * (U - one) * (V - one) * K * M + (U - one) * (U - V) * K * K * M - (U - V) * (V - one) * K * M * M);
  const LaurentPoly a3 =
      -M * (K - one) * (U - one) *
      (-(V - one) * (U - two * U * U - two * V + three * U * V) * K -
       (two * U - three * U * U - two * V + V * V + two * U * V + two * U * U * V - two * U * V * V) * K * K +
       (-U + U * U + two * V - three * V * V - two * U * U * V + three * U * V * V) * M +
       (U - two * V + three * V * V - U * V + U * U * V - two * U * V * V) * M * M +
       U * (U - one) * (V - one) * K * M + (U - one) * (U - V) * (V - two) * K * K * M +
       (U - two) * (V - one) * (V - U) * K * M * M);
  const LaurentPoly a4 =
      M * (K - one) * (K - one) * (M - one) * (M - K) * (U - one) * (U - one) * (U - V) * (V - one);
  return {a0, a1, a2, a3, a4};
}

std::vector<LaurentPoly> closed_tau_table(std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n) {
  const DCSymbols s(k, l, m, n);
  const auto &K = s.lk, &M = s.lm, &U = s.ul, &V = s.un;
  const LaurentPoly one(1), two(2), three(3);
  const LaurentPoly t0 = (K * U - M * V) * (K * U - M * V);
  const LaurentPoly t1 = U * (U - V) * (V - one) * K - U * (-three * U + V + U * V + one) * K * K +
                         V * (U - one) * (V - U) * M - V * (U - three * V + U * V + one) * M * M +
                         (U - one) * (V - one) * (U + V) * K * M - (U - one) * (U - V) * K * K * M +
                         (U - V) * (V - one) * K * M * M;
  const LaurentPoly t2 = (two * U - one) * (U - V) * (V - one) * K +
                         (-two * U + three * U * U + V - U * V - two * U * U * V + U * V * V) * K * K +
                         (U - one) * (V - U) * (two * V - one) * M +
                         (U - two * V + three * V * V - U * V + U * U * V - two * U * V * V) * M * M +
                         (U - one) * (V - one) * (U + V) * K * M + (U - one) * (U - V) * (V - two) * K * K * M +
                         (U - two) * (V - one) * (V - U) * K * M * M;
  const LaurentPoly t3 = (K - one) * (K - M) * (M - one) * (U - one) * (U - V) * (V - one);
  return {t0, t1, t2, t3};
}

LaurentPoly closed_resultant(std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n) {
  const DCSymbols s(k, l, m, n);
  const auto &K = s.lk, &M = s.lm, &U = s.ul, &V = s.un;
  const LaurentPoly one(1);
  auto p = [](const LaurentPoly& b, int e) { return wordmap::pow(b, e); };
  const LaurentPoly last = (U - V) * (K * M - one) + (M - K) * (U * V - one);
  return -LaurentPoly::monomial(1, 6 * k + 8 * m, 8 * l + 6 * n) * p(K - one, 3) * p(U - one, 4) * (M - one) *
         p(V - one, 6) * p(K - M, 6) * p(U - V, 3) * (U * M - K * V) * (M * V - K * U) * p(last, 2);
}

TPoly closed_m_eq_k_tau(std::int64_t k, std::int64_t l, std::int64_t n) {
  const DCSymbols s(k, l, k, n);
  const LaurentPoly one(1);
  const TPoly t = TPoly::t();
  const TPoly f1 = t * TPoly(s.lk - one) - TPoly(one);
  const TPoly f2 = t * TPoly(s.lk - one) + TPoly(s.lk);
  return TPoly(-s.lk * (s.ul - s.un) * (s.ul - s.un)) * f1 * f2;
}

std::pair<Rat, Rat> closed_m_eq_k_gamma_values(std::int64_t k, std::int64_t l, std::int64_t n,
                                             const Rat& lambda0, const Rat& mu0) {
  const Rat K = wordmap::pow(lambda0, 2 * k);
  const Rat U = wordmap::pow(mu0, 2 * l);
  const Rat V = wordmap::pow(mu0, 2 * n);
  const Rat common = K * K * K * (K + 1) * V * (V - U) / (K - 1);
  return {Rat(common * U * U), Rat(-common)};
}

TPoly closed_inverse_pair_tau(std::int64_t k, std::int64_t l) {
  const DCSymbols s(k, l, -k, -l);
  const auto &K = s.lk, &U = s.ul;
  const LaurentPoly one(1);
  const TPoly t = TPoly::t();
  const TPoly sq = t * TPoly((K - one) * (U - one)) + TPoly(K * U + one);
  const TPoly lin = t * TPoly((K * K - one) * (U * U - one)) + TPoly((K * U - one) * (K * U - one));
  // (L^2-1)(U^2-1)/(L^2 U^2) * (t + c) = lin / (L^2 U^2).
  return TPoly(LaurentPoly::monomial(1, -4 * k, -4 * l)) * sq * sq * lin;
}

Rat closed_inverse_pair_root(std::int64_t k, std::int64_t l, const Rat& lambda0, const Rat& mu0) {
  const Rat K = wordmap::pow(lambda0, 2 * k);
  const Rat U = wordmap::pow(mu0, 2 * l);
  return -(K * U - 1) * (K * U - 1) / ((K * K - 1) * (U * U - 1));
}

Rat closed_inverse_pair_gamma_value(std::int64_t k, std::int64_t l, const Rat& lambda0, const Rat& mu0) {
  const Rat K = wordmap::pow(lambda0, 2 * k);
  const Rat U = wordmap::pow(mu0, 2 * l);
  const Rat U1 = U + 1;
  return -(K + 1) * (K - U) * (K * U - 1) * (K + 4 * K * U + K * U * U + K * K * U + U) /
         (K * K * (K - 1) * U1 * U1 * U1 * U1);
}

}  // namespace oracle
