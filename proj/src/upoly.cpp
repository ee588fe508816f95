#include "wordmap/upoly.hpp"

namespace wordmap {

TPoly sigma(const TPoly& p) {
  return p.map([](const LaurentPoly& c) { return sigma(c); });
}

QPoly specialize(const TPoly& p, const Rat& lambda0, const Rat& mu0) {
  if (sgn(lambda0) == 0 || sgn(mu0) == 0) {
    throw Error(ErrorCode::ZeroParameter, "specialization requires nonzero lambda and mu");
  }
  return p.map([&](const LaurentPoly& c) { return c.evaluate(lambda0, mu0); });
}

std::pair<QPoly, QPoly> divmod(const QPoly& f, const QPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::InexactDivision, "division by the zero polynomial");
  if (f.degree() < g.degree()) return {QPoly{}, f};
  std::vector<Rat> rem = f.coefficients();
  const int dg = g.degree();
  const Rat lead_inv = 1 / g.leading();
  std::vector<Rat> quot(static_cast<std::size_t>(f.degree() - dg + 1), Rat(0));
  for (int i = f.degree(); i >= dg; --i) {
    const Rat top = rem[static_cast<std::size_t>(i)];
    if (sgn(top) == 0) continue;
    const Rat q = top * lead_inv;
    for (int j = 0; j <= dg; ++j) {
      rem[static_cast<std::size_t>(i - dg + j)] -= q * g.coefficients()[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(i - dg)] = q;
  }
  rem.resize(static_cast<std::size_t>(dg));
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly monic(const QPoly& f) {
  if (f.is_zero()) return f;
  const Rat inv = 1 / f.leading();
  return f.map([&](const Rat& c) { return Rat(c * inv); });
}

QPoly gcd_q(const QPoly& f, const QPoly& g) {
  if (f.is_zero() && g.is_zero()) {
    throw Error(ErrorCode::Precondition, "gcd of two zero polynomials");
  }
  QPoly a = f;
  QPoly b = g;
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

QPoly squarefree_part(const QPoly& f) {
  if (f.degree() <= 0) return monic(f);
  return monic(exact_div(f, gcd_q(f, derivative(f))));
}

std::optional<QPoly> inverse_mod(const QPoly& a, const QPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  QPoly r0 = m;
  QPoly r1 = divmod(a, m).second;
  QPoly s0;
  QPoly s1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  const Rat inv = 1 / r0.leading();
  return divmod(s0.map([&](const Rat& c) { return Rat(c * inv); }), m).second;
}

QPoly integer_primitive(const QPoly& f) {
  if (f.is_zero()) return f;
  BigInt den = 1;
  for (const auto& c : f.coefficients()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  BigInt content = 0;
  std::vector<BigInt> ints;
  for (const auto& c : f.coefficients()) {
    ints.emplace_back(c.get_num() * (den / c.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (sgn(ints.back()) < 0) content = -content;
  std::vector<Rat> out;
  for (auto& i : ints) out.emplace_back(BigInt(i / content));
  return QPoly(std::move(out));
}

}  // namespace wordmap
