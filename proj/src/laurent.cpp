#include "wordmap/laurent.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

#include "wordmap/error.hpp"

namespace wordmap {

namespace {

// Dense accumulation is used for products whose exponent box is at most this many cells.
constexpr std::int64_t kDenseProductCells = std::int64_t{1} << 21;

struct Box {
  std::int64_t lmin = std::numeric_limits<std::int64_t>::max();
  std::int64_t lmax = std::numeric_limits<std::int64_t>::min();
  std::int64_t mmin = std::numeric_limits<std::int64_t>::max();
  std::int64_t mmax = std::numeric_limits<std::int64_t>::min();
};

Box bounding_box(const std::vector<LaurentPoly::Term>& terms) {
  Box b;
  for (const auto& t : terms) {
    b.lmin = std::min(b.lmin, t.exp.lambda);
    b.lmax = std::max(b.lmax, t.exp.lambda);
    b.mmin = std::min(b.mmin, t.exp.mu);
    b.mmax = std::max(b.mmax, t.exp.mu);
  }
  return b;
}

BigInt common_denominator(const std::vector<LaurentPoly::Term>& terms) {
  BigInt d = 1;
  for (const auto& t : terms) {
    if (t.coeff.get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  return d;
}

std::vector<BigInt> scaled_numerators(const std::vector<LaurentPoly::Term>& terms,
                                      const BigInt& den) {
  std::vector<BigInt> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    out.emplace_back(t.coeff.get_num() * (den / t.coeff.get_den()));
  }
  return out;
}

// Merges a sorted run of terms in place (sum of equal exponents, zeros dropped).
void merge_sorted(std::vector<LaurentPoly::Term>& terms) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rat sum = terms[i].coeff;
    while (j < terms.size() && terms[j].exp == terms[i].exp) {
      sum += terms[j].coeff;
      ++j;
    }
    if (sgn(sum) != 0) {
      terms[out].exp = terms[i].exp;
      terms[out].coeff = sum;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

LaurentPoly::LaurentPoly(const Rat& c) {
  if (sgn(c) != 0) terms_.push_back({{0, 0}, c});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.exp < b.exp; });
  merge_sorted(terms);
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Rat& c, std::int64_t e_lambda, std::int64_t e_mu) {
  LaurentPoly p;
  if (sgn(c) != 0) p.terms_.push_back({{e_lambda, e_mu}, c});
  return p;
}

LaurentPoly LaurentPoly::lambda_bar(std::int64_t a) { return lambda(a) - lambda(-a); }

LaurentPoly LaurentPoly::mu_bar(std::int64_t b) { return mu(b) - mu(-b); }

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{});
}

Rat LaurentPoly::coeff(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      merged.push_back(*b++);
    } else {
      Rat sum = a->coeff + b->coeff;
      if (sgn(sum) != 0) merged.push_back({a->exp, std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size());
    const auto& bt = b.terms_.front();
    for (const auto& t : a.terms_) r.terms_.push_back({t.exp + bt.exp, t.coeff * bt.coeff});
    return r;
  }
  if (a.is_monomial()) return b * a;

  // Multiply integer numerators and divide by the product of common denominators once.
  const BigInt da = common_denominator(a.terms_);
  const BigInt db = common_denominator(b.terms_);
  const auto na = scaled_numerators(a.terms_, da);
  const auto nb = scaled_numerators(b.terms_, db);
  const BigInt den = da * db;

  const Box ba = bounding_box(a.terms_);
  const Box bb = bounding_box(b.terms_);
  const std::int64_t lmin = ba.lmin + bb.lmin;
  const std::int64_t mmin = ba.mmin + bb.mmin;
  const std::int64_t width = (ba.lmax + bb.lmax) - lmin + 1;
  const std::int64_t height = (ba.mmax + bb.mmax) - mmin + 1;

  std::vector<LaurentPoly::Term> out;
  if (width <= kDenseProductCells / height) {
    std::vector<BigInt> grid(static_cast<std::size_t>(width * height));
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      const auto& ea = a.terms_[i].exp;
      for (std::size_t j = 0; j < b.terms_.size(); ++j) {
        const auto& eb = b.terms_[j].exp;
        const auto cell = (ea.lambda + eb.lambda - lmin) * height + (ea.mu + eb.mu - mmin);
        mpz_addmul(grid[static_cast<std::size_t>(cell)].get_mpz_t(), na[i].get_mpz_t(),
                   nb[j].get_mpz_t());
      }
    }
    for (std::int64_t l = 0; l < width; ++l) {
      for (std::int64_t m = 0; m < height; ++m) {
        auto& c = grid[static_cast<std::size_t>(l * height + m)];
        if (sgn(c) == 0) continue;
        Rat q(c, den);
        q.canonicalize();
        out.push_back({{l + lmin, m + mmin}, std::move(q)});
      }
    }
  } else {
    std::map<Exponent, BigInt> acc;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      for (std::size_t j = 0; j < b.terms_.size(); ++j) {
        auto& c = acc[a.terms_[i].exp + b.terms_[j].exp];
        mpz_addmul(c.get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
      }
    }
    for (auto& [e, c] : acc) {
      if (sgn(c) == 0) continue;
      Rat q(c, den);
      q.canonicalize();
      out.push_back({e, std::move(q)});
    }
  }
  LaurentPoly r;
  r.terms_ = std::move(out);
  return r;
}

Rat LaurentPoly::evaluate(const Rat& lambda0, const Rat& mu0) const {
  if (sgn(lambda0) == 0 || sgn(mu0) == 0) {
    throw Error(ErrorCode::ZeroParameter, "Laurent polynomial evaluated at a zero parameter");
  }
  std::unordered_map<std::int64_t, Rat> lpow;
  std::unordered_map<std::int64_t, Rat> mpow;
  auto cached = [](std::unordered_map<std::int64_t, Rat>& cache, const Rat& base,
                   std::int64_t e) -> const Rat& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, wordmap::pow(base, e)).first;
    return it->second;
  };
  Rat sum = 0;
  for (const auto& t : terms_) {
    sum += t.coeff * cached(lpow, lambda0, t.exp.lambda) * cached(mpow, mu0, t.exp.mu);
  }
  return sum;
}

LaurentPoly unit_inverse(const LaurentPoly& p) {
  if (!p.is_monomial()) {
    throw Error(ErrorCode::NotAUnit, "only monomials are units: " + to_string(p));
  }
  const auto& t = p.terms().front();
  return LaurentPoly::monomial(1 / t.coeff, -t.exp.lambda, -t.exp.mu);
}

LaurentPoly pow(const LaurentPoly& p, std::int64_t e) {
  if (e < 0) return pow(unit_inverse(p), -e);
  LaurentPoly base = p;
  LaurentPoly result = 1;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly sigma(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> terms(p.terms().rbegin(), p.terms().rend());
  for (auto& t : terms) t.exp = {-t.exp.lambda, -t.exp.mu};
  return LaurentPoly::from_terms(std::move(terms));
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::InexactDivision, "division by zero polynomial");
  if (f.is_zero()) return LaurentPoly{};
  if (g.is_monomial()) return f * unit_inverse(g);

  // The Newton box of f is the Minkowski sum of those of the quotient and g,
  // which bounds every quotient exponent and makes the lex division terminate.
  const Box bf = bounding_box(f.terms());
  const Box bg = bounding_box(g.terms());
  const Box bq{bf.lmin - bg.lmin, bf.lmax - bg.lmax, bf.mmin - bg.mmin, bf.mmax - bg.mmax};
  if (bq.lmin > bq.lmax || bq.mmin > bq.mmax) return std::nullopt;

  std::map<Exponent, Rat> rem;
  for (const auto& t : f.terms()) rem.emplace(t.exp, t.coeff);
  const auto& lead = g.leading_term();
  const Rat lead_inv = 1 / lead.coeff;
  std::vector<LaurentPoly::Term> quotient;
  while (!rem.empty()) {
    const auto top = std::prev(rem.end());
    const Exponent qe = top->first - lead.exp;
    if (qe.lambda < bq.lmin || qe.lambda > bq.lmax || qe.mu < bq.mmin || qe.mu > bq.mmax) {
      return std::nullopt;
    }
    const Rat qc = top->second * lead_inv;
    for (const auto& t : g.terms()) {
      auto [it, inserted] = rem.try_emplace(t.exp + qe, 0);
      it->second -= qc * t.coeff;
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quotient.push_back({qe, qc});
  }
  std::reverse(quotient.begin(), quotient.end());
  return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  auto q = try_divide(f, g);
  if (!q) {
    throw Error(ErrorCode::InexactDivision,
                "Laurent division is not exact (divisor " + to_string(g) + ")");
  }
  return *std::move(q);
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest terms first reads closer to the usual notation.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rat c = it->coeff;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit_exp = it->exp == Exponent{};
    if (c != 1 || unit_exp) os << c.get_str();
    if (it->exp.lambda != 0) {
      os << "λ";
      if (it->exp.lambda != 1) os << "^" << it->exp.lambda;
    }
    if (it->exp.mu != 0) {
      os << "μ";
      if (it->exp.mu != 1) os << "^" << it->exp.mu;
    }
  }
  return os.str();
}

}  // namespace wordmap
