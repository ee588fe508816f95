#include "wordmap/certify.hpp"

#include <limits>
#include <random>
#include <sstream>

namespace wordmap {

namespace {

constexpr std::int64_t kSampleBound = 100;

// Uniform integer in [0, n) by rejection; std distributions are not portable
// across standard libraries and the search must be reproducible.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r = 0;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

void emit(const std::function<void(const std::string&)>& log, const std::string& message) {
  if (log) log(message);
}

CertChecks run_checks(const QPoly& h, const QPoly& trace, const QPoly& gamma) {
  CertChecks c;
  if (h.degree() < 1) return c;
  c.divides_trace_minus_2 = divmod(trace - QPoly(2), h).second.is_zero();
  c.coprime_t_t1 = gcd_q(h, t_times_t_plus_one<QPoly>()).degree() == 0;
  c.coprime_gamma_minus_1 = gcd_q(h, gamma - QPoly(1)).degree() == 0;
  return c;
}

QPoly strip_root(QPoly p, const Rat& root) {
  const QPoly factor = QPoly::t() - QPoly(root);
  while (p.degree() >= 1 && sgn(horner(p, root)) == 0) p = exact_div(p, factor);
  return p;
}

using PolyMat = Mat2<QPoly>;

PolyMat pow_poly_mat(const PolyMat& m, std::int64_t e) { return pow_unimodular(m, e); }

}  // namespace

Rat sample_rational(std::mt19937_64& rng) {
  const auto num = static_cast<std::int64_t>(uniform_below(rng, 2 * kSampleBound)) - kSampleBound;
  const auto den = static_cast<std::int64_t>(uniform_below(rng, kSampleBound)) + 1;
  // num ranges over [-100, 99]; map 0 to 100 so every nonzero numerator is reachable.
  return make_rat(num == 0 ? kSampleBound : num, den);
}

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return "Certified";
    case CertStatus::SwappedCertified: return "SwappedCertified";
    case CertStatus::TrivialWord: return "TrivialWord";
    case CertStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::optional<CertStatus> parse_cert_status(std::string_view s) {
  for (auto c : {CertStatus::Certified, CertStatus::SwappedCertified, CertStatus::TrivialWord,
                 CertStatus::Inconclusive}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

std::string cyclic_word_text(const DCParams& p) {
  std::ostringstream os;
  auto x = [&](std::int64_t e) { os << "x^" << e << ' '; };
  auto y = [&](std::int64_t e) { os << "y^" << e << ' '; };
  x(p.m), y(p.n - p.l), x(-p.k), y(p.l), x(p.k), y(-p.n), x(-p.m);
  y(p.n), x(p.m - p.k), y(-p.l), x(p.k), y(p.l), x(-p.m), y(-p.n);
  std::string s = os.str();
  s.pop_back();
  return s;
}

Attempt attempt_certification(const DCParams& params, const Rat& lambda0, const Rat& mu0,
                              const std::function<void(const std::string&)>& log) {
  Attempt a{lambda0, mu0, std::nullopt, {}};
  const std::string where = to_string(params) + " at lambda=" + format_rat(lambda0) +
                            ", mu=" + format_rat(mu0);
  const auto core = specialized_core(params, lambda0, mu0);
  if (!core) {
    emit(log, where + ": prefactor vanishes");
    return a;
  }
  if (core->tau.is_zero()) {
    emit(log, where + ": tau vanishes identically");
    return a;
  }
  if (sgn(horner(core->tau, Rat(0))) == 0) emit(log, where + ": tau(0) = 0");
  if (sgn(horner(core->tau, Rat(-1))) == 0) emit(log, where + ": tau(-1) = 0");

  QPoly s = squarefree_part(core->tau);
  s = strip_root(strip_root(s, Rat(0)), Rat(-1));
  if (s.degree() < 1) {
    emit(log, where + ": no roots of tau outside {0, -1}");
    return a;
  }
  const QPoly h = exact_div(s, gcd_q(s, core->gamma_inner));
  if (h.degree() < 1) {
    emit(log, where + ": every root of tau is a root of gamma");
    return a;
  }
  a.h = integer_primitive(h);
  a.checks = run_checks(*a.h, core->trace, core->gamma);
  if (!a.checks.all()) {
    emit(log, where + ": candidate failed the exact checks");
    a.h.reset();
  }
  return a;
}

Certificate certify(const DCParams& params, const CertifyOptions& options) {
  Certificate cert;
  cert.params = params;
  if (params.trivial()) {
    cert.status = CertStatus::TrivialWord;
    return cert;
  }
  std::mt19937_64 rng(options.seed);
  const bool given = options.lambda && options.mu;
  for (int branch = 0; branch < 2; ++branch) {
    const DCParams p = branch == 0 ? params : params.swapped();
    if (branch == 1) emit(options.log, "retrying with generators swapped: " + to_string(p));
    for (int i = 0; i < options.max_attempts; ++i) {
      Rat lambda0, mu0;
      if (i == 0 && given) {
        lambda0 = *options.lambda;
        mu0 = *options.mu;
      } else {
        do {
          lambda0 = sample_rational(rng);
          mu0 = sample_rational(rng);
        } while (sgn(prefactor_numerator(p).evaluate(lambda0, mu0)) == 0);
      }
      ++cert.attempts;
      Attempt a = attempt_certification(p, lambda0, mu0, options.log);
      if (a.h) {
        cert.status = branch == 0 ? CertStatus::Certified : CertStatus::SwappedCertified;
        cert.lambda = a.lambda;
        cert.mu = a.mu;
        cert.h = std::move(a.h);
        cert.checks = a.checks;
        return cert;
      }
    }
  }
  cert.status = CertStatus::Inconclusive;
  return cert;
}

CertChecks check_certificate(const Certificate& cert) {
  if (!cert.certified() || !cert.h || !cert.lambda || !cert.mu) return {};
  if (sgn(*cert.lambda) == 0 || sgn(*cert.mu) == 0) return {};
  // Brute-force product with g = ((1, 1), (t, 1 + t)), det xi_g = t: entries stay in Q[t].
  const Word w = parse_word(cyclic_word_text(cert.word_params()));
  const QPoly t = QPoly::t();
  const PolyMat g{QPoly(1), QPoly(1), t, t + QPoly(1)};
  const PolyMat x = PolyMat::diagonal(QPoly(*cert.lambda), QPoly(Rat(1 / *cert.lambda)));
  const PolyMat y = adjugate(g) * PolyMat::diagonal(QPoly(*cert.mu), QPoly(Rat(1 / *cert.mu))) * g;
  PolyMat value = PolyMat::identity();
  for (const auto& s : w.syllables()) value = value * pow_poly_mat(s.gen == Gen::X ? x : y, s.exponent);
  return run_checks(*cert.h, trace(value), value.a11);
}

}  // namespace wordmap
