#include "wordmap/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "wordmap/serialize.hpp"

namespace wordmap {

namespace {

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw Error(ErrorCode::Syntax, "invalid integer \"" + text + "\"");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Word input_word(const RunConfig& c) {
  if (c.word_text) return parse_word(*c.word_text);
  return Word::from_pairs(c.dc->cyclic_pairs());
}

std::string input_label(const RunConfig& c) {
  if (c.word_text) return *c.word_text;
  return "w" + to_string(*c.dc);
}

void print_cert_human(const Certificate& cert, std::ostream& out) {
  out << "word " << to_string(cert.params) << ": " << to_string(cert.status) << '\n';
  if (cert.status == CertStatus::SwappedCertified) {
    out << "  certified through the swapped word " << to_string(cert.word_params()) << '\n';
  }
  if (cert.lambda && cert.mu) {
    out << "  λ = " << format_rat(*cert.lambda) << ", μ = " << format_rat(*cert.mu) << '\n';
  }
  if (cert.h) out << "  h(t) = " << to_string(*cert.h) << '\n';
  if (cert.certified()) {
    out << "  h | T - 2: " << yes_no(cert.checks.divides_trace_minus_2)
        << "; gcd(h, t(t+1)) = 1: " << yes_no(cert.checks.coprime_t_t1)
        << "; gcd(h, γ - 1) = 1: " << yes_no(cert.checks.coprime_gamma_minus_1) << '\n';
  }
  out << "  attempts: " << cert.attempts << '\n';
}

std::function<void(const std::string&)> logger(const RunConfig& c, std::ostream& err) {
  if (!c.verbose) return {};
  return [&err](const std::string& line) { err << line << '\n'; };
}

CertifyOptions certify_options(const RunConfig& c, std::ostream& err) {
  CertifyOptions o;
  o.seed = c.seed;
  o.max_attempts = c.max_attempts;
  o.lambda = c.lambda;
  o.mu = c.mu;
  o.log = logger(c, err);
  return o;
}

int status_exit(CertStatus s) {
  switch (s) {
    case CertStatus::Certified:
    case CertStatus::SwappedCertified: return kExitOk;
    case CertStatus::TrivialWord: return kExitTrivial;
    case CertStatus::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

// Refuses to emit a certificate the independent checker rejects.
bool checker_agrees(const Certificate& cert, std::ostream& err) {
  if (!cert.certified()) return true;
  if (check_certificate(cert).all()) return true;
  err << "error: certificate for " << to_string(cert.params) << " failed the independent check\n";
  return false;
}

int run_polys(const RunConfig& c, std::ostream& out) {
  AssocPolys ap = assoc_polys(input_word(c));
  const TPoly gamma = gamma_of(ap);
  const TPoly trace = gamma + sigma(gamma);
  std::optional<CorePolys> core;
  if (c.dc && !c.dc->trivial()) core = core_polys(*c.dc);
  if (c.json) {
    Json j;
    j["word"] = input_label(c);
    j["alpha"] = to_json(ap.alpha);
    j["beta"] = to_json(ap.beta);
    j["gamma"] = to_json(gamma);
    j["trace"] = to_json(trace);
    if (core) {
      j["prefactor_num"] = to_json(core->prefactor_num);
      j["prefactor_den"] = to_json(core->prefactor_den);
      j["tau"] = to_json(core->tau);
      j["gamma_inner"] = to_json(core->gamma_inner);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "word: " << input_label(c) << '\n';
  out << "α(t) = " << to_string(ap.alpha) << '\n';
  out << "β(t) = " << to_string(ap.beta) << '\n';
  out << "γ(t) = " << to_string(gamma) << '\n';
  out << "tr(t) = " << to_string(trace) << '\n';
  if (core) {
    out << "prefactor = (" << to_string(core->prefactor_num) << ") / (" << to_string(core->prefactor_den) << ")\n";
    out << "τ(t) = " << to_string(core->tau) << '\n';
    out << "γ_inner(t) = " << to_string(core->gamma_inner) << '\n';
  }
  return kExitOk;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  const IdentityReport r = verify_identities(input_word(c));
  if (c.json) {
    Json j;
    j["word"] = input_label(c);
    j["determinant_identity"] = r.determinant_identity;
    j["sigma_symmetry"] = r.sigma_symmetry;
    j["unimodular_recursion"] = r.unimodular_recursion;
    j["failures"] = r.failures;
    out << j.dump(2) << '\n';
  } else {
    out << "word: " << input_label(c) << '\n';
    out << "γγ^σ - ββ^σ t(t+1) = 1: " << yes_no(r.determinant_identity) << '\n';
    out << "σ-symmetry: " << yes_no(r.sigma_symmetry) << '\n';
    out << "det of recursion product = 1: " << yes_no(r.unimodular_recursion) << '\n';
    for (const auto& f : r.failures) out << "  " << f << '\n';
  }
  return r.ok() ? kExitOk : kExitInconclusive;
}

int run_grid(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<DCParams> tuples;
  const auto& g = *c.grid;
  for (auto k = g[0].lo; k <= g[0].hi; ++k)
    for (auto l = g[1].lo; l <= g[1].hi; ++l)
      for (auto m = g[2].lo; m <= g[2].hi; ++m)
        for (auto n = g[3].lo; n <= g[3].hi; ++n) tuples.push_back({k, l, m, n});

  std::vector<Certificate> certs(tuples.size());
  std::vector<bool> agreed(tuples.size(), false);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tuples.size();) {
      CertifyOptions o;
      o.seed = grid_seed(c.seed, tuples[i]);
      o.max_attempts = c.max_attempts;
      certs[i] = certify(tuples[i], o);
      agreed[i] = !certs[i].certified() || check_certificate(certs[i]).all();
    }
  };
  const unsigned n_threads = c.threads > 0 ? static_cast<unsigned>(c.threads)
                                           : std::max(1u, std::thread::hardware_concurrency());
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < std::min<std::size_t>(n_threads, tuples.size()); ++i) pool.emplace_back(worker);
  }

  std::map<CertStatus, int> counts;
  for (const auto s : {CertStatus::Certified, CertStatus::SwappedCertified, CertStatus::TrivialWord,
                       CertStatus::Inconclusive}) {
    counts[s] = 0;
  }
  int rejected = 0;
  Json results = Json::array();
  for (std::size_t i = 0; i < certs.size(); ++i) {
    ++counts[certs[i].status];
    if (!agreed[i]) {
      ++rejected;
      err << "error: certificate for " << to_string(certs[i].params) << " failed the independent check\n";
      continue;
    }
    if (c.json) {
      results.push_back(to_json(certs[i]));
    } else {
      out << to_string(certs[i].params) << ' ' << to_string(certs[i].status);
      if (certs[i].h) out << " deg h = " << certs[i].h->degree();
      out << " attempts " << certs[i].attempts << '\n';
    }
  }
  const bool all_ok = rejected == 0 && counts[CertStatus::Inconclusive] == 0;
  if (c.json) {
    Json j;
    j["results"] = std::move(results);
    Json summary = Json::object();
    for (const auto& [k, v] : counts) summary[to_string(k)] = v;
    j["summary"] = std::move(summary);
    j["rejected"] = rejected;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [k, v] : counts) out << to_string(k) << ": " << v << '\n';
  }
  return all_ok ? kExitOk : kExitInconclusive;
}

int run_certify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.grid) return run_grid(c, out, err);
  const Certificate cert = certify(*c.dc, certify_options(c, err));
  if (!checker_agrees(cert, err)) return kExitInconclusive;
  if (c.json) {
    out << to_json(cert).dump(2) << '\n';
  } else {
    print_cert_human(cert, out);
  }
  return status_exit(cert.status);
}

int run_witness(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Certificate cert = certify(*c.dc, certify_options(c, err));
  if (!checker_agrees(cert, err)) return kExitInconclusive;
  if (!cert.certified()) {
    if (c.json) {
      out << Json{{"certificate", to_json(cert)}, {"witness", nullptr}}.dump(2) << '\n';
    } else {
      print_cert_human(cert, out);
    }
    return status_exit(cert.status);
  }
  WitnessOptions wo;
  wo.precision_digits = c.precision_digits;
  const Witness w = build_witness(cert, wo);
  if (c.json) {
    out << Json{{"certificate", to_json(cert)}, {"witness", to_json(w)}}.dump(2) << '\n';
    return kExitOk;
  }
  print_cert_human(cert, out);
  out << "witness for " << to_string(w.word_params) << (w.exact ? " (exact)" : " (approximate)") << '\n';
  out << "  factor h1(t) = " << to_string(w.factor) << '\n';
  out << "  t0 = " << (w.exact ? format_rat(w.t0.re) : format_gauss(w.t0, 30)) << '\n';
  auto row = [&](const GaussRat& a, const GaussRat& b) {
    auto f = [&](const GaussRat& z) { return w.exact ? format_rat(z.re) : format_gauss(z, 20); };
    return "(" + f(a) + ", " + f(b) + ")";
  };
  out << "  g = (" << row(w.g.a11, w.g.a12) << ", " << row(w.g.a21, w.g.a22) << ")\n";
  out << "  u = (" << row(w.u.a11, w.u.a12) << ", " << row(w.u.a21, w.u.a22) << ")\n";
  if (w.exact) {
    out << "  tr u = 2 and det u = 1 exactly; u is not the identity\n";
  } else {
    out << "  residual <= " << format_gauss(GaussRat(w.residual), 6) << '\n';
    if (w.modular) {
      out << "  modular certificate: T - 2 = 0 mod h1: " << yes_no(w.modular->trace_minus_2_mod.is_zero())
          << "; ββ^σ invertible mod h1: " << yes_no(w.modular->invertible)
          << "; gcd(h1, t(t+1)) = 1: " << yes_no(w.modular->coprime_t_t1) << '\n';
    }
  }
  return kExitOk;
}

QMat random_unimodular(std::mt19937_64& rng) {
  const Rat a = sample_rational(rng);
  const Rat b = sample_rational(rng);
  const Rat c = sample_rational(rng);
  return {a, b, c, Rat((1 + b * c) / a)};
}

int run_oracle(const RunConfig& c, std::ostream& out) {
  const Word w = c.word_text ? parse_word(*c.word_text) : double_commutator(c.dc->k, c.dc->l, c.dc->m, c.dc->n);
  const AssocPolys ap = assoc_polys(w);
  std::mt19937_64 rng(c.seed);
  int mismatches = 0;
  Json samples = Json::array();
  for (int i = 0; i < c.samples; ++i) {
    const Rat lambda0 = c.lambda ? *c.lambda : sample_rational(rng);
    const Rat mu0 = c.mu ? *c.mu : sample_rational(rng);
    const QMat g = random_unimodular(rng);
    const QMat direct = eval_direct(w, lambda0, mu0, g);
    const QMat normal = eval_normal_form(ap, lambda0, mu0, g).matrix;
    const bool match = direct == normal;
    if (!match) ++mismatches;
    if (c.json) {
      samples.push_back({{"lambda", format_rat(lambda0)}, {"mu", format_rat(mu0)},
                         {"trace", format_rat(trace(direct))}, {"match", match}});
    } else if (!match || c.verbose) {
      out << "λ = " << format_rat(lambda0) << ", μ = " << format_rat(mu0) << ": "
          << (match ? "match" : "MISMATCH") << '\n';
    }
  }
  if (c.json) {
    out << Json{{"word", to_string(w)}, {"samples", samples}, {"mismatches", mismatches}}.dump(2) << '\n';
  } else {
    out << "word: " << to_string(w) << '\n'
        << c.samples - mismatches << "/" << c.samples << " samples agree\n";
  }
  return mismatches == 0 ? kExitOk : kExitInconclusive;
}

void validate(const RunConfig& c) {
  const int inputs = (c.word_text ? 1 : 0) + (c.dc ? 1 : 0) + (c.grid ? 1 : 0);
  if (inputs != 1) throw Error(ErrorCode::Precondition, "supply exactly one of --word, --dc, --grid");
  if (c.grid && c.command != Command::Certify) throw Error(ErrorCode::Precondition, "--grid only applies to certify");
  if (c.word_text && (c.command == Command::Certify || c.command == Command::Witness)) {
    throw Error(ErrorCode::Precondition, "certify and witness take --dc");
  }
  if (c.lambda.has_value() != c.mu.has_value() && c.command != Command::Oracle) {
    throw Error(ErrorCode::Precondition, "--lambda and --mu go together");
  }
  if ((c.lambda && sgn(*c.lambda) == 0) || (c.mu && sgn(*c.mu) == 0)) {
    throw Error(ErrorCode::ZeroParameter, "lambda and mu must be nonzero");
  }
  if (c.precision_digits < 1 || c.max_attempts < 1 || c.samples < 1) {
    throw Error(ErrorCode::Precondition, "--precision, --max-attempts and --samples must be positive");
  }
}

}  // namespace

DCParams parse_dc(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw Error(ErrorCode::Syntax, "expected k,l,m,n but got \"" + text + "\"");
  return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]), parse_int(parts[3])};
}

std::array<GridRange, 4> parse_grid(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw Error(ErrorCode::Syntax, "expected four ranges lo:hi but got \"" + text + "\"");
  std::array<GridRange, 4> g;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto ends = split(parts[i], ':');
    if (ends.size() == 1) {
      g[i].lo = g[i].hi = parse_int(ends[0]);
    } else if (ends.size() == 2) {
      g[i] = {parse_int(ends[0]), parse_int(ends[1])};
    } else {
      throw Error(ErrorCode::Syntax, "bad range \"" + parts[i] + "\"");
    }
    if (g[i].lo > g[i].hi) throw Error(ErrorCode::Syntax, "empty range \"" + parts[i] + "\"");
  }
  return g;
}

std::uint64_t grid_seed(std::uint64_t seed, const DCParams& p) {
  std::uint64_t h = splitmix(seed);
  for (auto v : {p.k, p.l, p.m, p.n}) h = splitmix(h ^ static_cast<std::uint64_t>(v));
  return h;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::Polys: return run_polys(config, out);
      case Command::Verify: return run_verify(config, out);
      case Command::Certify: return run_certify(config, out, err);
      case Command::Witness: return run_witness(config, out, err);
      case Command::Oracle: return run_oracle(config, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::Syntax:
      case ErrorCode::Overflow:
      case ErrorCode::ZeroParameter:
      case ErrorCode::NotUnimodular:
      case ErrorCode::Precondition: return kExitInput;
      case ErrorCode::TrivialWord: return kExitTrivial;
      default: return kExitInconclusive;
    }
  }
  return kExitInput;
}

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word maps on SL2: associated polynomials, certificates and unipotent witnesses"};
  app.require_subcommand(1);
  RunConfig config;
  std::string word, dc, grid, lambda, mu;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--word", word, "word in x, y, e.g. \"[x^2,y]^3\"");
    sub->add_option("--dc", dc, "double commutator exponents k,l,m,n");
    sub->add_option("--lambda", lambda, "rational λ0 = p/q");
    sub->add_option("--mu", mu, "rational μ0 = p/q");
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_flag("--json", config.json, "machine-readable output");
    sub->add_flag("-v,--verbose", config.verbose, "log search progress to stderr");
  };
  const std::pair<const char*, Command> commands[] = {{"polys", Command::Polys},
                                                      {"verify", Command::Verify},
                                                      {"certify", Command::Certify},
                                                      {"witness", Command::Witness},
                                                      {"oracle", Command::Oracle}};
  const char* help[] = {"print α, β, γ and the trace polynomial", "check the polynomial identities",
                        "certify a double commutator", "certify and build a unipotent witness",
                        "compare direct evaluation with the normal form"};
  std::map<CLI::App*, Command> by_sub;
  for (std::size_t i = 0; i < 5; ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].first, help[i]);
    add_common(sub);
    by_sub[sub] = commands[i].second;
    const Command cmd = commands[i].second;
    if (cmd == Command::Certify || cmd == Command::Witness) {
      sub->add_option("--max-attempts", config.max_attempts, "specializations per branch")->capture_default_str();
    }
    if (cmd == Command::Certify) {
      sub->add_option("--grid", grid, "sweep kmin:kmax,lmin:lmax,mmin:mmax,nmin:nmax");
      sub->add_option("--threads", config.threads, "grid workers (0 = all cores)");
    }
    if (cmd == Command::Witness) {
      sub->add_option("--precision", config.precision_digits, "decimal digits for root isolation")->capture_default_str();
    }
    if (cmd == Command::Oracle) {
      sub->add_option("--samples", config.samples, "number of random g")->capture_default_str();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    for (const auto& [sub, cmd] : by_sub) {
      if (sub->parsed()) config.command = cmd;
    }
    if (!word.empty()) config.word_text = word;
    if (!dc.empty()) config.dc = parse_dc(dc);
    if (!grid.empty()) config.grid = parse_grid(grid);
    if (!lambda.empty()) config.lambda = parse_rat(lambda);
    if (!mu.empty()) config.mu = parse_rat(mu);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return run(config, out, err);
}

}  // namespace wordmap
