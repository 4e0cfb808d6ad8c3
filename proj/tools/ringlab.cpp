#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "ringlab/cache.hpp"
#include "ringlab/decomposition.hpp"
#include "ringlab/inverse_system.hpp"
#include "ringlab/present.hpp"
#include "ringlab/report.hpp"
#include "ringlab/ringfile.hpp"
#include "ringlab/series.hpp"

using namespace ringlab;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

template <class F>
LocalAlgebra<F> algebra_of(const F& k, const RingFile& rf) {
  if (rf.inverse_system)
    return from_inverse_system(k, rf.pres.vars, *rf.inverse_system);
  return LocalAlgebra<F>::build(k, rf.pres);
}

template <class F>
PresentedModule<F> module_of(const LocalAlgebra<F>& A, const ModuleSpec& ms) {
  if (ms.is_quotient) {
    std::vector<typename LocalAlgebra<F>::Vec> gens;
    for (auto& p : ms.quotient_gens) gens.push_back(A.eval(p));
    return PresentedModule<F>::cyclic(A, gens);
  }
  PresentedModule<F> m;
  m.rank = ms.matrix.empty() ? 0 : ms.matrix.front().size();
  for (auto& row : ms.matrix) {
    if (row.size() != m.rank)
      throw std::runtime_error("module matrix rows have unequal lengths");
    std::vector<typename LocalAlgebra<F>::Vec> rel;
    for (auto& p : row) rel.push_back(A.eval(p));
    m.relations.push_back(std::move(rel));
  }
  return m;
}

// named module from the ring file, or the residue field when name is empty
template <class F>
PresentedModule<F> pick_module(const LocalAlgebra<F>& A, const RingFile& rf,
                               const std::string& name) {
  if (name.empty()) return PresentedModule<F>::residue_field(A);
  auto* ms = rf.find_module(name);
  if (!ms) throw std::runtime_error("no module named '" + name + "'");
  return module_of(A, *ms);
}

json series_json(const TruncatedSeries& s) {
  json out = json::array();
  for (auto& c : s.c) out.push_back(c.str());
  return out;
}

json poly_json(const std::vector<Rational>& p) {
  json out = json::array();
  for (auto& c : p) out.push_back(c.str());
  return out;
}

json check_json(const CheckReport& rep) {
  json d;
  d["lhs"] = series_json(rep.lhs);
  d["rhs"] = series_json(rep.rhs);
  if (!rep.ok) d["disagreeing_degrees"] = rep.bad;
  return d;
}

template <class F>
json invariants_json(const LocalAlgebra<F>& A) {
  json d;
  d["dim"] = A.dim();
  d["edim"] = A.edim();
  d["loewy_length"] = A.loewy_length();
  d["hilbert"] = A.hilbert_function();
  d["gorenstein"] = A.is_gorenstein();
  d["type"] = A.socle().dim();
  d["mu_m2"] = A.mu(A.power(2));
  d["graded"] = A.graded();
  switch (A.classify()) {
    case LocalAlgebra<F>::StretchClass::stretched: d["class"] = "stretched"; break;
    case LocalAlgebra<F>::StretchClass::almost_stretched:
      d["class"] = "almost stretched";
      break;
    default: d["class"] = "neither"; break;
  }
  return d;
}

template <class F>
json presentation_json(const LocalAlgebra<F>& A) {
  auto pres = recover_presentation(A);
  json d;
  d["vars"] = pres.vars;
  json rels = json::array();
  for (auto& f : pres.relations) rels.push_back(f.str(pres.vars));
  d["relations"] = rels;
  return d;
}

struct Options {
  std::string file_a, file_b, check, module_name, gen_kind, compose_kind;
  long N = -1;
  bool no_cache = false;
  std::uint64_t seed = 0;
  unsigned gen_vars = 2, gen_socle_degree = 2;
};

template <class Fn>
int with_field(const RingFile& rf, Fn&& fn) {
  if (rf.rational_field) {
    QqField k;
    return fn(k);
  }
  GfField k(rf.prime);
  return fn(k);
}

int cmd_analyze(const Options& opt, Report& rep) {
  std::string text = slurp(opt.file_a);
  rep.add_input(opt.file_a, text);
  RingFile rf = parse_ring_file(text);
  return with_field(rf, [&](auto& k) {
    auto A = algebra_of(k, rf);
    rep.add_check("analyze", true, invariants_json(A));
    return 0;
  });
}

int cmd_decompose(const Options& opt, Report& rep) {
  std::string text = slurp(opt.file_a);
  rep.add_input(opt.file_a, text);
  RingFile rf = parse_ring_file(text);
  return with_field(rf, [&](auto& k) {
    auto A = algebra_of(k, rf);
    auto fac = factorize(A);
    json d;
    d["num_factors"] = fac.factors.size();
    json fs = json::array();
    for (auto& f : fac.factors) {
      json fj = invariants_json(f);
      fj["presentation"] = presentation_json(f);
      fs.push_back(fj);
    }
    d["factors"] = fs;
    json term = invariants_json(fac.terminal);
    term["presentation"] = presentation_json(fac.terminal);
    d["terminal"] = term;
    json flags = json::array();
    for (auto f : fac.flags)
      flags.push_back(f == TerminalFlag::edim_le_4      ? "edim <= 4"
                      : f == TerminalFlag::lo_le_2       ? "lo <= 2"
                                                         : "criterion indecomposable");
    d["terminal_flags"] = flags;
    rep.add_check("decompose", true, d);
    return 0;
  });
}

int cmd_betti(const Options& opt, Report& rep) {
  std::string text = slurp(opt.file_a);
  rep.add_input(opt.file_a, text);
  RingFile rf = parse_ring_file(text);
  std::size_t N = opt.N < 0 ? 12 : opt.N;
  std::string key = content_hash("betti|" + print_ring_file(rf) + "|" +
                                 opt.module_name + "|" + std::to_string(N));
  if (!opt.no_cache) {
    std::string warn;
    if (auto hit = cache_load(key, &warn)) {
      std::cerr << "cache: hit\n";
      rep.add_check("betti", true, *hit);
      return 0;
    }
    if (!warn.empty()) std::cerr << "warning: " << warn << "\n";
    std::cerr << "cache: miss\n";
  }
  return with_field(rf, [&](auto& k) {
    auto A = algebra_of(k, rf);
    auto M = pick_module(A, rf, opt.module_name);
    auto betti = betti_sequence(A, M, N);
    json d;
    d["module"] = opt.module_name.empty() ? "k" : opt.module_name;
    d["N"] = N;
    d["betti"] = betti;
    if (!opt.no_cache) cache_store(key, d);
    rep.add_check("betti", true, d);
    return 0;
  });
}

const char* verdict_name(GolodVerdict v) {
  switch (v) {
    case GolodVerdict::numerically_golod: return "numerically-golod";
    case GolodVerdict::not_golod: return "not-golod";
    default: return "inconclusive";
  }
}

int cmd_verify(const Options& opt, Report& rep) {
  std::string text = slurp(opt.file_a);
  rep.add_input(opt.file_a, text);
  RingFile rf = parse_ring_file(text);

  if (opt.check == "dress") {
    if (opt.file_b.empty())
      throw CLI::ValidationError("verify dress needs two ring files");
    std::string text_b = slurp(opt.file_b);
    rep.add_input(opt.file_b, text_b);
    RingFile rf_b = parse_ring_file(text_b);
    if (rf.rational_field != rf_b.rational_field || rf.prime != rf_b.prime)
      throw CLI::ValidationError("verify dress: field mismatch");
    std::size_t N = opt.N < 0 ? 10 : opt.N;
    return with_field(rf, [&](auto& k) {
      auto A = algebra_of(k, rf);
      auto B = algebra_of(k, rf_b);
      using F = std::decay_t<decltype(k)>;
      std::optional<PresentedModule<F>> M;
      if (!opt.module_name.empty()) M = pick_module(A, rf, opt.module_name);
      auto d = check_dress<F>(A, B, M, N);
      rep.add_check("dress ring clause", d.ring.ok, check_json(d.ring));
      if (d.module)
        rep.add_check("dress module clause", d.module->ok,
                      check_json(*d.module));
      return rep.all_passed() ? 0 : 1;
    });
  }

  return with_field(rf, [&](auto& k) {
    auto A = algebra_of(k, rf);
    using F = std::decay_t<decltype(k)>;

    if (opt.check == "levin") {
      std::size_t N = opt.N < 0 ? 12 : opt.N;
      auto r = check_levin_socle(A, N);
      rep.add_check("levin socle formula", r.ok, check_json(r));
    } else if (opt.check == "golod") {
      std::size_t N = opt.N < 0 ? 10 : opt.N;
      auto v = golod_certificate(A, N);
      json d;
      d["verdict"] = verdict_name(v);
      rep.add_check("golod", v == GolodVerdict::numerically_golod, d);
    } else if (opt.check == "ds4") {
      if (!A.is_gorenstein() || A.mu(A.power(2)) > 2)
        throw std::invalid_argument(
            "ds4: needs a Gorenstein ring with mu(m^2) <= 2");
      std::size_t N = opt.N < 0 ? 8 : opt.N;
      RationalFn golod({Rational(1)},
                       {Rational(1), Rational(-(long long)A.edim())});
      for (unsigned i = 2; i <= A.loewy_length(); ++i) {
        auto Q = A.quotient(A.power(i));
        auto r = compare_series(poincare_k(Q, N), golod.expand(N));
        rep.add_check("R/m^" + std::to_string(i) + " is golod", r.ok,
                      check_json(r));
      }
    } else if (opt.check == "sbr2") {
      std::size_t N = opt.N < 0 ? 12 : opt.N;
      auto d = backelin_roos_denominator(A);
      auto M = pick_module(A, rf, opt.module_name);
      auto r = check_denominator(A, M, d, N, default_window_start(A, d));
      json dj;
      dj["denominator"] = poly_json(d.num);
      dj["polynomial_part"] = poly_json(r.poly_part);
      if (!r.ok) dj["nonzero_degrees"] = r.bad;
      rep.add_check("denominator clears the series", r.ok, dj);
    } else if (opt.check == "sbr3") {
      std::size_t N = opt.N < 0 ? 8 : opt.N;
      auto pred = stretched_poincare(A, N);
      json dj;
      dj["numerator"] = poly_json(pred.fn.num);
      dj["denominator"] = poly_json(pred.fn.den);
      dj["predicted"] = series_json(pred.predicted);
      dj["computed"] = series_json(pred.computed);
      rep.add_check("closed poincare form", pred.verified, dj);
    } else if (opt.check == "prl9_5") {
      std::size_t N = opt.N < 0 ? 12 : opt.N;
      auto d = backelin_roos_denominator(A);
      auto r = check_prl9_5_divisibility(A, d, A.edim(), N);
      json dj;
      dj["polynomial_part"] = poly_json(r.poly_part);
      dj["odd_deviation_product"] = poly_json(r.exterior_product);
      rep.add_check("d * P is polynomial", r.hypothesis_ok, dj);
      rep.add_check("polynomial part divides the odd deviation product",
                    r.divides);
    } else if (opt.check == "ggc6") {
      auto cert = multiplicity11_certificate(A);
      using Kind = typename Multiplicity11Certificate<F>::Kind;
      json d;
      d["kind"] = cert.kind == Kind::edim_le_4  ? "edim <= 4"
                  : cert.kind == Kind::lo_le_2  ? "lo <= 2"
                                                : "split";
      d["lo2_factors"] = cert.lo2_factors.size();
      d["core"] = invariants_json(cert.core);
      rep.add_check("multiplicity <= 11 certificate", true, d);
    } else if (opt.check == "pairing") {
      auto r = poincare_pairing_check(A);
      rep.add_check("socle pairing is perfect", r.ok);
    } else if (opt.check == "ar") {
      std::size_t N = opt.N < 0 ? 8 : opt.N;
      auto M = pick_module(A, rf, opt.module_name);
      auto v = ar_diagnostic(A, M, N);
      json d;
      d["verdict"] = v == ArVerdict::free_module ? "free module"
                     : v == ArVerdict::consistent_with_ar
                         ? "no vanishing window"
                         : "vanishing window found";
      rep.add_check("ext vanishing diagnostic",
                    v != ArVerdict::vanishing_window_found, d);
    } else {
      throw CLI::ValidationError("unknown check '" + opt.check + "'");
    }
    return rep.all_passed() ? 0 : 1;
  });
}

int cmd_gen(const Options& opt) {
  if (opt.gen_kind != "inverse-system")
    throw CLI::ValidationError("gen: only 'inverse-system' is supported");
  std::mt19937_64 rng(opt.seed);
  std::size_t n = opt.gen_vars;
  unsigned s = opt.gen_socle_degree;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i + 1));

  Poly dual;
  auto mons = monomials_below_degree(n, s + 1);
  for (auto& m : mons) {
    if (m.degree() != s) continue;
    auto c = rng() % 5;  // 0 drops the monomial
    if (c) dual += Poly::monomial(m, Rational(c));
  }
  if (dual.is_zero()) {
    Monomial m(n);
    m.e[0] = s;
    dual += Poly::monomial(m);
  }
  RingFile rf;
  rf.pres.vars = vars;
  rf.inverse_system = dual;
  std::cout << "# seed " << opt.seed << "\n" << print_ring_file(rf);
  return 0;
}

int cmd_compose(const Options& opt) {
  RingFile rf_a = parse_ring_file(slurp(opt.file_a));
  RingFile rf_b = parse_ring_file(slurp(opt.file_b));
  if (rf_a.rational_field != rf_b.rational_field || rf_a.prime != rf_b.prime)
    throw CLI::ValidationError("compose: field mismatch");
  return with_field(rf_a, [&](auto& k) {
    auto A = algebra_of(k, rf_a);
    auto B = algebra_of(k, rf_b);
    RingFile out;
    out.rational_field = rf_a.rational_field;
    out.prime = rf_a.prime;
    if (opt.compose_kind == "fibre") {
      auto w = fibre_product(A, B);
      out.pres = recover_presentation(w.T);
    } else {
      auto w = connected_sum(A, B);
      out.pres = recover_presentation(w.Q);
    }
    std::cout << print_ring_file(out);
    return 0;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants, decompositions, and series checks for "
               "artinian local algebras"};
  app.require_subcommand(1);
  Options opt;

  auto* analyze = app.add_subcommand("analyze", "invariants and classification");
  analyze->add_option("file", opt.file_a)->required();

  auto* decompose = app.add_subcommand("decompose", "connected-sum factorization");
  decompose->add_option("file", opt.file_a)->required();

  auto* betti = app.add_subcommand("betti", "betti numbers of a module");
  betti->add_option("file", opt.file_a)->required();
  betti->add_option("--module", opt.module_name);
  betti->add_option("-N", opt.N);
  betti->add_flag("--no-cache", opt.no_cache);

  auto* verify = app.add_subcommand("verify", "check a series identity");
  verify->add_option("check", opt.check)->required();
  verify->add_option("file", opt.file_a)->required();
  verify->add_option("file_b", opt.file_b);
  verify->add_option("--module", opt.module_name);
  verify->add_option("-N", opt.N);

  auto* gen = app.add_subcommand("gen", "generate a reproducible example");
  gen->add_option("kind", opt.gen_kind)->required();
  gen->add_option("--vars", opt.gen_vars);
  gen->add_option("--socle-degree", opt.gen_socle_degree);
  gen->add_option("--seed", opt.seed);

  auto* compose = app.add_subcommand("compose", "fibre product or connected sum");
  compose->add_option("kind", opt.compose_kind)
      ->required()
      ->check(CLI::IsMember({"fibre", "connected"}));
  compose->add_option("fileA", opt.file_a)->required();
  compose->add_option("fileB", opt.file_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::vector<std::string> echo(argv, argv + argc);
  Report rep(echo);
  rep.set_seed(opt.seed);
  auto t0 = std::chrono::steady_clock::now();

  int rc;
  try {
    if (*analyze) rc = cmd_analyze(opt, rep);
    else if (*decompose) rc = cmd_decompose(opt, rep);
    else if (*betti) rc = cmd_betti(opt, rep);
    else if (*verify) rc = cmd_verify(opt, rep);
    else if (*gen) return cmd_gen(opt);
    else if (*compose) return cmd_compose(opt);
    else return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    rep.add_check(opt.check.empty() ? "precondition" : opt.check, false,
                  {{"note", e.what()}});
    rc = 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  rep.add_timing("total",
                 std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - t0)
                     .count());
  std::cout << rep.dump();
  return rc;
}
