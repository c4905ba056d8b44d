#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidcong/burau.hpp"
#include "braidcong/cosets.hpp"
#include "braidcong/errors.hpp"
#include "braidcong/factorizer.hpp"
#include "braidcong/shadows.hpp"
#include "braidcong/spcong.hpp"
#include "braidcong/suite.hpp"

namespace braidcong {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitError = 2 };

struct RunConfig {
  std::string command;  // "burau matrix", "finquot check-thm41", "suite", ...
  int n = 0;
  int m = 0;
  int g = 0;
  int r = 0;
  std::uint32_t modulus = 0;
  std::size_t element_cap = kDefaultElementCap;
  std::size_t coset_cap = kDefaultCosetCap;
  std::size_t search_budget = kDefaultSearchBudget;
  std::uint64_t seed = 0;
  std::string word;
  std::vector<std::string> words;
  std::string preset;
  std::string strategy = "felsch";
  std::string presentation_path;
  std::string matrix_path;
  std::string x;
  std::string out_path;
  std::string cert_path;
  bool laurent = false;
  bool heavy = false;
  bool quick = false;

  /// Defaults with BRAIDCONG_ELEMENT_CAP, BRAIDCONG_COSET_CAP and
  /// BRAIDCONG_SEARCH_BUDGET applied.
  static RunConfig from_environment() {
    RunConfig c;
    const auto read = [](const char* name, std::size_t& target) {
      if (const char* v = std::getenv(name); v && *v) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(v, &end, 10);
        if (*end != '\0' || parsed == 0) throw std::invalid_argument(std::string(name) + " must be a positive integer");
        target = static_cast<std::size_t>(parsed);
      }
    };
    read("BRAIDCONG_ELEMENT_CAP", c.element_cap);
    read("BRAIDCONG_COSET_CAP", c.coset_cap);
    read("BRAIDCONG_SEARCH_BUDGET", c.search_budget);
    return c;
  }
};

namespace detail {

inline BraidWord parse_word_arg(const std::string& text, int n) {
  if (text.find(':') != std::string::npos) {
    BraidWord w = BraidWord::parse(text);
    if (n != 0 && w.strands() != n) throw std::invalid_argument("word strand count does not match --n");
    return w;
  }
  if (n < 2) throw std::invalid_argument("a word without 'n:' prefix needs --n");
  return BraidWord(n, BraidWord::parse_letters(text));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void require_positive(int v, const char* name) {
  if (v < 1) throw std::invalid_argument(std::string("--") + name + " must be given and positive");
}

inline int report_exit(const ShadowReport& r, std::ostream& out) {
  out << r.to_text();
  return r.pass ? kExitPass : kExitFail;
}

}  // namespace detail

/// Runs exactly one operation. Exit 0 on success or PASS, 1 on a verified FAIL,
/// 2 on budget or usage errors.
inline int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.element_cap == 0 || c.coset_cap == 0 || c.search_budget == 0) throw std::invalid_argument("budgets must be positive");
    const std::string& cmd = c.command;
    if (cmd == "burau matrix") {
      detail::require_positive(c.n, "n");
      const BraidWord w = detail::parse_word_arg(c.word, c.n);
      if (c.laurent) {
        out << format_matrix(unreduced_burau(w));
      } else if (c.modulus != 0) {
        out << format_matrix(reduce_mod(integral_burau(w), c.modulus));
      } else {
        out << format_matrix(integral_burau(w));
      }
      return kExitPass;
    }
    if (cmd == "spcong kernel-factorize") {
      detail::require_positive(c.g, "g");
      detail::require_positive(c.m, "m");
      const ParsedMatrix parsed = parse_matrix(detail::read_file(c.matrix_path));
      if (!std::holds_alternative<MatZ>(parsed)) throw std::invalid_argument("kernel-factorize needs an integer matrix (header 'n 0')");
      const MatZ& t = std::get<MatZ>(parsed);
      if (t.dim() != 2 * static_cast<std::size_t>(c.g)) throw std::invalid_argument("matrix dimension is not 2g");
      const StabilizerContext ctx = StabilizerContext::standard(static_cast<std::size_t>(c.g), c.m);
      if (const std::string why = kernel_membership_error(ctx, t); !why.empty()) {
        out << "status: FAIL\nreason: " << why << '\n';
        return kExitFail;
      }
      out << kernel_factorize(ctx, t).to_text(static_cast<std::size_t>(c.g), c.m);
      return kExitPass;
    }
    if (cmd == "finquot enum" || cmd == "finquot closure" || cmd == "finquot filter") {
      detail::require_positive(c.n, "n");
      if (c.modulus < 2) throw std::invalid_argument("--mod must be at least 2");
      const GroupEnumeration ambient = gamma_mod(c.n, c.modulus, c.element_cap);
      out << "n: " << c.n << "\nmodulus: " << c.modulus << "\nambient_order: " << ambient.order() << '\n';
      if (cmd == "finquot closure") {
        detail::require_positive(c.m, "m");
        const auto seed = reduce_mod(integral_burau(BraidWord::generator(c.n, 1, c.m)), c.modulus);
        out << "m: " << c.m << "\nclosure_order: " << normal_closure(ambient, {seed}).order() << '\n';
      } else if (cmd == "finquot filter") {
        detail::require_positive(c.m, "m");
        out << "m: " << c.m << "\nfilter_order: " << congruence_filter(ambient, static_cast<std::uint32_t>(c.m)).size() << '\n';
      }
      return kExitPass;
    }
    if (cmd == "finquot check-thm41") {
      detail::require_positive(c.n, "n");
      detail::require_positive(c.m, "m");
      return detail::report_exit(shadow_check_thm41(c.n, static_cast<std::uint32_t>(c.m), c.modulus, c.element_cap), out);
    }
    if (cmd == "finquot check-lemma42") {
      detail::require_positive(c.n, "n");
      detail::require_positive(c.r, "r");
      return detail::report_exit(shadow_check_lemma42(c.n, static_cast<unsigned>(c.r), c.element_cap), out);
    }
    if (cmd == "finquot check-mennicke") {
      detail::require_positive(c.g, "g");
      detail::require_positive(c.m, "m");
      return detail::report_exit(shadow_check_mennicke(static_cast<std::size_t>(c.g), static_cast<std::uint32_t>(c.m), c.element_cap), out);
    }
    if (cmd == "finquot check-corollary") {
      detail::require_positive(c.n, "n");
      detail::require_positive(c.m, "m");
      std::vector<BraidWord> extra;
      for (const auto& w : c.words) extra.push_back(detail::parse_word_arg(w, c.n));
      return detail::report_exit(corollary_shadow(c.n, static_cast<std::uint32_t>(c.m), extra, c.element_cap), out);
    }
    if (cmd == "cosets order") {
      const CosetStrategy strategy = c.strategy == "hlt" ? CosetStrategy::hlt : CosetStrategy::felsch;
      if (c.strategy != "hlt" && c.strategy != "felsch") throw std::invalid_argument("--strategy must be felsch or hlt");
      std::optional<Presentation> p;
      if (!c.presentation_path.empty()) {
        std::istringstream in(detail::read_file(c.presentation_path));
        p = Presentation::parse(in);
      } else if (c.preset == "vondyck") {
        detail::require_positive(c.m, "m");
        p = vondyck_presentation(c.m);
      } else if (c.preset == "braid") {
        detail::require_positive(c.n, "n");
        detail::require_positive(c.m, "m");
        std::vector<BraidWord> extra;
        for (const auto& w : c.words) extra.push_back(detail::parse_word_arg(w, c.n));
        p = braid_quotient_presentation(c.n, c.m, extra);
      } else {
        throw std::invalid_argument("cosets order needs --preset braid|vondyck or --presentation FILE");
      }
      const CosetTable t = todd_coxeter(*p, c.coset_cap, strategy);
      out << "generators: " << p->generators() << "\nrelators: " << p->relators().size() << "\norder: " << t.order()
          << "\ncosets_defined: " << t.defined() << '\n';
      return kExitPass;
    }
    if (cmd == "factorize") {
      detail::require_positive(c.n, "n");
      detail::require_positive(c.m, "m");
      VecZ lambda;
      std::istringstream xs(c.x);
      for (std::string tok; std::getline(xs, tok, ',');) lambda.push_back(parse_bigint(tok));
      if (lambda.size() != static_cast<std::size_t>(c.n - 1)) throw std::invalid_argument("--x needs n-1 comma-separated c-coordinates");
      FactorStats stats;
      const FactorCertificate cert = factor_T2m(c.n, c.m, LatticeVector::from_c_coords(lambda), {c.seed, c.search_budget}, &stats);
      if (c.out_path.empty()) {
        out << cert.to_text();
      } else {
        std::ofstream f(c.out_path);
        if (!f) throw std::invalid_argument("cannot write " + c.out_path);
        f << cert.to_text();
        out << "factors: " << cert.factors.size() << "\norbit_searches: " << stats.orbit_searches << "\nl_moves: " << stats.l_moves
            << "\nstatus: PASS\n";
      }
      return kExitPass;
    }
    if (cmd == "verify") {
      const FactorCertificate cert = FactorCertificate::parse(detail::read_file(c.cert_path));
      const VerifyResult v = verify_certificate(cert);
      out << "factors: " << cert.factors.size() << "\nreport: " << v.report << "\nstatus: " << (v.ok ? "PASS" : "FAIL") << '\n';
      return v.ok ? kExitPass : kExitFail;
    }
    if (cmd == "suite") {
      SuiteOptions opts{c.quick, c.heavy, c.seed, c.element_cap, c.coset_cap, c.search_budget};
      bool all = true;
      run_full_suite(opts, [&](const CheckResult& r) {
        out << format_result_row(r) << std::endl;
        all = all && r.pass;
      });
      out << "status: " << (all ? "PASS" : "FAIL") << '\n';
      return all ? kExitPass : kExitFail;
    }
    throw std::invalid_argument("unknown subcommand '" + cmd + "'");
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

/// Parses argv into a RunConfig and dispatches it.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig c;
  try {
    c = RunConfig::from_environment();
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitError;
  }
  CLI::App app{"Integral Burau representation, congruence subgroups and transvection certificates", "braidcong"};
  app.require_subcommand(1);

  const auto budgets = [&c](CLI::App* sub) {
    sub->add_option("--cap", c.element_cap, "element cap for group enumeration");
    sub->add_option("--coset-cap", c.coset_cap, "coset cap for Todd-Coxeter");
    sub->add_option("--budget", c.search_budget, "node budget for each orbit search");
  };

  CLI::App* burau = app.add_subcommand("burau", "Burau matrices");
  burau->require_subcommand(1);
  CLI::App* burau_matrix = burau->add_subcommand("matrix", "print the Burau matrix of a braid word");
  burau_matrix->add_option("--n", c.n, "strand count")->required();
  burau_matrix->add_option("--word", c.word, "braid word, e.g. \"3: 1 -2\"")->required();
  auto* mod_opt = burau_matrix->add_option("--mod", c.modulus, "reduce the integral matrix modulo this");
  burau_matrix->add_flag("--laurent", c.laurent, "print the unreduced matrix over Z[t, t^-1]")->excludes(mod_opt);

  CLI::App* spcong = app.add_subcommand("spcong", "symplectic congruence tools");
  spcong->require_subcommand(1);
  CLI::App* kf = spcong->add_subcommand("kernel-factorize", "factor an element of the stabilizer kernel");
  kf->add_option("--g", c.g, "genus")->required();
  kf->add_option("--m", c.m, "level")->required();
  kf->add_option("--matrix", c.matrix_path, "matrix file")->required();

  CLI::App* finquot = app.add_subcommand("finquot", "finite quotient enumeration and shadow checks");
  finquot->require_subcommand(1);
  for (const char* name : {"enum", "closure", "filter", "check-thm41", "check-lemma42", "check-mennicke", "check-corollary"}) {
    CLI::App* s = finquot->add_subcommand(name);
    s->add_option("--n", c.n, "strand count");
    s->add_option("--g", c.g, "genus");
    s->add_option("--m", c.m, "level");
    s->add_option("--r", c.r, "exponent, level 2^r");
    s->add_option("--mod", c.modulus, "modulus");
    s->add_option("--word", c.words, "extra braid word (repeatable)");
    budgets(s);
  }

  CLI::App* cosets = app.add_subcommand("cosets", "coset enumeration");
  cosets->require_subcommand(1);
  CLI::App* order = cosets->add_subcommand("order", "order of a finitely presented group");
  order->add_option("--preset", c.preset, "braid or vondyck")->check(CLI::IsMember({"braid", "vondyck"}));
  order->add_option("--n", c.n, "strand count");
  order->add_option("--m", c.m, "exponent");
  order->add_option("--relator", c.words, "extra relator braid word (repeatable)");
  order->add_option("--presentation", c.presentation_path, "presentation file, one relator per line");
  order->add_option("--strategy", c.strategy, "felsch or hlt")->check(CLI::IsMember({"felsch", "hlt"}));
  budgets(order);

  CLI::App* factorize = app.add_subcommand("factorize", "certificate for T_x^{2m}");
  factorize->add_option("--n", c.n, "strand count")->required();
  factorize->add_option("--m", c.m, "level")->required();
  factorize->add_option("--x", c.x, "c-coordinates l1,...,l_{n-1}")->required();
  factorize->add_option("--seed", c.seed, "search tie-break seed");
  factorize->add_option("--out", c.out_path, "certificate file");
  budgets(factorize);

  CLI::App* verify = app.add_subcommand("verify", "verify a certificate file");
  verify->add_option("--cert", c.cert_path, "certificate file")->required();

  CLI::App* suite = app.add_subcommand("suite", "run the acceptance checks");
  suite->add_flag("--heavy", c.heavy, "include the largest cases");
  suite->add_flag("--quick", c.quick, "reduced sample sizes");
  suite->add_option("--seed", c.seed, "sampling seed");
  budgets(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitError;
  }
  for (CLI::App* sub = app.get_subcommands().front();;) {
    c.command += (c.command.empty() ? "" : " ") + sub->get_name();
    const auto children = sub->get_subcommands();
    if (children.empty()) break;
    sub = children.front();
  }
  return dispatch(c, out, err);
}

}  // namespace braidcong
