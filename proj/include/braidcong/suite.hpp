#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "braidcong/braid.hpp"
#include "braidcong/burau.hpp"
#include "braidcong/cosets.hpp"
#include "braidcong/errors.hpp"
#include "braidcong/factorizer.hpp"
#include "braidcong/form.hpp"
#include "braidcong/lattice.hpp"
#include "braidcong/shadows.hpp"
#include "braidcong/spcong.hpp"

namespace braidcong {

struct SuiteOptions {
  bool quick = false;
  bool heavy = false;
  std::uint64_t seed = 0;
  std::size_t element_cap = kDefaultElementCap;
  std::size_t coset_cap = kDefaultCosetCap;
  std::size_t search_budget = kDefaultSearchBudget;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

inline BraidWord random_word(std::mt19937_64& rng, int n, std::size_t length) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution inv(0.5);
  BraidWord w(n);
  for (std::size_t i = 0; i < length; ++i) w.push_back(inv(rng) ? -gen(rng) : gen(rng));
  return w;
}

inline LatticeVector random_c_vector(std::mt19937_64& rng, int n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  VecZ lambda;
  for (int i = 1; i < n; ++i) lambda.emplace_back(d(rng));
  return LatticeVector::from_c_coords(lambda);
}

/// rho_3 restricted to W_3, in the basis c_1, c_2.
inline MatZ reduced_burau3(const BraidWord& w) {
  const MatZ g = integral_burau(w);
  MatZ r(2);
  for (std::size_t j = 1; j <= 2; ++j) {
    const VecZ col = (g * LatticeVector::c(3, j)).c_coords();
    for (std::size_t i = 0; i < 2; ++i) r(i, j - 1) = col[i];
  }
  return r;
}

struct Failure {
  std::string what;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

}  // namespace detail

/// Criterion 1: braid relations hold for the unreduced Burau matrices, n <= 6.
inline std::string check_burau_relations(const SuiteOptions&) {
  std::size_t pairs = 0;
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      const MatL si = burau_generator(n, i, 1);
      detail::require(si * burau_generator(n, i, -1) == MatL::identity(static_cast<std::size_t>(n)),
                      "sigma_" + std::to_string(i) + " inverse fails for n = " + std::to_string(n));
      for (int j = i + 1; j < n; ++j) {
        const MatL sj = burau_generator(n, j, 1);
        const bool ok = j == i + 1 ? si * sj * si == sj * si * sj : si * sj == sj * si;
        detail::require(ok, "relation (" + std::to_string(i) + "," + std::to_string(j) + ") fails for n = " + std::to_string(n));
        ++pairs;
      }
    }
  }
  return std::to_string(pairs) + " generator pairs";
}

/// Criterion 2: rho_n(sigma_i) = T_{c_i}, n <= 8.
inline std::string check_transvection_form(const SuiteOptions&) {
  std::size_t count = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i < n; ++i) {
      const auto dim = static_cast<std::size_t>(n);
      detail::require(integral_burau(BraidWord::generator(n, i)) == transvection(LatticeVector::c(dim, static_cast<std::size_t>(i))),
                      "rho(sigma_" + std::to_string(i) + ") != T_c for n = " + std::to_string(n));
      ++count;
    }
  }
  return std::to_string(count) + " generators";
}

/// Criterion 3: w fixed, W_n and V_n invariant, odd-n splitting, even-n w-perp = W_n.
inline std::string check_lattice_structure(const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed + 3);
  const std::size_t words = opts.quick ? 20 : 100;
  for (int n = 3; n <= 6; ++n) {
    const auto dim = static_cast<std::size_t>(n);
    const LatticeVector w = w_vector(dim);
    const std::string tag = " (n = " + std::to_string(n) + ")";
    for (std::size_t k = 0; k < words; ++k) {
      const BraidWord b = detail::random_word(rng, n, 16);
      const MatZ g = integral_burau(b);
      detail::require(g * w == w, "w not fixed by " + b.to_string() + tag);
      for (std::size_t i = 1; i < dim; ++i)
        detail::require(lattice_membership(g * LatticeVector::c(dim, i)).in_w, "W_n not invariant" + tag);
      for (std::size_t j = 1; j <= dim; ++j) {
        const LatticeVector img = g * LatticeVector::e(dim, j);
        if (n % 2 == 1) {
          const auto [v, kk] = split_odd(img);
          detail::require(v + kk * w == img && lattice_membership(v).in_v, "odd splitting fails" + tag);
        }
      }
    }
    if (n % 2 == 1) {
      for (std::size_t j = 1; j <= dim; ++j) {
        const LatticeVector e = LatticeVector::e(dim, j);
        const auto [v, kk] = split_odd(e);
        detail::require(v + kk * w == e && v.coordinate_sum() == 0, "basis splitting fails" + tag);
      }
    } else {
      // W_n in w-perp on the basis c_i; w-perp in W_n because <e_j, w> = -1 for every j.
      for (std::size_t i = 1; i < dim; ++i) detail::require(form(LatticeVector::c(dim, i), w) == 0, "c_i not orthogonal to w" + tag);
      for (std::size_t j = 1; j <= dim; ++j) detail::require(form(LatticeVector::e(dim, j), w) == -1, "<e_j, w> != -1" + tag);
    }
  }
  return std::to_string(words) + " random words per n in 3..6";
}

/// Criterion 4: Burau-kernel words and the B_4 -> B_3 reduction diagram.
inline std::string check_kernel_words(const SuiteOptions& opts) {
  const BraidWord w3 = BraidWord(3, {1, 2}).power(6);
  const BraidWord w4 = BraidWord(4, {1, 2}).power(6);
  const BraidWord w5 = BraidWord(5, {1, 2, 3, 4}).power(10);
  detail::require(integral_burau(w3).is_identity(), "rho_3((s1 s2)^6) != I");
  detail::require(integral_burau(w4).is_identity(), "rho_4((s1 s2)^6) != I");
  detail::require(integral_burau(w5).is_identity(), "rho_5((s1 s2 s3 s4)^10) != I");
  detail::require(!integral_burau(BraidWord(3, {1, 2}).power(3)).is_identity(), "rho_3((s1 s2)^3) is unexpectedly I");
  std::mt19937_64 rng(opts.seed + 4);
  for (int k = 0; k < 50; ++k) {
    const BraidWord b = k == 0 ? w4 : detail::random_word(rng, 4, 12);
    detail::require(project_wperp_mod_w(integral_burau(b)) == detail::reduced_burau3(special_hom_phi(b)),
                    "reduction diagram fails for " + b.to_string());
  }
  return "3 kernel words, 50 diagram samples";
}

/// Criteria 5 and 6 and 12 share this: runs shadow reports and summarizes orders.
inline std::string summarize_reports(const std::vector<ShadowReport>& reports) {
  std::ostringstream out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    std::map<std::string, std::string> f(r.fields.begin(), r.fields.end());
    if (i) out << "; ";
    for (const char* key : {"n", "g", "m", "r"})
      if (f.count(key)) out << key << "=" << f[key] << " ";
    if (f.count("closure_order")) out << "orders " << f["closure_order"] << "/" << f["filter_order"];
    if (f.count("generated_order")) out << "orders " << f["generated_order"] << "/" << f["filter_order"];
    if (!r.pass) out << " FAIL " << r.divergence;
  }
  return out.str();
}

inline std::string require_reports(const std::vector<ShadowReport>& reports) {
  const std::string s = summarize_reports(reports);
  for (const auto& r : reports) detail::require(r.pass, s);
  return s;
}

/// Criterion 5: level m recovered from level 2m, shadows mod 2m.
inline std::string check_thm41(const SuiteOptions& opts) {
  std::vector<std::pair<int, std::uint32_t>> cases{{3, 2}, {3, 3}};
  if (!opts.quick) cases.insert(cases.end(), {{3, 4}, {4, 2}, {5, 2}});
  std::vector<ShadowReport> reports;
  for (auto [n, m] : cases) reports.push_back(shadow_check_thm41(n, m, 0, opts.element_cap));
  if (opts.heavy) reports.push_back(shadow_check_thm41(3, 2, 8, opts.element_cap));
  return require_reports(reports);
}

/// Criterion 6: power-of-two levels, shadows mod 2^{r+1}.
inline std::string check_lemma42(const SuiteOptions& opts) {
  std::vector<std::pair<int, unsigned>> cases{{3, 1}};
  if (!opts.quick) cases.insert(cases.end(), {{3, 2}, {4, 1}});
  std::vector<ShadowReport> reports;
  for (auto [n, r] : cases) reports.push_back(shadow_check_lemma42(n, r, opts.element_cap));
  return require_reports(reports);
}

/// Criterion 7: Mennicke shadows and the filter count 2^{2g^2+g}.
inline std::string check_mennicke(const SuiteOptions& opts) {
  std::vector<ShadowReport> reports{shadow_check_mennicke(1, 2, opts.element_cap), shadow_check_mennicke(1, 3, opts.element_cap)};
  const auto filter_size = [](const ShadowReport& r) {
    for (const auto& [k, v] : r.fields)
      if (k == "filter_order") return v;
    return std::string{};
  };
  detail::require(filter_size(reports[0]) == "8", "g=1 m=2 filter is not 8");
  detail::require(filter_size(reports[1]) == "6", "g=1 m=3 filter is not 6");
  if (!opts.quick) {
    reports.push_back(shadow_check_mennicke(2, 2, opts.element_cap));
    detail::require(filter_size(reports[2]) == "1024", "g=2 m=2 filter is not 1024");
  }
  return require_reports(reports);
}

/// Criterion 8: S_x postconditions, kernel_factorize round trips, displacement injectivity.
inline std::string check_kernel_construction(const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed + 8);
  std::uniform_int_distribution<int> d(-4, 4);
  const std::size_t samples = opts.quick ? 20 : 100;
  std::size_t done = 0;
  for (int m = 1; m <= 3; ++m) {
    const StabilizerContext ctx = StabilizerContext::standard(2, m);
    std::map<std::vector<std::string>, std::string> seen;
    for (std::size_t k = 0; k < samples; ++k) {
      LatticeVector z(4);
      for (std::size_t i = 0; i < 4; ++i) z[i] = d(rng);
      const LatticeVector x = z - ctx.form()(z, ctx.w()) * ctx.v();
      const MatZ s = build_S_x(ctx, x);
      detail::require(kernel_membership_error(ctx, s).empty(), "S_x not in K: " + kernel_membership_error(ctx, s));
      detail::require(s * ctx.v() - ctx.v() == BigInt(m) * x, "S_x v - v != m x");
      const KernelCertificate cert = kernel_factorize(ctx, s);
      detail::require(cert.product(ctx.form()) == s, "kernel_factorize does not round-trip");
      std::vector<std::string> key;
      for (const auto& e : s.entries()) key.push_back(e.str());
      const auto [it, fresh] = seen.emplace(key, x.to_string());
      detail::require(fresh || it->second == x.to_string(), "distinct x give the same S_x");
      ++done;
    }
  }
  return std::to_string(done) + " S_x samples (g=2, m=1..3)";
}

/// Criterion 9: certificates for T_x^{2m} verify, and their mod-2m images lie in
/// the normal closure of rho(sigma_1)^m.
inline std::string check_certificates(const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed + 9);
  const int max_n = opts.quick ? 5 : 6;
  const int max_m = opts.quick ? 2 : 3;
  const std::size_t samples = opts.quick ? 10 : 200;
  SearchOptions search{opts.seed, opts.search_budget};
  FactorStats stats;
  std::size_t certs = 0, shadowed = 0, factors = 0;
  for (int n = 2; n <= max_n; ++n) {
    for (int m = 1; m <= max_m; ++m) {
      std::optional<GroupEnumeration> ambient, closure;
      const auto modulus = static_cast<std::uint32_t>(2 * m);
      if (n <= 5 && m <= 2) {
        ambient.emplace(gamma_mod(n, modulus, opts.element_cap));
        closure.emplace(normal_closure(*ambient, {reduce_mod(integral_burau(BraidWord::generator(n, 1, m)), modulus)}));
      }
      for (std::size_t k = 0; k < samples; ++k) {
        const LatticeVector x = detail::random_c_vector(rng, n, 5);
        FactorCertificate cert;
        try {
          cert = factor_T2m(n, m, x, search, &stats);
        } catch (const BudgetExceeded& e) {
          throw detail::Failure{"n=" + std::to_string(n) + " m=" + std::to_string(m) + " x=" + x.to_string() + ": " + e.what()};
        } catch (const std::logic_error& e) {
          throw detail::Failure{"n=" + std::to_string(n) + " m=" + std::to_string(m) + " x=" + x.to_string() + ": " + e.what()};
        }
        const VerifyResult v = verify_certificate(cert);
        detail::require(v.ok, "verification failed: " + v.report);
        ++certs;
        factors += cert.factors.size();
        if (closure) {
          MatMod product = MatMod::identity(static_cast<std::size_t>(n), modulus);
          for (const auto& f : cert.factors) {
            const MatMod fm = reduce_mod(factor_matrix(n, f), modulus);
            detail::require(closure->contains(fm), "factor outside the normal closure mod 2m");
            product = product * fm;
          }
          detail::require(closure->contains(product), "certificate image outside the normal closure mod 2m");
          ++shadowed;
        }
      }
    }
  }
  const double avg_ms = stats.orbit_searches ? 1000.0 * stats.orbit_seconds / static_cast<double>(stats.orbit_searches) : 0.0;
  detail::require(avg_ms < 50.0, "average orbit search time " + std::to_string(avg_ms) + " ms exceeds 50 ms");
  return std::to_string(certs) + " certificates (" + std::to_string(factors) + " factors), " + std::to_string(shadowed) +
         " shadow-checked, " + std::to_string(stats.orbit_searches) + " orbit searches";
}

/// Criterion 10: von Dyck orders and the central quotient of B_3/B_3^m.
inline std::string check_vondyck(const SuiteOptions& opts) {
  const std::map<int, std::size_t> expected{{3, 12}, {4, 24}, {5, 60}};
  std::ostringstream out;
  for (const auto& [m, order] : expected) {
    const std::size_t vd = vondyck_order(m, opts.coset_cap);
    const std::size_t bq = braid_quotient_order(3, m, {BraidWord(3, {1, 2}).power(3)}, opts.coset_cap);
    out << (m == 3 ? "" : ", ") << "m=" << m << ": " << vd << "/" << bq;
    detail::require(vd == order && bq == order, "order mismatch: " + out.str());
  }
  return out.str();
}

/// Criterion 11: |B_n/B_n^m| / |Gamma_n mod m|.
inline std::string check_remark15(const SuiteOptions& opts) {
  std::vector<std::tuple<int, int, std::size_t>> cases{{3, 3, 1}, {3, 4, 2}, {3, 5, 5}};
  if (opts.heavy) cases.emplace_back(5, 3, 3);
  std::ostringstream out;
  bool first = true;
  for (auto [n, m, want] : cases) {
    const QuotientRatio q = remark15_ratio(n, m, opts.coset_cap, opts.element_cap);
    out << (first ? "" : ", ") << "(" << n << "," << m << "): " << q.braid_quotient << "/" << q.congruence_quotient << " = " << q.to_string();
    first = false;
    detail::require(q.is_integer(want), "ratio mismatch: " + out.str());
    if (n == 5 && m == 3) detail::require(q.congruence_quotient == 51840, "|Gamma_5 mod 3| != 51840");
  }
  return out.str();
}

/// Criterion 12: normal generation of the level m filter by rho(sigma_1)^m plus extra words.
inline std::string check_corollary(const SuiteOptions& opts) {
  std::vector<ShadowReport> reports;
  for (std::uint32_t m = 1; m <= (opts.quick ? 3u : 6u); ++m) reports.push_back(corollary_shadow(2, m, {}, opts.element_cap));
  for (std::uint32_t m = 1; m <= (opts.quick ? 2u : 4u); ++m)
    reports.push_back(corollary_shadow(3, m, {BraidWord(3, {1, 2}).power(6)}, opts.element_cap));
  if (!opts.quick) {
    const std::vector<BraidWord> extra{BraidWord(5, {1, 2}).power(6), BraidWord(5, {1, 2, 3, 4}).power(10)};
    reports.push_back(corollary_shadow(5, 2, extra, opts.element_cap));
    for (const auto& [k, v] : reports.back().fields)
      if (k.find("_integral_identity") != std::string::npos) detail::require(v == "yes", "extra word has nonidentity image");
  }
  return require_reports(reports);
}

struct SuiteCheck {
  int id;
  std::string name;
  std::function<std::string(const SuiteOptions&)> run;
};

inline std::vector<SuiteCheck> suite_checks() {
  return {
      {1, "burau braid relations", check_burau_relations},
      {2, "generators are transvections", check_transvection_form},
      {3, "lattice structure", check_lattice_structure},
      {4, "kernel words", check_kernel_words},
      {5, "level m from level 2m shadows", check_thm41},
      {6, "power-of-two level shadows", check_lemma42},
      {7, "transvection power shadows", check_mennicke},
      {8, "kernel construction", check_kernel_construction},
      {9, "transvection certificates", check_certificates},
      {10, "von Dyck quotients", check_vondyck},
      {11, "quotient order ratios", check_remark15},
      {12, "normal generation shadows", check_corollary},
  };
}

inline CheckResult run_check(const SuiteCheck& c, const SuiteOptions& opts) {
  CheckResult r{c.id, c.name, false, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = c.run(opts);
    r.pass = true;
  } catch (const detail::Failure& f) {
    r.detail = f.what;
  } catch (const BudgetExceeded& e) {
    r.detail = std::string("budget exceeded: ") + e.what();
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::vector<CheckResult> run_full_suite(const SuiteOptions& opts, const std::function<void(const CheckResult&)>& on_result = {}) {
  std::vector<CheckResult> out;
  for (const auto& c : suite_checks()) {
    out.push_back(run_check(c, opts));
    if (on_result) on_result(out.back());
  }
  return out;
}

/// One table row: "id | name | status | seconds | detail".
inline std::string format_result_row(const CheckResult& r) {
  std::ostringstream out;
  out << std::setw(2) << r.id << " | " << std::left << std::setw(30) << r.name << std::right << " | " << (r.pass ? "PASS" : "FAIL")
      << " | " << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << "s | " << r.detail;
  return out.str();
}

}  // namespace braidcong
