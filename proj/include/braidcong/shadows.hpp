#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "braidcong/braid.hpp"
#include "braidcong/burau.hpp"
#include "braidcong/enumeration.hpp"
#include "braidcong/form.hpp"
#include "braidcong/lattice.hpp"
#include "braidcong/matmod.hpp"

namespace braidcong {

/// Key/value report with a PASS/FAIL verdict.
struct ShadowReport {
  std::string check;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> fields;
  std::string divergence;  // set on FAIL

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }

  std::string to_text() const {
    std::ostringstream out;
    out << "check: " << check << '\n';
    for (const auto& [k, v] : fields) out << k << ": " << v << '\n';
    if (!divergence.empty()) out << "divergence: " << divergence << '\n';
    out << "status: " << (pass ? "PASS" : "FAIL") << '\n';
    return out.str();
  }
};

/// rho_n(sigma_i) mod l, labelled s1..s{n-1}.
inline std::vector<Generator> braid_generators_mod(int n, std::uint32_t modulus) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  std::vector<Generator> gens;
  for (int i = 1; i < n; ++i)
    gens.push_back({"s" + std::to_string(i), reduce_mod(integral_burau(BraidWord::generator(n, i)), modulus)});
  return gens;
}

/// Gamma_n mod l.
inline GroupEnumeration gamma_mod(int n, std::uint32_t modulus, std::size_t cap = kDefaultElementCap) {
  return enumerate(braid_generators_mod(n, modulus), cap);
}

/// Transvections T_u for u in {e_k} and {e_k + e_l}; these generate Sp_{2g}(Z).
inline std::vector<Generator> symplectic_generators_mod(std::size_t genus, std::uint32_t modulus) {
  const AlternatingForm f = AlternatingForm::standard(genus);
  const std::size_t d = 2 * genus;
  std::vector<Generator> gens;
  for (std::size_t k = 1; k <= d; ++k)
    gens.push_back({"T(e" + std::to_string(k) + ")", reduce_mod(f.transvection(LatticeVector::e(d, k)), modulus)});
  for (std::size_t k = 1; k <= d; ++k)
    for (std::size_t l = k + 1; l <= d; ++l)
      gens.push_back({"T(e" + std::to_string(k) + "+e" + std::to_string(l) + ")",
                      reduce_mod(f.transvection(LatticeVector::e(d, k) + LatticeVector::e(d, l)), modulus)});
  return gens;
}

inline GroupEnumeration symplectic_mod(std::size_t genus, std::uint32_t modulus, std::size_t cap = kDefaultElementCap) {
  return enumerate(symplectic_generators_mod(genus, modulus), cap);
}

/// |Sp_{2g}(Z/N)| = N^{2g^2+g} prod_{p | N} prod_{i=1}^{g} (1 - p^{-2i}).
inline BigInt symplectic_order_formula(std::size_t genus, std::uint32_t modulus) {
  BigInt order = 1;
  for (std::size_t k = 0; k < 2 * genus * genus + genus; ++k) order *= modulus;
  std::uint32_t rest = modulus;
  for (std::uint32_t p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    for (std::size_t i = 1; i <= genus; ++i) {
      BigInt pp = 1;
      for (std::size_t k = 0; k < 2 * i; ++k) pp *= p;
      order = order / pp * (pp - 1);
    }
  }
  return order;
}

namespace detail {

inline std::string flatten(std::string s) {
  for (auto& ch : s)
    if (ch == '\n') ch = ';';
  if (!s.empty() && s.back() == ';') s.pop_back();
  return s;
}

/// Adds each candidate as a generator unless it is already in the group.
inline GroupEnumeration generated_subgroup(std::size_t n, std::uint32_t modulus, const std::vector<Generator>& candidates,
                                           std::size_t cap) {
  GroupEnumeration h = GroupEnumeration::trivial(n, modulus, cap);
  for (const auto& g : candidates)
    if (!h.contains(g.matrix)) h.add_generators({g});
  return h;
}

/// Compares subgroup h with the elements of `ambient` at `indices`; fills the
/// report and returns true on equality.
inline bool compare_with_subset(const GroupEnumeration& ambient, const std::vector<std::size_t>& indices, const GroupEnumeration& h,
                                ShadowReport& report, const std::string& h_name, const std::string& set_name) {
  report.add(h_name + "_order", h.order());
  report.add(set_name + "_order", indices.size());
  std::unordered_set<std::string> in_set;
  for (auto idx : indices) in_set.insert(ambient.element(idx).encode());
  for (std::size_t i = 0; i < h.order(); ++i) {
    if (!in_set.count(h.element(i).encode())) {
      report.divergence = "element of " + h_name + " outside " + set_name + ", word " + h.witness_string(i) + ", matrix " +
                          flatten(format_matrix(h.element(i)));
      return false;
    }
  }
  for (auto idx : indices) {
    if (!h.contains(ambient.element(idx))) {
      report.divergence = "element of " + set_name + " outside " + h_name + ", word " + ambient.witness_string(idx) + ", matrix " +
                          flatten(format_matrix(ambient.element(idx)));
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Inside Gamma_n mod l (2m | l): <normal closure of rho(sigma_1)^m, filter(2m)>
/// equals filter(m).
inline ShadowReport shadow_check_level(const std::string& name, int n, std::uint32_t m, std::uint32_t modulus,
                                       std::size_t cap = kDefaultElementCap) {
  if (m < 1 || modulus % (2 * m) != 0) throw std::invalid_argument(name + ": modulus must be a multiple of 2m");
  ShadowReport report{name, false, {}, {}};
  report.add("n", std::to_string(n));
  report.add("m", std::to_string(m));
  report.add("modulus", std::to_string(modulus));
  const GroupEnumeration ambient = gamma_mod(n, modulus, cap);
  report.add("ambient_order", ambient.order());
  std::vector<MatMod> seeds{reduce_mod(integral_burau(BraidWord::generator(n, 1, static_cast<int>(m))), modulus)};
  if (modulus != 2 * m)
    for (auto idx : congruence_filter(ambient, 2 * m)) seeds.push_back(ambient.element(idx));
  const GroupEnumeration closure = normal_closure(ambient, seeds);
  const auto filter = congruence_filter(ambient, m);
  report.pass = detail::compare_with_subset(ambient, filter, closure, report, "closure", "filter");
  return report;
}

/// Closure of rho(sigma_1)^m together with the level 2m filter versus the level m filter; default modulus 2m.
inline ShadowReport shadow_check_thm41(int n, std::uint32_t m, std::uint32_t modulus = 0, std::size_t cap = kDefaultElementCap) {
  return shadow_check_level("thm41", n, m, modulus == 0 ? 2 * m : modulus, cap);
}

/// Power-of-two level m = 2^r, checked mod 2^{r+1}.
inline ShadowReport shadow_check_lemma42(int n, unsigned r, std::size_t cap = kDefaultElementCap) {
  if (r < 1 || r > 15) throw std::invalid_argument("lemma42: r must be in 1..15");
  const std::uint32_t m = 1u << r;
  ShadowReport rep = shadow_check_level("lemma42", n, m, 2 * m, cap);
  rep.fields.insert(rep.fields.begin() + 1, {"r", std::to_string(r)});
  return rep;
}

/// Mennicke shadow inside Sp_{2g}(Z/2m): <T_u^m : u> equals filter(m); the
/// subgroup <T_u^m : u perp w> (w = a_1) lies in filter(m) intersected with the
/// stabilizer of w.
inline ShadowReport shadow_check_mennicke(std::size_t genus, std::uint32_t m, std::size_t cap = kDefaultElementCap) {
  if (genus < 1 || m < 1) throw std::invalid_argument("mennicke: need g >= 1 and m >= 1");
  const std::uint32_t modulus = 2 * m;
  ShadowReport report{"mennicke", false, {}, {}};
  report.add("g", std::to_string(genus));
  report.add("m", std::to_string(m));
  report.add("modulus", std::to_string(modulus));
  const std::size_t d = 2 * genus;
  const GroupEnumeration ambient = symplectic_mod(genus, modulus, cap);
  report.add("ambient_order", ambient.order());
  report.add("ambient_order_formula", symplectic_order_formula(genus, modulus).str());

  const AlternatingForm f = AlternatingForm::standard(genus);
  std::vector<Generator> all, perp;
  std::unordered_set<std::string> seen_all, seen_perp;
  std::vector<std::uint32_t> u(d, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < d && ++u[k] == modulus) u[k++] = 0;
    if (k == d) break;
    LatticeVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = u[i];
    const MatMod t = reduce_mod(mat_pow(f.transvection(v), m), modulus);
    if (t.is_identity()) continue;
    const std::string key = t.encode();
    const std::string label = "T" + v.to_string() + "^" + std::to_string(m);
    if (seen_all.insert(key).second) all.push_back({label, t});
    if (u[1] == 0 && seen_perp.insert(key).second) perp.push_back({label, t});  // <u, a_1> = -u_{b_1}
  }
  const GroupEnumeration h = detail::generated_subgroup(d, modulus, all, cap);
  const auto filter = congruence_filter(ambient, m);
  report.pass = detail::compare_with_subset(ambient, filter, h, report, "generated", "filter");

  const GroupEnumeration hb = detail::generated_subgroup(d, modulus, perp, cap);
  std::vector<std::size_t> filter_w;
  for (auto idx : filter) {
    const MatMod a = ambient.element(idx);
    bool fixes = true;  // A e_1 == e_1
    for (std::size_t i = 0; i < d; ++i) fixes = fixes && a(i, 0) == (i == 0 ? 1u : 0u);
    if (fixes) filter_w.push_back(idx);
  }
  report.add("perp_generated_order", hb.order());
  report.add("filter_stabilizer_order", filter_w.size());
  std::unordered_set<std::string> fw;
  for (auto idx : filter_w) fw.insert(ambient.element(idx).encode());
  bool inclusion = true;
  for (std::size_t i = 0; i < hb.order() && inclusion; ++i) {
    if (!fw.count(hb.element(i).encode())) {
      inclusion = false;
      if (report.divergence.empty())
        report.divergence = "perp-generated element outside filter stabilizer, word " + hb.witness_string(i);
    }
  }
  report.add("perp_inclusion", inclusion ? "yes" : "no");
  report.add("perp_equality", inclusion && hb.order() == filter_w.size() ? "yes" : "no");
  report.pass = report.pass && inclusion;
  return report;
}

/// Main Corollary shadow: inside Gamma_n mod 2m the normal closure of
/// rho(sigma_1)^m and the extra words equals filter(m).
inline ShadowReport corollary_shadow(int n, std::uint32_t m, const std::vector<BraidWord>& extra_words,
                                     std::size_t cap = kDefaultElementCap) {
  if (m < 1) throw std::invalid_argument("corollary: m must be at least 1");
  const std::uint32_t modulus = 2 * m;
  ShadowReport report{"corollary", false, {}, {}};
  report.add("n", std::to_string(n));
  report.add("m", std::to_string(m));
  report.add("modulus", std::to_string(modulus));
  const GroupEnumeration ambient = gamma_mod(n, modulus, cap);
  report.add("ambient_order", ambient.order());
  std::vector<MatMod> seeds{reduce_mod(integral_burau(BraidWord::generator(n, 1, static_cast<int>(m))), modulus)};
  for (std::size_t i = 0; i < extra_words.size(); ++i) {
    const BraidWord& w = extra_words[i];
    if (w.strands() != n) throw std::invalid_argument("corollary: extra word has the wrong strand count");
    const MatZ image = integral_burau(w);
    report.add("extra" + std::to_string(i + 1), w.pretty());
    report.add("extra" + std::to_string(i + 1) + "_integral_identity", image.is_identity() ? "yes" : "no");
    seeds.push_back(reduce_mod(image, modulus));
  }
  const GroupEnumeration closure = normal_closure(ambient, seeds);
  const auto filter = congruence_filter(ambient, m);
  report.pass = detail::compare_with_subset(ambient, filter, closure, report, "closure", "filter");
  return report;
}

}  // namespace braidcong
