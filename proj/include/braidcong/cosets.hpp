#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidcong/errors.hpp"
#include "braidcong/shadows.hpp"

namespace braidcong {

inline constexpr std::size_t kDefaultCosetCap = 2'000'000;

/// Generators 1..k; a letter is +-index.
class Presentation {
 public:
  explicit Presentation(int generators) : k_(generators) {
    if (k_ < 1) throw std::invalid_argument("presentation needs at least one generator");
  }

  /// Adds a relator after free reduction; rejects relators that reduce to nothing.
  void add_relator(const std::vector<int>& word) {
    std::vector<int> r;
    for (int s : word) {
      if (s == 0 || std::abs(s) > k_) throw std::invalid_argument("relator letter out of range: " + std::to_string(s));
      if (!r.empty() && r.back() == -s) {
        r.pop_back();
      } else {
        r.push_back(s);
      }
    }
    // cyclic reduction
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
      ++lo;
      --hi;
    }
    if (lo == hi) throw std::invalid_argument("relator is trivial after free reduction");
    relators_.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
  }

  int generators() const { return k_; }
  const std::vector<std::vector<int>>& relators() const { return relators_; }

  /// One relator per line as signed generator indices; '#' starts a comment.
  /// The generator count is the largest index that occurs.
  static Presentation parse(std::istream& in) {
    std::vector<std::vector<int>> rels;
    int k = 0;
    for (std::string line; std::getline(in, line);) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream ls(line);
      std::vector<int> r;
      for (std::string tok; ls >> tok;) {
        std::size_t pos = 0;
        int v = 0;
        try {
          v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != tok.size() || v == 0) throw std::invalid_argument("presentation: bad letter '" + tok + "'");
        r.push_back(v);
        k = std::max(k, std::abs(v));
      }
      if (!r.empty()) rels.push_back(std::move(r));
    }
    if (k == 0) throw std::invalid_argument("presentation: no relators");
    Presentation p(k);
    for (const auto& r : rels) p.add_relator(r);
    return p;
  }

 private:
  int k_;
  std::vector<std::vector<int>> relators_;
};

enum class CosetStrategy { felsch, hlt };

namespace detail {
class CosetEnumerator;
}

/// Coset table for the trivial subgroup. Columns 2j and 2j+1 hold the action of
/// generator j+1 and its inverse; 0 means undefined. Cosets are numbered from 1.
class CosetTable {
 public:
  std::size_t order() const { return live_.size(); }
  bool complete() const { return complete_; }
  std::size_t defined() const { return defined_; }
  int generators() const { return k_; }
  const std::vector<std::uint32_t>& live_cosets() const { return live_; }

  /// Image of coset c under a signed letter.
  std::uint32_t act(std::uint32_t c, int letter) const { return table_[c * cols() + column(letter)]; }

  /// Every relator traced from every live coset returns to that coset.
  bool relators_consistent(const Presentation& p) const {
    if (!complete_) return false;
    for (auto c : live_) {
      for (const auto& r : p.relators()) {
        std::uint32_t x = c;
        for (int s : r) {
          x = act(x, s);
          if (x == 0) return false;
        }
        if (x != c) return false;
      }
    }
    return true;
  }

 private:
  friend class detail::CosetEnumerator;

  std::size_t cols() const { return 2 * static_cast<std::size_t>(k_); }
  static std::size_t column(int letter) { return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1) : 2 * static_cast<std::size_t>(-letter - 1) + 1; }

  int k_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> live_;
  std::size_t defined_ = 0;
  bool complete_ = false;
};

namespace detail {

class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, std::size_t cap) : p_(p), k_(p.generators()), cols_(2 * static_cast<std::size_t>(k_)), cap_(cap) {
    table_.assign(2 * cols_, 0);
    by_first_.resize(cols_);
    parent_ = {0, 1};
    next_ = 2;
    for (const auto& r : p.relators()) {
      const std::size_t len = r.size();
      for (std::size_t s = 0; s < len; ++s) {
        std::vector<int> rot(len);
        for (std::size_t i = 0; i < len; ++i) rot[i] = r[(s + i) % len];
        by_first_[col(rot[0])].push_back(rot);
        std::vector<int> inv(len);
        for (std::size_t i = 0; i < len; ++i) inv[i] = -rot[len - 1 - i];
        by_first_[col(inv[0])].push_back(inv);
      }
    }
    for (auto& list : by_first_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  void run(CosetStrategy strategy) {
    for (std::uint32_t a = 1; a < next_; ++a) {
      if (!alive(a)) continue;
      if (strategy == CosetStrategy::hlt) {
        for (const auto& r : p_.relators()) {
          if (!alive(a)) break;
          scan_and_fill(a, r);
        }
        deductions_.clear();
      }
      for (std::size_t x = 0; x < cols_ && alive(a); ++x) {
        if (at(a, x) == 0) {
          define(a, x);
          if (strategy == CosetStrategy::felsch) process_deductions();
          else deductions_.clear();
        }
      }
    }
  }

  CosetTable finish() {
    CosetTable t;
    t.k_ = k_;
    std::vector<std::uint32_t> renumber(next_, 0);
    std::uint32_t count = 0;
    for (std::uint32_t a = 1; a < next_; ++a)
      if (alive(a)) renumber[a] = ++count;
    t.table_.assign((count + 1) * cols_, 0);
    bool complete = true;
    for (std::uint32_t a = 1; a < next_; ++a) {
      if (!alive(a)) continue;
      t.live_.push_back(renumber[a]);
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::uint32_t b = at(a, x);
        if (b == 0 || !alive(b)) complete = false;
        t.table_[renumber[a] * cols_ + x] = b == 0 ? 0 : renumber[rep(b)];
      }
    }
    t.defined_ = next_ - 1;
    t.complete_ = complete;
    return t;
  }

 private:
  std::size_t col(int letter) const { return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1) : 2 * static_cast<std::size_t>(-letter - 1) + 1; }
  static std::size_t inv_col(std::size_t c) { return c ^ 1u; }
  std::uint32_t& at(std::uint32_t a, std::size_t x) { return table_[a * cols_ + x]; }
  bool alive(std::uint32_t a) const { return parent_[a] == a; }

  std::uint32_t rep(std::uint32_t a) {
    std::uint32_t r = a;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[a] != r) {
      const std::uint32_t nxt = parent_[a];
      parent_[a] = r;
      a = nxt;
    }
    return r;
  }

  void define(std::uint32_t a, std::size_t x) {
    if (next_ - 1 >= cap_) throw BudgetExceeded("coset enumeration exceeded cap " + std::to_string(cap_), next_ - 1);
    const std::uint32_t b = next_++;
    table_.resize(static_cast<std::size_t>(next_) * cols_, 0);
    parent_.push_back(b);
    at(a, x) = b;
    at(b, inv_col(x)) = a;
    deductions_.push_back({a, x});
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [a, x] = deductions_.back();
      deductions_.pop_back();
      for (const auto& w : by_first_[x]) {
        if (!alive(a)) break;
        scan(a, w);
      }
      if (!alive(a)) continue;
      const std::uint32_t b = at(a, x);
      if (b == 0 || !alive(b)) continue;
      for (const auto& w : by_first_[inv_col(x)]) {
        if (!alive(b)) break;
        scan(b, w);
      }
    }
  }

  // Scans w at coset a; records a deduction or coincidence when the scan closes.
  void scan(std::uint32_t a, const std::vector<int>& w) {
    std::uint32_t f = a;
    std::size_t i = 0;
    const std::size_t r = w.size();
    while (i < r && at(f, col(w[i])) != 0) f = at(f, col(w[i++]));
    if (i == r) {
      if (f != a) coincidence(f, a);
      return;
    }
    std::uint32_t b = a;
    std::size_t j = r;  // w[j-1] is the next letter from the back
    while (j > i && at(b, col(-w[j - 1])) != 0) b = at(b, col(-w[--j]));
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      at(f, col(w[i])) = b;
      at(b, col(-w[i])) = f;
      deductions_.push_back({f, col(w[i])});
    }
  }

  void scan_and_fill(std::uint32_t a, const std::vector<int>& w) {
    std::uint32_t f = a, b = a;
    std::size_t i = 0, j = w.size();
    for (;;) {
      while (i < j && at(f, col(w[i])) != 0) f = at(f, col(w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, col(-w[j - 1])) != 0) b = at(b, col(-w[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, col(w[i])) = b;
        at(b, col(-w[i])) = f;
        return;
      }
      define(f, col(w[i]));
    }
  }

  void merge(std::uint32_t k, std::uint32_t l, std::vector<std::uint32_t>& queue) {
    const std::uint32_t p = rep(k), q = rep(l);
    if (p == q) return;
    const std::uint32_t lo = std::min(p, q), hi = std::max(p, q);
    parent_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    std::vector<std::uint32_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::uint32_t g = queue[qi];
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::uint32_t d = at(g, x);
        if (d == 0) continue;
        at(d, inv_col(x)) = 0;
        const std::uint32_t mu = rep(g), nu = rep(d);
        if (at(mu, x) != 0) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, inv_col(x)) != 0) {
          merge(mu, at(nu, inv_col(x)), queue);
        } else {
          at(mu, x) = nu;
          at(nu, inv_col(x)) = mu;
          deductions_.push_back({mu, x});
        }
      }
    }
  }

  struct Deduction {
    std::uint32_t coset;
    std::size_t column;
  };

  const Presentation& p_;
  int k_;
  std::size_t cols_;
  std::size_t cap_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::uint32_t next_;
  std::vector<std::vector<std::vector<int>>> by_first_;  // cyclic conjugates of relators and inverses, by first letter
  std::vector<Deduction> deductions_;
};

}  // namespace detail

/// Enumerates cosets of the trivial subgroup; the live row count is the group
/// order. Throws BudgetExceeded once more than max_cosets cosets have been defined.
inline CosetTable todd_coxeter(const Presentation& p, std::size_t max_cosets = kDefaultCosetCap,
                               CosetStrategy strategy = CosetStrategy::felsch) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be at least 1");
  detail::CosetEnumerator e(p, max_cosets);
  e.run(strategy);
  CosetTable t = e.finish();
  if (!t.complete() || !t.relators_consistent(p)) throw std::logic_error("coset enumeration produced an inconsistent table");
  return t;
}

/// <x, y | x^3, y^2, (xy)^m>.
inline Presentation vondyck_presentation(int m) {
  if (m < 1) throw std::invalid_argument("von Dyck exponent must be at least 1");
  Presentation p(2);
  p.add_relator({1, 1, 1});
  p.add_relator({2, 2});
  std::vector<int> xy;
  for (int i = 0; i < m; ++i) {
    xy.push_back(1);
    xy.push_back(2);
  }
  p.add_relator(xy);
  return p;
}

/// Braid relations on n strands plus sigma_i^m for every i (equivalent to
/// sigma_1^m since the sigma_i are conjugate), plus extra relators.
inline Presentation braid_quotient_presentation(int n, int m, const std::vector<BraidWord>& extra = {}) {
  if (n < 2 || m < 1) throw std::invalid_argument("braid quotient needs n >= 2 and m >= 1");
  Presentation p(n - 1);
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j == i + 1) {
        p.add_relator({i, j, i, -j, -i, -j});
      } else {
        p.add_relator({i, j, -i, -j});
      }
    }
    p.add_relator(std::vector<int>(static_cast<std::size_t>(m), i));
  }
  for (const auto& w : extra) {
    if (w.strands() != n) throw std::invalid_argument("extra relator has the wrong strand count");
    p.add_relator(w.letters());
  }
  return p;
}

/// |<sigma_1..sigma_{n-1} | braid relations, sigma_1^m, extra>|.
inline std::size_t braid_quotient_order(int n, int m, const std::vector<BraidWord>& extra = {}, std::size_t max_cosets = kDefaultCosetCap,
                                        CosetStrategy strategy = CosetStrategy::felsch) {
  return todd_coxeter(braid_quotient_presentation(n, m, extra), max_cosets, strategy).order();
}

inline std::size_t vondyck_order(int m, std::size_t max_cosets = kDefaultCosetCap) {
  return todd_coxeter(vondyck_presentation(m), max_cosets).order();
}

struct QuotientRatio {
  std::size_t braid_quotient = 0;  // |B_n / B_n^m|
  std::size_t congruence_quotient = 0;  // |Gamma_n mod m|
  std::size_t numerator = 0;  // the ratio in lowest terms
  std::size_t denominator = 1;

  bool is_integer(std::size_t value) const { return denominator == 1 && numerator == value; }
  std::string to_string() const {
    return denominator == 1 ? std::to_string(numerator) : std::to_string(numerator) + "/" + std::to_string(denominator);
  }
};

/// |B_n / B_n^m| divided by |Gamma_n mod m| = |B_n / B_n[m]|.
inline QuotientRatio remark15_ratio(int n, int m, std::size_t max_cosets = kDefaultCosetCap, std::size_t element_cap = kDefaultElementCap) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  QuotientRatio q;
  q.braid_quotient = braid_quotient_order(n, m, {}, max_cosets);
  q.congruence_quotient = m == 1 ? 1 : gamma_mod(n, static_cast<std::uint32_t>(m), element_cap).order();
  const std::size_t g = std::gcd(q.braid_quotient, q.congruence_quotient);
  q.numerator = q.braid_quotient / g;
  q.denominator = q.congruence_quotient / g;
  return q;
}

}  // namespace braidcong
