#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "braidcong/bigint.hpp"
#include "braidcong/braid.hpp"
#include "braidcong/burau.hpp"
#include "braidcong/errors.hpp"
#include "braidcong/form.hpp"
#include "braidcong/lattice.hpp"
#include "braidcong/matrix.hpp"
#include "braidcong/mutation.hpp"

namespace braidcong {

inline constexpr std::size_t kDefaultSearchBudget = 1'000'000;

/// rho(witness) T_{c_1}^exponent rho(witness)^{-1}.
struct CertificateFactor {
  BraidWord witness;
  BigInt exponent;
  friend bool operator==(const CertificateFactor&, const CertificateFactor&) = default;
};

struct FactorCertificate {
  int n = 2;
  BigInt m = 1;
  LatticeVector x;  // target is T_x^{2m}
  std::vector<CertificateFactor> factors;

  /// Header "n m l1,l2,..." (c-coordinates of x), then "EXPONENT : letters" per factor.
  std::string to_text() const {
    std::ostringstream out;
    out << n << ' ' << m << ' ';
    const VecZ lambda = x.c_coords();
    for (std::size_t i = 0; i < lambda.size(); ++i) out << (i ? "," : "") << lambda[i];
    out << '\n';
    for (const auto& f : factors) {
      out << f.exponent << " :";
      for (int s : f.witness.letters()) out << ' ' << s;
      out << '\n';
    }
    return out.str();
  }

  static FactorCertificate parse(std::istream& in) {
    FactorCertificate cert;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("certificate: missing header");
    std::istringstream header(line);
    std::string m_text, x_text, extra;
    if (!(header >> cert.n >> m_text >> x_text) || (header >> extra))
      throw std::invalid_argument("certificate: header must be 'n m l1,l2,...'");
    if (cert.n < 2) throw std::invalid_argument("certificate: n must be at least 2");
    cert.m = parse_bigint(m_text);
    VecZ lambda;
    std::istringstream xs(x_text);
    for (std::string tok; std::getline(xs, tok, ',');) lambda.push_back(parse_bigint(tok));
    if (lambda.size() != static_cast<std::size_t>(cert.n - 1))
      throw std::invalid_argument("certificate: x needs n-1 c-coordinates");
    cert.x = LatticeVector::from_c_coords(lambda);
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("certificate: factor line needs 'EXPONENT : WORD'");
      std::string e = line.substr(0, colon);
      e.erase(std::remove_if(e.begin(), e.end(), [](unsigned char ch) { return std::isspace(ch); }), e.end());
      cert.factors.push_back({BraidWord(cert.n, BraidWord::parse_letters(line.substr(colon + 1))), parse_bigint(e)});
    }
    return cert;
  }

  static FactorCertificate parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
  }
};

struct SearchOptions {
  std::uint64_t seed = 0;
  std::size_t budget = kDefaultSearchBudget;  // node expansions per orbit search
};

struct FactorStats {
  std::size_t orbit_searches = 0;
  std::size_t nodes_expanded = 0;
  double orbit_seconds = 0.0;
  std::size_t l_moves = 0;
};

/// Reverses the factor list and negates exponents.
inline std::vector<CertificateFactor> invert_factors(const std::vector<CertificateFactor>& fs) {
  std::vector<CertificateFactor> out(fs.rbegin(), fs.rend());
  for (auto& f : out) f.exponent = -f.exponent;
  return out;
}

/// Exact matrix of one factor.
inline MatZ factor_matrix(int n, const CertificateFactor& f) {
  const auto dim = static_cast<std::size_t>(n);
  const MatZ t = mat_pow(transvection(LatticeVector::c(dim, 1)), f.exponent);
  if (f.witness.empty()) return t;
  return integral_burau(f.witness) * t * integral_burau(f.witness.inverse());
}

struct VerifyResult {
  bool ok = false;
  std::string report;
  explicit operator bool() const { return ok; }
};

/// Checks exponents are nonzero multiples of m and that the exact product of
/// the factors equals T_x^{2m}.
inline VerifyResult verify_certificate(const FactorCertificate& cert) {
  const auto fail = [](std::string msg) { return VerifyResult{false, std::move(msg)}; };
  if (cert.n < 2) return fail("n must be at least 2");
  if (cert.m < 1) return fail("m must be at least 1");
  const auto dim = static_cast<std::size_t>(cert.n);
  if (cert.x.dim() != dim) return fail("x has the wrong dimension");
  if (cert.x.coordinate_sum() != 0) return fail("x is not in the zero-sum lattice");
  for (std::size_t i = 0; i < cert.factors.size(); ++i) {
    const auto& f = cert.factors[i];
    if (f.witness.strands() != cert.n) return fail("factor " + std::to_string(i) + ": witness has the wrong strand count");
    if (f.exponent == 0 || f.exponent % cert.m != 0)
      return fail("factor " + std::to_string(i) + ": exponent " + f.exponent.str() + " is not a nonzero multiple of m = " + cert.m.str());
  }
  const MatZ target = mat_pow(transvection(cert.x), 2 * cert.m);
  MatZ product = MatZ::identity(dim);
  for (const auto& f : cert.factors) product = product * factor_matrix(cert.n, f);
  if (product == target) return {true, "ok"};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (product(i, j) != target(i, j))
        return fail("product differs from T_x^{2m} at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " +
                    product(i, j).str() + " vs " + target(i, j).str());
  return fail("product differs from T_x^{2m}");
}

namespace detail {

inline BigInt lambda_at(const VecZ& lambda, int i) {  // 1-based, lambda_0 = lambda_n = 0
  if (i <= 0 || i > static_cast<int>(lambda.size())) return 0;
  return lambda[static_cast<std::size_t>(i - 1)];
}

/// A word h_i with rho(h_i) c_1 = +-c_i.
inline BraidWord c_index_word(int n, int i) {
  BraidWord h(n);
  for (int k = 1; k < i; ++k) {
    BraidWord step(n, {k, k + 1});
    h = step * h;
  }
  return h;
}

/// Maps c_{n-1} to -c_{n-1} (and so -c_{n-1} to c_{n-1}).
inline BraidWord sign_flip_word(int n) { return BraidWord(n, {n - 2, n - 1, n - 1, n - 2}); }

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace detail

/// Step one: a word g in sigma_{n-2}, sigma_{n-1} with lambda_{n-2}(rho(g) x) = 0.
/// Runs Euclid on A x = (lambda_{n-3} - lambda_{n-1}, lambda_{n-2}): sigma_{n-2}
/// sends (p, q) to (p, q - p) and sigma_{n-1} sends it to (p + q, q).
inline std::pair<BraidWord, LatticeVector> euclidean_reduce(int n, const LatticeVector& x) {
  if (n < 3) throw std::invalid_argument("euclidean_reduce needs n >= 3");
  if (x.dim() != static_cast<std::size_t>(n) || x.coordinate_sum() != 0)
    throw PreconditionError("euclidean_reduce: x is not in W_n");
  std::vector<int> applied;
  LatticeVector cur = x;
  const auto apply_move = [&](int letter, BigInt count) {
    for (; count > 0; --count) {
      apply_generator(cur, letter);
      applied.push_back(letter);
    }
  };
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 10'000) throw std::logic_error("euclidean_reduce did not terminate");
    const VecZ lambda = cur.c_coords();
    const BigInt p = detail::lambda_at(lambda, n - 3) - detail::lambda_at(lambda, n - 1);
    const BigInt q = detail::lambda_at(lambda, n - 2);
    if (q == 0) break;
    if (p == 0) {
      apply_move(n - 1, 1);
    } else if (abs(q) >= abs(p)) {
      const BigInt k = q / p;  // q - k p has |.| < |p|
      apply_move(k > 0 ? n - 2 : -(n - 2), abs(k));
    } else {
      const BigInt k = p / q;  // p - k q has |.| < |q|
      apply_move(k > 0 ? -(n - 1) : n - 1, abs(k));
    }
  }
  std::reverse(applied.begin(), applied.end());
  BraidWord g(n, std::move(applied));
  if (act(g, x) != cur) throw std::logic_error("euclidean_reduce: word does not reproduce x'");
  return {g, cur};
}

/// A word g with rho(g) y = c_{n-1}, found by best-first search over sigma_i^{+-1}.
/// Requires <y, W_n> = Z and y - c_{n-1} in 2 W_n.
inline BraidWord orbit_to_target(int n, const LatticeVector& y, const SearchOptions& opts = {}, FactorStats* stats = nullptr) {
  if (n < 3) throw std::invalid_argument("orbit_to_target needs n >= 3");
  const auto dim = static_cast<std::size_t>(n);
  if (y.dim() != dim) throw std::invalid_argument("orbit_to_target: dimension mismatch");
  BigInt g = 0;
  for (std::size_t i = 1; i < dim; ++i) g = gcd(g, form(y, LatticeVector::c(dim, i)));
  if (g != 1) throw PreconditionError("orbit_to_target: y does not pair unimodularly with W_n");
  const LatticeVector target = LatticeVector::c(dim, dim - 1);
  const LatticeVector diff = y - target;
  bool even = diff.coordinate_sum() == 0;
  for (const auto& c : diff.coords()) even = even && c % 2 == 0;
  if (!even) throw PreconditionError("orbit_to_target: y - c_{n-1} is not in 2 W_n");

  const auto started = std::chrono::steady_clock::now();
  if (stats) ++stats->orbit_searches;
  if (y == target) return BraidWord(n);
  if (y == -target) {
    BraidWord w = detail::sign_flip_word(n);
    if (act(w, y) != target) throw std::logic_error("orbit_to_target: sign flip failed");
    return w;
  }
  for (const auto& c : y.coords())
    if (!fits_i64(c) || abs(c) > (BigInt(1) << 40)) throw PreconditionError("orbit_to_target: coordinates too large for search");

  const auto& blocks = detail::integral_blocks();
  std::array<std::int64_t, 4> fwd{}, bwd{};
  for (std::size_t k = 0; k < 4; ++k) {
    fwd[k] = to_i64(blocks.forward[k]);
    bwd[k] = to_i64(blocks.backward[k]);
  }
  std::vector<int> moves;
  for (int i = 1; i < n; ++i) {
    moves.push_back(i);
    moves.push_back(-i);
  }
  std::mt19937_64 rng(opts.seed);
  if (opts.seed != 0) std::shuffle(moves.begin(), moves.end(), rng);

  using Vec = std::vector<std::int64_t>;
  using Score = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
  const std::vector<std::function<Score(const Vec&)>> scorers = {
      [](const Vec& v) {
        std::int64_t l1 = 0, mx = 0;
        for (auto a : v) {
          l1 += a < 0 ? -a : a;
          mx = std::max(mx, a < 0 ? -a : a);
        }
        return Score{l1, mx, 0};
      },
      [](const Vec& v) {
        std::int64_t l1 = 0, mx = 0, nz = 0;
        for (auto a : v) {
          l1 += a < 0 ? -a : a;
          mx = std::max(mx, a < 0 ? -a : a);
          nz += a != 0;
        }
        return Score{mx, nz, l1};
      },
  };

  Vec start(dim), tgt(dim), neg(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    start[i] = to_i64(y[i]);
    tgt[i] = to_i64(target[i]);
    neg[i] = -tgt[i];
  }
  constexpr std::int64_t kLimit = std::int64_t{1} << 60;
  std::size_t remaining = opts.budget;
  for (std::size_t attempt = 0; attempt < scorers.size(); ++attempt) {
    const std::size_t allowance = attempt + 1 == scorers.size() ? remaining : remaining / 2;
    std::size_t expanded = 0;
    std::vector<Vec> states{start};
    std::vector<std::size_t> parent{0};
    std::vector<int> via{0};
    std::unordered_map<Vec, std::size_t, detail::VecHash> seen{{start, 0}};
    using Entry = std::tuple<Score, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    frontier.emplace(scorers[attempt](start), 0);
    std::size_t found = 0;
    bool hit = false;
    while (!frontier.empty() && !hit) {
      const std::size_t cur = std::get<1>(frontier.top());
      frontier.pop();
      if (++expanded > allowance) break;
      for (int mv : moves) {
        Vec next = states[cur];
        const auto i = static_cast<std::size_t>((mv > 0 ? mv : -mv) - 1);
        const auto& b = mv > 0 ? fwd : bwd;
        const std::int64_t a0 = next[i], a1 = next[i + 1];
        if ((a0 < 0 ? -a0 : a0) > kLimit / 8 || (a1 < 0 ? -a1 : a1) > kLimit / 8) continue;
        next[i] = b[0] * a0 + b[1] * a1;
        next[i + 1] = b[2] * a0 + b[3] * a1;
        if (seen.count(next)) continue;
        const std::size_t idx = states.size();
        seen.emplace(next, idx);
        states.push_back(next);
        parent.push_back(cur);
        via.push_back(mv);
        if (next == tgt || next == neg) {
          found = idx;
          hit = true;
          break;
        }
        frontier.emplace(scorers[attempt](next), idx);
      }
    }
    if (stats) stats->nodes_expanded += std::min(expanded, allowance);
    remaining -= std::min(expanded, remaining);
    if (!hit) continue;
    // Moves applied in order m_1..m_k give the word m_k ... m_1.
    std::vector<int> letters;
    for (std::size_t s = found; s != 0; s = parent[s]) letters.push_back(via[s]);
    BraidWord w(n, std::move(letters));
    if (states[found] == neg) w = detail::sign_flip_word(n) * w;
    if (act(w, y) != target) throw std::logic_error("orbit_to_target: search produced an unverified word");
    if (stats)
      stats->orbit_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return free_reduce(w);
  }
  if (stats) stats->orbit_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  throw BudgetExceeded("orbit search exceeded node budget " + std::to_string(opts.budget), opts.budget - remaining);
}

/// The vector y_{+-} = (+-1 + 2(lambda_{n-3} - lambda_{n-1})) c_{n-1} and its multiple.
inline std::pair<LatticeVector, BigInt> step_two_y(int n, const LatticeVector& x, int sign) {
  const VecZ lambda = x.c_coords();
  const BigInt a = detail::lambda_at(lambda, n - 3);
  const BigInt b = detail::lambda_at(lambda, n - 1);
  BigInt k = sign + 2 * (a - b);
  if constexpr (active_mutation == Mutation::y_formula) k = sign + 2 * (a + b);
  return {k * LatticeVector::c(static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1)), k};
}

struct StepTwoResult {
  LatticeVector next;  // x + y
  std::vector<CertificateFactor> factors;  // T_x^{2m} = factors * T_next^{-2m}
};

/// One exchange T_x^{2m} T_{x+y}^{2m} = T_{2x+y}^m T_y^m, with T_{2x+y} moved to
/// T_{c_{n-1}} by an orbit word and T_y a direct power of T_{c_{n-1}}.
inline StepTwoResult step_two_factors(int n, const BigInt& m, const LatticeVector& x, int sign, const SearchOptions& opts = {},
                                      FactorStats* stats = nullptr) {
  if (n < 3) throw std::invalid_argument("step_two_factors needs n >= 3");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (detail::lambda_at(x.c_coords(), n - 2) != 0) throw PreconditionError("step_two_factors: lambda_{n-2} must be 0");
  const auto [y, k] = step_two_y(n, x, sign);
  const LatticeVector two_x_y = BigInt(2) * x + y;
  const LatticeVector next = x + y;

  const MatZ lhs = mat_pow(transvection(x), 2 * m) * mat_pow(transvection(next), 2 * m);
  const MatZ rhs = mat_pow(transvection(two_x_y), m) * mat_pow(transvection(y), m);
  if (lhs != rhs) throw std::logic_error("step two: transvection identity failed");

  const BraidWord g = orbit_to_target(n, two_x_y, opts, stats);
  const BraidWord h = detail::c_index_word(n, n - 1);
  BigInt ty_exponent = k * k * m;
  if constexpr (active_mutation == Mutation::certificate_exponent) ty_exponent += m;
  StepTwoResult r{next, {}};
  r.factors.push_back({free_reduce(g.inverse() * h), m});
  r.factors.push_back({h, ty_exponent});
  return r;
}

struct StepThreeResult {
  LatticeVector reduced;  // lambda_{n-2} = lambda_{n-1} = 0
  std::vector<CertificateFactor> prefix;
  std::vector<CertificateFactor> suffix;
  bool inverted = false;  // T_x^{2m} = prefix * T_reduced^{+-2m} * suffix
  std::size_t l_moves = 0;
};

/// Drives lambda_{n-1} to 0 with L-moves (x -> x + y_{+-}): one move to make it
/// even, then L_+ L_- pairs (lambda_{n-1} - 2) or L_- L_+ pairs (+2).
inline StepThreeResult step_three_normalize(int n, const BigInt& m, const LatticeVector& x, const SearchOptions& opts = {},
                                            FactorStats* stats = nullptr) {
  if (n < 3) throw std::invalid_argument("step_three_normalize needs n >= 3");
  const VecZ lambda0 = x.c_coords();
  if (detail::lambda_at(lambda0, n - 2) != 0) throw PreconditionError("step_three_normalize: lambda_{n-2} must be 0");
  const BigInt a = detail::lambda_at(lambda0, n - 3);
  const BigInt b0 = detail::lambda_at(lambda0, n - 1);
  const BigInt cap = 2 * (abs(a) + abs(b0)) + 4;

  StepThreeResult r{x, {}, {}, false, 0};
  std::vector<int> signs;
  BigInt b = b0;
  if (b % 2 != 0) {
    const int s = abs(2 * a - b + 1) <= abs(2 * a - b - 1) ? 1 : -1;
    signs.push_back(s);
    b = 2 * a - b + s;
  }
  for (; b != 0; b += b > 0 ? -2 : 2) {
    if (signs.size() > cap) break;
    if (b > 0) {
      signs.push_back(1);
      signs.push_back(-1);
    } else {
      signs.push_back(-1);
      signs.push_back(1);
    }
  }
  std::vector<CertificateFactor> suffix_rev;  // odd steps, inverted, in reverse order
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (r.l_moves >= cap) throw std::logic_error("step three: L-move cap exceeded");
    StepTwoResult st = step_two_factors(n, m, r.reduced, signs[i], opts, stats);
    ++r.l_moves;
    if (i % 2 == 0) {
      r.prefix.insert(r.prefix.end(), st.factors.begin(), st.factors.end());
    } else {
      auto inv = invert_factors(st.factors);
      suffix_rev.insert(suffix_rev.end(), inv.rbegin(), inv.rend());
    }
    r.reduced = std::move(st.next);
  }
  r.suffix.assign(suffix_rev.rbegin(), suffix_rev.rend());
  r.inverted = signs.size() % 2 == 1;
  if (stats) stats->l_moves += r.l_moves;
  const VecZ lambda = r.reduced.c_coords();
  if (detail::lambda_at(lambda, n - 1) != 0 || detail::lambda_at(lambda, n - 2) != 0)
    throw std::logic_error("step three: lambda_{n-1} was not driven to 0");
  return r;
}

namespace detail {

inline std::vector<CertificateFactor> factor_impl(int n, const BigInt& m, const LatticeVector& x, const SearchOptions& opts,
                                                  FactorStats* stats) {
  if (x.is_zero()) return {};
  if (n == 2) return {{BraidWord(2), 2 * x[0] * x[0] * m}};

  const auto [g, x1] = euclidean_reduce(n, x);
  StepThreeResult st = step_three_normalize(n, m, x1, opts, stats);

  std::vector<CertificateFactor> inner;
  if (n == 3) {
    if (!st.reduced.is_zero()) throw std::logic_error("step four: reduced vector is nonzero for n = 3");
  } else {
    const VecZ lambda = st.reduced.c_coords();
    const VecZ small_lambda(lambda.begin(), lambda.begin() + (n - 3));
    const LatticeVector small = LatticeVector::from_c_coords(small_lambda);
    for (auto& f : factor_impl(n - 2, m, small, opts, stats)) inner.push_back({include(f.witness, n), f.exponent});
    // The embedded product must be block diagonal with the small product on top.
    MatZ big = MatZ::identity(static_cast<std::size_t>(n));
    for (const auto& f : inner) big = big * factor_matrix(n, f);
    const MatZ expected = mat_pow(transvection(small), 2 * m).direct_sum_identity(2);
    if (big != expected) throw std::logic_error("step four: embedded certificate is not block diagonal");
  }
  if (st.inverted) inner = invert_factors(inner);

  std::vector<CertificateFactor> body = std::move(st.prefix);
  body.insert(body.end(), inner.begin(), inner.end());
  body.insert(body.end(), st.suffix.begin(), st.suffix.end());
  const BraidWord g_inv = g.inverse();
  for (auto& f : body) f.witness = free_reduce(g_inv * f.witness);
  return body;
}

}  // namespace detail

/// Certificate writing T_x^{2m} as a product of conjugates of T_{c_1}^{e}, m | e.
/// Verified exactly before it is returned.
inline FactorCertificate factor_T2m(int n, const BigInt& m, const LatticeVector& x, const SearchOptions& opts = {},
                                    FactorStats* stats = nullptr) {
  if (n < 2) throw std::invalid_argument("factor_T2m needs n >= 2");
  if (m < 1) throw std::invalid_argument("factor_T2m needs m >= 1");
  if (x.dim() != static_cast<std::size_t>(n) || x.coordinate_sum() != 0) throw PreconditionError("factor_T2m: x is not in W_n");
  FactorCertificate cert{n, m, x, detail::factor_impl(n, m, x, opts, stats)};
  if (auto v = verify_certificate(cert); !v) throw std::logic_error("factor_T2m: certificate failed verification: " + v.report);
  return cert;
}

}  // namespace braidcong
