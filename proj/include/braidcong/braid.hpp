#pragma once

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcong {

/// A word in the Artin generators sigma_1..sigma_{n-1} of B_n. Letters are
/// stored one per generator occurrence as signed indices: +i is sigma_i and
/// -i is sigma_i^{-1}. Words are never rewritten with braid relations.
class BraidWord {
 public:
  explicit BraidWord(int strands = 2) : n_(strands) {
    if (strands < 2) throw std::invalid_argument("a braid word needs at least 2 strands");
  }

  BraidWord(int strands, std::vector<int> letters) : BraidWord(strands) {
    for (int s : letters) check_letter(s);
    letters_ = std::move(letters);
  }

  /// sigma_index^exponent as |exponent| letters.
  static BraidWord generator(int strands, int index, int exponent = 1) {
    return BraidWord(strands, std::vector<int>(static_cast<std::size_t>(std::abs(exponent)), exponent < 0 ? -index : index));
  }

  int strands() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(int signed_letter) {
    check_letter(signed_letter);
    letters_.push_back(signed_letter);
  }

  BraidWord inverse() const {
    BraidWord r(n_);
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(-*it);
    return r;
  }

  /// w^k for any integer k (k < 0 uses the formal inverse).
  BraidWord power(int k) const {
    const BraidWord base = k < 0 ? inverse() : *this;
    BraidWord r(n_);
    for (int i = 0; i < std::abs(k); ++i) r.letters_.insert(r.letters_.end(), base.letters_.begin(), base.letters_.end());
    return r;
  }

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("strand count mismatch");
    BraidWord r = a;
    r.letters_.insert(r.letters_.end(), b.letters_.begin(), b.letters_.end());
    return r;
  }

  friend bool operator==(const BraidWord& a, const BraidWord& b) { return a.n_ == b.n_ && a.letters_ == b.letters_; }
  friend bool operator!=(const BraidWord& a, const BraidWord& b) { return !(a == b); }

  /// Text form "n: s1 s2 ..." with signed indices, e.g. "4: 1 2 -3 1".
  std::string to_string() const {
    std::ostringstream out;
    out << n_ << ':';
    for (int s : letters_) out << ' ' << s;
    return out.str();
  }

  /// Display form with runs compressed, e.g. "s1^2 s2^-1"; "e" for the empty word.
  std::string pretty() const {
    if (letters_.empty()) return "e";
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < letters_.size()) {
      const int g = std::abs(letters_[i]);
      int power = 0;
      std::size_t j = i;
      while (j < letters_.size() && std::abs(letters_[j]) == g && (letters_[j] > 0) == (letters_[i] > 0)) {
        power += letters_[j] > 0 ? 1 : -1;
        ++j;
      }
      if (!first) out << ' ';
      out << 's' << g;
      if (power != 1) out << '^' << power;
      first = false;
      i = j;
    }
    return out.str();
  }

  /// Parses "n: s1 s2 ...". Letters may be separated by spaces or commas.
  static BraidWord parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("braid word must look like 'n: s1 s2 ...'");
    const int n = parse_int(text.substr(0, colon), "strand count");
    return BraidWord(n, parse_letters(text.substr(colon + 1)));
  }

  /// Parses a bare list of signed indices ("1 2 -1" or "1,2,-1").
  static std::vector<int> parse_letters(const std::string& text) {
    std::string cleaned = text;
    for (char& c : cleaned)
      if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
      const int v = parse_int(tok, "generator");
      if (v == 0) throw std::invalid_argument("generator index 0 is not allowed");
      out.push_back(v);
    }
    return out;
  }

 private:
  static int parse_int(const std::string& tok, const char* what) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("malformed ") + what + ": '" + tok + "'");
    }
    while (pos < tok.size() && (tok[pos] == ' ' || tok[pos] == '\t')) ++pos;
    if (pos != tok.size()) throw std::invalid_argument(std::string("malformed ") + what + ": '" + tok + "'");
    return v;
  }

  void check_letter(int s) const {
    if (s == 0 || std::abs(s) > n_ - 1)
      throw std::invalid_argument("generator index " + std::to_string(std::abs(s)) + " out of range for " +
                                  std::to_string(n_) + " strands");
  }

  int n_;
  std::vector<int> letters_;
};

/// Cancels adjacent s s^{-1} pairs until none remain (single stack pass).
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.length());
  for (int s : w.letters()) {
    if (!out.empty() && out.back() == -s) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return BraidWord(w.strands(), std::move(out));
}

/// g h g^{-1}, freely reduced.
inline BraidWord conjugate_word(const BraidWord& g, const BraidWord& h) {
  if (g.strands() != h.strands()) throw std::invalid_argument("strand count mismatch");
  return free_reduce(g * h * g.inverse());
}

/// The homomorphism B_4 -> B_3 sending sigma_1, sigma_3 to sigma_1 and sigma_2 to sigma_2.
inline BraidWord special_hom_phi(const BraidWord& w) {
  if (w.strands() != 4) throw std::invalid_argument("special homomorphism is defined on 4-strand words");
  std::vector<int> out;
  out.reserve(w.length());
  for (int s : w.letters()) {
    const int g = std::abs(s) == 3 ? 1 : std::abs(s);
    out.push_back(s > 0 ? g : -g);
  }
  return free_reduce(BraidWord(3, std::move(out)));
}

/// Standard inclusion B_k -> B_n on the first k strands.
inline BraidWord include(const BraidWord& w, int n) {
  if (n < w.strands()) throw std::invalid_argument("cannot include a braid into fewer strands");
  return BraidWord(n, w.letters());
}

}  // namespace braidcong
