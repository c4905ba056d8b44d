#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidcong/errors.hpp"
#include "braidcong/matmod.hpp"

namespace braidcong {

inline constexpr std::size_t kDefaultElementCap = 5'000'000;

struct Generator {
  std::string label;
  MatMod matrix;
};

/// A finite matrix group over Z/lZ closed by breadth-first search from its
/// generators. Elements are deduplicated by canonical byte encoding; every
/// element keeps a (parent, letter) link so a generator word reproducing it can
/// be recovered.
class GroupEnumeration {
 public:
  struct WitnessLetter {
    std::size_t generator;
    int sign;  // +1 or -1
    friend bool operator==(const WitnessLetter&, const WitnessLetter&) = default;
  };

  /// BFS closure of the generators (and their inverses). Elements are found in
  /// nondecreasing witness length, so witnesses are shortest words.
  static GroupEnumeration enumerate(std::vector<Generator> gens, std::size_t cap = kDefaultElementCap) {
    if (gens.empty()) throw std::invalid_argument("enumerate needs at least one generator");
    GroupEnumeration g(gens.front().matrix.dim(), gens.front().matrix.modulus(), cap);
    g.add_generators(std::move(gens));
    return g;
  }

  /// The trivial group of the given shape (no generators).
  static GroupEnumeration trivial(std::size_t n, std::uint32_t modulus, std::size_t cap = kDefaultElementCap) {
    return GroupEnumeration(n, modulus, cap);
  }

  std::size_t order() const { return parent_.size(); }
  std::size_t dim() const { return n_; }
  std::uint32_t modulus() const { return mod_; }
  std::size_t cap() const { return cap_; }
  const std::vector<Generator>& generators() const { return gens_; }

  MatMod element(std::size_t idx) const {
    return MatMod::decode(n_, mod_, std::string_view(reinterpret_cast<const char*>(&bytes_[idx * stride_]), stride_));
  }

  std::optional<std::size_t> find(const MatMod& m) const {
    if (m.dim() != n_ || m.modulus() != mod_) return std::nullopt;
    const std::string key = m.encode();
    const auto idx = lookup(reinterpret_cast<const std::uint8_t*>(key.data()));
    if (idx == kEmpty) return std::nullopt;
    return idx;
  }

  bool contains(const MatMod& m) const { return find(m).has_value(); }

  /// Generator word whose left-to-right product is the element.
  std::vector<WitnessLetter> witness(std::size_t idx) const {
    std::vector<WitnessLetter> out;
    while (parent_[idx] != kEmpty) {
      const std::uint32_t code = letter_[idx];
      out.push_back({code / 2, code % 2 == 0 ? 1 : -1});
      idx = parent_[idx];
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::string witness_string(std::size_t idx) const {
    const auto w = witness(idx);
    if (w.empty()) return "e";
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      out << (i ? " " : "") << gens_[w[i].generator].label;
      if (w[i].sign < 0) out << "^-1";
    }
    return out.str();
  }

  MatMod evaluate(const std::vector<WitnessLetter>& word) const {
    MatMod r = MatMod::identity(n_, mod_);
    for (const auto& l : word) r = r * (l.sign > 0 ? gens_[l.generator].matrix : inverses_[l.generator]);
    return r;
  }

  /// Adds generators and re-closes. Existing elements keep their witnesses.
  void add_generators(std::vector<Generator> gens) {
    const std::size_t first_new = gens_.size();
    for (auto& g : gens) {
      if (g.matrix.dim() != n_ || g.matrix.modulus() != mod_)
        throw std::invalid_argument("generator '" + g.label + "' has the wrong shape or modulus");
      MatMod inv = g.matrix.inverse();
      sparse_.push_back(to_sparse(g.matrix));
      sparse_.push_back(to_sparse(inv));
      inverses_.push_back(std::move(inv));
      gens_.push_back(std::move(g));
    }
    const std::size_t old_order = order();
    // Old elements have seen the old letters already; apply only the new ones.
    for (std::size_t idx = 0; idx < old_order; ++idx)
      for (std::size_t letter = 2 * first_new; letter < sparse_.size(); ++letter) step(idx, letter);
    for (std::size_t idx = old_order; idx < order(); ++idx)
      for (std::size_t letter = 0; letter < sparse_.size(); ++letter) step(idx, letter);
  }

 private:
  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

  struct SparseEntry {
    std::uint32_t row;
    std::uint32_t value;
  };
  using SparseMatrix = std::vector<std::vector<SparseEntry>>;  // per column

  GroupEnumeration(std::size_t n, std::uint32_t modulus, std::size_t cap)
      : n_(n), mod_(modulus), width_(MatMod::entry_width(modulus)), stride_(n * n * width_), cap_(cap) {
    if (cap_ == 0) throw std::invalid_argument("element cap must be positive");
    slots_.assign(1024, kEmpty);
    scratch_a_.resize(n * n);
    scratch_r_.resize(n * n);
    scratch_key_.resize(stride_);
    const std::string id = MatMod::identity(n, modulus).encode();
    insert(reinterpret_cast<const std::uint8_t*>(id.data()), kEmpty, 0);
  }

  SparseMatrix to_sparse(const MatMod& m) const {
    SparseMatrix s(n_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (m(k, j) != 0) s[j].push_back({static_cast<std::uint32_t>(k), m(k, j)});
    return s;
  }

  void decode_into(const std::uint8_t* src, std::vector<std::uint32_t>& out) const {
    for (std::size_t k = 0; k < n_ * n_; ++k) {
      std::uint32_t v = 0;
      for (std::size_t b = 0; b < width_; ++b) v |= static_cast<std::uint32_t>(src[k * width_ + b]) << (8 * b);
      out[k] = v;
    }
  }

  void encode_into(const std::vector<std::uint32_t>& in, std::uint8_t* dst) const {
    for (std::size_t k = 0; k < n_ * n_; ++k)
      for (std::size_t b = 0; b < width_; ++b) dst[k * width_ + b] = static_cast<std::uint8_t>((in[k] >> (8 * b)) & 0xffu);
  }

  // Multiplies element idx on the right by letter and records the product if new.
  void step(std::size_t idx, std::size_t letter) {
    decode_into(&bytes_[idx * stride_], scratch_a_);
    const SparseMatrix& g = sparse_[letter];
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::uint64_t s = 0;
        for (const auto& e : g[j]) s += static_cast<std::uint64_t>(scratch_a_[i * n_ + e.row]) * e.value;
        scratch_r_[i * n_ + j] = static_cast<std::uint32_t>(s % mod_);
      }
    }
    encode_into(scratch_r_, scratch_key_.data());
    if (lookup(scratch_key_.data()) == kEmpty)
      insert(scratch_key_.data(), static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(letter));
  }

  std::size_t hash_key(const std::uint8_t* key) const {
    return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(key), stride_));
  }

  std::uint32_t lookup(const std::uint8_t* key) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t h = hash_key(key) & mask;; h = (h + 1) & mask) {
      const std::uint32_t s = slots_[h];
      if (s == kEmpty) return kEmpty;
      if (std::equal(key, key + stride_, &bytes_[static_cast<std::size_t>(s) * stride_])) return s;
    }
  }

  void insert(const std::uint8_t* key, std::uint32_t parent, std::uint32_t letter) {
    if (order() >= cap_) throw BudgetExceeded("group enumeration exceeded element cap " + std::to_string(cap_), order());
    const auto idx = static_cast<std::uint32_t>(order());
    bytes_.insert(bytes_.end(), key, key + stride_);
    parent_.push_back(parent);
    letter_.push_back(letter);
    if (2 * order() > slots_.size()) {
      rehash(slots_.size() * 2);
    } else {
      place(idx);
    }
  }

  void place(std::uint32_t idx) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t h = hash_key(&bytes_[static_cast<std::size_t>(idx) * stride_]) & mask;
    while (slots_[h] != kEmpty) h = (h + 1) & mask;
    slots_[h] = idx;
  }

  void rehash(std::size_t capacity) {
    slots_.assign(capacity, kEmpty);
    for (std::size_t i = 0; i < order(); ++i) place(static_cast<std::uint32_t>(i));
  }

  std::size_t n_;
  std::uint32_t mod_;
  std::size_t width_;
  std::size_t stride_;
  std::size_t cap_;
  std::vector<Generator> gens_;
  std::vector<MatMod> inverses_;
  std::vector<SparseMatrix> sparse_;  // letter 2i = generator i, 2i+1 = its inverse
  std::vector<std::uint8_t> bytes_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> letter_;
  std::vector<std::uint32_t> slots_;
  std::vector<std::uint32_t> scratch_a_, scratch_r_;
  std::vector<std::uint8_t> scratch_key_;
};

inline GroupEnumeration enumerate(std::vector<Generator> gens, std::size_t cap = kDefaultElementCap) {
  return GroupEnumeration::enumerate(std::move(gens), cap);
}

/// Smallest subgroup of `ambient` containing the seeds and normalized by the
/// ambient generators.
inline GroupEnumeration normal_closure(const GroupEnumeration& ambient, const std::vector<MatMod>& seeds) {
  GroupEnumeration h = GroupEnumeration::trivial(ambient.dim(), ambient.modulus(), ambient.cap());
  std::vector<Generator> pending;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (!ambient.contains(seeds[i])) throw PreconditionError("normal_closure: seed " + std::to_string(i) + " is outside the ambient group");
    if (!h.contains(seeds[i])) {
      h.add_generators({{"r" + std::to_string(i), seeds[i]}});
    }
  }
  std::size_t checked = 0;  // generators of h already conjugated by every ambient generator
  while (checked < h.generators().size()) {
    const Generator s = h.generators()[checked];
    for (const auto& g : ambient.generators()) {
      for (int sign : {1, -1}) {
        const MatMod gi = g.matrix.inverse();
        const MatMod c = sign > 0 ? g.matrix * s.matrix * gi : gi * s.matrix * g.matrix;
        if (!h.contains(c)) {
          const std::string label = sign > 0 ? "(" + g.label + " " + s.label + " " + g.label + "^-1)"
                                             : "(" + g.label + "^-1 " + s.label + " " + g.label + ")";
          h.add_generators({{label, c}});
        }
      }
    }
    ++checked;
  }
  return h;
}

/// Indices of elements congruent to I modulo m (m | l).
inline std::vector<std::size_t> congruence_filter(const GroupEnumeration& g, std::uint32_t m) {
  if (m == 0 || g.modulus() % m != 0) throw std::invalid_argument("congruence_filter: level must divide the modulus");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element(i).is_identity_mod(m)) out.push_back(i);
  return out;
}

}  // namespace braidcong
