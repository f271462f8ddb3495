#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace solqsol {

// Fixed-universe bitset used for element sets (subgroups) and lattice rows.
// The canonical total order compares the ascending member sequences
// lexicographically, so {0,5} sorts before {1,2}.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  // Allocation-free intersection into a reusable buffer.
  static void and_into(Bitset& dst, const Bitset& a, const Bitset& b) {
    dst.n_ = a.n_;
    dst.w_.resize(a.w_.size());
    for (std::size_t i = 0; i < a.w_.size(); ++i) dst.w_[i] = a.w_[i] & b.w_[i];
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // -1 / 0 / +1; the set whose smallest non-shared member is smaller wins.
  static int compare(const Bitset& a, const Bitset& b) {
    for (std::size_t i = 0; i < a.w_.size(); ++i) {
      std::uint64_t x = a.w_[i] ^ b.w_[i];
      if (x) {
        std::uint64_t low = x & (~x + 1);
        return (a.w_[i] & low) ? -1 : 1;
      }
    }
    return 0;
  }

  int lowest() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }
  int highest() const {
    for (std::size_t i = w_.size(); i-- > 0;)
      if (w_[i]) return static_cast<int>(i * 64 + 63 - std::countl_zero(w_[i]));
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  template <typename F>
  void for_each(F f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(n_);
    for (auto w : w_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

struct BitsetCanonicalLess {
  // (cardinality, member-sequence) ascending.
  bool operator()(const Bitset& a, const Bitset& b) const {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return Bitset::compare(a, b) < 0;
  }
};

}  // namespace solqsol
