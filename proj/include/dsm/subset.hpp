#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace dsm {

// Subset of a ground set {0, ..., p-1}, stored as a block bitset.
class Subset {
 public:
  Subset() : p_(0) {}
  explicit Subset(int universe_size)
      : p_(universe_size), bits_((universe_size + 63) / 64, 0) {
    if (universe_size < 0) throw std::invalid_argument("negative universe");
  }

  static Subset of(int universe_size, std::initializer_list<int> elems) {
    Subset s(universe_size);
    for (int e : elems) s.add(e);
    return s;
  }

  // Low 64 bits interpreted as a membership mask (p <= 64 only).
  static Subset from_mask(int universe_size, std::uint64_t mask) {
    Subset s(universe_size);
    if (!s.bits_.empty()) s.bits_[0] = mask;
    return s;
  }

  int universe_size() const { return p_; }

  bool contains(int e) const {
    check(e);
    return (bits_[e >> 6] >> (e & 63)) & 1u;
  }

  void add(int e) {
    check(e);
    bits_[e >> 6] |= std::uint64_t(1) << (e & 63);
  }

  void remove(int e) {
    check(e);
    bits_[e >> 6] &= ~(std::uint64_t(1) << (e & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : bits_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : bits_) if (w) return false;
    return true;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t b = 0; b < bits_.size(); ++b) {
      std::uint64_t w = bits_[b];
      while (w) {
        int bit = __builtin_ctzll(w);
        out.push_back(static_cast<int>(b * 64) + bit);
        w &= w - 1;
      }
    }
    return out;
  }

  Subset with(int e) const {
    Subset s = *this;
    s.add(e);
    return s;
  }

  Subset without(int e) const {
    Subset s = *this;
    s.remove(e);
    return s;
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.p_ == b.p_ && a.bits_ == b.bits_;
  }

 private:
  void check(int e) const {
    if (e < 0 || e >= p_) throw std::out_of_range("element outside ground set");
  }

  int p_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace dsm
