#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace starkit {

// Dynamic vertex set over the universe {0, ..., universe-1}, one bit per vertex.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  template <class Range>
  static VertexSet of(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<std::size_t>(v));
    return s;
  }

  std::size_t universe() const { return universe_; }

  void insert(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(std::size_t v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  // |*this ∩ other| without materializing the intersection.
  std::size_t count_common(const VertexSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }
  bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet&) const = default;

  std::optional<std::size_t> first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return std::nullopt;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Fixed-width bit block used by the hot enumeration loops; W words of 64 bits.
template <std::size_t W>
struct FixedBits {
  std::array<std::uint64_t, W> w{};

  static FixedBits from(const VertexSet& s) {
    FixedBits b;
    const auto& src = s.words();
    for (std::size_t i = 0; i < src.size() && i < W; ++i) b.w[i] = src[i];
    return b;
  }
  static FixedBits prefix(std::size_t n) {
    FixedBits b;
    for (std::size_t i = 0; i < n; ++i) b.set(i);
    return b;
  }

  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return ((w[i >> 6] >> (i & 63)) & 1U) != 0; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool any() const {
    for (auto x : w)
      if (x != 0) return true;
    return false;
  }

  friend FixedBits operator&(const FixedBits& a, const FixedBits& b) {
    FixedBits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
  friend FixedBits operator|(const FixedBits& a, const FixedBits& b) {
    FixedBits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = a.w[i] | b.w[i];
    return r;
  }
  // a \ b
  friend FixedBits andnot(const FixedBits& a, const FixedBits& b) {
    FixedBits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = a.w[i] & ~b.w[i];
    return r;
  }
  friend std::size_t count_and(const FixedBits& a, const FixedBits& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < W; ++i)
      c += static_cast<std::size_t>(std::popcount(a.w[i] & b.w[i]));
    return c;
  }
  friend bool intersects(const FixedBits& a, const FixedBits& b) {
    for (std::size_t i = 0; i < W; ++i)
      if ((a.w[i] & b.w[i]) != 0) return true;
    return false;
  }
  bool operator==(const FixedBits&) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t x = w[i];
      while (x != 0) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }
};

}  // namespace starkit
