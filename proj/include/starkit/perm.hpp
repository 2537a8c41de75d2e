#pragma once

// k-arrangements of {1..n}: the vertex labels of star-like networks.
//
// Digits are 1-based symbols; positions passed to swap_digit are 1-based as
// well (position 1 is the "first digit"). Ranks are 0-based lexicographic
// indices into P(n,k).

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "starkit/errors.hpp"

namespace starkit {

using Label = std::vector<int>;

inline constexpr int kMaxSymbols = 20;

// n! / (n-k)!, i.e. |P(n,k)|. Throws DomainError on overflow or bad range.
inline std::uint64_t arrangement_count(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("arrangement_count: need 0 <= k <= n");
  std::uint64_t r = 1;
  for (int i = n - k + 1; i <= n; ++i) {
    if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(i), &r))
      throw DomainError("arrangement_count: overflow");
  }
  return r;
}

inline std::uint64_t factorial(int n) { return arrangement_count(n, n); }

inline std::string format_label(const Label& digits) {
  std::string s;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0) s += '.';
    s += std::to_string(digits[i]);
  }
  return s;
}

// Parses "2.1.3" into {2,1,3}. Only checks syntax; see parse_arrangement for
// the distinct-digit check.
inline Label parse_label(std::string_view text) {
  Label out;
  if (text.empty()) throw DomainError("empty label");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto dot = text.find('.', pos);
    auto part = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
      throw DomainError("malformed label '" + std::string(text) + "'");
    out.push_back(value);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return out;
}

class Arrangement {
 public:
  Arrangement(Label digits, int ambient_n) : n_(ambient_n), digits_(std::move(digits)) {
    if (n_ < 1 || n_ > kMaxSymbols) throw DomainError("arrangement: ambient n out of range");
    if (digits_.empty() || static_cast<int>(digits_.size()) > n_)
      throw DomainError("arrangement: need 1 <= k <= n");
    std::uint32_t seen = 0;
    for (int d : digits_) {
      if (d < 1 || d > n_) throw DomainError("arrangement: digit out of range");
      if ((seen >> d) & 1U) throw DomainError("arrangement: repeated digit");
      seen |= 1U << d;
    }
  }

  int ambient_n() const { return n_; }
  int k() const { return static_cast<int>(digits_.size()); }
  const Label& digits() const { return digits_; }
  // 1-based position access, matching the i-digit convention.
  int digit(int position) const { return digits_.at(static_cast<std::size_t>(position - 1)); }
  int front() const { return digits_.front(); }

  bool contains(int symbol) const {
    return std::find(digits_.begin(), digits_.end(), symbol) != digits_.end();
  }

  Label prefix(int length) const {
    return Label(digits_.begin(), digits_.begin() + std::min(length, k()));
  }
  Label suffix(int from_position) const {
    return Label(digits_.begin() + std::min(from_position - 1, k()), digits_.end());
  }

  // Symbols of {1..n} not used by this arrangement, ascending.
  std::vector<int> unused_symbols() const {
    std::vector<int> out;
    for (int s = 1; s <= n_; ++s)
      if (!contains(s)) out.push_back(s);
    return out;
  }

  std::string to_string() const { return format_label(digits_); }

  bool operator==(const Arrangement&) const = default;
  std::strong_ordering operator<=>(const Arrangement& o) const {
    if (auto c = digits_ <=> o.digits_; c != 0) return c;
    return n_ <=> o.n_;
  }

 private:
  int n_;
  Label digits_;
};

inline Arrangement parse_arrangement(std::string_view text, int ambient_n) {
  return Arrangement(parse_label(text), ambient_n);
}

namespace detail {
inline void check_nk(int n, int k) {
  if (n < 1 || n > kMaxSymbols) throw DomainError("need 1 <= n <= 20");
  if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
}
}  // namespace detail

// All of P(n,k) in strict lexicographic order.
inline std::vector<Arrangement> enumerate_arrangements(int n, int k) {
  detail::check_nk(n, k);
  const auto total = arrangement_count(n, k);
  if (total > 50'000'000ULL) throw DomainError("enumerate_arrangements: too many arrangements");
  std::vector<Arrangement> out;
  out.reserve(static_cast<std::size_t>(total));
  Label cur;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.emplace_back(cur, n);
      return;
    }
    for (int d = 1; d <= n; ++d) {
      if (used[d]) continue;
      used[d] = true;
      cur.push_back(d);
      self(self);
      cur.pop_back();
      used[d] = false;
    }
  };
  rec(rec);
  return out;
}

inline std::uint64_t rank(const Arrangement& a) {
  const int n = a.ambient_n();
  const int k = a.k();
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < k; ++i) {
    const int d = a.digits()[static_cast<std::size_t>(i)];
    int smaller = 0;
    for (int s = 1; s < d; ++s)
      if (!((used >> s) & 1U)) ++smaller;
    // completions of the remaining k-i-1 positions from n-i-1 symbols
    r += static_cast<std::uint64_t>(smaller) * arrangement_count(n - i - 1, k - i - 1);
    used |= 1U << d;
  }
  return r;
}

inline Arrangement unrank(std::uint64_t r, int n, int k) {
  detail::check_nk(n, k);
  if (r >= arrangement_count(n, k)) throw DomainError("unrank: rank out of range");
  Label digits;
  std::uint32_t used = 0;
  for (int i = 0; i < k; ++i) {
    const auto block = arrangement_count(n - i - 1, k - i - 1);
    auto idx = r / block;
    r %= block;
    for (int s = 1; s <= n; ++s) {
      if ((used >> s) & 1U) continue;
      if (idx == 0) {
        digits.push_back(s);
        used |= 1U << s;
        break;
      }
      --idx;
    }
  }
  return Arrangement(std::move(digits), n);
}

// Exchange the first digit with the digit at 1-based position i (2 <= i <= k).
inline Arrangement swap_digit(const Arrangement& a, int position) {
  if (position < 2 || position > a.k()) throw DomainError("swap_digit: position must be in 2..k");
  Label d = a.digits();
  std::swap(d[0], d[static_cast<std::size_t>(position - 1)]);
  return Arrangement(std::move(d), a.ambient_n());
}

// Replace the first digit by an unused symbol.
inline Arrangement replace_first(const Arrangement& a, int symbol) {
  if (symbol < 1 || symbol > a.ambient_n()) throw DomainError("replace_first: symbol out of range");
  if (a.contains(symbol)) throw DomainError("replace_first: symbol already used");
  Label d = a.digits();
  d[0] = symbol;
  return Arrangement(std::move(d), a.ambient_n());
}

enum class Parity { even, odd };

inline Parity parity(const Arrangement& p) {
  if (p.k() != p.ambient_n()) throw DomainError("parity: needs a full permutation");
  const auto& d = p.digits();
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (d[i] > d[j]) ++inversions;
  return inversions % 2 == 0 ? Parity::even : Parity::odd;
}

}  // namespace starkit
