#pragma once

// Closed-form h-super connectivity values. All arithmetic is exact 64-bit
// integer arithmetic with overflow checks.

#include <cstdint>
#include <string>

#include "starkit/errors.hpp"
#include "starkit/perm.hpp"

namespace starkit {

enum class Measure { kappa, lambda };

inline std::string to_string(Measure m) { return m == Measure::kappa ? "kappa" : "lambda"; }

inline Measure parse_measure(const std::string& s) {
  if (s == "kappa") return Measure::kappa;
  if (s == "lambda") return Measure::lambda;
  throw DomainError("unknown measure '" + s + "'");
}

// Which closed form produced a value. The printed ids are a stable CLI contract.
enum class Branch {
  low_h_vertex,    // n + h(k-2) - 1
  low_h_edge_min,  // (n-h-1)(h+1)
  low_h_edge_flat, // (n-k+1)(k-1)
  split_bound,     // (h+1)!(n-h-1)/(n-k)!
  star,            // (h+1)!(n-h-1)
  alternating,     // (h+1)!(n-h-1)/2
};

inline std::string to_string(Branch b) {
  switch (b) {
    case Branch::low_h_vertex: return "eq1_1";
    case Branch::low_h_edge_min: return "eq1_2_low";
    case Branch::low_h_edge_flat: return "eq1_2_high";
    case Branch::split_bound: return "eq3_5";
    case Branch::star: return "lemma2_1";
    case Branch::alternating: return "cor3_5";
  }
  return "?";
}

struct FormulaResult {
  std::uint64_t value = 0;
  Branch branch = Branch::split_bound;
  bool operator==(const FormulaResult&) const = default;
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("formula overflow");
  return r;
}

inline void check_nkh(int n, int k, int h) {
  if (n < 3 || n > kMaxSymbols) throw DomainError("need 3 <= n <= 20");
  if (k < 2 || k > n - 1) throw DomainError("need 2 <= k <= n-1 (k = 1 is complete; no cut exists)");
  if (h < 0 || h > n - 2) throw DomainError("need 0 <= h <= n-2");
}

// (h+1)!(n-h-1)/(n-k)!, valid when n-k <= h <= n-2.
inline std::uint64_t split_bound_value(int n, int k, int h) {
  const auto num = factorial(h + 1);
  const auto den = factorial(n - k);
  if (num % den != 0) throw StructureError("(h+1)!/(n-k)! is not integral");
  return checked_mul(num / den, static_cast<std::uint64_t>(n - h - 1));
}

inline std::uint64_t low_h_vertex_value(int n, int k, int h) {
  return static_cast<std::uint64_t>(n + h * (k - 2) - 1);
}

inline FormulaResult low_h_edge(int n, int k, int h) {
  // h <= min{k-2, n/2 - 1}, with n/2 - 1 compared exactly as 2h <= n-2
  if (h <= k - 2 && 2 * h <= n - 2)
    return {static_cast<std::uint64_t>((n - h - 1) * (h + 1)), Branch::low_h_edge_min};
  return {static_cast<std::uint64_t>((n - k + 1) * (k - 1)), Branch::low_h_edge_flat};
}

}  // namespace detail

// kappa_s^(h)(S_{n,k}). At h = n-k both regimes are evaluated and must agree;
// the reported branch is then the split bound.
inline FormulaResult kappa_nkstar_formula(int n, int k, int h) {
  detail::check_nkh(n, k, h);
  if (h < n - k) return {detail::low_h_vertex_value(n, k, h), Branch::low_h_vertex};
  const auto high = detail::split_bound_value(n, k, h);
  if (h == n - k && detail::low_h_vertex_value(n, k, h) != high)
    throw StructureError("vertex formulas disagree at h = n-k");
  return {high, Branch::split_bound};
}

inline FormulaResult lambda_nkstar_formula(int n, int k, int h) {
  detail::check_nkh(n, k, h);
  if (h < n - k) return detail::low_h_edge(n, k, h);
  const auto high = detail::split_bound_value(n, k, h);
  if (h == n - k && detail::low_h_edge(n, k, h).value != high)
    throw StructureError("edge formulas disagree at h = n-k");
  return {high, Branch::split_bound};
}

inline FormulaResult nkstar_formula(Measure m, int n, int k, int h) {
  return m == Measure::kappa ? kappa_nkstar_formula(n, k, h) : lambda_nkstar_formula(n, k, h);
}

// Star graph S_n, both measures.
inline FormulaResult star_formula(int n, int h) {
  if (n < 2 || n > kMaxSymbols) throw DomainError("need 2 <= n <= 20");
  if (h < 0 || h > n - 2) throw DomainError("need 0 <= h <= n-2");
  return {detail::checked_mul(factorial(h + 1), static_cast<std::uint64_t>(n - h - 1)), Branch::star};
}

// Alternating group network AN_n. For h in {0,1} the value comes from the
// S_{n,n-2} low-h formulas of the requested measure.
inline FormulaResult an_formula(int n, int h, Measure m = Measure::kappa) {
  if (n < 4 || n > kMaxSymbols) throw DomainError("need 4 <= n <= 20");
  if (h < 0 || h > n - 2) throw DomainError("need 0 <= h <= n-2");
  if (h < 2) return nkstar_formula(m, n, n - 2, h);
  const auto v = detail::checked_mul(factorial(h + 1), static_cast<std::uint64_t>(n - h - 1));
  if (v % 2 != 0) throw StructureError("alternating network value not integral");
  return {v / 2, Branch::alternating};
}

}  // namespace starkit
