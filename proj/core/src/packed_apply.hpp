#pragma once

// Compiled operators on 4-bit packed monomials, used by the applied half of
// relation certification. Only usable when every exponent reached stays
// below 16 and n*k <= 16; callers fall back to the generic path otherwise.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "theta/diff_operator.hpp"

namespace theta::detail {

inline constexpr int kPackBits = 4;
inline constexpr int kPackMaxExponent = (1 << kPackBits) - 1;
inline constexpr int kPackMaxVars = 64 / kPackBits;

using PackedKey = std::uint64_t;

inline int packed_exponent(PackedKey key, int var) {
  return static_cast<int>((key >> (kPackBits * var)) & kPackMaxExponent);
}

inline PackedKey pack(const Monomial& m, int nvars) {
  PackedKey key = 0;
  for (int v = 0; v < nvars; ++v) key |= static_cast<PackedKey>(m[v]) << (kPackBits * v);
  return key;
}

struct PackedTerm {
  PackedKey mult = 0;
  PackedKey deriv = 0;
  std::int64_t coef = 0;
  std::array<std::pair<std::uint8_t, std::uint8_t>, 4> dvars{};  // (var, order)
  int ndv = 0;
};

/// Operator scaled by `den` so that every coefficient is an integer.
struct PackedOperator {
  std::vector<PackedTerm> terms;
  std::int64_t den = 1;
  int max_raise = 0;  ///< largest multiplication degree of any term
};

struct PackOverflow {};

inline std::optional<PackedOperator> compile(const DiffOperator& op) {
  const int nvars = op.shape().variables();
  if (nvars > kPackMaxVars) return std::nullopt;
  PackedOperator out;
  mpz_class den = 1;
  for (const auto& t : op.terms())
    for (const auto& c : t.coef.terms()) {
      mpz_class dd = c.coef.denominator();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), dd.get_mpz_t());
    }
  if (!den.fits_slong_p()) return std::nullopt;
  out.den = den.get_si();
  for (const auto& t : op.terms()) {
    PackedTerm base;
    for (int v = 0; v < nvars; ++v) {
      int e = t.deriv[v];
      if (e == 0) continue;
      if (base.ndv == static_cast<int>(base.dvars.size()) || e > kPackMaxExponent)
        return std::nullopt;
      base.dvars[static_cast<std::size_t>(base.ndv++)] = {static_cast<std::uint8_t>(v),
                                                          static_cast<std::uint8_t>(e)};
    }
    base.deriv = pack(t.deriv, nvars);
    for (const auto& c : t.coef.terms()) {
      mpz_class num = c.coef.numerator() * (den / c.coef.denominator());
      if (!num.fits_slong_p()) return std::nullopt;
      PackedTerm pt = base;
      pt.coef = num.get_si();
      pt.mult = pack(c.mono, nvars);
      out.max_raise = std::max(out.max_raise, c.mono.degree());
      out.terms.push_back(pt);
    }
  }
  return out;
}

using PackedVec = std::vector<std::pair<PackedKey, std::int64_t>>;

/// Appends op(coef * x^key) (times op.den) to out. Exponents must stay < 16.
inline void apply_packed(const PackedOperator& op, PackedKey key, std::int64_t coef,
                         PackedVec& out) {
  for (const auto& t : op.terms) {
    std::int64_t factor = t.coef;
    bool zero = false;
    for (int i = 0; i < t.ndv; ++i) {
      int e = packed_exponent(key, t.dvars[static_cast<std::size_t>(i)].first);
      int order = t.dvars[static_cast<std::size_t>(i)].second;
      if (e < order) {
        zero = true;
        break;
      }
      for (int j = 0; j < order; ++j)
        if (__builtin_mul_overflow(factor, e - j, &factor)) throw PackOverflow{};
    }
    if (zero) continue;
    std::int64_t c = 0;
    if (__builtin_mul_overflow(factor, coef, &c)) throw PackOverflow{};
    out.emplace_back(key - t.deriv + t.mult, c);
  }
}

/// Sorts by key, merges and reports whether every coefficient cancels.
inline bool cancels(PackedVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < v.size();) {
    std::int64_t sum = 0;
    std::size_t j = i;
    for (; j < v.size() && v[j].first == v[i].first; ++j)
      if (__builtin_add_overflow(sum, v[j].second, &sum)) throw PackOverflow{};
    if (sum != 0) return false;
    i = j;
  }
  return true;
}

}  // namespace theta::detail
