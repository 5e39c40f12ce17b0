#pragma once
// Independent closed forms used as test oracles. Nothing here calls into
// the engine beyond Rational arithmetic.

#include <cstdint>
#include <random>
#include <vector>

#include "theta/polynomial.hpp"
#include "theta/rational.hpp"

namespace oracle {

using theta::Rational;

inline std::int64_t binom(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < r) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// p(0..)  = 1 1 2 3 5 7 11 15 22 30 42
inline std::int64_t partition_count(int s) {
  static const std::int64_t table[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  return table[s];
}

// dim of the gl_k irrep with highest weight lambda (partition), via hook-content
inline std::int64_t hook_content(const std::vector<int>& lambda, int k) {
  Rational num = 1;
  Rational den = 1;
  std::vector<int> cols;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      const int content = j - static_cast<int>(i);
      int leg = 0;
      for (std::size_t r = i + 1; r < lambda.size() && lambda[r] > j; ++r) ++leg;
      const int hook = (lambda[i] - j - 1) + leg + 1;
      num *= Rational(k + content);
      den *= Rational(hook);
    }
  }
  const Rational q = num / den;
  return q.is_zero() ? 0 : std::stoll(q.to_string());
}

// Weyl dimension formula for so(n), dominant weight mu of length floor(n/2)
inline std::int64_t weyl_so(int n, const std::vector<int>& mu) {
  const int m = n / 2;
  if (m == 0) return 1;
  if (n == 2) return 1;
  std::vector<Rational> rho(m), lr(m);
  for (int i = 0; i < m; ++i) {
    rho[i] = (n % 2 == 0) ? Rational(m - 1 - i) : Rational(2 * (m - i) - 1, 2);
    lr[i] = rho[i] + Rational(mu[i]);
  }
  Rational out = 1;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      out *= (lr[i] - lr[j]) * (lr[i] + lr[j]) / ((rho[i] - rho[j]) * (rho[i] + rho[j]));
    }
    if (n % 2 == 1) out *= lr[i] / rho[i];
  }
  return std::stoll(out.to_string());
}

// O(n) dimension of an admissible partition label.
inline std::int64_t orth_dim(int n, std::vector<int> lambda) {
  const int m = n / 2;
  if (static_cast<int>(lambda.size()) > m) {
    // associate: shorten the first column to n - lambda'_1
    const int c1 = static_cast<int>(lambda.size());
    std::vector<int> cols;
    for (int j = 0; j < lambda[0]; ++j) {
      int c = 0;
      for (int v : lambda) c += v > j ? 1 : 0;
      cols.push_back(c);
    }
    cols[0] = n - c1;
    std::vector<int> rows;
    for (int i = 0; i < cols[0]; ++i) {
      int r = 0;
      for (int c : cols) r += c > i ? 1 : 0;
      rows.push_back(r);
    }
    lambda = rows;
  }
  lambda.resize(static_cast<std::size_t>(m), 0);
  if (n == 1) return 1;
  if (n == 2) return lambda[0] == 0 ? 1 : 2;
  const std::int64_t w = weyl_so(n, lambda);
  return (n % 2 == 0 && lambda[m - 1] > 0) ? 2 * w : w;
}

inline theta::Polynomial random_polynomial(std::mt19937_64& rng, theta::Shape shape, int max_deg,
                                           int terms) {
  std::vector<theta::Term> ts;
  const int nv = shape.variables();
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(nv), 0);
    const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    for (int s = 0; s < deg; ++s) ++e[rng() % static_cast<unsigned>(nv)];
    const auto c = static_cast<std::int64_t>(rng() % 19) - 9;
    const auto q = static_cast<std::int64_t>(rng() % 4) + 1;
    ts.push_back({theta::Monomial::from_exponents(e), Rational(c, q)});
  }
  return theta::Polynomial::from_terms(shape, std::move(ts));
}

}  // namespace oracle
