#include "theta/monomial.hpp"

#include <string>

#include "theta/errors.hpp"

namespace theta {

void Shape::validate() const {
  if (n < 1) throw InvalidArgument("shape: n must be >= 1, got " + std::to_string(n));
  if (k < 0) throw InvalidArgument("shape: k must be >= 0, got " + std::to_string(k));
  if (static_cast<std::size_t>(n) * static_cast<std::size_t>(k) > kMaxVariables)
    throw InvalidArgument("shape: n*k = " + std::to_string(n * k) + " exceeds the supported " +
                          std::to_string(kMaxVariables) + " variables");
}

void require_same_shape(const Shape& a, const Shape& b, const char* what) {
  if (a != b)
    throw ShapeMismatch(std::string(what) + ": shape (" + std::to_string(a.n) + "," +
                        std::to_string(a.k) + ") vs (" + std::to_string(b.n) + "," +
                        std::to_string(b.k) + ")");
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (exponents.size() > kMaxVariables) throw InvalidArgument("monomial: too many variables");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) m.bump(static_cast<int>(i), exponents[i]);
  return m;
}

Monomial Monomial::variable(int flat_index) {
  Monomial m;
  m.bump(flat_index, 1);
  return m;
}

bool Monomial::divisible_by(const Monomial& other) const {
  if (other.degree_ > degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (other.exps_[i] > exps_[i]) return false;
  return true;
}

void Monomial::bump(int var, int delta) {
  if (var < 0 || static_cast<std::size_t>(var) >= kMaxVariables)
    throw InvalidArgument("monomial: variable index out of range");
  int e = exps_[static_cast<std::size_t>(var)] + delta;
  if (e < 0) throw InvalidArgument("monomial: negative exponent");
  if (e > 255) throw InvalidArgument("monomial: exponent exceeds 255");
  exps_[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e);
  degree_ = static_cast<std::uint16_t>(degree_ + delta);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    int e = a.exps_[i] + b.exps_[i];
    if (e > 255) throw InvalidArgument("monomial: exponent exceeds 255");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (b.exps_[i] > a.exps_[i]) throw InvalidArgument("monomial: quotient is not a monomial");
    r.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] - b.exps_[i]);
  }
  r.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
  return r;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent bytes.
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint8_t e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace theta
