#include "theta/signed_perm.hpp"

#include <algorithm>

#include "theta/errors.hpp"

namespace theta {

SignedPerm::SignedPerm(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) throw InvalidArgument("signed permutation: size mismatch");
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    int p = perm_[i];
    if (p < 0 || static_cast<std::size_t>(p) >= perm_.size() || seen[static_cast<std::size_t>(p)])
      throw InvalidArgument("signed permutation: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
    if (signs_[i] != 1 && signs_[i] != -1) throw InvalidArgument("signed permutation: bad sign");
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  return SignedPerm(perm, std::vector<int>(static_cast<std::size_t>(n), 1));
}

SignedPerm SignedPerm::reflection(int n) {
  SignedPerm g = identity(n);
  g.signs_[0] = -1;
  return g;
}

SignedPerm SignedPerm::last_reflection(int n) {
  SignedPerm g = identity(n);
  g.signs_.back() = -1;
  return g;
}

SignedPerm SignedPerm::minus_identity(int n) {
  SignedPerm g = identity(n);
  std::fill(g.signs_.begin(), g.signs_.end(), -1);
  return g;
}

SignedPerm SignedPerm::transposition(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n) throw InvalidArgument("transposition: index out of range");
  SignedPerm g = identity(n);
  std::swap(g.perm_[static_cast<std::size_t>(a - 1)], g.perm_[static_cast<std::size_t>(b - 1)]);
  return g;
}

int SignedPerm::determinant() const {
  int det = 1;
  for (int s : signs_) det *= s;
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm_[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) det = -det;
  }
  return det;
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> perm(perm_.size());
  std::vector<int> signs(perm_.size());
  for (std::size_t l = 0; l < perm_.size(); ++l) {
    auto target = static_cast<std::size_t>(perm_[l]);
    perm[target] = static_cast<int>(l);
    signs[target] = signs_[l];
  }
  return SignedPerm(perm, signs);
}

SignedPerm SignedPerm::operator*(const SignedPerm& other) const {
  if (perm_.size() != other.perm_.size()) throw InvalidArgument("signed permutation: size mismatch");
  std::vector<int> perm(perm_.size());
  std::vector<int> signs(perm_.size());
  for (std::size_t l = 0; l < perm_.size(); ++l) {
    auto mid = static_cast<std::size_t>(other.perm_[l]);
    perm[l] = perm_[mid];
    signs[l] = other.signs_[l] * signs_[mid];
  }
  return SignedPerm(perm, signs);
}

std::pair<int, Monomial> SignedPerm::act(const Monomial& m, const Shape& shape) const {
  int sign = 1;
  Monomial out;
  for (int l = 0; l < shape.n; ++l) {
    for (int j = 0; j < shape.k; ++j) {
      int e = m[l * shape.k + j];
      if (e == 0) continue;
      if (signs_[static_cast<std::size_t>(l)] < 0 && (e % 2) == 1) sign = -sign;
      out.bump(perm_[static_cast<std::size_t>(l)] * shape.k + j, e);
    }
  }
  return {sign, out};
}

Polynomial SignedPerm::act(const Polynomial& p) const {
  if (p.shape().n != n()) throw ShapeMismatch("signed permutation acts on a different n");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    auto [sign, m] = act(t.mono, p.shape());
    terms.push_back({m, sign < 0 ? -t.coef : t.coef});
  }
  return Polynomial::from_terms(p.shape(), std::move(terms));
}

DiffOperator SignedPerm::conjugate(const DiffOperator& d) const {
  if (d.shape().n != n()) throw ShapeMismatch("signed permutation acts on a different n");
  std::vector<OperatorTerm> terms;
  for (const auto& t : d.terms()) {
    auto [sign, deriv] = act(t.deriv, d.shape());
    Polynomial coef = act(t.coef);
    terms.push_back({sign < 0 ? -coef : coef, deriv});
  }
  return DiffOperator::from_terms(d.shape(), std::move(terms));
}

Polynomial group_act(const SignedPermAction& action, const Polynomial& p) {
  require_same_shape(action.shape, p.shape(), "group_act");
  return action.g.act(p);
}

}  // namespace theta
