#include "theta/polynomial.hpp"

#include <algorithm>

#include "theta/errors.hpp"

namespace theta {

void normalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return b.mono < a.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Monomial m = terms[i].mono;
    Rational c = terms[i].coef;
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].mono == m; ++j) c += terms[j].coef;
    if (!c.is_zero()) {
      terms[out].mono = m;
      terms[out].coef = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

Polynomial::Polynomial(Shape shape) : shape_(shape) {}

Polynomial::Polynomial(Shape shape, Rational constant) : shape_(shape) {
  if (!constant.is_zero()) terms_.push_back({Monomial{}, std::move(constant)});
}

Polynomial Polynomial::from_terms(Shape shape, std::vector<Term> terms) {
  Polynomial p(shape);
  normalize_terms(terms);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::monomial(Shape shape, const Monomial& m, Rational coef) {
  Polynomial p(shape);
  if (!coef.is_zero()) p.terms_.push_back({m, std::move(coef)});
  return p;
}

Polynomial Polynomial::variable(Shape shape, int row, int col) {
  if (row < 1 || row > shape.n || col < 1 || col > shape.k)
    throw InvalidArgument("variable x[" + std::to_string(row) + "," + std::to_string(col) +
                          "] outside shape");
  return monomial(shape, Monomial::variable(shape.index(row, col)));
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.front().mono.degree() == terms_.back().mono.degree();
}

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial p(shape_);
  for (const auto& t : terms_)
    if (t.mono.degree() == d) p.terms_.push_back(t);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return key < t.mono; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return Rational();
}

Polynomial Polynomial::derivative(int var, int order) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e < order) continue;
    std::int64_t factor = 1;
    for (int i = 0; i < order; ++i) factor *= (e - i);
    Monomial m = t.mono;
    m.bump(var, -order);
    out.push_back({m, t.coef * Rational(factor)});
  }
  return from_terms(shape_, std::move(out));
}

Polynomial Polynomial::relabel(Shape target, std::span<const int> map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int v = 0; v < shape_.variables(); ++v) {
      int e = t.mono[v];
      if (e != 0) m.bump(map[static_cast<std::size_t>(v)], e);
    }
    out.push_back({m, t.coef});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_shape(a.shape_, b.shape_, "polynomial addition");
  Polynomial r(a.shape_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && j->mono < i->mono)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || i->mono < j->mono) {
      r.terms_.push_back(*j++);
    } else {
      Rational c = i->coef + j->coef;
      if (!c.is_zero()) r.terms_.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_shape(a.shape_, b.shape_, "polynomial product");
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coef * t.coef});
  return Polynomial::from_terms(a.shape_, std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c.is_zero()) return Polynomial(p.shape_);
  Polynomial r = p;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw InvalidArgument("polynomial power: negative exponent");
  Polynomial result(shape_, Rational(1));
  for (int i = 0; i < e; ++i) result = result * *this;
  return result;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  mpz_class lcm_den = 1;
  for (const auto& t : terms_) {
    mpz_class d = t.coef.denominator();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_class v = t.coef.numerator() * (lcm_den / t.coef.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(lcm_den, g);
  if (terms_.front().coef.sign() < 0) scale = -scale;
  return scale * *this;
}

}  // namespace theta
