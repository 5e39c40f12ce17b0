#include "theta/diff_operator.hpp"

#include <algorithm>

#include "theta/errors.hpp"

namespace theta {

namespace {

// prod_v e_v! / (e_v - b_v)!  (0 when some b_v > e_v)
std::int64_t falling_factor(const Monomial& m, const Monomial& deriv, int nvars) {
  std::int64_t f = 1;
  for (int v = 0; v < nvars; ++v) {
    int b = deriv[v];
    if (b == 0) continue;
    int e = m[v];
    if (e < b) return 0;
    for (int i = 0; i < b; ++i)
      if (__builtin_mul_overflow(f, e - i, &f))
        throw InvalidArgument("derivative coefficient overflows 64 bits");
  }
  return f;
}

// prod_v binom(a_v, g_v)
std::int64_t multi_binomial(const Monomial& a, const Monomial& g, int nvars) {
  std::int64_t f = 1;
  for (int v = 0; v < nvars; ++v) {
    int top = a[v];
    int bot = g[v];
    std::int64_t c = 1;
    for (int i = 0; i < bot; ++i) c = c * (top - i) / (i + 1);
    if (__builtin_mul_overflow(f, c, &f))
      throw InvalidArgument("Leibniz coefficient overflows 64 bits");
  }
  return f;
}

// All monomials g with g <= a componentwise.
void sub_monomials(const Monomial& a, int nvars, std::vector<Monomial>& out) {
  out.clear();
  out.push_back(Monomial{});
  for (int v = 0; v < nvars; ++v) {
    int e = a[v];
    if (e == 0) continue;
    std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
      for (int j = 1; j <= e; ++j) {
        Monomial m = out[i];
        m.bump(v, j);
        out.push_back(m);
      }
    }
  }
}

void normalize_operator_terms(std::vector<OperatorTerm>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const OperatorTerm& a, const OperatorTerm& b) { return b.deriv < a.deriv; });
  std::vector<OperatorTerm> out;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Polynomial c = terms[i].coef;
    for (; j < terms.size() && terms[j].deriv == terms[i].deriv; ++j) c += terms[j].coef;
    if (!c.is_zero()) out.push_back({std::move(c), terms[i].deriv});
    i = j;
  }
  terms = std::move(out);
}

}  // namespace

DiffOperator::DiffOperator(Shape shape) : shape_(shape) {}

DiffOperator DiffOperator::from_terms(Shape shape, std::vector<OperatorTerm> terms) {
  for (const auto& t : terms) require_same_shape(shape, t.coef.shape(), "operator term");
  DiffOperator d(shape);
  normalize_operator_terms(terms);
  d.terms_ = std::move(terms);
  return d;
}

DiffOperator DiffOperator::scalar(Shape shape, Rational c) {
  return from_terms(shape, {{Polynomial(shape, std::move(c)), Monomial{}}});
}

DiffOperator DiffOperator::multiplication(const Polynomial& p) {
  return from_terms(p.shape(), {{p, Monomial{}}});
}

DiffOperator DiffOperator::derivative(Shape shape, int row, int col) {
  if (row < 1 || row > shape.n || col < 1 || col > shape.k)
    throw InvalidArgument("derivative d[" + std::to_string(row) + "," + std::to_string(col) +
                          "] outside shape");
  return from_terms(shape,
                    {{Polynomial(shape, Rational(1)), Monomial::variable(shape.index(row, col))}});
}

std::optional<int> DiffOperator::degree_shift() const {
  std::optional<int> shift;
  for (const auto& t : terms_) {
    if (!t.coef.is_homogeneous()) return std::nullopt;
    int s = t.coef.degree() - t.deriv.degree();
    if (shift && *shift != s) return std::nullopt;
    shift = s;
  }
  return shift;
}

void DiffOperator::apply_into(const Monomial& m, const Rational& coef,
                              std::vector<Term>& out) const {
  const int nvars = shape_.variables();
  for (const auto& t : terms_) {
    std::int64_t f = falling_factor(m, t.deriv, nvars);
    if (f == 0) continue;
    Monomial rest = m / t.deriv;
    Rational scale = coef * Rational(f);
    for (const auto& c : t.coef.terms()) out.push_back({c.mono * rest, c.coef * scale});
  }
}

Polynomial DiffOperator::apply(const Monomial& m) const {
  std::vector<Term> out;
  apply_into(m, Rational(1), out);
  return Polynomial::from_terms(shape_, std::move(out));
}

Polynomial DiffOperator::apply(const Polynomial& p) const {
  require_same_shape(shape_, p.shape(), "apply_operator");
  std::vector<Term> out;
  for (const auto& t : p.terms()) apply_into(t.mono, t.coef, out);
  return Polynomial::from_terms(shape_, std::move(out));
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator d = *this;
  for (auto& t : d.terms_) t.coef = -t.coef;
  return d;
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
  require_same_shape(a.shape_, b.shape_, "operator sum");
  std::vector<OperatorTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return DiffOperator::from_terms(a.shape_, std::move(terms));
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) { return a + (-b); }

DiffOperator operator*(const Rational& c, const DiffOperator& d) {
  std::vector<OperatorTerm> terms;
  for (const auto& t : d.terms_) terms.push_back({c * t.coef, t.deriv});
  return DiffOperator::from_terms(d.shape_, std::move(terms));
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
  require_same_shape(a.shape_, b.shape_, "operator composition");
  const int nvars = a.shape_.variables();
  // (p d^alpha)(q d^beta) = sum_{gamma <= alpha} binom(alpha,gamma) p (d^gamma q) d^{alpha-gamma+beta}
  std::vector<OperatorTerm> terms;
  std::vector<Monomial> gammas;
  for (const auto& s : a.terms_) {
    sub_monomials(s.deriv, nvars, gammas);
    for (const auto& t : b.terms_) {
      for (const auto& g : gammas) {
        Polynomial dq = t.coef;
        for (int v = 0; v < nvars && !dq.is_zero(); ++v)
          if (g[v] > 0) dq = dq.derivative(v, g[v]);
        if (dq.is_zero()) continue;
        Rational c(multi_binomial(s.deriv, g, nvars));
        terms.push_back({c * (s.coef * dq), (s.deriv / g) * t.deriv});
      }
    }
  }
  return DiffOperator::from_terms(a.shape_, std::move(terms));
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) {
  return compose(a, b) - compose(b, a);
}

std::map<std::pair<Monomial, Monomial>, Rational> DiffOperator::coordinates() const {
  std::map<std::pair<Monomial, Monomial>, Rational> out;
  for (const auto& t : terms_)
    for (const auto& c : t.coef.terms()) out.emplace(std::make_pair(c.mono, t.deriv), c.coef);
  return out;
}

}  // namespace theta
