#include "theta/graded_basis.hpp"

#include <algorithm>

#include "theta/errors.hpp"

namespace theta {

namespace {

void fill_monomials(int first, int nvars, int var, int remaining, Monomial& current,
                    std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    Monomial m = current;
    m.bump(first + var, remaining);
    out.push_back(m);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    Monomial m = current;
    if (e > 0) m.bump(first + var, e);
    fill_monomials(first, nvars, var + 1, remaining - e, m, out);
  }
}

}  // namespace

GradedBasis::GradedBasis(Shape shape, int degree, std::vector<Monomial> monomials)
    : shape_(shape), degree_(degree), monomials_(std::move(monomials)) {}

std::optional<std::size_t> GradedBasis::index_of(const Monomial& m) const {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m,
                             [](const Monomial& a, const Monomial& key) { return key < a; });
  if (it != monomials_.end() && *it == m) return static_cast<std::size_t>(it - monomials_.begin());
  return std::nullopt;
}

std::vector<Rational> GradedBasis::coordinates(const Polynomial& p) const {
  require_same_shape(shape_, p.shape(), "graded coordinates");
  std::vector<Rational> out(monomials_.size());
  for (const auto& t : p.terms()) {
    auto i = index_of(t.mono);
    if (!i) throw InvalidArgument("polynomial is not in the degree-" + std::to_string(degree_) +
                                  " component");
    out[*i] = t.coef;
  }
  return out;
}

Polynomial GradedBasis::polynomial(const std::vector<Rational>& coords) const {
  if (coords.size() != monomials_.size()) throw InvalidArgument("coordinate vector length");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) terms.push_back({monomials_[i], coords[i]});
  return Polynomial::from_terms(shape_, std::move(terms));
}

std::vector<Monomial> monomials_of_degree(int nvars, int d, int first) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial start;
  fill_monomials(first, nvars, 0, d, start, out);
  return out;
}

GradedBasis monomial_basis(int n, int k, int d) {
  Shape shape{n, k};
  shape.validate();
  if (d < 0) throw InvalidArgument("monomial_basis: negative degree");
  return GradedBasis(shape, d, monomials_of_degree(shape.variables(), d));
}

std::vector<Monomial> monomials_up_to(Shape shape, int cap) {
  std::vector<Monomial> out;
  for (int d = 0; d <= cap; ++d) {
    auto block = monomials_of_degree(shape.variables(), d);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

mpz_class stars_and_bars(int nvars, int d) {
  if (d == 0) return 1;
  if (nvars == 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(nvars + d - 1),
               static_cast<unsigned long>(d));
  return r;
}

}  // namespace theta
