#include "theta/null_frame.hpp"

#include <cstdlib>

#include "theta/errors.hpp"

namespace theta {

namespace {

std::string root_id(const char* kind, int a, int b) {
  return std::string(kind) + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

// sum_j c * x_{p,j} d_{q,j}
DiffOperator row_transfer(Shape s, int p, int q, Rational c) {
  DiffOperator out(s);
  for (int j = 1; j <= s.k; ++j)
    out = out + c * compose(DiffOperator::multiplication(Polynomial::variable(s, p, j)),
                            DiffOperator::derivative(s, q, j));
  return out;
}

}  // namespace

NullFrame build_null_frame(int n, int k) {
  Shape s{n, k};
  s.validate();
  NullFrame f{s, n / 2, {}, {}, {}, {}, {}, {}, SignedPerm::identity(n)};
  const int m = f.m;
  auto z = [](int a) { return 2 * a - 1; };
  auto zb = [](int a) { return 2 * a; };
  const int w = n;

  for (int a = 1; a <= m; ++a)
    f.cartan.push_back({"H[" + std::to_string(a) + "]",
                        row_transfer(s, z(a), z(a), 1) - row_transfer(s, zb(a), zb(a), 1)});

  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) {
      f.raising.push_back({root_id("X-", a, b),
                           row_transfer(s, z(a), z(b), 1) - row_transfer(s, zb(b), zb(a), 1)});
      f.raising.push_back({root_id("X+", a, b),
                           row_transfer(s, z(a), zb(b), 1) - row_transfer(s, z(b), zb(a), 1)});
      f.lowering.push_back({root_id("Y-", a, b),
                            row_transfer(s, z(b), z(a), 1) - row_transfer(s, zb(a), zb(b), 1)});
      f.lowering.push_back({root_id("Y+", a, b),
                            row_transfer(s, zb(b), z(a), 1) - row_transfer(s, zb(a), z(b), 1)});
    }
  if (n % 2 == 1)
    for (int a = 1; a <= m; ++a) {
      f.raising.push_back({"X[" + std::to_string(a) + "]",
                           row_transfer(s, z(a), w, 1) - row_transfer(s, w, zb(a), 2)});
      f.lowering.push_back({"Y[" + std::to_string(a) + "]",
                            row_transfer(s, w, z(a), 2) - row_transfer(s, zb(a), w, 1)});
    }

  for (int j = 1; j <= k; ++j) {
    DiffOperator e(s);
    for (int l = 1; l <= n; ++l)
      e = e + compose(DiffOperator::multiplication(Polynomial::variable(s, l, j)),
                      DiffOperator::derivative(s, l, j));
    f.column_euler.push_back({"C[" + std::to_string(j) + "," + std::to_string(j) + "]", e});
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      DiffOperator e(s);
      for (int l = 1; l <= n; ++l)
        e = e + compose(DiffOperator::multiplication(Polynomial::variable(s, l, i)),
                        DiffOperator::derivative(s, l, j));
      f.gl_raising.push_back({root_id("E", i, j), e});
    }

  // sum_l dx_li dx_lj = sum_a 2 (dz_ai dzb_aj + dzb_ai dz_aj) + dw_i dw_j
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      DiffOperator p(s);
      for (int a = 1; a <= m; ++a) {
        p = p + Rational(2) * compose(DiffOperator::derivative(s, z(a), i),
                                      DiffOperator::derivative(s, zb(a), j));
        p = p + Rational(2) * compose(DiffOperator::derivative(s, zb(a), i),
                                      DiffOperator::derivative(s, z(a), j));
      }
      if (n % 2 == 1)
        p = p + compose(DiffOperator::derivative(s, w, i), DiffOperator::derivative(s, w, j));
      f.p_minus.push_back({root_id("P-", i, j), p});
    }

  if (n % 2 == 1) f.reflection = SignedPerm::last_reflection(n);
  else f.reflection = SignedPerm::transposition(n, n - 1, n);
  return f;
}

std::vector<int> NullFrame::so_weight(const Monomial& mono) const {
  std::vector<int> mu(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < shape.k; ++j)
      mu[static_cast<std::size_t>(a)] +=
          mono[(2 * a) * shape.k + j] - mono[(2 * a + 1) * shape.k + j];
  return mu;
}

std::vector<int> NullFrame::column_degrees(const Monomial& mono) const {
  std::vector<int> c(static_cast<std::size_t>(shape.k), 0);
  for (int l = 0; l < shape.n; ++l)
    for (int j = 0; j < shape.k; ++j) c[static_cast<std::size_t>(j)] += mono[l * shape.k + j];
  return c;
}

bool so_dominant(int n, const std::vector<int>& mu) {
  const int m = n / 2;
  if (static_cast<int>(mu.size()) != m) return false;
  for (int a = 0; a + 1 < m; ++a)
    if (mu[static_cast<std::size_t>(a)] < mu[static_cast<std::size_t>(a + 1)]) return false;
  if (m == 0) return true;
  const int last = mu.back();
  if (n % 2 == 1) return last >= 0;
  if (m >= 2) return mu[static_cast<std::size_t>(m - 2)] >= std::abs(last);
  return true;
}

}  // namespace theta
