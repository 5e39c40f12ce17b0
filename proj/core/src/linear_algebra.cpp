#include "theta/linear_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "theta/errors.hpp"

namespace theta {

namespace {

using IntRow = std::vector<mpz_class>;

struct Echelon {
  std::vector<std::size_t> pivot_cols;  // pivot of row r is pivot_cols[r]
  mpz_class scale = 1;                  // every pivot entry equals this value
};

// Fraction-free Gauss-Jordan. On exit the first pivot_cols.size() rows hold
// scale * RREF; the remaining rows are zero. Every division is exact.
Echelon fraction_free_rref(std::vector<IntRow>& a, std::size_t ncols) {
  Echelon out;
  mpz_class prev = 1;
  mpz_class tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const mpz_class piv = a[r][c];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r) continue;
      IntRow& row = a[i];
      const mpz_class f = row[c];
      for (std::size_t j = 0; j < ncols; ++j) {
        // row[j] = (piv*row[j] - f*a[r][j]) / prev
        tmp = piv * row[j];
        if (f != 0 && a[r][j] != 0) tmp -= f * a[r][j];
        if (prev != 1) {
          if (!mpz_divisible_p(tmp.get_mpz_t(), prev.get_mpz_t()))
            throw Error("fraction-free elimination: inexact division");
          mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        }
        row[j] = tmp;
      }
    }
    prev = piv;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.scale = prev;
  return out;
}

std::vector<IntRow> integer_rows(const std::vector<std::vector<Rational>>& rows,
                                 std::size_t ncols) {
  std::vector<IntRow> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    mpz_class l = 1;
    bool any = false;
    for (const auto& v : row) {
      if (v.is_zero()) continue;
      any = true;
      mpz_class d = v.denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    if (!any) continue;
    IntRow ir(ncols);
    for (std::size_t j = 0; j < ncols; ++j)
      if (!row[j].is_zero()) ir[j] = row[j].numerator() * (l / row[j].denominator());
    out.push_back(std::move(ir));
  }
  return out;
}

// Nullspace vectors (integer, normalized) from a scaled RREF.
std::vector<std::vector<mpz_class>> kernel_from_rref(const std::vector<IntRow>& a,
                                                     const Echelon& e, std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<mpz_class>> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpz_class> v(ncols);
    v[f] = e.scale;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -a[r][f];
    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    int first_sign = 0;
    for (const auto& x : v)
      if (x != 0) {
        first_sign = sgn(x);
        break;
      }
    if (first_sign < 0) g = -g;
    for (auto& x : v)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    out.push_back(std::move(v));
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

std::size_t RationalMatrix::rank() const {
  std::vector<std::vector<Rational>> rows(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    rows[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  auto a = integer_rows(rows, cols_);
  return fraction_free_rref(a, cols_).pivot_cols.size();
}

std::vector<std::vector<Rational>> RationalMatrix::kernel() const {
  std::vector<std::vector<Rational>> rows(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    rows[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  auto a = integer_rows(rows, cols_);
  auto e = fraction_free_rref(a, cols_);
  std::vector<std::vector<Rational>> out;
  for (auto& v : kernel_from_rref(a, e, cols_)) {
    std::vector<Rational> q;
    q.reserve(v.size());
    for (auto& x : v) q.emplace_back(x);
    out.push_back(std::move(q));
  }
  return out;
}

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& b) const {
  if (b.size() != rows_) throw InvalidArgument("solve: right-hand side length");
  std::vector<std::vector<Rational>> rows(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    rows[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    rows[r].push_back(b[r]);
  }
  auto a = integer_rows(rows, cols_ + 1);
  auto e = fraction_free_rref(a, cols_ + 1);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == cols_) return std::nullopt;
  std::vector<Rational> x(cols_);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
    x[e.pivot_cols[r]] = Rational(a[r][cols_], e.scale);
  return x;
}

void SparseColumnMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (value.is_zero()) return;
  auto& column = columns_.at(col);
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const auto& e, std::size_t key) { return e.first < key; });
  if (it != column.end() && it->first == row) {
    it->second += value;
    if (it->second.is_zero()) column.erase(it);
  } else {
    column.insert(it, {row, value});
  }
  rows_ = std::max(rows_, row + 1);
}

KernelResult sparse_kernel(const SparseColumnMatrix& m) {
  const std::size_t ncols = m.cols();
  UnionFind uf(ncols);
  std::unordered_map<std::size_t, std::size_t> first_col_of_row;
  for (std::size_t c = 0; c < ncols; ++c) {
    for (const auto& [row, value] : m.column(c)) {
      auto [it, inserted] = first_col_of_row.emplace(row, c);
      if (!inserted) uf.unite(it->second, c);
    }
  }
  std::unordered_map<std::size_t, std::vector<std::size_t>> components;
  std::vector<std::size_t> roots;
  for (std::size_t c = 0; c < ncols; ++c) {
    std::size_t root = uf.find(c);
    auto& comp = components[root];
    if (comp.empty()) roots.push_back(root);
    comp.push_back(c);
  }

  KernelResult out;
  std::vector<std::pair<std::size_t, SparseVector>> keyed;  // (free column, vector)
  for (std::size_t root : roots) {
    const auto& cols = components[root];
    std::unordered_map<std::size_t, std::size_t> local_row;
    for (std::size_t c : cols)
      for (const auto& [row, value] : m.column(c)) local_row.emplace(row, local_row.size());
    if (local_row.empty()) {
      for (std::size_t c : cols) keyed.push_back({c, SparseVector{{c, Rational(1)}}});
      continue;
    }
    std::vector<std::vector<Rational>> dense(local_row.size(),
                                             std::vector<Rational>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [row, value] : m.column(cols[j])) dense[local_row[row]][j] = value;
    auto a = integer_rows(dense, cols.size());
    auto e = fraction_free_rref(a, cols.size());
    for (auto pc : e.pivot_cols) out.pivot_cols.push_back(cols[pc]);
    std::vector<bool> is_pivot(cols.size(), false);
    for (auto pc : e.pivot_cols) is_pivot[pc] = true;
    auto vectors = kernel_from_rref(a, e, cols.size());
    std::size_t vi = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (is_pivot[j]) continue;
      SparseVector sv;
      for (std::size_t t = 0; t < cols.size(); ++t)
        if (vectors[vi][t] != 0) sv.emplace_back(cols[t], Rational(vectors[vi][t]));
      keyed.push_back({cols[j], std::move(sv)});
      ++vi;
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [col, v] : keyed) out.basis.push_back(std::move(v));
  std::sort(out.pivot_cols.begin(), out.pivot_cols.end());
  out.rank = out.pivot_cols.size();
  return out;
}

}  // namespace theta
