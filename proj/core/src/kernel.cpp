#include "theta/kernel.hpp"

#include <unordered_map>

#include "theta/errors.hpp"
#include "theta/kernel_cache.hpp"
#include "theta/linear_algebra.hpp"
#include "theta/text_format.hpp"

namespace theta {

namespace {

struct RowKey {
  std::size_t map;
  Monomial mono;
  friend bool operator==(const RowKey&, const RowKey&) = default;
};

struct RowKeyHash {
  std::size_t operator()(const RowKey& k) const { return k.mono.hash() * 31 + k.map; }
};

void validate_family(std::span<const DiffOperator> ops, Shape shape) {
  for (const auto& op : ops) {
    require_same_shape(shape, op.shape(), "kernel_basis");
    if (op.is_zero()) continue;
    if (!op.degree_shift())
      throw InhomogeneousOperator("kernel_basis: operator '" + format_operator(op) +
                                  "' does not shift degree uniformly");
  }
}

}  // namespace

MonomialMap as_map(const DiffOperator& d) {
  return [&d](const Monomial& m, std::vector<Term>& out) { d.apply_into(m, Rational(1), out); };
}

JointKernel joint_kernel(Shape shape, std::span<const Monomial> domain,
                         std::span<const MonomialMap> maps) {
  SparseColumnMatrix matrix(domain.size());
  std::unordered_map<RowKey, std::size_t, RowKeyHash> row_ids;
  std::vector<Term> image;
  for (std::size_t c = 0; c < domain.size(); ++c) {
    for (std::size_t mi = 0; mi < maps.size(); ++mi) {
      image.clear();
      maps[mi](domain[c], image);
      normalize_terms(image);
      for (const auto& t : image) {
        auto [it, inserted] = row_ids.emplace(RowKey{mi, t.mono}, row_ids.size());
        matrix.add(it->second, c, t.coef);
      }
    }
  }
  matrix.set_rows(row_ids.size());
  KernelResult k = sparse_kernel(matrix);
  JointKernel out;
  out.rank = k.rank;
  out.pivot_cols = std::move(k.pivot_cols);
  out.basis.reserve(k.basis.size());
  for (const auto& v : k.basis) {
    std::vector<Term> terms;
    terms.reserve(v.size());
    for (const auto& [idx, value] : v) terms.push_back({domain[idx], value});
    out.basis.push_back(Polynomial::from_terms(shape, std::move(terms)));
  }
  return out;
}

JointKernel kernel_with_rank(std::span<const DiffOperator> ops, int n, int k, int d) {
  GradedBasis basis = monomial_basis(n, k, d);
  validate_family(ops, basis.shape());
  std::vector<MonomialMap> maps;
  maps.reserve(ops.size());
  for (const auto& op : ops) maps.push_back(as_map(op));
  return joint_kernel(basis.shape(), basis.monomials(), maps);
}

std::vector<Polynomial> kernel_basis(std::span<const DiffOperator> ops, int n, int k, int d) {
  Shape shape{n, k};
  shape.validate();
  validate_family(ops, shape);
  auto cache = KernelCache::from_environment();
  std::uint64_t key = 0;
  if (cache) {
    std::string family;
    for (const auto& op : ops) family += format_operator(op) + ";";
    key = fnv1a64(family);
    if (auto hit = cache->load(shape, d, key)) return *hit;
  }
  auto result = kernel_with_rank(ops, n, k, d).basis;
  if (cache) cache->store(shape, d, key, result);
  return result;
}

std::size_t polynomial_rank(std::span<const Polynomial> polys) {
  SparseColumnMatrix matrix(polys.size());
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_ids;
  for (std::size_t c = 0; c < polys.size(); ++c)
    for (const auto& t : polys[c].terms()) {
      auto [it, inserted] = row_ids.emplace(t.mono, row_ids.size());
      matrix.add(it->second, c, t.coef);
    }
  matrix.set_rows(row_ids.size());
  return sparse_kernel(matrix).rank;
}

}  // namespace theta
