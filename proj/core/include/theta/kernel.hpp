#pragma once

#include <functional>
#include <span>
#include <vector>

#include "theta/diff_operator.hpp"
#include "theta/graded_basis.hpp"

namespace theta {

/// A linear map given on monomials: appends the image of m to `out`.
using MonomialMap = std::function<void(const Monomial& m, std::vector<Term>& out)>;

MonomialMap as_map(const DiffOperator& d);

struct JointKernel {
  std::vector<Polynomial> basis;
  std::size_t rank = 0;                  ///< rank of the stacked map
  std::vector<std::size_t> pivot_cols;   ///< indices into the domain
};

/// Basis of the common kernel of `maps` on span(domain). The domain must
/// be listed in the order that defines coordinates (normally descending
/// graded-lex). Basis vectors are primitive integer polynomials whose
/// first coordinate in domain order is positive, ordered by free column.
JointKernel joint_kernel(Shape shape, std::span<const Monomial> domain,
                         std::span<const MonomialMap> maps);

/// Joint kernel of homogeneous operators inside C^d[R^{n x k}].
/// Throws InhomogeneousOperator if some operator does not shift degree
/// uniformly, ShapeMismatch if an operator lives on another shape.
/// Consults the THETA_LAB_CACHE directory when that variable is set.
std::vector<Polynomial> kernel_basis(std::span<const DiffOperator> ops, int n, int k, int d);

/// Same computation with rank information, bypassing the disk cache.
JointKernel kernel_with_rank(std::span<const DiffOperator> ops, int n, int k, int d);

/// Dimension of the span of the given polynomials (any degrees).
std::size_t polynomial_rank(std::span<const Polynomial> polys);

}  // namespace theta
