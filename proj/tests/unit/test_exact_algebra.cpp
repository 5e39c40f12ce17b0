#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "../oracles.hpp"
#include "theta/diff_operator.hpp"
#include "theta/errors.hpp"
#include "theta/graded_basis.hpp"
#include "theta/kernel.hpp"
#include "theta/linear_algebra.hpp"
#include "theta/text_format.hpp"

using namespace theta;

// --- Rational ---------------------------------------------------------------

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 7).to_string(), "0");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_THROW(Rational(1, 0), InvalidArgument);
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(Rational, OverflowPromotesAndDemotes) {
  const Rational big = std::numeric_limits<std::int64_t>::max();
  const Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq.to_mpq(), mpq_class(big.to_mpq() * big.to_mpq()));
  const Rational back = sq / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  const Rational lo = std::numeric_limits<std::int64_t>::min();
  EXPECT_EQ((-lo).to_mpq(), -lo.to_mpq());
}

// fast path agrees with plain GMP on random operands, including near-overflow
TEST(Rational, AgreesWithGmp) {
  std::mt19937_64 rng(7);
  auto draw = [&]() -> std::int64_t {
    switch (rng() % 3) {
      case 0: return static_cast<std::int64_t>(rng() % 41) - 20;
      case 1: return static_cast<std::int64_t>(rng() >> 2) - (std::int64_t{1} << 61);
      default: return static_cast<std::int64_t>(rng());
    }
  };
  for (int i = 0; i < 4000; ++i) {
    std::int64_t an = draw(), ad = draw(), bn = draw(), bd = draw();
    if (ad == 0) ad = 1;
    if (bd == 0) bd = 3;
    const Rational a(an, ad), b(bn, bd);
    mpq_class qa(mpz_class(std::to_string(an)), mpz_class(std::to_string(ad)));
    mpq_class qb(mpz_class(std::to_string(bn)), mpz_class(std::to_string(bd)));
    qa.canonicalize();
    qb.canonicalize();
    ASSERT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
    ASSERT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
    ASSERT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
    if (!b.is_zero()) ASSERT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
    ASSERT_EQ(a < b, qa < qb);
    ASSERT_EQ(Rational::parse(a.to_string()), a);
  }
}

// --- Polynomial ring ----------------------------------------------------------

class RingProperties : public ::testing::TestWithParam<int> {};

TEST_P(RingProperties, AxiomsAndLeibniz) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  const Shape s{2, 2};
  for (int it = 0; it < 25; ++it) {
    const Polynomial a = oracle::random_polynomial(rng, s, 3, 4);
    const Polynomial b = oracle::random_polynomial(rng, s, 3, 4);
    const Polynomial c = oracle::random_polynomial(rng, s, 3, 4);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    for (int v = 0; v < s.variables(); ++v) {
      EXPECT_EQ((a * b).derivative(v), a.derivative(v) * b + a * b.derivative(v));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RingProperties, ::testing::Values(1, 2, 3));

TEST(Polynomial, TextRoundTrip) {
  std::mt19937_64 rng(11);
  const Shape s{3, 2};
  for (int it = 0; it < 50; ++it) {
    const Polynomial p = oracle::random_polynomial(rng, s, 4, 5);
    EXPECT_EQ(parse_polynomial(s, format_polynomial(p)), p);
  }
  EXPECT_EQ(format_polynomial(Polynomial(s)), "0");
  EXPECT_EQ(parse_polynomial(s, "x[1,1]^1 + x[1,1] - 2*x[1,1]"), Polynomial(s));
  EXPECT_THROW(parse_polynomial(s, "x[4,1]"), Error);
}

TEST(Polynomial, CanonicalOrderIsDescendingGrlex) {
  const Shape s{2, 1};
  const Polynomial p = parse_polynomial(s, "1 + x[2,1] + x[1,1]^2 + x[1,1]*x[2,1]");
  EXPECT_EQ(format_polynomial(p), "1*x[1,1]^2 + 1*x[1,1]*x[2,1] + 1*x[2,1] + 1");
}

// --- Differential operators -----------------------------------------------------

TEST(DiffOperator, CanonicalCommutator) {
  const Shape s{1, 1};
  const auto d = DiffOperator::derivative(s, 1, 1);
  const auto x = DiffOperator::multiplication(Polynomial::variable(s, 1, 1));
  EXPECT_EQ(commutator(d, x), DiffOperator::scalar(s, 1));
}

// composition in normal order acts as sequential application
TEST(DiffOperator, CompositionMatchesApplication) {
  std::mt19937_64 rng(5);
  const Shape s{2, 1};
  for (int it = 0; it < 30; ++it) {
    std::vector<OperatorTerm> ta, tb;
    for (int t = 0; t < 3; ++t) {
      std::vector<int> e{static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)};
      ta.push_back({oracle::random_polynomial(rng, s, 2, 2), Monomial::from_exponents(e)});
      std::swap(e[0], e[1]);
      tb.push_back({oracle::random_polynomial(rng, s, 2, 2), Monomial::from_exponents(e)});
    }
    const auto a = DiffOperator::from_terms(s, ta);
    const auto b = DiffOperator::from_terms(s, tb);
    const Polynomial p = oracle::random_polynomial(rng, s, 4, 5);
    EXPECT_EQ(compose(a, b).apply(p), a.apply(b.apply(p)));
    EXPECT_EQ(commutator(a, b).apply(p), a.apply(b.apply(p)) - b.apply(a.apply(p)));
    EXPECT_EQ(parse_operator(s, format_operator(a)), a);
  }
}

TEST(DiffOperator, ShapeMismatchThrows) {
  const auto a = DiffOperator::derivative(Shape{2, 1}, 1, 1);
  const auto b = DiffOperator::derivative(Shape{1, 2}, 1, 1);
  EXPECT_THROW((void)compose(a, b), ShapeMismatch);
}

// --- Linear algebra -------------------------------------------------------------

// sparse block-wise kernel vs dense Gaussian elimination
TEST(SparseKernel, AgreesWithDenseKernel) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 60; ++it) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 9;
    RationalMatrix dense(rows, cols);
    SparseColumnMatrix sparse(cols);
    sparse.set_rows(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng() % 3 != 0) continue;
        const Rational v(static_cast<std::int64_t>(rng() % 9) - 4, 1 + rng() % 3);
        dense.at(r, c) = v;
        if (!v.is_zero()) sparse.add(r, c, v);
      }
    }
    const KernelResult k = sparse_kernel(sparse);
    const auto dk = dense.kernel();
    ASSERT_EQ(k.basis.size(), dk.size());
    ASSERT_EQ(k.rank + k.basis.size(), cols);
    ASSERT_EQ(k.rank, dense.rank());
    // same reduced basis, entry by entry
    for (std::size_t b = 0; b < dk.size(); ++b) {
      std::vector<Rational> v(cols);
      for (const auto& [i, x] : k.basis[b]) v[i] = x;
      EXPECT_EQ(v, dk[b]);
    }
  }
}

TEST(GradedBasis, CountsAreStarsAndBars) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int d = 0; d <= 5; ++d)
        EXPECT_EQ(static_cast<std::int64_t>(monomial_basis(n, k, d).size()),
                  oracle::binom(n * k + d - 1, d));
  EXPECT_EQ(monomial_basis(2, 0, 0).size(), 1u);
  EXPECT_EQ(monomial_basis(2, 0, 3).size(), 0u);
}

TEST(Kernel, InhomogeneousOperatorRejected) {
  const Shape s{1, 1};
  const auto op = DiffOperator::derivative(s, 1, 1) + DiffOperator::scalar(s, 1);
  const std::vector<DiffOperator> ops{op};
  EXPECT_THROW(kernel_basis(ops, 1, 1, 2), InhomogeneousOperator);
}

TEST(Kernel, PolynomialRank) {
  const Shape s{2, 1};
  const Polynomial x = Polynomial::variable(s, 1, 1), y = Polynomial::variable(s, 2, 1);
  const std::vector<Polynomial> ps{x, y, x + y, x * x};
  EXPECT_EQ(polynomial_rank(ps), 3u);
}
