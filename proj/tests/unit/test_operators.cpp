#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "../oracles.hpp"
#include "theta/errors.hpp"
#include "theta/graded_basis.hpp"
#include "theta/harmonic.hpp"
#include "theta/kernel.hpp"
#include "theta/null_frame.hpp"
#include "theta/oscillator.hpp"
#include "theta/signed_perm.hpp"

using namespace theta;

TEST(Sl2, BracketsAsOperators) {
  for (int n = 1; n <= 4; ++n) {
    const Sl2Triple t = build_sl2(n);
    EXPECT_EQ(commutator(t.e, t.f), t.h) << n;
    EXPECT_EQ(commutator(t.h, t.e), Rational(2) * t.e) << n;
    EXPECT_EQ(commutator(t.h, t.f), Rational(-2) * t.f) << n;
  }
}

TEST(Sp2k, GradedBracketsSample) {
  const Sp2kGenerators g = build_sp2k(3, 2);
  // [P-_11, P+_11] = 4 E_11 with the n/2 shift in E
  EXPECT_EQ(commutator(g.P_minus(1, 1), g.P_plus(1, 1)), Rational(4) * g.E(1, 1));
  // [E_12, P+_22] = 2 P+_12
  EXPECT_EQ(commutator(g.E(1, 2), g.P_plus(2, 2)), Rational(2) * g.P_plus(1, 2));
  EXPECT_TRUE(commutator(g.P_plus(1, 2), g.P_plus(2, 2)).is_zero());
  EXPECT_EQ(g.P_minus(2, 1), g.P_minus(1, 2));
}

TEST(Orth, CommutesWithSp2k) {
  const OrthGenerators o = build_orth(3, 2);
  const Sp2kGenerators g = build_sp2k(3, 2);
  for (const auto& l : o.generators)
    for (const auto& x : g.all()) EXPECT_TRUE(commutator(l.op, x.op).is_zero()) << l.id << x.id;
  EXPECT_EQ(o.L(2, 1), -o.L(1, 2));
}

class Relations : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(Relations, CertifiedBothWays) {
  const auto [n, k] = GetParam();
  const RelationReport r = certify_relations(n, k, 4);
  EXPECT_TRUE(r.all_passed());
  bool symbolic = false, applied = false;
  for (const auto& c : r.checks) {
    symbolic |= c.method == CertMethod::Symbolic;
    applied |= c.method == CertMethod::Applied;
  }
  EXPECT_TRUE(symbolic && applied);
}

INSTANTIATE_TEST_SUITE_P(Small, Relations,
                         ::testing::Values(std::make_tuple(1, 1), std::make_tuple(2, 2),
                                           std::make_tuple(3, 1), std::make_tuple(4, 2)));

TEST(SignedPerm, ActionIsAHomomorphism) {
  std::mt19937_64 rng(9);
  const Shape s{3, 2};
  const SignedPerm a = SignedPerm::transposition(3, 1, 3) * SignedPerm::reflection(3);
  const SignedPerm b = SignedPerm::minus_identity(3) * SignedPerm::transposition(3, 2, 3);
  for (int it = 0; it < 10; ++it) {
    const Polynomial p = oracle::random_polynomial(rng, s, 3, 4);
    EXPECT_EQ((a * b).act(p), a.act(b.act(p)));
    EXPECT_EQ(a.inverse().act(a.act(p)), p);
  }
  EXPECT_EQ(SignedPerm::reflection(4).determinant(), -1);
}

// --- harmonics -------------------------------------------------------------------

TEST(Harmonic, DimensionFormula) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= 6; ++d) {
      EXPECT_EQ(static_cast<std::int64_t>(harmonic_space(n, 1, d).dimension()),
                harmonic_dimension_formula(n, d))
          << n << "," << d;
      EXPECT_EQ(harmonic_dimension_formula(n, d),
                oracle::binom(n + d - 1, d) - oracle::binom(n + d - 3, d - 2));
    }
}

TEST(Harmonic, BasisIsAnnihilatedByEveryLaplacian) {
  const Sp2kGenerators g = build_sp2k(3, 2);
  const HarmonicSpace h = harmonic_space(3, 2, 3);
  ASSERT_FALSE(h.basis.empty());
  for (const auto& p : h.basis) {
    EXPECT_TRUE(p.is_homogeneous());
    EXPECT_EQ(p.degree(), 3);
    for (const auto& pm : g.p_minus) EXPECT_TRUE(pm.op.apply(p).is_zero());
  }
}

TEST(Harmonic, SeparationOfVariables) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 6; ++m) EXPECT_TRUE(separation_of_variables(n, m).passed()) << n << m;
}

// lowest weight of the ladder on H^d is d + n/2
TEST(Harmonic, LadderEigenvalues) {
  const WeightLadder w = weight_ladder(3, 0, 2);
  ASSERT_TRUE(w.passed());
  ASSERT_EQ(w.rungs.size(), 3u);
  EXPECT_EQ(w.rungs[0].eigenvalue, Rational(3, 2));
  EXPECT_EQ(w.rungs[1].eigenvalue, Rational(7, 2));
  EXPECT_EQ(w.rungs[2].eigenvalue, Rational(11, 2));
  for (int n = 2; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d)
      EXPECT_EQ(weight_ladder(n, d, 1).rungs[0].eigenvalue, Rational(2 * d + n, 2));
  EXPECT_THROW(weight_ladder(1, 3, 1), InvalidArgument);
}

TEST(Invariants, QuadraticAndPairings) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d) {
      const auto b = invariant_subspace(n, 1, d);
      ASSERT_EQ(b.size(), d % 2 == 0 ? 1u : 0u);
      if (!b.empty()) {
        const Polynomial q = invariant_quadratic(n).pow(d / 2);
        EXPECT_EQ(b[0].primitive(), q.primitive());
      }
    }
  const auto r = invariant_subspace(4, 2, 2);
  EXPECT_EQ(r.size(), 3u);
}

// --- null frame -----------------------------------------------------------------

TEST(NullFrame, RaisingCommutesWithLaplacians) {
  for (int n = 2; n <= 5; ++n) {
    const NullFrame f = build_null_frame(n, 2);
    for (const auto& x : f.raising)
      for (const auto& p : f.p_minus) EXPECT_TRUE(commutator(x.op, p.op).is_zero()) << n;
    for (const auto& x : f.lowering)
      for (const auto& e : f.gl_raising) EXPECT_TRUE(commutator(x.op, e.op).is_zero()) << n;
  }
}

TEST(NullFrame, CartanActsByWeight) {
  const NullFrame f = build_null_frame(5, 2);
  const auto basis = monomials_of_degree(10, 3);
  for (const auto& mono : basis) {
    const auto mu = f.so_weight(mono);
    const Polynomial p = Polynomial::monomial(f.shape, mono);
    for (std::size_t a = 0; a < f.cartan.size(); ++a)
      EXPECT_EQ(f.cartan[a].op.apply(p), Rational(mu[a]) * p);
  }
}

// a raising operator moves every term by the same so weight
TEST(NullFrame, RaisingShiftsWeightUniformly) {
  const NullFrame f = build_null_frame(4, 1);
  for (const auto& x : f.raising) {
    std::optional<std::vector<int>> shift;
    for (const auto& mono : monomials_of_degree(4, 2)) {
      const auto mu = f.so_weight(mono);
      const Polynomial image = x.op.apply(mono);
      for (const auto& t : image.terms()) {
        auto nu = f.so_weight(t.mono);
        for (std::size_t a = 0; a < nu.size(); ++a) nu[a] -= mu[a];
        if (!shift) shift = nu;
        EXPECT_EQ(nu, *shift) << x.id;
      }
    }
    ASSERT_TRUE(shift.has_value()) << x.id;
    // positive root: first nonzero entry positive
    const auto nz = std::find_if(shift->begin(), shift->end(), [](int v) { return v != 0; });
    ASSERT_NE(nz, shift->end());
    EXPECT_GT(*nz, 0) << x.id;
  }
}

TEST(NullFrame, HarmonicDimensionsMatchXFrame) {
  for (int n = 2; n <= 4; ++n)
    for (int d = 0; d <= 3; ++d) {
      const NullFrame f = build_null_frame(n, 2);
      std::vector<DiffOperator> ops;
      for (const auto& p : f.p_minus) ops.push_back(p.op);
      EXPECT_EQ(kernel_basis(ops, n, 2, d).size(), harmonic_space(n, 2, d).dimension());
    }
}

TEST(NullFrame, Dominance) {
  EXPECT_TRUE(so_dominant(4, {2, -2}));
  EXPECT_FALSE(so_dominant(4, {1, -2}));
  EXPECT_FALSE(so_dominant(5, {2, -1}));
  EXPECT_TRUE(so_dominant(3, {0}));
}
