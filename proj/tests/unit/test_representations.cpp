#include <gtest/gtest.h>

#include <set>

#include "../oracles.hpp"
#include "theta/duality.hpp"
#include "theta/errors.hpp"
#include "theta/isotypic.hpp"
#include "theta/rep_params.hpp"

using namespace theta;

namespace {

OrthIrrepParam L(int n, std::vector<int> parts) { return {n, Partition(std::move(parts))}; }

}  // namespace

// --- partitions and labels ---------------------------------------------------

TEST(Partition, CountsMatchPartitionNumbers) {
  for (int s = 0; s <= 10; ++s) EXPECT_EQ(static_cast<std::int64_t>(partitions_of(s, s).size()), oracle::partition_count(s));
  const auto p = partitions_of(3, 3);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0].to_string(), "(3)");
  EXPECT_EQ(p[2].to_string(), "(1,1,1)");
  EXPECT_EQ(partitions_of(4, 2).size(), 3u);
}

TEST(Partition, ConjugateIsAnInvolution) {
  for (int s = 0; s <= 8; ++s)
    for (const auto& p : partitions_of(s, s)) {
      EXPECT_EQ(p.conjugate().conjugate(), p);
      EXPECT_EQ(p.conjugate().size(), p.size());
      EXPECT_EQ(Partition::from_columns(p.conjugate().parts()), p);
    }
  EXPECT_THROW(Partition({1, 2}), InvalidArgument);
  EXPECT_THROW(Partition({-1}), InvalidArgument);
  EXPECT_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
}

TEST(OrthParams, Admissibility) {
  EXPECT_TRUE(L(3, {2, 1}).admissible());
  EXPECT_FALSE(L(3, {2, 1, 1}).admissible());
  EXPECT_TRUE(L(3, {1, 1, 1}).admissible());
  EXPECT_FALSE(L(3, {2, 2, 1}).admissible());
  EXPECT_FALSE(L(2, {1, 1, 1}).admissible());
  EXPECT_THROW(L(3, {1, 1, 1, 1}).validate(), InvalidArgument);
  EXPECT_EQ(L(3, {2}).to_string(), "O(3)(2)");
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_orth_params(n, 4)) EXPECT_TRUE(p.admissible());
}

// tensoring with det twice is the identity
TEST(OrthParams, DetTwistIsAnInvolution) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_orth_params(n, 5)) {
      const auto t = det_twist(p);
      EXPECT_TRUE(t.admissible());
      EXPECT_EQ(det_twist(t), p);
      EXPECT_EQ(p.lambda.length() + t.lambda.length(), n);
    }
  EXPECT_EQ(det_twist(L(3, {})), L(3, {1, 1, 1}));
  EXPECT_EQ(det_twist(L(3, {2})), L(3, {2, 1}));
  EXPECT_EQ(det_twist(L(2, {1})), L(2, {1}));
}

TEST(GlDimension, HookContentOracle) {
  for (int k = 1; k <= 4; ++k)
    for (int s = 0; s <= 6; ++s)
      for (const auto& p : partitions_of(s, k)) {
        GlIrrepParam g{k, {}};
        for (int i = 1; i <= k; ++i) g.weight.emplace_back(p.part(i));
        EXPECT_EQ(gl_dimension(g), oracle::hook_content(p.parts(), k)) << p.to_string();
        // a uniform half-integral shift does not change the dimension
        for (auto& w : g.weight) w += Rational(3, 2);
        EXPECT_EQ(gl_dimension(g), oracle::hook_content(p.parts(), k));
      }
}

TEST(SoModule, WeylDimensionOracle) {
  for (int n = 3; n <= 6; ++n) {
    const int m = n / 2;
    std::vector<std::vector<int>> weights{{}};
    for (int a = 0; a < m; ++a) {
      std::vector<std::vector<int>> next;
      for (const auto& w : weights)
        for (int v = (n % 2 == 0 && a == m - 1) ? -2 : 0; v <= 2; ++v) {
          auto x = w;
          x.push_back(v);
          next.push_back(x);
        }
      weights = next;
    }
    for (const auto& mu : weights) {
      if (!so_dominant(n, mu)) continue;
      EXPECT_EQ(so_module_dimension(n, mu), oracle::weyl_so(n, mu)) << n;
    }
  }
}

TEST(OrthDimension, KnownTypes) {
  EXPECT_EQ(orth_dimension(L(3, {2})), 5);
  EXPECT_EQ(orth_dimension(L(3, {1, 1})), 3);
  EXPECT_EQ(orth_dimension(L(2, {1})), 2);
  EXPECT_EQ(orth_dimension(L(2, {1, 1})), 1);
  EXPECT_EQ(orth_dimension(L(4, {1, 1})), 6);
  EXPECT_EQ(orth_dimension(L(4, {2})), 9);
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_orth_params(n, 4))
      EXPECT_EQ(orth_dimension(p), oracle::orth_dim(n, p.lambda.parts())) << p.to_string();
}

TEST(Labels, RoundTripThroughSoWeight) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_orth_params(n, 4)) {
      const auto mu = so_highest_weight(p);
      EXPECT_EQ(static_cast<int>(mu.size()), so_rank(n));
      if (n % 2 == 1) {
        EXPECT_EQ(label_from_so_weight(n, mu, (p.lambda.size() % 2) ? -1 : 1), p);
      } else if (!is_paired_label(p) && (mu.empty() || mu.back() == 0)) {
        const bool small = p.lambda.length() <= n / 2;
        EXPECT_EQ(label_from_so_weight(n, mu, small ? 1 : -1), p) << p.to_string();
      }
    }
}

// --- decompositions --------------------------------------------------------------

TEST(Isotypic, SphericalHarmonicsAreIrreducible) {
  for (int n = 1; n <= 4; ++n) {
    const Theorem11Verdict v = check_theorem_1_1(n, 5);
    EXPECT_TRUE(v.passed()) << n;
    for (const auto& row : v.rows) {
      if (row.dimension == 0) continue;
      ASSERT_TRUE(row.label.has_value());
      EXPECT_EQ(orth_dimension(*row.label), row.dimension);
    }
  }
  const auto r = isotypic_decomposition(3, 1, 2, SpaceKind::Harmonic);
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0].label, L(3, {2}));
  EXPECT_EQ(r.verdict(), "irreducible");
  EXPECT_EQ(isotypic_decomposition(1, 1, 2, SpaceKind::Harmonic).verdict(), "zero");
}

TEST(Isotypic, DimensionsAddUp) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int d = 0; d <= 3; ++d)
        for (auto space : {SpaceKind::Harmonic, SpaceKind::Full}) {
          const auto r = isotypic_decomposition(n, k, d, space);
          EXPECT_TRUE(r.dimension_check()) << n << k << d << to_string(space);
          EXPECT_TRUE(r.hwv_verified);
          if (space == SpaceKind::Full)
            EXPECT_EQ(r.space_dimension, oracle::binom(n * k + d - 1, d));
        }
  EXPECT_THROW(isotypic_decomposition(6, 1, 1, SpaceKind::Harmonic), UnsupportedRank);
}

TEST(Isotypic, HarmonicsMultiplicityFreeAndInjective) {
  for (auto [n, k] : {std::pair{2, 2}, {3, 1}, {3, 2}, {4, 2}}) {
    const Theorem12Verdict v = check_theorem_1_2(n, k, 3);
    EXPECT_TRUE(v.passed()) << n << k;
    EXPECT_TRUE(v.multiplicity_free);
    EXPECT_TRUE(v.label_determines_weight && v.weight_determines_label);
  }
}

TEST(Isotypic, ComponentsAreJointHighestWeightVectors) {
  const NullFrame f = build_null_frame(3, 2);
  const auto r = isotypic_decomposition(3, 2, 3, SpaceKind::Harmonic);
  for (const auto& c : r.components)
    for (const auto& v : c.hwv_basis)
      EXPECT_TRUE(is_joint_hwv(f, v, c.so_weight, c.column_degrees, SpaceKind::Harmonic));
}

TEST(Isotypic, FullSpaceSplitsBySeparation) {
  // C^2[R^2] = H^2 + q H^0
  const auto r = isotypic_decomposition(2, 1, 2, SpaceKind::Full);
  EXPECT_EQ(r.verdict(), "reducible");
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.space_dimension, 3);
}

// --- duality ---------------------------------------------------------------------

TEST(Occurrence, TrivialAndDeterminant) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(first_occurrence(L(n, {})).n_pi, 0);
    std::vector<int> det(static_cast<std::size_t>(n), 1);
    const auto r = first_occurrence(L(n, det));
    EXPECT_EQ(r.n_pi, n) << n;
    EXPECT_TRUE(r.monotone());
  }
}

TEST(Occurrence, WitnessesAreVerified) {
  const auto r = first_occurrence(L(3, {2, 1}));
  ASSERT_EQ(r.n_pi, 2);
  const auto& w = r.witnesses[2];
  ASSERT_TRUE(w.present && w.hwv);
  const NullFrame f = build_null_frame(3, 2);
  EXPECT_TRUE(is_joint_hwv(f, *w.hwv, so_highest_weight(L(3, {2, 1})), w.column_degrees,
                           SpaceKind::Harmonic));
}

TEST(Conservation, SumsToN) {
  for (int n = 1; n <= 3; ++n) {
    const auto c = conservation_check(n, 3);
    EXPECT_TRUE(c.passed()) << n;
    EXPECT_TRUE(c.predictions_hold()) << n;
  }
}

TEST(Persistence, DeterminantAtThree) {
  const auto r = persistence_check(L(3, {1, 1, 1}), 4);
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.steps.size(), 5u);
  EXPECT_FALSE(r.steps[2].present);
  EXPECT_TRUE(r.steps[3].present);
  EXPECT_TRUE(r.steps[4].present);
  EXPECT_EQ(r.steps[4].carried_witness_verified, true);
}

TEST(StableRange, EverythingAtKEqualsN) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(stable_range_check(n, 3).passed()) << n;
}

TEST(GlDuality, CauchyIdentity) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 4; ++d) {
        const auto c = gl_duality_check(m, n, d);
        EXPECT_TRUE(c.passed()) << m << n << d;
        EXPECT_EQ(c.expected, oracle::binom(m * n + d - 1, d));
        std::int64_t sum = 0;
        for (const auto& p : partitions_of(d, std::min(m, n)))
          sum += oracle::hook_content(p.parts(), m) * oracle::hook_content(p.parts(), n);
        EXPECT_EQ(c.total, sum);
      }
  EXPECT_EQ(gl_duality_check(2, 2, 2).total, 10);
  EXPECT_THROW(gl_duality_check(5, 1, 1), UnsupportedRank);
}

// occurrence is searched on harmonics only; the full space must carry the same O(n)-types
TEST(Occurrence, HarmonicsSeeEveryTypeOfTheFullSpace) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 3; ++k) {
      std::set<OrthIrrepParam> full, harm;
      for (int d = 0; d <= 4; ++d) {
        for (const auto& c : isotypic_decomposition(n, k, d, SpaceKind::Full).components)
          full.insert(c.label);
        for (const auto& c : isotypic_decomposition(n, k, d, SpaceKind::Harmonic).components)
          harm.insert(c.label);
      }
      EXPECT_EQ(full, harm) << n << "x" << k;
    }
}
