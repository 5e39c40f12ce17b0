#include "theta/harmonic.hpp"

#include <algorithm>

#include "theta/errors.hpp"
#include "theta/graded_basis.hpp"
#include "theta/kernel.hpp"
#include "theta/oscillator.hpp"
#include "theta/signed_perm.hpp"

namespace theta {

namespace {

std::int64_t binom_count(int nvars, int d) {
  if (d < 0) return 0;
  return stars_and_bars(nvars, d).get_si();
}

// span(a) is contained in span(b)
bool within_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> both(b);
  both.insert(both.end(), a.begin(), a.end());
  return polynomial_rank(both) == polynomial_rank(b);
}

MonomialMap minus_identity_map(const SignedPerm& g, Shape s) {
  return [g, s](const Monomial& mono, std::vector<Term>& out) {
    auto [sign, image] = g.act(mono, s);
    out.push_back({image, Rational(sign)});
    out.push_back({mono, Rational(-1)});
  };
}

}  // namespace

HarmonicSpace harmonic_space(int n, int k, int d) {
  Shape s{n, k};
  s.validate();
  if (d < 0) throw InvalidArgument("harmonic_space: degree must be >= 0");
  Sp2kGenerators sp = build_sp2k(n, k);
  std::vector<DiffOperator> ops;
  for (const auto& p : sp.p_minus) ops.push_back(p.op);
  return {s, d, kernel_basis(ops, n, k, d)};
}

std::int64_t harmonic_dimension_formula(int n, int d) {
  if (d < 0) return 0;
  return binom_count(n, d) - binom_count(n, d - 2);
}

Polynomial invariant_quadratic(int n) { return column_pairing(n, 1, 1, 1); }

Polynomial column_pairing(int n, int k, int i, int j) {
  Shape s{n, k};
  s.validate();
  Polynomial out(s);
  for (int l = 1; l <= n; ++l) out += Polynomial::variable(s, l, i) * Polynomial::variable(s, l, j);
  return out;
}

SeparationCertificate separation_of_variables(int n, int m) {
  if (n < 1 || m < 0) throw InvalidArgument("separation_of_variables: need n >= 1, m >= 0");
  SeparationCertificate cert;
  cert.n = n;
  cert.m = m;
  cert.total_dimension = binom_count(n, m);
  const Polynomial q = invariant_quadratic(n);
  std::vector<Polynomial> combined;
  for (int j = 0; 2 * j <= m; ++j) {
    HarmonicSpace h = harmonic_space(n, 1, m - 2 * j);
    Polynomial qj = q.pow(j);
    for (const auto& v : h.basis) combined.push_back(qj * v);
    cert.pieces.push_back({j, m - 2 * j, static_cast<std::int64_t>(h.dimension())});
    cert.pieces_dimension += static_cast<std::int64_t>(h.dimension());
  }
  cert.combined_rank = static_cast<std::int64_t>(polynomial_rank(combined));
  return cert;
}

bool WeightLadder::passed() const {
  return e_injective && f_lowers && f_kills_base &&
         std::all_of(rungs.begin(), rungs.end(),
                     [](const LadderRung& r) { return r.eigenvalue_verified; });
}

WeightLadder weight_ladder(int n, int d, int rungs) {
  if (rungs < 0) throw InvalidArgument("weight_ladder: rungs must be >= 0");
  HarmonicSpace base = harmonic_space(n, 1, d);
  if (base.basis.empty())
    throw InvalidArgument("weight_ladder: H^" + std::to_string(d) + "[R^" + std::to_string(n) +
                          "] is zero");
  const Sl2Triple sl2 = build_sl2(n);
  const Polynomial q = invariant_quadratic(n);
  WeightLadder ladder;
  ladder.n = n;
  ladder.degree = d;
  Polynomial qj(q.shape(), Rational(1));
  for (int j = 0; j <= rungs; ++j) {
    LadderRung rung;
    rung.index = j;
    rung.eigenvalue = Rational(d + 2 * j) + Rational(n, 2);
    for (const auto& v : base.basis) rung.basis.push_back(qj * v);
    rung.eigenvalue_verified = std::all_of(rung.basis.begin(), rung.basis.end(), [&](const Polynomial& v) {
      return sl2.h.apply(v) == rung.eigenvalue * v;
    });
    ladder.rungs.push_back(std::move(rung));
    qj = qj * q;
  }
  ladder.e_injective = true;
  ladder.f_lowers = true;
  for (std::size_t j = 0; j + 1 < ladder.rungs.size(); ++j) {
    std::vector<Polynomial> e_images, f_images;
    for (const auto& v : ladder.rungs[j].basis) e_images.push_back(sl2.e.apply(v));
    for (const auto& v : ladder.rungs[j + 1].basis) f_images.push_back(sl2.f.apply(v));
    if (polynomial_rank(e_images) != ladder.rungs[j].basis.size() ||
        !within_span(e_images, ladder.rungs[j + 1].basis) ||
        polynomial_rank(e_images) != polynomial_rank(ladder.rungs[j + 1].basis))
      ladder.e_injective = false;
    if (!within_span(f_images, ladder.rungs[j].basis)) ladder.f_lowers = false;
  }
  ladder.f_kills_base = std::all_of(ladder.rungs.front().basis.begin(), ladder.rungs.front().basis.end(),
                                    [&](const Polynomial& v) { return sl2.f.apply(v).is_zero(); });
  return ladder;
}

std::vector<Polynomial> invariant_subspace(int n, int k, int d) {
  Shape s{n, k};
  s.validate();
  if (d < 0) throw InvalidArgument("invariant_subspace: degree must be >= 0");
  const OrthGenerators orth = build_orth(n, k);
  const SignedPerm r = SignedPerm::reflection(n);
  const SignedPerm minus = SignedPerm::minus_identity(n);
  std::vector<MonomialMap> maps;
  for (const auto& l : orth.generators) maps.push_back(as_map(l.op));
  maps.push_back(minus_identity_map(r, s));
  if (n % 2 == 0) maps.push_back(minus_identity_map(minus, s));
  GradedBasis basis = monomial_basis(n, k, d);
  return joint_kernel(s, basis.monomials(), maps).basis;
}

}  // namespace theta
