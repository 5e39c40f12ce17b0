#include "theta/oscillator.hpp"

#include <optional>
#include <algorithm>
#include <set>

#include "theta/errors.hpp"
#include "theta/graded_basis.hpp"
#include "theta/linear_algebra.hpp"
#include "theta/parallel.hpp"
#include "theta/text_format.hpp"
#include "packed_apply.hpp"

namespace theta {

namespace {

std::string pair_id(const char* prefix, int i, int j) {
  return std::string(prefix) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

Polynomial x(Shape s, int row, int col) { return Polynomial::variable(s, row, col); }
DiffOperator d(Shape s, int row, int col) { return DiffOperator::derivative(s, row, col); }
DiffOperator mul(const Polynomial& p) { return DiffOperator::multiplication(p); }

// sum_l x_{l,i} d_{l,j} (no shift)
DiffOperator euler_ij(Shape s, int i, int j) {
  DiffOperator out(s);
  for (int l = 1; l <= s.n; ++l) out = out + compose(mul(x(s, l, i)), d(s, l, j));
  return out;
}

std::size_t sym_index(int k, int i, int j) {
  if (i > j) std::swap(i, j);
  // position of (i,j), i <= j, in row-major upper-triangular order
  std::size_t pos = 0;
  for (int r = 1; r < i; ++r) pos += static_cast<std::size_t>(k - r + 1);
  return pos + static_cast<std::size_t>(j - i);
}

struct Task {
  std::string id;
  const DiffOperator* a = nullptr;
  const DiffOperator* b = nullptr;
  std::optional<DiffOperator> expected;             // explicit right-hand side
  const std::vector<NamedOperator>* span = nullptr;  // or membership in a span
  const SignedPerm* g = nullptr;                     // or commutation with g
};

std::optional<DiffOperator> solve_in_span(const DiffOperator& target,
                                          const std::vector<NamedOperator>& family) {
  std::set<std::pair<Monomial, Monomial>> keys;
  auto t_coords = target.coordinates();
  for (const auto& [key, v] : t_coords) keys.insert(key);
  std::vector<std::map<std::pair<Monomial, Monomial>, Rational>> f_coords;
  for (const auto& f : family) {
    f_coords.push_back(f.op.coordinates());
    for (const auto& [key, v] : f_coords.back()) keys.insert(key);
  }
  RationalMatrix a(keys.size(), family.size());
  std::vector<Rational> b(keys.size());
  std::size_t r = 0;
  for (const auto& key : keys) {
    for (std::size_t c = 0; c < family.size(); ++c) {
      auto it = f_coords[c].find(key);
      if (it != f_coords[c].end()) a.at(r, c) = it->second;
    }
    auto it = t_coords.find(key);
    if (it != t_coords.end()) b[r] = it->second;
    ++r;
  }
  auto sol = a.solve(b);
  if (!sol) return std::nullopt;
  DiffOperator combo(target.shape());
  for (std::size_t c = 0; c < family.size(); ++c)
    if (!(*sol)[c].is_zero()) combo = combo + (*sol)[c] * family[c].op;
  return combo;
}

std::string failure(const Shape& s, const Monomial& m) {
  return "fails on " + format_polynomial(Polynomial::monomial(s, m));
}

// Packed variant of applied_bracket; nullopt when packing does not fit.
std::optional<bool> packed_bracket(const DiffOperator& a, const DiffOperator& b,
                                   const DiffOperator& c, const std::vector<Monomial>& monomials,
                                   std::string& detail) {
  using namespace detail;
  const int nvars = a.shape().variables();
  auto pa = compile(a), pb = compile(b), pc = compile(c);
  if (!pa || !pb || !pc) return std::nullopt;
  int cap = 0;
  for (const auto& m : monomials) cap = std::max(cap, m.degree());
  if (cap + pa->max_raise + pb->max_raise > kPackMaxExponent ||
      cap + pc->max_raise > kPackMaxExponent)
    return std::nullopt;
  std::int64_t ab = 0;
  if (__builtin_mul_overflow(pa->den, pb->den, &ab)) return std::nullopt;
  const std::int64_t scale_ab = pc->den;
  const std::int64_t scale_c = ab;
  PackedVec first, acc;
  try {
    for (const auto& m : monomials) {
      const PackedKey key = pack(m, nvars);
      acc.clear();
      first.clear();
      apply_packed(*pb, key, scale_ab, first);
      for (const auto& [k2, c2] : first) apply_packed(*pa, k2, c2, acc);
      first.clear();
      apply_packed(*pa, key, -scale_ab, first);
      for (const auto& [k2, c2] : first) apply_packed(*pb, k2, c2, acc);
      apply_packed(*pc, key, -scale_c, acc);
      if (!cancels(acc)) {
        detail = failure(a.shape(), m);
        return false;
      }
    }
  } catch (const PackOverflow&) {
    return std::nullopt;
  }
  return true;
}

// A(B(m)) - B(A(m)) - C(m) == 0 for every m.
bool applied_bracket(const DiffOperator& a, const DiffOperator& b, const DiffOperator& c,
                     const std::vector<Monomial>& monomials, std::string& detail) {
  if (auto fast = packed_bracket(a, b, c, monomials, detail)) return *fast;
  std::vector<Term> first;
  std::vector<Term> acc;
  for (const auto& m : monomials) {
    acc.clear();
    first.clear();
    b.apply_into(m, Rational(1), first);
    normalize_terms(first);
    for (const auto& t : first) a.apply_into(t.mono, t.coef, acc);
    first.clear();
    a.apply_into(m, Rational(1), first);
    normalize_terms(first);
    for (const auto& t : first) b.apply_into(t.mono, -t.coef, acc);
    c.apply_into(m, Rational(-1), acc);
    normalize_terms(acc);
    if (!acc.empty()) {
      detail = failure(a.shape(), m);
      return false;
    }
  }
  return true;
}

// Signed permutation on packed keys: x_{l,j} -> sign(l) x_{perm(l),j}.
std::pair<int, detail::PackedKey> packed_act(const SignedPerm& g, const Shape& s,
                                             detail::PackedKey key) {
  using namespace detail;
  int sign = 1;
  PackedKey out = 0;
  for (int l = 0; l < s.n; ++l)
    for (int j = 0; j < s.k; ++j) {
      int e = packed_exponent(key, l * s.k + j);
      if (e == 0) continue;
      if (g.sign(l) < 0 && (e % 2) == 1) sign = -sign;
      out |= static_cast<PackedKey>(e) << (kPackBits * (g.perm(l) * s.k + j));
    }
  return {sign, out};
}

std::optional<bool> packed_conjugation(const SignedPerm& g, const DiffOperator& op,
                                       const std::vector<Monomial>& monomials,
                                       std::string& detail) {
  using namespace detail;
  const Shape& s = op.shape();
  auto po = compile(op);
  if (!po) return std::nullopt;
  int cap = 0;
  for (const auto& m : monomials) cap = std::max(cap, m.degree());
  if (cap + po->max_raise > kPackMaxExponent) return std::nullopt;
  PackedVec img, acc;
  try {
    for (const auto& m : monomials) {
      const PackedKey key = pack(m, s.variables());
      acc.clear();
      img.clear();
      apply_packed(*po, key, 1, img);
      for (const auto& [k2, c2] : img) {
        auto [sign, gk] = packed_act(g, s, k2);
        acc.emplace_back(gk, sign * c2);
      }
      auto [sign, gk] = packed_act(g, s, key);
      apply_packed(*po, gk, -sign, acc);
      if (!cancels(acc)) {
        detail = failure(s, m);
        return false;
      }
    }
  } catch (const PackOverflow&) {
    return std::nullopt;
  }
  return true;
}

// g(X(m)) == X(g(m)) for every m.
bool applied_conjugation(const SignedPerm& g, const DiffOperator& op,
                         const std::vector<Monomial>& monomials, std::string& detail) {
  if (auto fast = packed_conjugation(g, op, monomials, detail)) return *fast;
  const Shape& s = op.shape();
  std::vector<Term> acc;
  std::vector<Term> img;
  for (const auto& m : monomials) {
    acc.clear();
    img.clear();
    op.apply_into(m, Rational(1), img);
    for (const auto& t : img) {
      auto [sign, gm] = g.act(t.mono, s);
      acc.push_back({gm, sign < 0 ? -t.coef : t.coef});
    }
    auto [sign, gm] = g.act(m, s);
    op.apply_into(gm, Rational(sign < 0 ? 1 : -1), acc);
    normalize_terms(acc);
    if (!acc.empty()) {
      detail = failure(s, m);
      return false;
    }
  }
  return true;
}

}  // namespace

Sl2Triple build_sl2(int n) {
  Shape s{n, 1};
  s.validate();
  Sl2Triple t{n, DiffOperator(s), DiffOperator(s), DiffOperator(s)};
  Polynomial q(s);
  DiffOperator lap(s);
  DiffOperator euler(s);
  for (int i = 1; i <= n; ++i) {
    q += x(s, i, 1) * x(s, i, 1);
    lap = lap + compose(d(s, i, 1), d(s, i, 1));
    euler = euler + compose(mul(x(s, i, 1)), d(s, i, 1));
  }
  t.e = Rational(-1, 2) * mul(q);
  t.h = DiffOperator::scalar(s, Rational(n, 2)) + euler;
  t.f = Rational(1, 2) * lap;
  return t;
}

const DiffOperator& Sp2kGenerators::E(int i, int j) const {
  return gl.at(static_cast<std::size_t>((i - 1) * shape.k + (j - 1))).op;
}
const DiffOperator& Sp2kGenerators::P_plus(int i, int j) const {
  return p_plus.at(sym_index(shape.k, i, j)).op;
}
const DiffOperator& Sp2kGenerators::P_minus(int i, int j) const {
  return p_minus.at(sym_index(shape.k, i, j)).op;
}

std::vector<NamedOperator> Sp2kGenerators::all() const {
  std::vector<NamedOperator> out = p_plus;
  out.insert(out.end(), gl.begin(), gl.end());
  out.insert(out.end(), p_minus.begin(), p_minus.end());
  return out;
}

Sp2kGenerators build_sp2k(int n, int k) {
  Shape s{n, k};
  s.validate();
  if (k < 1) throw InvalidArgument("build_sp2k: k must be >= 1");
  Sp2kGenerators g{s, {}, {}, {}};
  for (int i = 1; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      Polynomial r(s);
      DiffOperator lap(s);
      for (int l = 1; l <= n; ++l) {
        r += x(s, l, i) * x(s, l, j);
        lap = lap + compose(d(s, l, i), d(s, l, j));
      }
      g.p_plus.push_back({pair_id("P+", i, j), mul(r)});
      g.p_minus.push_back({pair_id("P-", i, j), lap});
    }
  }
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      DiffOperator e = euler_ij(s, i, j);
      if (i == j) e = DiffOperator::scalar(s, Rational(n, 2)) + e;
      g.gl.push_back({pair_id("E", i, j), e});
    }
  return g;
}

DiffOperator OrthGenerators::L(int a, int b) const {
  if (a == b) throw InvalidArgument("L_aa is not a generator");
  if (a > b) return -L(b, a);
  for (const auto& g : generators)
    if (g.id == pair_id("L", a, b)) return g.op;
  throw InvalidArgument("L index out of range");
}

OrthGenerators build_orth(int n, int k) {
  Shape s{n, k};
  s.validate();
  OrthGenerators out{s, {}};
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      DiffOperator op(s);
      for (int j = 1; j <= k; ++j)
        op = op + compose(mul(x(s, a, j)), d(s, b, j)) - compose(mul(x(s, b, j)), d(s, a, j));
      out.generators.push_back({pair_id("L", a, b), op});
    }
  return out;
}

const DiffOperator& GlPairGenerators::R(int a, int b) const {
  return row_side.at(static_cast<std::size_t>((a - 1) * shape.n + (b - 1))).op;
}
const DiffOperator& GlPairGenerators::C(int i, int j) const {
  return column_side.at(static_cast<std::size_t>((i - 1) * shape.k + (j - 1))).op;
}

GlPairGenerators build_gl_pair(int m, int n) {
  Shape s{m, n};
  s.validate();
  GlPairGenerators out{s, {}, {}};
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) {
      DiffOperator op(s);
      for (int j = 1; j <= n; ++j) op = op + compose(mul(x(s, a, j)), d(s, b, j));
      out.row_side.push_back({pair_id("R", a, b), op});
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.column_side.push_back({pair_id("C", i, j), euler_ij(s, i, j)});
  return out;
}

std::vector<std::pair<std::string, SignedPerm>> signed_perm_generators(int n) {
  std::vector<std::pair<std::string, SignedPerm>> out;
  for (int a = 1; a < n; ++a)
    out.emplace_back("s(" + std::to_string(a) + "," + std::to_string(a + 1) + ")",
                     SignedPerm::transposition(n, a, a + 1));
  out.emplace_back("r", SignedPerm::reflection(n));
  out.emplace_back("-1", SignedPerm::minus_identity(n));
  return out;
}

bool RelationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

RelationReport certify_relations(int n, int k, int degree_cap, int threads) {
  Shape s{n, k};
  s.validate();
  if (k < 1) throw InvalidArgument("certify_relations: k must be >= 1");
  if (degree_cap < 2) throw InvalidArgument("certify_relations: degree_cap must be >= 2");

  const Sp2kGenerators sp = build_sp2k(n, k);
  const OrthGenerators orth = build_orth(n, k);
  const auto perms = signed_perm_generators(n);
  const std::vector<NamedOperator> sp_all = sp.all();
  std::optional<Sl2Triple> sl2;
  if (k == 1) sl2 = build_sl2(n);

  std::vector<Task> tasks;
  auto bracket = [](const NamedOperator& a, const NamedOperator& b) {
    return "[" + a.id + "," + b.id + "]";
  };

  if (sl2) {
    tasks.push_back({"sl2: [e,f] = h", &sl2->e, &sl2->f, sl2->h, nullptr, nullptr});
    tasks.push_back({"sl2: [h,e] = 2e", &sl2->h, &sl2->e, Rational(2) * sl2->e, nullptr, nullptr});
    tasks.push_back({"sl2: [h,f] = -2f", &sl2->h, &sl2->f, Rational(-2) * sl2->f, nullptr, nullptr});
  }

  // gl_k: [E_ij, E_st] = delta_js E_it - delta_ti E_sj
  for (std::size_t p = 0; p < sp.gl.size(); ++p) {
    for (std::size_t q = p + 1; q < sp.gl.size(); ++q) {
      int i = static_cast<int>(p) / k + 1, j = static_cast<int>(p) % k + 1;
      int si = static_cast<int>(q) / k + 1, t = static_cast<int>(q) % k + 1;
      DiffOperator rhs(s);
      if (j == si) rhs = rhs + sp.E(i, t);
      if (t == i) rhs = rhs - sp.E(si, j);
      tasks.push_back({"gl: " + bracket(sp.gl[p], sp.gl[q]), &sp.gl[p].op, &sp.gl[q].op, rhs,
                       nullptr, nullptr});
    }
  }
  for (const auto& e : sp.gl) {
    for (const auto& pp : sp.p_plus)
      tasks.push_back({"gl x p+: " + bracket(e, pp) + " in p+", &e.op, &pp.op, std::nullopt,
                       &sp.p_plus, nullptr});
    for (const auto& pm : sp.p_minus)
      tasks.push_back({"gl x p-: " + bracket(e, pm) + " in p-", &e.op, &pm.op, std::nullopt,
                       &sp.p_minus, nullptr});
  }
  for (std::size_t p = 0; p < sp.p_plus.size(); ++p)
    for (std::size_t q = p + 1; q < sp.p_plus.size(); ++q)
      tasks.push_back({"p+ x p+: " + bracket(sp.p_plus[p], sp.p_plus[q]) + " = 0", &sp.p_plus[p].op,
                       &sp.p_plus[q].op, DiffOperator(s), nullptr, nullptr});
  for (std::size_t p = 0; p < sp.p_minus.size(); ++p)
    for (std::size_t q = p + 1; q < sp.p_minus.size(); ++q)
      tasks.push_back({"p- x p-: " + bracket(sp.p_minus[p], sp.p_minus[q]) + " = 0",
                       &sp.p_minus[p].op, &sp.p_minus[q].op, DiffOperator(s), nullptr, nullptr});
  for (const auto& pp : sp.p_plus)
    for (const auto& pm : sp.p_minus)
      tasks.push_back({"p+ x p-: " + bracket(pp, pm) + " in gl", &pp.op, &pm.op, std::nullopt,
                       &sp.gl, nullptr});

  // so(n): [L_ab, L_cd] = d_bc L_ad + d_ad L_bc - d_bd L_ac - d_ac L_bd
  std::vector<std::pair<int, int>> ab;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) ab.emplace_back(a, b);
  for (std::size_t p = 0; p < ab.size(); ++p) {
    for (std::size_t q = p + 1; q < ab.size(); ++q) {
      auto [a, b] = ab[p];
      auto [c, dd] = ab[q];
      DiffOperator rhs(s);
      if (b == c) rhs = rhs + orth.L(a, dd);
      if (a == dd) rhs = rhs + orth.L(b, c);
      if (b == dd) rhs = rhs - orth.L(a, c);
      if (a == c) rhs = rhs - orth.L(b, dd);
      tasks.push_back({"so(n): " + bracket(orth.generators[p], orth.generators[q]),
                       &orth.generators[p].op, &orth.generators[q].op, rhs, nullptr, nullptr});
    }
  }
  for (const auto& l : orth.generators)
    for (const auto& xop : sp_all)
      tasks.push_back({"o(n) x sp: " + bracket(l, xop) + " = 0", &l.op, &xop.op, DiffOperator(s),
                       nullptr, nullptr});
  for (const auto& [name, g] : perms)
    for (const auto& xop : sp_all)
      tasks.push_back({"O(n) x sp: " + name + " " + xop.id + " " + name + "^-1 = " + xop.id,
                       &xop.op, nullptr, std::nullopt, nullptr, &g});

  const std::vector<Monomial> monomials = monomials_up_to(s, degree_cap);

  auto run = [&](std::size_t index) {
    const Task& task = tasks[index];
    std::pair<RelationCheck, RelationCheck> out;
    RelationCheck& sym = out.first;
    RelationCheck& app = out.second;
    sym.relation = app.relation = task.id;
    sym.method = CertMethod::Symbolic;
    app.method = CertMethod::Applied;
    if (task.g) {
      sym.passed = task.g->conjugate(*task.a) == *task.a;
      if (!sym.passed) sym.detail = "conjugate = " + format_operator(task.g->conjugate(*task.a));
      app.passed = applied_conjugation(*task.g, *task.a, monomials, app.detail);
      return out;
    }
    DiffOperator lhs = commutator(*task.a, *task.b);
    std::optional<DiffOperator> rhs = task.expected;
    if (task.span) {
      rhs = solve_in_span(lhs, *task.span);
      if (!rhs) {
        sym.passed = false;
        sym.detail = "bracket " + format_operator(lhs) + " is not in the span";
        app.passed = false;
        app.detail = "no symbolic coefficients to test";
        return out;
      }
      sym.detail = "= " + format_operator(*rhs);
    }
    sym.passed = lhs == *rhs;
    if (!sym.passed) sym.detail = "bracket = " + format_operator(lhs);
    app.passed = applied_bracket(*task.a, *task.b, *rhs, monomials, app.detail);
    return out;
  };

  auto results = parallel_map(tasks.size(), threads, run);
  RelationReport report;
  report.shape = s;
  report.degree_cap = degree_cap;
  report.monomials_checked = monomials.size();
  for (auto& [sym, app] : results) {
    report.checks.push_back(std::move(sym));
    report.checks.push_back(std::move(app));
  }
  return report;
}

}  // namespace theta
