#ifndef SEPDEF_VERIFY_HPP
#define SEPDEF_VERIFY_HPP

#include <functional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "sepdef/blocks.hpp"
#include "sepdef/hecke.hpp"
#include "sepdef/separability.hpp"

namespace sepdef {

namespace verify_detail {

inline const Ring& rq() {
  static const Ring r{};
  return r;
}
inline const Ring& rf2() {
  static const Ring r{2, 1};
  return r;
}

struct Checker {
  bool ok = true;
  void require(bool cond) { ok = ok && cond; }
};

inline TensorElement make_e(
    const AlgebraPtr& A, const std::string& denom,
    const std::vector<std::tuple<size_t, size_t, std::string>>& terms) {
  Scalar dinv = parse_scalar(denom, A->ring).inverse();
  TensorElement e({A, A});
  for (const auto& [i, j, c] : terms) e.add({i, j}, dinv * parse_scalar(c, A->ring));
  return e;
}

/// the closed-form idempotent for x^3 - t x - 1 with denominator 4t^3 - 27
inline TensorElement cyclic3_t_golden(const AlgebraPtr& A) {
  return make_e(A, "4*t^3 - 27",
                {{0, 0, "-9 + 4*t^3"},
                 {1, 1, "2*t^2"},
                 {2, 2, "6*t"},
                 {0, 1, "6*t"},
                 {1, 0, "6*t"},
                 {0, 2, "-4*t^2"},
                 {2, 0, "-4*t^2"},
                 {1, 2, "-9"},
                 {2, 1, "-9"}});
}

inline AlgebraPtr s_form_algebra() {
  Scalar S = Scalar::variable("s", rq());
  return Algebra::quotient(UniPoly({Scalar(-1, rq()), S, -S, Scalar(1, rq())}, rq()));
}

/// the closed-form idempotent for x^3 - s x^2 + s x - 1, denominator (s+1)(s-3)^3
inline TensorElement s_form_golden(const AlgebraPtr& A) {
  return make_e(A, "(s+1)*(s-3)^3",
                {{0, 0, "(s-3)*(s^3 - 3*s^2 + s + 3)"},
                 {1, 1, "2*s*(s-2)*(s+1)*(s-3)"},
                 {2, 2, "2*s*(s-3)"},
                 {0, 1, "-s*(s-2)*(s+1)*(s-3)"},
                 {1, 0, "-s*(s-2)*(s+1)*(s-3)"},
                 {0, 2, "s*(s-1)*(s-3)"},
                 {2, 0, "s*(s-1)*(s-3)"},
                 {1, 2, "-(2*s-3)*(s+1)*(s-3)"},
                 {2, 1, "-(2*s-3)*(s+1)*(s-3)"}});
}

/// the classical (1/3)(1(x)1 + x(x)x^2 + x^2(x)x)
inline TensorElement classical_c3(const AlgebraPtr& A0) {
  TensorElement e({A0, A0});
  Scalar third = Scalar(3, rq()).inverse();
  e.add({0, 0}, third);
  e.add({1, 2}, third);
  e.add({2, 1}, third);
  return e;
}

inline AlgebraElement random_element(std::mt19937& rng, const AlgebraPtr& A) {
  Algebra::Row r;
  std::uniform_int_distribution<int> coef(-3, 3);
  for (size_t i = 0; i < A->dim(); ++i) {
    int c = coef(rng);
    if (c) r[i] = Scalar(c, A->ring);
  }
  return AlgebraElement(A, std::move(r));
}

inline bool criterion1() {
  Checker c;
  auto d = cyclic_deformation(3);
  const AlgebraPtr& A = d.algebra;
  TensorElement golden = cyclic3_t_golden(A);
  c.require(verify_idempotent(golden).all());
  auto res = solve_idempotent(A, {AlgebraElement::basis(A, 1)});
  c.require(res.consistent && res.issued);
  c.require(res.e == golden);  // commutative: the element is unique
  Substitution t0(rq());
  t0.set("t", "0");
  auto A0 = Algebra::quotient(specialize_unipoly(d.f, t0));
  TensorElement e0 = map_tensor(golden, {A0, A0}, t0);
  c.require(verify_idempotent(e0).all());
  c.require(e0 == classical_c3(A0));
  return c.ok;
}

inline bool criterion2() {
  Checker c;
  auto A = s_form_algebra();
  TensorElement golden = s_form_golden(A);
  c.require(verify_idempotent(golden).all());
  Substitution s0(rq());
  s0.set("s", "0");
  Scalar S = Scalar::variable("s", rq());
  auto A0 = Algebra::quotient(
      specialize_unipoly(UniPoly({Scalar(-1, rq()), S, -S, Scalar(1, rq())}, rq()), s0));
  TensorElement e0 = map_tensor(golden, {A0, A0}, s0);
  c.require(verify_idempotent(e0).all());
  c.require(e0 == classical_c3(A0));
  return c.ok;
}

inline bool criterion3() {
  Checker c;
  c.require(discriminant(cyclic_deformation(3).f) == parse_scalar("4*t^3 - 27"));

  auto d = symmetric_dihedral_deformation(3, 1);
  Scalar s = -d.f.coeff(2);
  c.require(d.f.coeff(3) == Scalar(1, d.ring));
  c.require(d.f.coeff(1) == s);
  c.require(d.f.coeff(0) == Scalar(-1, d.ring));
  // s equals the root sum 1 + eta q + eta^2 q^-1
  Scalar eta = Scalar::root(d.ring);
  Scalar q = Scalar::variable("q", d.ring);
  c.require(s == Scalar(1, d.ring) + eta * q + eta.pow(2) * q.inverse());
  c.require(discriminant(d.f) ==
            (s + Scalar(1, d.ring)) * (s - Scalar(3, d.ring)).pow(3));

  // palindromic identity f(x) = (-x)^r f(x^-1), i.e. f_i = (-1)^r f_{r-i}
  for (auto [p, m] : {std::pair{3, 1}, {5, 1}, {3, 2}, {2, 1}, {2, 2}, {2, 3}}) {
    auto dd = symmetric_dihedral_deformation(p, m);
    Scalar sign(dd.r % 2 == 0 ? 1 : -1, dd.ring);
    for (int i = 0; i <= dd.r; ++i)
      c.require(dd.f.coeff(i) == sign * dd.f.coeff(dd.r - i));
  }
  return c.ok;
}

inline bool criterion4(unsigned seed) {
  Checker c;
  Scalar qq = parse_scalar("q - q^-1");
  // defining relations: quadratic, length-additive, braid/commuting
  {
    int n = 3;
    HeckeElement one = HeckeElement::unit(n);
    for (int i = 1; i < n; ++i) {
      HeckeElement T = HeckeElement::generator(n, i);
      c.require(T * T == qq * T + one);
    }
    for (const auto& v : all_perms(n))
      for (const auto& w : all_perms(n))
        if (coxeter_length(v) + coxeter_length(w) == coxeter_length(perm_mul(v, w)))
          c.require(HeckeElement::basis(n, v) * HeckeElement::basis(n, w) ==
                    HeckeElement::basis(n, perm_mul(v, w)));
  }
  for (int n : {3, 4}) {
    for (int i = 1; i + 1 < n; ++i) {
      HeckeElement a = HeckeElement::generator(n, i);
      HeckeElement b = HeckeElement::generator(n, i + 1);
      c.require(a * b * a == b * a * b);
    }
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        c.require(HeckeElement::generator(n, i) * HeckeElement::generator(n, j) ==
                  HeckeElement::generator(n, j) * HeckeElement::generator(n, i));
  }
  // associativity on 200 random triples in H4
  {
    auto perms = all_perms(4);
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
      HeckeElement a = HeckeElement::basis(4, perms[rng() % perms.size()]);
      HeckeElement b = HeckeElement::basis(4, perms[rng() % perms.size()]);
      HeckeElement d = HeckeElement::basis(4, perms[rng() % perms.size()]);
      c.require((a * b) * d == a * (b * d));
    }
  }
  // q = 1 reproduces the full S3 multiplication table (36 entries)
  {
    Group S3 = Group::symmetric(3);
    auto ZS3 = Algebra::group_algebra(S3, rq());
    for (const auto& v : all_perms(3))
      for (const auto& w : all_perms(3)) {
        HeckeElement prod = HeckeElement::basis(3, v) * HeckeElement::basis(3, w);
        c.require(specialize_q1(prod, ZS3, S3) ==
                  AlgebraElement::basis(
                      ZS3, S3.index_of(GroupElement::permutation(perm_mul(v, w)))));
      }
  }
  // solver certificates for H2 and H3 with quantum-factorial denominators
  {
    auto H2 = hecke_algebra(2);
    size_t id = H2->unit.begin()->first;
    auto r2 = solve_idempotent(H2, {AlgebraElement::basis(H2, 1 - id)});
    c.require(r2.consistent && r2.issued);
    Scalar ref2 = parse_scalar("q") * quantum_factorial(2, parse_scalar("q^2"));
    c.require(divides_power(denominator_lcm(r2.e), ref2.num()));

    auto H3 = hecke_algebra(3);
    std::vector<AlgebraElement> gens;
    for (size_t i = 0; i < H3->dim(); ++i)
      if (H3->labels[i] == "T[(1,2)]" || H3->labels[i] == "T[(2,3)]")
        gens.push_back(AlgebraElement::basis(H3, i));
    auto r3 = solve_idempotent(H3, gens);
    c.require(r3.consistent && r3.issued);
    Scalar ref3 = parse_scalar("q") * quantum_factorial(3, parse_scalar("q^2"));
    c.require(divides_power(denominator_lcm(r3.e), ref3.num(), 40));
  }
  return c.ok;
}

inline bool criterion5(unsigned seed) {
  Checker c;
  std::mt19937 rng(seed);
  for (size_t n : {2, 3, 4}) {
    auto Mn = Algebra::matrix_algebra(n, rq());
    TensorElement T = switch_element(Mn);
    c.require(T * T == TensorElement::unit({Mn, Mn}));
    for (int trial = 0; trial < 100; ++trial) {
      AlgebraElement a = random_element(rng, Mn);
      AlgebraElement b = random_element(rng, Mn);
      c.require(T * tensor({a, b}) * T == tensor({b, a}));
    }
  }
  for (size_t n : {2, 3}) {
    auto Mn = Algebra::matrix_algebra(n, rq());
    std::vector<AlgebraPtr> f3 = {Mn, Mn, Mn};
    auto embed = [&](int p, int q) {
      TensorElement T(f3);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          for (size_t k = 0; k < n; ++k) {
            TensorElement::Key key(3);
            key[p] = i * n + j;
            key[q] = j * n + i;
            key[3 - p - q] = k * n + k;
            T.add(key, Scalar(1, rq()));
          }
      return T;
    };
    TensorElement T12 = embed(0, 1), T23 = embed(1, 2);
    TensorElement lhs = T12 * T23 * T12;
    c.require(lhs == T23 * T12 * T23);
    c.require(lhs == embed(0, 2));
  }
  return c.ok;
}

inline bool criterion6() {
  Checker c;
  auto d = section3_build();
  // sigma * sigma on the group basis
  auto B = d.orig;
  AlgebraElement sig = AlgebraElement::basis(B, 4);
  Scalar u = Scalar::variable("u", rf2());
  Scalar ut = parse_scalar("u/t", rf2());
  AlgebraElement want(B, {{0, Scalar(1, rf2()) + u},
                          {1, ut},
                          {2, ut},
                          {4, u},
                          {5, ut},
                          {6, ut}});
  c.require(sig * sig == want);
  // the 4-dimensional summand satisfies the matrix-unit relations
  auto A = d.ef;
  AlgebraElement E11 = AlgebraElement::basis(A, 1);
  AlgebraElement E22 = AlgebraElement::basis(A, 2);
  AlgebraElement E12 = AlgebraElement::basis(A, 5);
  AlgebraElement E21 = AlgebraElement::basis(A, 6);
  std::vector<std::vector<AlgebraElement>> E = {{E11, E12}, {E21, E22}};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
          AlgebraElement prod = E[a][b] * E[x][y];
          c.require(b == x ? prod == E[a][y] : prod.is_zero());
        }
  // u = t v clears all denominators
  c.require(d.integral && d.u_subst == "t*v");
  // the resulting algebra is separable over F2(t, v)
  const AlgebraPtr& S = d.orig_sub;
  std::vector<AlgebraElement> gens = {
      AlgebraElement::basis(S, S->label_index("1xa")),
      AlgebraElement::basis(S, S->label_index("ax1")),
      AlgebraElement::basis(S, S->label_index("1x1.s"))};
  auto res = solve_idempotent(S, gens);
  c.require(res.consistent && res.issued);
  return c.ok;
}

inline bool criterion7(int max_n) {
  Checker c;
  for (int n = 1; n <= std::min(10, max_n); ++n) {
    auto d = qbn_blocks(n);
    c.require(d.audit_ok && d.total_dim == factorial(n) << n);
    size_t sq = 0;
    for (size_t b : d.block_dims) sq += b * b;
    c.require(sq == d.total_dim);
  }
  for (int n = 1; n <= std::min(4, max_n); ++n)
    c.require(qbn_blocks(n).block_count == conjugacy_classes(Group::weyl_b(n)).size());
  return c.ok;
}

inline bool criterion8(int max_n) {
  Checker c;
  auto d3 = qdn_blocks(3);
  c.require(d3.total_dim == 24);
  c.require(d3.block_dims == std::vector<size_t>({1, 1, 2, 3, 3}));
  c.require(d3.block_dims == qsn_block_dims(4));
  if (max_n >= 4) {
    auto d4 = qdn_blocks(4);
    c.require(d4.total_dim == 192);
    size_t middle = 0;
    for (const auto& s : d4.summands)
      if (s.index.size() == 2) middle += s.dimension;
    c.require(middle == 72);
  }
  if (max_n >= 5) c.require(qdn_blocks(5).total_dim == 1920);
  for (int n : {3, 4, 5}) {
    if (n > max_n && n > 3) continue;
    c.require(qdn_blocks(n).block_count == conjugacy_classes(Group::weyl_d(n)).size());
  }
  return c.ok;
}

inline bool criterion9(int max_n) {
  Checker c;
  for (int n = 2; n <= std::min(10, std::max(2, max_n)); ++n) {
    // homomorphism: the generator images satisfy the Coxeter relations
    std::vector<std::vector<size_t>> g;
    for (int i = 1; i < n; ++i) g.push_back(slot_swap_action(n, i));
    g.push_back(tau_ef_action(n, n));
    std::vector<size_t> id(size_t(1) << n);
    for (size_t i = 0; i < id.size(); ++i) id[i] = i;
    for (const auto& x : g) c.require(compose_action(x, x) == id);
    for (size_t i = 0; i + 1 < g.size(); ++i)
      c.require(compose_action(g[i], compose_action(g[i + 1], g[i])) ==
                compose_action(g[i + 1], compose_action(g[i], g[i + 1])));
    for (size_t i = 0; i < g.size(); ++i)
      for (size_t j = i + 2; j < g.size(); ++j)
        c.require(compose_action(g[i], g[j]) == compose_action(g[j], g[i]));
    // faithfulness: all transposition images are pairwise distinct (any
    // nontrivial kernel would identify two of them)
    std::vector<std::vector<size_t>> trans;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j)
        trans.push_back(slot_perm_action(n, transposition(n, i, j)));
      trans.push_back(tau_ef_action(n, i));
    }
    for (size_t i = 0; i < trans.size(); ++i) {
      c.require(trans[i] != id);
      for (size_t j = i + 1; j < trans.size(); ++j) c.require(trans[i] != trans[j]);
    }
    // orbit sizes and stabilizer orders match the closed forms
    auto data = dn_orbit_data(n);
    c.require(data.sizes_partition && data.all_formulas_ok);
  }
  for (int r : {1, 2, 3}) c.require(lemmaD_check(r).ok());
  return c.ok;
}

inline bool criterion10() {
  Checker c;
  auto d = section11_matrices(2);
  c.require(d.Yinv == d.golden_Yinv);
  c.require(d.YP24Yinv == d.golden_YP24Yinv);
  c.require(d.Y * d.P23 == d.P23 * d.Y);
  Substitution q1(rq());
  q1.set("q", Scalar(1, rq()));
  c.require(mat_specialize(d.YP24Yinv, q1) == d.P34);
  c.require(mat_mod2_then_t0(d.YP24Yinv) == d.N);
  Mat Winv = mat_inverse(d.W);
  Mat P23_2 = mat_mod2_then_t0(d.P23);
  Mat P34_2 = mat_mod2_then_t0(d.P34);
  c.require(d.W * P23_2 * Winv == P23_2);
  c.require(d.W * d.N * Winv == P34_2);
  return c.ok;
}

inline bool criterion11() {
  Checker c;
  for (int r : {2, 3, 4}) {
    auto d = cyclic_deformation(r);
    auto res = solve_idempotent(d.algebra, {AlgebraElement::basis(d.algebra, 1)});
    c.require(res.consistent && res.issued);
    Scalar disc = discriminant(d.f);
    c.require(!disc.is_zero());
    c.require(divides_power(denominator_lcm(res.e), disc.num()));
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      Ring fp{p, 1};
      Substitution to_fp(fp);
      if (specialize(disc, to_fp).is_zero()) continue;  // disc not invertible
      auto Ap = Algebra::quotient(specialize_unipoly(d.f, to_fp));
      TensorElement ep = map_tensor(res.e, {Ap, Ap}, to_fp);
      c.require(verify_idempotent(ep).all());
    }
  }
  return c.ok;
}

}  // namespace verify_detail

struct VerifyItem {
  int id = 0;
  std::string label;
  std::function<bool()> run;
};

/// the full verification suite; max_n caps the n ranges of the enumerative
/// criteria, seed drives the randomized checks
inline std::vector<VerifyItem> verify_suite(unsigned seed = 12345, int max_n = 10) {
  using namespace verify_detail;
  return {
      {1, "cyclic cubic idempotent, t form (golden + solver + t=0 limit)",
       [] { return criterion1(); }},
      {2, "cyclic cubic idempotent, s form (golden + s=0 limit)",
       [] { return criterion2(); }},
      {3, "discriminants and palindromic symmetry", [] { return criterion3(); }},
      {4, "Hecke relations, q=1 table, H2/H3 certificates",
       [seed] { return criterion4(seed); }},
      {5, "switch element identities and braid relation",
       [seed] { return criterion5(seed + 1); }},
      {6, "eight-dimensional wreath deformation end to end",
       [] { return criterion6(); }},
      {7, "hyperoctahedral block audits", [max_n] { return criterion7(max_n); }},
      {8, "Weyl D block audits", [max_n] { return criterion8(max_n); }},
      {9, "string action certificates and orbit formulas",
       [max_n] { return criterion9(max_n); }},
      {10, "deformed action matrices vs golden displays",
       [] { return criterion10(); }},
      {11, "cyclic solutions reduce consistently modulo p",
       [] { return criterion11(); }},
  };
}

}  // namespace sepdef

#endif
