#ifndef SEPDEF_DEFORM_HPP
#define SEPDEF_DEFORM_HPP

#include <string>
#include <vector>

#include "sepdef/algebra.hpp"
#include "sepdef/linalg.hpp"

namespace sepdef {

// ---------------------------------------------------------------------------
// deformation recipes: one-parameter families of algebras given by a monic
// polynomial quotient which recovers a group algebra at the base point

struct DeformationRecipe {
  std::string tag;  // cyclic | split-cyclic | symmetric-dihedral
  int r = 0;        // rank of the cyclic group being deformed
  int p = 0, m = 0;  // r = p^m for the prime-power recipes
  Ring ring;
  UniPoly f;          // monic defining polynomial in x
  AlgebraPtr algebra;  // the quotient by f
};

inline bool is_prime_power(int r, int& p, int& m) {
  if (r < 2) return false;
  for (int d = 2; d * d <= r; ++d)
    if (r % d == 0) {
      p = d;
      m = 0;
      while (r % d == 0) r /= d, ++m;
      return r == 1;
    }
  p = r;
  m = 1;
  return true;
}

inline UniPoly specialize_unipoly(const UniPoly& f, const Substitution& s) {
  std::vector<Scalar> c;
  for (int i = 0; i <= f.degree(); ++i) c.push_back(specialize(f.coeff(i), s));
  return UniPoly(std::move(c), s.target);
}

/// x^r - t*x - 1 over Z[t]; at t = 0 this is the group algebra of C_r
inline DeformationRecipe cyclic_deformation(int r) {
  if (r < 2) throw ring_error("cyclic deformation needs r >= 2");
  Ring rg{};
  Scalar t = Scalar::variable("t", rg);
  std::vector<Scalar> c(r + 1, Scalar(0, rg));
  c[0] = Scalar(-1, rg);
  c[1] = -t;
  c[r] = Scalar(1, rg);
  DeformationRecipe d;
  d.tag = "cyclic";
  d.r = r;
  d.ring = rg;
  d.f = UniPoly(std::move(c), rg);
  d.algebra = Algebra::quotient(d.f);
  return d;
}

/// product form over Z[zeta_r][t] with all roots eta^i (1+t): expands to
/// x^r - (1+t)^r, and at t = 0 it is x^r - 1
inline DeformationRecipe split_cyclic_deformation(int r) {
  DeformationRecipe d;
  if (!is_prime_power(r, d.p, d.m))
    throw ring_error("split cyclic deformation needs a prime power");
  Ring rg{0, static_cast<unsigned>(r)};
  Scalar eta = Scalar::root(rg);
  Scalar c = parse_scalar("1 + t", rg);
  UniPoly f = UniPoly::constant(Scalar(1, rg));
  UniPoly x = UniPoly::x(rg);
  for (int i = 0; i < r; ++i)
    f = f * (x - UniPoly::constant(eta.pow(i) * c));
  // cross-check the closed form x^r - (1+t)^r
  std::vector<Scalar> g(r + 1, Scalar(0, rg));
  g[0] = -c.pow(r);
  g[r] = Scalar(1, rg);
  if (!(f == UniPoly(std::move(g), rg)))
    throw ring_error("split cyclic product does not expand to x^r - (1+t)^r");
  d.tag = "split-cyclic";
  d.r = r;
  d.ring = rg;
  d.f = f;
  d.algebra = Algebra::quotient(d.f);
  return d;
}

/// the palindromic form over Z[zeta_r][q, q^-1] whose root multiset is stable
/// under x -> x^-1; p odd uses roots eta^i q^i for |i| <= (r-1)/2, p = 2 uses
/// q, q^-1 and the pairs q^{2i} eta^i, q^{-2i} eta^{-i}
inline DeformationRecipe symmetric_dihedral_deformation(int p, int m) {
  DeformationRecipe d;
  int r = 1;
  for (int i = 0; i < m; ++i) r *= p;
  int pp, mm;
  if (m < 1 || !is_prime_power(r, pp, mm) || pp != p)
    throw ring_error("symmetric dihedral deformation needs r = p^m, p prime");
  Ring rg{0, static_cast<unsigned>(r)};
  Scalar eta = Scalar::root(rg);
  Scalar q = Scalar::variable("q", rg);
  UniPoly x = UniPoly::x(rg);
  auto lin = [&](const Scalar& root) { return x - UniPoly::constant(root); };
  UniPoly f = UniPoly::constant(Scalar(1, rg));
  if (p % 2 == 1) {
    for (int i = -(r - 1) / 2; i <= (r - 1) / 2; ++i) {
      int e = ((i % r) + r) % r;
      f = f * lin(eta.pow(e) * q.pow(i));
    }
  } else {
    f = lin(q) * lin(q.inverse());
    for (int i = 1; i <= r / 2 - 1; ++i)
      f = f * lin(q.pow(2 * i) * eta.pow(i)) *
          lin(q.pow(-2 * i) * eta.pow(r - i));
  }
  // symmetry f(x) = (-x)^r f(x^-1), i.e. f_i = (-1)^r f_{r-i}
  Scalar sign(r % 2 == 0 ? 1 : -1, rg);
  for (int i = 0; i <= r; ++i)
    if (!(f.coeff(i) == sign * f.coeff(r - i)))
      throw ring_error("symmetric dihedral form is not palindromic");
  d.tag = "symmetric-dihedral";
  d.r = r;
  d.p = p;
  d.m = m;
  d.ring = rg;
  d.f = f;
  d.algebra = Algebra::quotient(d.f);
  return d;
}

/// the involution x -> x^-1 of a quotient by a palindromic polynomial
struct InvolutionReport {
  AlgebraElement x_inverse;
  bool unit_check = false;   // x * x^-1 = x^-1 * x = 1
  bool products_checked = false;  // the exhaustive basis-product audit ran
  bool automorphism = false;
  bool order_two = false;
};

/// The map x -> x^-1 extends to an algebra morphism exactly when f(x^-1) = 0
/// in the quotient, which the palindromic coefficient symmetry guarantees; the
/// optional exhaustive audit re-checks multiplicativity and phi^2 = id on all
/// basis products (skipped above the budget: coefficient growth over the
/// larger cyclotomic fields makes it take minutes there).
inline InvolutionReport inversion_involution(const DeformationRecipe& d,
                                             size_t product_budget = 7) {
  const AlgebraPtr& A = d.algebra;
  const UniPoly& f = d.f;
  Scalar c0 = f.coeff(0);
  if (!(c0 == Scalar(1, d.ring)) && !(c0 == Scalar(-1, d.ring)))
    throw ring_error("constant term must be a unit for the inversion");
  // from f(x) = 0: x * sum_{i>=1} f_i x^{i-1} = -f_0
  Algebra::Row row;
  Scalar scale = -c0.inverse();
  for (int i = 1; i <= f.degree(); ++i) {
    Scalar v = scale * f.coeff(i);
    if (!v.is_zero()) row[static_cast<size_t>(i - 1)] = v;
  }
  InvolutionReport rep{AlgebraElement(A, std::move(row))};
  AlgebraElement x1 = AlgebraElement::basis(A, 1);
  rep.unit_check = x1 * rep.x_inverse == AlgebraElement::unit(A) &&
                   rep.x_inverse * x1 == AlgebraElement::unit(A);
  if (!rep.unit_check || A->dim() > product_budget) return rep;
  rep.products_checked = true;
  std::vector<AlgebraElement> img;  // phi(x^k) = (x^-1)^k
  for (size_t k = 0; k < A->dim(); ++k)
    img.push_back(rep.x_inverse.pow(static_cast<unsigned>(k)));
  auto phi = [&](const AlgebraElement& a) {
    AlgebraElement out = AlgebraElement::zero(A);
    for (size_t k = 0; k < A->dim(); ++k) out += a.coeff(k) * img[k];
    return out;
  };
  rep.automorphism = true;
  for (size_t i = 0; i < A->dim() && rep.automorphism; ++i)
    for (size_t j = 0; j < A->dim(); ++j) {
      AlgebraElement lhs = phi(AlgebraElement::basis(A, i) * AlgebraElement::basis(A, j));
      if (!(lhs == img[i] * img[j])) {
        rep.automorphism = false;
        break;
      }
    }
  rep.order_two = true;
  for (size_t i = 0; i < A->dim(); ++i)
    if (!(phi(img[i]) == AlgebraElement::basis(A, i))) {
      rep.order_two = false;
      break;
    }
  return rep;
}

// ---------------------------------------------------------------------------
// deformed C2 idempotents over Z[q, q^-1, 1/(1+q^2)]

struct C2Idempotents {
  AlgebraPtr A;  // k[a] / (a^2 - (q - q^-1) a - 1)
  AlgebraElement e, f;
};

inline C2Idempotents deformed_c2_idempotents() {
  Ring rg{};
  Scalar qq = parse_scalar("q - q^-1", rg);
  UniPoly min({Scalar(-1, rg), -qq, Scalar(1, rg)}, rg);
  AlgebraPtr A = Algebra::quotient(min, "a");
  Scalar inv2q2 = parse_scalar("1 + q^2", rg).inverse();
  AlgebraElement one = AlgebraElement::unit(A);
  AlgebraElement a = AlgebraElement::basis(A, 1);
  Scalar q = Scalar::variable("q", rg);
  C2Idempotents out{A, inv2q2 * (one + q * a), inv2q2 * (q.pow(2) * one - q * a)};
  if (!(out.e + out.f == one) || !(out.e * out.e == out.e) ||
      !(out.f * out.f == out.f) || !(out.e * out.f).is_zero() ||
      !(out.f * out.e).is_zero())
    throw ring_error("deformed idempotent identities failed");
  return out;
}

// ---------------------------------------------------------------------------
// the 8-dimensional two-stage deformation of F2(C2 wr C2)

/// which normalization the first-stage deformation of F2C2 uses
enum class C2Recipe {
  TForm,  // a^2 = t a + 1 + t, idempotent e = (1+a)/t
  Hecke,  // a^2 = (q - q^-1) a + 1 with q = 1 + t, e = (1 + qa)/(1+q^2)
};

struct Section3Data {
  C2Recipe recipe;
  AlgebraPtr ef;        // basis ee, ef, fe, ff and their sigma twins; param u
  AlgebraElement sigma; // sigma inside ef
  AlgebraPtr orig;      // same algebra on the 1,a tensor basis; params t, u
  AlgebraPtr orig_sub;  // orig with u substituted (t*v or t^2*v)
  std::string u_subst;  // the substitution that was applied
  bool integral = false;  // all structure constants of orig_sub polynomial
};

namespace detail {

inline bool scalar_is_polynomial(const Scalar& s) {
  return s.den().terms().size() == 1 && s.den().terms().begin()->first.v.empty();
}

}  // namespace detail

inline Section3Data section3_build(C2Recipe recipe = C2Recipe::TForm) {
  const Ring f2{2, 1};
  const Scalar zero(0, f2), one(1, f2);
  Scalar u = Scalar::variable("u", f2);
  // basis: index x*2 + y + 4*s with x, y in {e=0, f=1}, s the sigma flag.
  // products (char 2):
  //   (xy)(x'y')       = d_{xx'} d_{yy'} (xy)
  //   (xy)(x'y' s)     = d_{xx'} d_{yy'} (xy s)
  //   (xy s)(x'y')     = d_{xy'} d_{yx'} (xy s)
  //   (xy s)(x'y' s)   = d_{xy'} d_{yx'} * (xy)            if x != y
  //                    = d_{xy'} d_{yx'} * ((1+u)(xx) + u (xx s))  if x == y
  std::vector<std::string> labels;
  for (int s = 0; s < 2; ++s)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        std::string l;
        l += (x ? 'f' : 'e');
        l += 'x';
        l += (y ? 'f' : 'e');
        if (s) l += ".s";
        labels.push_back(l);
      }
  auto idx = [](int x, int y, int s) {
    return static_cast<size_t>(4 * s + 2 * x + y);
  };
  std::vector<std::vector<Algebra::Row>> table(8, std::vector<Algebra::Row>(8));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int s = 0; s < 2; ++s)
        for (int x2 = 0; x2 < 2; ++x2)
          for (int y2 = 0; y2 < 2; ++y2)
            for (int s2 = 0; s2 < 2; ++s2) {
              Algebra::Row& out = table[idx(x, y, s)][idx(x2, y2, s2)];
              bool match = s == 0 ? (x == x2 && y == y2) : (x == y2 && y == x2);
              if (!match) continue;
              if (s == 0) {
                out[idx(x, y, s2)] = one;
              } else if (s2 == 0) {
                out[idx(x, y, 1)] = one;
              } else if (x != y) {
                out[idx(x, y, 0)] = one;
              } else {
                out[idx(x, x, 0)] = one + u;
                out[idx(x, x, 1)] = u;
              }
            }
  Algebra::Row unit;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) unit[idx(x, y, 0)] = one;
  Section3Data data;
  data.recipe = recipe;
  data.ef = Algebra::from_table("sec3-ef", f2, labels, std::move(table), unit);
  Algebra::Row sig;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) sig[idx(x, y, 1)] = one;
  data.sigma = AlgebraElement(data.ef, std::move(sig));

  // change of basis to the original 1, a tensor basis: columns of c give the
  // (e, f) coordinates of 1 and a
  Scalar t = Scalar::variable("t", f2);
  std::vector<std::vector<Scalar>> c(2, std::vector<Scalar>(2, zero));
  if (recipe == C2Recipe::TForm) {
    // 1 = e + f, a = (1+t) e + f
    c = {{one, one + t}, {one, one}};
  } else {
    // 1 = e + f, a = q e + q^-1 f with q = 1 + t (char 2)
    Scalar q = one + t;
    c = {{one, q}, {one, q.inverse()}};
  }
  Mat P(8, 8, f2);
  for (int s = 0; s < 2; ++s)
    for (int xi = 0; xi < 2; ++xi)
      for (int yi = 0; yi < 2; ++yi)
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y)
            P.at(idx(x, y, s), idx(xi, yi, s)) = c[x][xi] * c[y][yi];
  Mat Pinv = mat_inverse(P);
  std::vector<std::string> olabels;
  for (int s = 0; s < 2; ++s)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        std::string l;
        l += (x ? 'a' : '1');
        l += 'x';
        l += (y ? 'a' : '1');
        if (s) l += ".s";
        olabels.push_back(l);
      }
  auto col = [&](size_t j) {
    Algebra::Row r;
    for (size_t i = 0; i < 8; ++i)
      if (!P.at(i, j).is_zero()) r[i] = P.at(i, j);
    return AlgebraElement(data.ef, std::move(r));
  };
  std::vector<std::vector<Algebra::Row>> otable(8, std::vector<Algebra::Row>(8));
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j) {
      AlgebraElement prod = col(i) * col(j);
      Algebra::Row r;
      for (size_t k = 0; k < 8; ++k) {
        Scalar v(0, f2);
        for (size_t l = 0; l < 8; ++l) {
          if (Pinv.at(k, l).is_zero()) continue;
          v += Pinv.at(k, l) * prod.coeff(l);
        }
        if (!v.is_zero()) r[k] = v;
      }
      otable[i][j] = std::move(r);
    }
  data.orig = Algebra::from_table("sec3-orig", f2, olabels, std::move(otable),
                                  {{0, one}});

  // two-parameter form: the t-form becomes polynomial after u = t v; the
  // Hecke-normalized embedding needs u = t^2 v
  data.u_subst = recipe == C2Recipe::TForm ? "t*v" : "t^2*v";
  Substitution sub(f2);
  sub.set("u", parse_scalar(data.u_subst, f2));
  Substitution t0(f2);
  t0.set("t", Scalar(0, f2));
  // "integral" means no t in any denominator: for the t-form all structure
  // constants become honest polynomials; the Hecke-normalized embedding keeps
  // denominators that are powers of q = 1 + t, a unit at t = 0
  auto t_free_denominator = [&](const Scalar& w) {
    if (recipe == C2Recipe::TForm) return detail::scalar_is_polynomial(w);
    return !specialize(Scalar(w.den()), t0).is_zero();
  };
  std::vector<std::vector<Algebra::Row>> stable(8, std::vector<Algebra::Row>(8));
  data.integral = true;
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j)
      for (const auto& [k, v] : data.orig->table[i][j]) {
        Scalar w = specialize(v, sub);
        if (!t_free_denominator(w)) data.integral = false;
        stable[i][j][k] = w;
      }
  data.orig_sub = Algebra::from_table("sec3-orig-" + data.u_subst, f2, olabels,
                                      std::move(stable), {{0, one}});
  if (!data.integral)
    throw ring_error("structure constants not integral after u = " + data.u_subst);
  return data;
}

// ---------------------------------------------------------------------------
// the deformed action matrices for D_{n+1} = C2^n x| S_{n+1}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat z(a.rows * b.rows, a.cols * b.cols, a.ring);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < a.cols; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (size_t k = 0; k < b.rows; ++k)
        for (size_t l = 0; l < b.cols; ++l)
          z.at(i * b.rows + k, j * b.cols + l) = a.at(i, j) * b.at(k, l);
    }
  return z;
}

/// matrix of the map sending basis vector j to basis vector img[j]
inline Mat perm_matrix(const std::vector<size_t>& img, const Ring& rg) {
  Mat p(img.size(), img.size(), rg);
  for (size_t j = 0; j < img.size(); ++j) p.at(img[j], j) = Scalar(1, rg);
  return p;
}

inline Mat int_matrix(const std::vector<std::vector<int>>& v, const Ring& rg) {
  Mat m(v.size(), v[0].size(), rg);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v[i].size(); ++j) m.at(i, j) = Scalar(v[i][j], rg);
  return m;
}

/// reduce a rational function of q at q = 1 + t modulo 2, then set t = 0
inline Scalar mod2_then_t0(const Scalar& x) {
  Ring f2{2, 1};
  Substitution qt{Ring{}};
  qt.set("q", parse_scalar("1 + t"));
  Scalar y = specialize(x, qt);
  // clear rational denominators of both numerator and denominator, then
  // remove the common power of 2
  mpz_class lcm = 1;
  auto fold = [&](const Poly& p) {
    for (const auto& [mo, c] : p.terms())
      lcm = lcm / gcd(lcm, c.rational().get_den()) * c.rational().get_den();
  };
  fold(y.num());
  fold(y.den());
  auto ints = [&](const Poly& p) {
    std::map<Mono, mpz_class, MonoLess> out;
    for (const auto& [mo, c] : p.terms()) {
      mpq_class v = c.rational() * lcm;
      out[mo] = v.get_num();
    }
    return out;
  };
  auto nn = ints(y.num()), dd = ints(y.den());
  auto all_even = [](const std::map<Mono, mpz_class, MonoLess>& m) {
    for (const auto& [mo, c] : m)
      if (c % 2 != 0) return false;
    return true;
  };
  while (!dd.empty() && all_even(nn) && all_even(dd)) {
    for (auto& [mo, c] : nn) c /= 2;
    for (auto& [mo, c] : dd) c /= 2;
  }
  auto build = [&](const std::map<Mono, mpz_class, MonoLess>& m) {
    Poly p(f2);
    for (const auto& [mo, c] : m) {
      Num v(mpq_class(c), f2);
      if (!v.is_zero()) p = p + Poly::term(mo, v);
    }
    return p;
  };
  Poly num2 = build(nn), den2 = build(dd);
  if (den2.is_zero()) throw pole_error("denominator vanishes mod 2");
  Scalar red(num2, den2);
  Substitution t0(f2);
  t0.set("t", Scalar(0, f2));
  return specialize(red, t0);
}

inline Mat mat_mod2_then_t0(const Mat& m) {
  Mat out(m.rows, m.cols, Ring{2, 1});
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) out.at(i, j) = mod2_then_t0(m.at(i, j));
  return out;
}

inline Mat mat_specialize(const Mat& m, const Substitution& s) {
  Mat out(m.rows, m.cols, s.target);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) out.at(i, j) = specialize(m.at(i, j), s);
  return out;
}

/// permutation of the idempotent-monomial basis induced by tau_i = (i, n+1):
/// monomials with e in slot i are fixed; those with f in slot i keep that f
/// and swap e and f everywhere else (slot bits: 0 = e, 1 = f, slot 1 leading)
inline std::vector<size_t> tau_ef_action(int n, int i) {
  size_t dim = size_t(1) << n;
  std::vector<size_t> img(dim);
  size_t bit = size_t(1) << (n - i);  // slot i counted from the left
  for (size_t j = 0; j < dim; ++j)
    img[j] = (j & bit) ? (~j & (dim - 1)) | bit : j;
  return img;
}

/// permutation of tensor slots i, i+1 on the same basis
inline std::vector<size_t> slot_swap_action(int n, int i) {
  size_t dim = size_t(1) << n;
  std::vector<size_t> img(dim);
  size_t bi = size_t(1) << (n - i), bj = size_t(1) << (n - i - 1);
  for (size_t j = 0; j < dim; ++j) {
    size_t v = j & ~(bi | bj);
    if (j & bi) v |= bj;
    if (j & bj) v |= bi;
    img[j] = v;
  }
  return img;
}

struct Section11Data {
  int n = 2;
  Ring rg;  // Q with parameter q
  Mat X, Y, Yinv;
  std::vector<Mat> gens;  // images of (1,2), ..., (n, n+1) on the 1,a basis
  // golden material for n = 2
  Mat golden_Yinv, P23, P24, P34, YP24Yinv, golden_YP24Yinv, N, W;
};

inline Section11Data section11_matrices(int n = 2) {
  if (n < 2 || n > 4) throw ring_error("section 11 matrices support 2 <= n <= 4");
  Section11Data d;
  d.n = n;
  d.rg = Ring{};
  const Ring& rg = d.rg;
  Scalar q = Scalar::variable("q", rg);
  Scalar s2 = parse_scalar("1 + q^2", rg);  // the quantum two 2_{q^2}
  d.X = Mat(2, 2, rg);
  d.X.at(0, 0) = Scalar(1, rg);
  d.X.at(0, 1) = q.pow(2);
  d.X.at(1, 0) = q;
  d.X.at(1, 1) = -q;
  d.X = s2.inverse() * d.X;
  Mat Xinv = mat_inverse(d.X);
  d.Y = d.X;
  d.Yinv = Xinv;
  for (int i = 1; i < n; ++i) {
    d.Y = kron(d.Y, d.X);
    d.Yinv = kron(d.Yinv, Xinv);
  }
  for (int i = 1; i < n; ++i)
    d.gens.push_back(perm_matrix(slot_swap_action(n, i), rg));
  d.gens.push_back(d.Y * perm_matrix(tau_ef_action(n, n), rg) * d.Yinv);
  if (n == 2) {
    d.P23 = perm_matrix({0, 2, 1, 3}, rg);
    d.P24 = perm_matrix({0, 3, 2, 1}, rg);
    d.P34 = perm_matrix({0, 1, 3, 2}, rg);
    d.YP24Yinv = d.Y * d.P24 * d.Yinv;
    auto e = [&](const std::string& s) { return parse_scalar(s, rg); };
    d.golden_Yinv = Mat(4, 4, rg);
    std::vector<std::vector<std::string>> yi = {
        {"1", "q", "q", "q^2"},
        {"1", "-q^-1", "q", "-1"},
        {"1", "q", "-q^-1", "-1"},
        {"1", "-q^-1", "-q^-1", "q^-2"}};
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) d.golden_Yinv.at(i, j) = e(yi[i][j]);
    std::vector<std::vector<std::string>> yp = {
        {"(1+q^2)^2", "0", "q^5 - q", "1 - q^4"},
        {"0", "(1+q^2)^2", "1 - q^4", "q^3 - q^-1"},
        {"0", "0", "1 - q^4", "2*(q^3 + q)"},
        {"0", "0", "2*(q^3 + q)", "q^4 - 1"}};  // (4,4) sign fixed: trace must be 2
    d.golden_YP24Yinv = Mat(4, 4, rg);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j)
        d.golden_YP24Yinv.at(i, j) = s2.pow(-2) * e(yp[i][j]);
    Ring f2{2, 1};
    d.N = int_matrix(
        {{1, 0, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}}, f2);
    d.W = int_matrix(
        {{1, 1, 1, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 1, 1, 1}}, f2);
  }
  return d;
}

/// Coxeter relations of S_{n+1} for candidate generator matrices
inline bool coxeter_relations_hold(const std::vector<Mat>& g) {
  if (g.empty()) return false;
  size_t dim = g[0].rows;
  Mat id = Mat::identity(dim, g[0].ring);
  for (const auto& m : g)
    if (!(m * m == id)) return false;
  for (size_t i = 0; i + 1 < g.size(); ++i)
    if (!(g[i] * g[i + 1] * g[i] == g[i + 1] * g[i] * g[i + 1])) return false;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 2; j < g.size(); ++j)
      if (!(g[i] * g[j] == g[j] * g[i])) return false;
  return true;
}

}  // namespace sepdef

#endif
