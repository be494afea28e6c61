#ifndef SEPDEF_SEPARABILITY_HPP
#define SEPDEF_SEPARABILITY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "sepdef/algebra.hpp"

namespace sepdef {

/// thrown when a computation would exceed its declared size budget
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// bimodule actions and the A (x) A^op product

/// multiplication map mu(sum c_pq b_p (x) b_q) = sum c_pq b_p b_q
inline AlgebraElement multiplication_map(const TensorElement& e) {
  if (e.factors().size() != 2 || e.factors()[0] != e.factors()[1])
    throw ring_error("multiplication map needs a 2-tensor over one algebra");
  const AlgebraPtr& A = e.factors()[0];
  AlgebraElement out = AlgebraElement::zero(A);
  for (const auto& [k, v] : e.terms())
    out += v * (AlgebraElement::basis(A, k[0]) * AlgebraElement::basis(A, k[1]));
  return out;
}

/// left bimodule action a . (x (x) y) = ax (x) y
inline TensorElement left_act(const AlgebraElement& a, const TensorElement& e) {
  const AlgebraPtr& A = e.factors().at(0);
  TensorElement out(e.factors());
  for (const auto& [k, v] : e.terms())
    for (const auto& [i, ci] : a.coeffs())
      for (const auto& [p, cp] : A->table[i][k[0]]) out.add({p, k[1]}, v * ci * cp);
  return out;
}

/// right bimodule action (x (x) y) . a = x (x) ya
inline TensorElement right_act(const TensorElement& e, const AlgebraElement& a) {
  const AlgebraPtr& A = e.factors().at(1);
  TensorElement out(e.factors());
  for (const auto& [k, v] : e.terms())
    for (const auto& [j, cj] : a.coeffs())
      for (const auto& [q, cq] : A->table[k[1]][j]) out.add({k[0], q}, v * cj * cq);
  return out;
}

/// product in A (x) A^op: (p (x) q)(r (x) s) = (b_p b_r) (x) (b_s b_q)
inline TensorElement op_product(const TensorElement& x, const TensorElement& y) {
  if (x.factors() != y.factors() || x.factors().size() != 2)
    throw ring_error("enveloping product needs matching 2-tensors");
  const AlgebraPtr& A = x.factors()[0];
  TensorElement out(x.factors());
  for (const auto& [kx, vx] : x.terms())
    for (const auto& [ky, vy] : y.terms()) {
      Scalar v = vx * vy;
      for (const auto& [p, cp] : A->table[kx[0]][ky[0]])
        for (const auto& [q, cq] : A->table[ky[1]][kx[1]])
          out.add({p, q}, v * cp * cq);
    }
  return out;
}

// ---------------------------------------------------------------------------
// verification

struct IdempotentChecks {
  bool maps_to_unit = false;  // mu(e) = 1
  bool central = false;       // a e = e a for every basis element a
  bool idempotent = false;    // e e = e in A (x) A^op
  bool all() const { return maps_to_unit && central && idempotent; }
};

/// check the three defining properties of a separability element
inline IdempotentChecks verify_idempotent(const TensorElement& e) {
  const AlgebraPtr& A = e.factors().at(0);
  IdempotentChecks out;
  out.maps_to_unit = multiplication_map(e) == AlgebraElement::unit(A);
  out.central = true;
  for (size_t i = 0; i < A->dim(); ++i) {
    AlgebraElement a = AlgebraElement::basis(A, i);
    if (!(left_act(a, e) == right_act(e, a))) {
      out.central = false;
      break;
    }
  }
  out.idempotent = op_product(e, e) == e;
  return out;
}

// ---------------------------------------------------------------------------
// generated subalgebra (span precheck)

namespace detail {

/// incremental reduced echelon over the scalar field
struct Echelon {
  std::vector<std::vector<Scalar>> rows;
  std::vector<size_t> lead;

  /// reduce v against the rows; if independent, absorb it and return true
  bool insert(std::vector<Scalar> v) {
    for (size_t r = 0; r < rows.size(); ++r)
      if (!v[lead[r]].is_zero()) {
        Scalar f = v[lead[r]];
        for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
      }
    size_t j = 0;
    while (j < v.size() && v[j].is_zero()) ++j;
    if (j == v.size()) return false;
    Scalar inv = v[j].inverse();
    for (auto& c : v) c *= inv;
    rows.push_back(std::move(v));
    lead.push_back(j);
    return true;
  }
};

inline std::vector<Scalar> dense_coeffs(const AlgebraElement& x) {
  std::vector<Scalar> v(x.algebra()->dim(), Scalar(0, x.algebra()->ring));
  for (const auto& [i, c] : x.coeffs()) v[i] = c;
  return v;
}

}  // namespace detail

/// dimension of the unital subalgebra generated by the given elements
inline size_t generated_dimension(const AlgebraPtr& A,
                                  const std::vector<AlgebraElement>& gens) {
  detail::Echelon ech;
  std::vector<AlgebraElement> frontier;
  auto offer = [&](const AlgebraElement& x) {
    if (x.is_zero()) return;
    if (ech.insert(detail::dense_coeffs(x))) frontier.push_back(x);
  };
  offer(AlgebraElement::unit(A));
  for (const auto& g : gens) offer(g);
  for (size_t i = 0; i < frontier.size() && ech.rows.size() < A->dim(); ++i) {
    AlgebraElement x = frontier[i];
    for (const auto& g : gens) {
      offer(x * g);
      offer(g * x);
      if (ech.rows.size() == A->dim()) break;
    }
  }
  return ech.rows.size();
}

// ---------------------------------------------------------------------------
// the linear system

/// linear system for e = sum c_pq b_p (x) b_q, unknown index p*d + q:
///   mu(e) = 1                     (d rows)
///   (g (x) 1) e = e (1 (x) g)     (d^2 rows per generator)
struct SeparabilitySystem {
  Mat A;
  std::vector<Scalar> b;
  size_t dim = 0;
};

inline SeparabilitySystem build_idempotent_system(
    const AlgebraPtr& A, const std::vector<AlgebraElement>& gens) {
  size_t d = A->dim();
  const Ring& rg = A->ring;
  SeparabilitySystem sys;
  sys.dim = d;
  sys.A = Mat(d + d * d * gens.size(), d * d, rg);
  sys.b.assign(sys.A.rows, Scalar(0, rg));
  // unit rows: sum_pq c_pq (b_p b_q)_k = 1_k
  for (size_t p = 0; p < d; ++p)
    for (size_t q = 0; q < d; ++q)
      for (const auto& [k, v] : A->table[p][q]) sys.A.at(k, p * d + q) += v;
  for (const auto& [k, v] : A->unit) sys.b[k] = v;
  // centrality rows per generator, equation index (k, l)
  size_t base = d;
  for (const auto& g : gens) {
    for (size_t p = 0; p < d; ++p) {
      AlgebraElement gp = g * AlgebraElement::basis(A, p);   // g b_p
      AlgebraElement pg = AlgebraElement::basis(A, p) * g;   // b_p g
      for (size_t q = 0; q < d; ++q) {
        // + (g b_p)_k at (k, q) from the left action with second slot q
        for (const auto& [k, v] : gp.coeffs()) sys.A.at(base + k * d + q, p * d + q) += v;
        // - (b_q g)_l at (p', l): here p indexes the first slot, reuse pg for slot 2
      }
      for (size_t f = 0; f < d; ++f)  // term c_fp with b_p in the second slot
        for (const auto& [l, v] : pg.coeffs())
          sys.A.at(base + f * d + l, f * d + p) -= v;
    }
    base += d * d;
  }
  return sys;
}

/// package a solution vector as a tensor element
inline TensorElement solution_tensor(const AlgebraPtr& A, const std::vector<Scalar>& x) {
  size_t d = A->dim();
  TensorElement e({A, A});
  for (size_t p = 0; p < d; ++p)
    for (size_t q = 0; q < d; ++q)
      if (!x[p * d + q].is_zero()) e.add({p, q}, x[p * d + q]);
  return e;
}

// ---------------------------------------------------------------------------
// solver and certificates

struct SeparabilityResult {
  AlgebraPtr algebra;
  bool consistent = false;      // the linear system has a solution
  size_t unknowns = 0, equations = 0, rank = 0;
  TensorElement e;              // particular solution, free unknowns zero
  IdempotentChecks checks{};    // filled when consistent
  bool issued = false;          // consistent and all checks pass
};

/// Solve for a separability element of A with the given generating set.
/// Exact fraction-free elimination; free unknowns are set to zero. Throws
/// budget_error when the unknown count exceeds the budget and ring_error
/// when the generators do not generate A as a unital algebra.
inline SeparabilityResult solve_idempotent(const AlgebraPtr& A,
                                           const std::vector<AlgebraElement>& gens,
                                           size_t unknown_budget = 2500) {
  size_t d = A->dim();
  if (d * d > unknown_budget)
    throw budget_error("separability system too large: " + std::to_string(d * d) +
                       " unknowns exceed budget " + std::to_string(unknown_budget));
  if (generated_dimension(A, gens) != d)
    throw ring_error("generators do not generate " + A->name);
  SeparabilitySystem sys = build_idempotent_system(A, gens);
  SeparabilityResult out;
  out.algebra = A;
  out.unknowns = sys.A.cols;
  out.equations = sys.A.rows;
  LinearSolution sol = solve_bareiss(sys.A, sys.b);
  out.consistent = sol.consistent;
  out.rank = sol.rank;
  if (!sol.consistent) return out;
  out.e = solution_tensor(A, sol.x);
  out.checks = verify_idempotent(out.e);
  out.issued = out.checks.all();
  return out;
}

// ---------------------------------------------------------------------------
// denominator support

/// least common multiple of the coefficient denominators of e
inline Poly denominator_lcm(const TensorElement& e) {
  Poly lcm(Num(1, e.ring()));
  for (const auto& [k, v] : e.terms()) {
    Poly g = poly_gcd(lcm, v.den());
    lcm = div_exact(lcm * v.den(), g);
  }
  return lcm;
}

/// does den divide ref^k for some k <= kmax?
inline bool divides_power(const Poly& den, const Poly& ref, unsigned kmax = 24) {
  if (den.is_constant()) return true;
  if (ref.is_constant()) return false;
  Poly acc(Num(1, den.ring()));
  for (unsigned k = 1; k <= kmax; ++k) {
    acc = acc * ref;
    if (divides(den, acc)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// classical constructions

/// the classical separability element (1/|G|) sum_g g (x) g^{-1} of a group
/// algebra built by Algebra::group_algebra (characteristic must not divide |G|)
inline TensorElement group_separability_element(const AlgebraPtr& A, const Group& G) {
  size_t n = G.order();
  Scalar inv = Scalar(static_cast<long>(n), A->ring).inverse();
  TensorElement e({A, A});
  for (const auto& g : G.elements)
    e.add({G.index_of(g), G.index_of(g.inverse())}, inv);
  return e;
}

/// sum_i e_i1 (x) e_1i for the matrix algebra M_n of Algebra::matrix_algebra
inline TensorElement matrix_separability_element(const AlgebraPtr& Mn) {
  size_t n2 = Mn->dim();
  size_t n = 0;
  while (n * n < n2) ++n;
  if (n * n != n2) throw ring_error("matrix separability element needs M_n");
  TensorElement e({Mn, Mn});
  for (size_t i = 0; i < n; ++i) e.add({i * n + 0, 0 * n + i}, Scalar(1, Mn->ring));
  return e;
}

/// transport e through a scalar substitution into the same basis over the
/// target algebra
inline TensorElement map_tensor(const TensorElement& e,
                                const std::vector<AlgebraPtr>& target,
                                const Substitution& s) {
  TensorElement out(target);
  for (const auto& [k, v] : e.terms()) out.add(k, specialize(v, s));
  return out;
}

}  // namespace sepdef

#endif
