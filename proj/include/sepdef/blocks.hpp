#ifndef SEPDEF_BLOCKS_HPP
#define SEPDEF_BLOCKS_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sepdef/deform.hpp"
#include "sepdef/separability.hpp"

namespace sepdef {

// ---------------------------------------------------------------------------
// partitions and symmetric-group block data

/// number of partitions of n (simple dynamic program)
inline size_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<size_t> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int v = part; v <= n; ++v) p[v] += p[v - part];
  return p[n];
}

/// all partitions of n as weakly decreasing part lists
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, maxp); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline size_t factorial(int n) {
  size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<size_t>(i);
  return f;
}

inline size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  size_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<size_t>(n - k + i) / static_cast<size_t>(i);
  return b;
}

/// dimension of the irreducible S_n module of shape lambda (hook lengths)
inline size_t hook_dimension(const std::vector<int>& lambda) {
  int n = 0;
  for (int part : lambda) n += part;
  size_t hooks = 1;
  for (size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      int arm = lambda[r] - c - 1;
      int leg = 0;
      for (size_t r2 = r + 1; r2 < lambda.size() && lambda[r2] > c; ++r2) ++leg;
      hooks *= static_cast<size_t>(arm + leg + 1);
    }
  return factorial(n) / hooks;
}

/// matrix-block sizes of the rational group algebra of S_n (all irreducible
/// dimensions), audited against sum of squares = n!
inline std::vector<size_t> qsn_block_dims(int n) {
  std::vector<size_t> dims;
  size_t sq = 0;
  for (const auto& lambda : partitions(n)) {
    size_t d = hook_dimension(lambda);
    dims.push_back(d);
    sq += d * d;
  }
  if (n == 0) dims = {1}, sq = 1;
  if (sq != factorial(n)) throw ring_error("symmetric block dimension audit failed");
  std::sort(dims.begin(), dims.end());
  return dims;
}

// ---------------------------------------------------------------------------
// decompositions

struct BlockSummand {
  size_t matrix_size = 1;       // m in M_m(inner) (x) k[isotropy]
  std::string inner = "k";      // description of the inner algebra
  size_t inner_dim = 1;         // its dimension over the base field
  std::string isotropy = "1";   // description of the isotropy group
  size_t isotropy_order = 1;
  std::vector<size_t> index;    // representative index / multi-index
  size_t dimension = 0;         // matrix_size^2 * inner_dim * isotropy_order

  void finish() { dimension = matrix_size * matrix_size * inner_dim * isotropy_order; }
};

struct Decomposition {
  std::string name;
  std::vector<BlockSummand> summands;
  size_t total_dim = 0;
  size_t expected_dim = 0;
  bool audit_ok = false;
  size_t block_count = 0;          // refined matrix-block count (0 if unknown)
  std::vector<size_t> block_dims;  // refined matrix-block sizes (may be empty)

  void audit() {
    total_dim = 0;
    for (const auto& s : summands) total_dim += s.dimension;
    audit_ok = total_dim == expected_dim;
    if (!audit_ok)
      throw ring_error("dimension audit failed for " + name + ": " +
                       std::to_string(total_dim) + " != " + std::to_string(expected_dim));
  }
};

/// A # kG for A = k^n and G permuting the n summand labels {1..n}.
/// One summand per orbit: a matrix algebra of the orbit length tensor the
/// group algebra of the stabilizer.
inline Decomposition smash_decompose(
    size_t npoints, const Group& G,
    const std::function<Perm(const GroupElement&)>& act) {
  // the action must be a homomorphism landing in S_npoints
  for (const auto& g : G.elements) {
    Perm pg = act(g);
    if (pg.size() != npoints || !perm_valid(pg))
      throw ring_error("invalid permutation image in smash action");
    for (const auto& h : G.elements)
      if (act(g * h) != perm_mul(pg, act(h)))
        throw ring_error("smash action is not a homomorphism");
  }
  if (act(G.id) != perm_identity(static_cast<int>(npoints)))
    throw ring_error("smash action does not fix the identity");

  Decomposition dec;
  dec.name = "k^" + std::to_string(npoints) + " # k[" + G.name + "]";
  dec.expected_dim = npoints * G.order();
  std::vector<char> seen(npoints, 0);
  for (size_t i = 0; i < npoints; ++i) {
    if (seen[i]) continue;
    std::set<size_t> orbit;
    size_t stab = 0;
    for (const auto& g : G.elements) {
      size_t img = static_cast<size_t>(act(g)[i]) - 1;
      orbit.insert(img);
      if (img == i) ++stab;
    }
    for (size_t j : orbit) seen[j] = 1;
    BlockSummand s;
    s.matrix_size = orbit.size();
    s.index = {i + 1};
    s.isotropy = G.name + "_" + std::to_string(i + 1);
    s.isotropy_order = stab;
    s.finish();
    dec.summands.push_back(std::move(s));
  }
  dec.audit();
  return dec;
}

namespace detail {

inline std::string multi_index_str(const std::vector<size_t>& J) {
  std::string out = "(";
  for (size_t i = 0; i < J.size(); ++i) out += (i ? "," : "") + std::to_string(J[i]);
  return out + ")";
}

}  // namespace detail

/// A wr G for A a direct sum of central separable blocks with the given
/// dimensions and G <= S_n permuting tensor slots: one summand per orbit of
/// G on multi-indices, M_{(G:G_I)}(A(I)) (x) k[G_I].
inline Decomposition wreath_decompose(const std::vector<size_t>& block_dims, size_t n,
                                      const Group& G, size_t budget = 200000) {
  size_t r = block_dims.size();
  size_t count = 1;
  for (size_t i = 0; i < n; ++i) {
    count *= r;
    if (count > budget) throw budget_error("multi-index enumeration exceeds budget");
  }
  // the action of g on code(J) = sum J_i r^(n-1-i) (slot 1 leading)
  std::vector<std::vector<size_t>> act;
  for (const auto& g : G.elements) {
    if (g.perm.size() != n || !perm_valid(g.perm))
      throw ring_error("wreath decomposition needs permutation group elements");
    Perm pinv = perm_inverse(g.perm);
    std::vector<size_t> img(count);
    for (size_t code = 0; code < count; ++code) {
      std::vector<size_t> J(n);
      size_t c = code;
      for (size_t i = n; i-- > 0;) J[i] = c % r, c /= r;
      size_t out = 0;
      for (size_t i = 0; i < n; ++i) out = out * r + J[static_cast<size_t>(pinv[i]) - 1];
      img[code] = out;
    }
    act.push_back(std::move(img));
  }

  size_t adim = 0;
  for (size_t d : block_dims) adim += d;
  Decomposition dec;
  dec.name = "A wr " + G.name;
  dec.expected_dim = G.order();
  for (size_t i = 0; i < n; ++i) dec.expected_dim *= adim;

  std::vector<char> seen(count, 0);
  for (size_t code = 0; code < count; ++code) {
    if (seen[code]) continue;
    std::set<size_t> orbit;
    size_t stab = 0;
    for (const auto& img : act) {
      orbit.insert(img[code]);
      if (img[code] == code) ++stab;
    }
    for (size_t j : orbit) seen[j] = 1;
    BlockSummand s;
    s.matrix_size = orbit.size();
    s.index.assign(n, 0);
    size_t c = code;
    for (size_t i = n; i-- > 0;) s.index[i] = c % r, c /= r;
    s.inner_dim = 1;
    for (size_t i : s.index) s.inner_dim *= block_dims[i];
    s.inner = "A" + detail::multi_index_str(s.index);
    s.isotropy = G.name + "_" + detail::multi_index_str(s.index);
    s.isotropy_order = stab;
    s.finish();
    dec.summands.push_back(std::move(s));
  }
  dec.audit();
  return dec;
}

/// rational group algebra of the hyperoctahedral group B_n:
/// sum over m of M_{binom(n,m)}(Q) (x) Q[S_m] (x) Q[S_{n-m}]
inline Decomposition qbn_blocks(int n) {
  if (n < 1) throw ring_error("qbn_blocks needs n >= 1");
  Decomposition dec;
  dec.name = "QB" + std::to_string(n);
  dec.expected_dim = factorial(n) << n;
  for (int m = 0; m <= n; ++m) {
    BlockSummand s;
    s.matrix_size = binomial(n, m);
    s.index = {static_cast<size_t>(m)};
    s.inner = "Q";
    s.isotropy = "S" + std::to_string(m) + " x S" + std::to_string(n - m);
    s.isotropy_order = factorial(m) * factorial(n - m);
    s.finish();
    dec.summands.push_back(std::move(s));
    for (size_t dl : qsn_block_dims(m))
      for (size_t dm : qsn_block_dims(n - m))
        dec.block_dims.push_back(binomial(n, m) * dl * dm);
    dec.block_count += partition_count(m) * partition_count(n - m);
  }
  std::sort(dec.block_dims.begin(), dec.block_dims.end());
  dec.audit();
  return dec;
}

/// rational group algebra of the Weyl group D_n. For even n = 2r the middle
/// component M_{binom(2r-1,r)}(Q) (x) Q[S_r wr C_2] is expanded through the
/// wreath decomposition of the blocks of Q[S_r] under the slot swap; its
/// diagonal orbits contribute two full blocks S(lambda) (x) S(lambda) each.
inline Decomposition qdn_blocks(int n) {
  if (n < 2) throw ring_error("qdn_blocks needs n >= 2");
  Decomposition dec;
  dec.name = "QD" + std::to_string(n);
  dec.expected_dim = factorial(n) << (n - 1);
  int r = n / 2;
  int top = n % 2 == 1 ? r : r - 1;
  for (int m = 0; m <= top; ++m) {
    BlockSummand s;
    s.matrix_size = binomial(n, m);
    s.index = {static_cast<size_t>(m)};
    s.inner = "Q";
    s.isotropy = "S" + std::to_string(n - m) + " x S" + std::to_string(m);
    s.isotropy_order = factorial(n - m) * factorial(m);
    s.finish();
    dec.summands.push_back(std::move(s));
    for (size_t dl : qsn_block_dims(n - m))
      for (size_t dm : qsn_block_dims(m)) dec.block_dims.push_back(binomial(n, m) * dl * dm);
    dec.block_count += partition_count(n - m) * partition_count(m);
  }
  if (n % 2 == 0) {
    // middle component: pairs of S_r blocks under the swap
    size_t c = binomial(n - 1, r);
    std::vector<size_t> dims = qsn_block_dims(r);
    std::vector<size_t> alg_dims;  // algebra dimensions d^2 of the blocks
    for (size_t d : dims) alg_dims.push_back(d * d);
    Group C2 = Group::symmetric(2);
    Decomposition mid = wreath_decompose(alg_dims, 2, C2);
    for (const auto& ms : mid.summands) {
      BlockSummand s;
      s.matrix_size = c * ms.matrix_size;
      s.index = ms.index;
      s.inner_dim = ms.inner_dim;
      s.inner = "S" + std::to_string(r) + ms.inner.substr(1);
      bool diagonal = ms.isotropy_order == 2;
      s.isotropy = diagonal ? "C2" : "1";
      s.isotropy_order = ms.isotropy_order;
      s.finish();
      dec.summands.push_back(std::move(s));
      size_t dl = dims[ms.index[0]], dm = dims[ms.index[1]];
      if (diagonal) {
        // M(A (x) A) (x) QC2 splits into two equal blocks
        dec.block_dims.push_back(c * dl * dm);
        dec.block_dims.push_back(c * dl * dm);
        dec.block_count += 2;
      } else {
        dec.block_dims.push_back(c * 2 * dl * dm);
        dec.block_count += 1;
      }
    }
  }
  std::sort(dec.block_dims.begin(), dec.block_dims.end());
  dec.audit();
  return dec;
}

// ---------------------------------------------------------------------------
// the binary-string action for D_{n+1}

/// a slot permutation acting on length-n binary strings (slot 1 leading)
inline std::vector<size_t> slot_perm_action(int n, const Perm& p) {
  size_t dim = size_t(1) << n;
  std::vector<size_t> img(dim);
  for (size_t s = 0; s < dim; ++s) {
    size_t out = 0;
    for (int i = 1; i <= n; ++i)
      if (s & (size_t(1) << (n - i))) out |= size_t(1) << (n - p[i - 1]);
    img[s] = out;
  }
  return img;
}

inline std::vector<size_t> compose_action(const std::vector<size_t>& a,
                                          const std::vector<size_t>& b) {
  std::vector<size_t> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

/// closure of string operators under composition; throws past the budget
inline std::set<std::vector<size_t>> action_closure(
    const std::vector<std::vector<size_t>>& gens, size_t budget = 100000) {
  if (gens.empty()) return {};
  std::set<std::vector<size_t>> seen;
  std::vector<std::vector<size_t>> frontier;
  std::vector<size_t> id(gens[0].size());
  for (size_t i = 0; i < id.size(); ++i) id[i] = i;
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<size_t> x = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      std::vector<size_t> y = compose_action(g, x);
      if (seen.insert(y).second) {
        if (seen.size() > budget) throw budget_error("operator closure exceeds budget");
        frontier.push_back(y);
      }
    }
  }
  return seen;
}

struct OrbitDatum {
  std::vector<int> rep;        // binary string, slot 1 first
  size_t size = 0;
  size_t isotropy_order = 0;   // (n+1)! / size
  int m = 0;                   // orbit label: representative e^m f^(n-m)
  bool middle = false;         // n = 2r+1 and m = r
  std::string isotropy_type;
  bool formulas_ok = false;    // size and isotropy match the closed forms
};

struct DnOrbitData {
  int n = 0;
  std::vector<OrbitDatum> orbits;
  bool sizes_partition = false;  // orbit sizes sum to 2^n
  bool all_formulas_ok = false;
};

/// orbits of the extended S_{n+1} action on binary strings: the subgroup S_n
/// permutes entries and the extra transpositions act by tau_i (entry i = 1
/// fixed, all other entries complemented)
inline DnOrbitData dn_orbit_data(int n) {
  if (n < 1 || n > 16) throw budget_error("string orbit scan supports 1 <= n <= 16");
  std::vector<std::vector<size_t>> gens;
  for (int i = 1; i < n; ++i) gens.push_back(slot_swap_action(n, i));
  for (int i = 1; i <= n; ++i) gens.push_back(tau_ef_action(n, i));
  size_t dim = size_t(1) << n;
  size_t group_order = factorial(n + 1);

  DnOrbitData out;
  out.n = n;
  std::vector<char> seen(dim, 0);
  size_t covered = 0;
  for (size_t s0 = 0; s0 < dim; ++s0) {
    if (seen[s0]) continue;
    // breadth-first orbit scan
    std::vector<size_t> frontier = {s0};
    seen[s0] = 1;
    std::vector<size_t> members = {s0};
    while (!frontier.empty()) {
      size_t s = frontier.back();
      frontier.pop_back();
      for (const auto& g : gens)
        if (!seen[g[s]]) {
          seen[g[s]] = 1;
          members.push_back(g[s]);
          frontier.push_back(g[s]);
        }
    }
    OrbitDatum o;
    o.size = members.size();
    covered += o.size;
    o.isotropy_order = group_order / o.size;
    if (o.isotropy_order * o.size != group_order)
      throw ring_error("orbit size does not divide the group order");
    // label: smallest f-count j over the orbit gives m = n - j
    size_t minf = static_cast<size_t>(n);
    for (size_t s : members) minf = std::min(minf, static_cast<size_t>(__builtin_popcountll(s)));
    o.m = n - static_cast<int>(minf);
    o.middle = (n % 2 == 1) && o.m == (n - 1) / 2;
    o.rep.assign(n, 0);
    for (int i = 1; i <= n; ++i)
      if (s0 & (size_t(1) << (n - i))) o.rep[i - 1] = 1;
    if (o.middle) {
      int rr = (n - 1) / 2;
      o.isotropy_type = "S" + std::to_string(rr + 1) + " wr C2";
      o.formulas_ok = o.size == binomial(n, rr) &&
                      o.isotropy_order == 2 * factorial(rr + 1) * factorial(rr + 1);
    } else {
      o.isotropy_type = "S" + std::to_string(o.m + 1) + " x S" + std::to_string(n - o.m);
      o.formulas_ok = o.size == binomial(n + 1, o.m + 1) &&
                      o.isotropy_order == factorial(o.m + 1) * factorial(n - o.m);
    }
    out.orbits.push_back(std::move(o));
  }
  out.sizes_partition = covered == dim;
  out.all_formulas_ok = true;
  for (const auto& o : out.orbits) out.all_formulas_ok = out.all_formulas_ok && o.formulas_ok;
  return out;
}

/// structural check of a non-middle isotropy group: the claimed generators
/// fix the representative e^m f^(n-m), the two factors commute, and the
/// closures have orders (m+1)!, (n-m)! and (m+1)!(n-m)!
inline bool orbit_isotropy_structural_check(int n, int m) {
  if (m < 0 || m > n) throw ring_error("invalid orbit label");
  size_t rep = (size_t(1) << (n - m)) - 1;  // 0^m 1^(n-m)
  std::vector<std::vector<size_t>> first, second;
  for (int i = 1; i < m; ++i) first.push_back(slot_swap_action(n, i));
  for (int i = 1; i <= m; ++i) first.push_back(tau_ef_action(n, i));
  for (int i = m + 1; i < n; ++i) second.push_back(slot_swap_action(n, i));
  for (const auto& g : first)
    if (g[rep] != rep) return false;
  for (const auto& g : second)
    if (g[rep] != rep) return false;
  for (const auto& g : first)
    for (const auto& h : second)
      if (compose_action(g, h) != compose_action(h, g)) return false;
  size_t o1 = first.empty() ? 1 : action_closure(first).size();
  size_t o2 = second.empty() ? 1 : action_closure(second).size();
  if (o1 != factorial(m + 1) || o2 != factorial(n - m)) return false;
  std::vector<std::vector<size_t>> both = first;
  both.insert(both.end(), second.begin(), second.end());
  size_t o = both.empty() ? 1 : action_closure(both).size();
  return o == o1 * o2;
}

// ---------------------------------------------------------------------------
// the middle isotropy group is a wreath product

struct MiddleIsotropyCertificate {
  int r = 0;
  bool fixes_rep = false;        // rho fixes e^r f^(r+1)
  bool involution = false;       // rho^2 = 1
  bool conjugates_taus = false;  // rho tau_i rho = (r+i, 2r+1) for i <= r
  bool swaps_factors = false;    // rho swaps the two S_{r+1} factors
  size_t closure_order = 0;      // order of the generated string group
  bool order_ok = false;         // closure order = 2((r+1)!)^2
  bool ok() const {
    return fixes_rep && involution && conjugates_taus && swaps_factors && order_ok;
  }
};

/// verify, on all binary strings of length 2r+1, that the middle isotropy
/// group is S_{r+1} wr C_2: with sigma = (1,r+1)(2,r+2)...(r,2r) and
/// rho = sigma tau_{2r+1}, rho is an involution fixing the representative,
/// rho tau_i rho = (r+i, 2r+1), and rho exchanges the two S_{r+1} factors
inline MiddleIsotropyCertificate lemmaD_check(int r) {
  if (r < 1 || r > 3) throw budget_error("middle isotropy check supports 1 <= r <= 3");
  int n = 2 * r + 1;
  MiddleIsotropyCertificate cert;
  cert.r = r;
  Perm sigma = perm_identity(n);
  for (int i = 1; i <= r; ++i) std::swap(sigma[i - 1], sigma[r + i - 1]);
  std::vector<size_t> sig_op = slot_perm_action(n, sigma);
  std::vector<size_t> rho = compose_action(sig_op, tau_ef_action(n, n));

  size_t rep = (size_t(1) << (r + 1)) - 1;  // 0^r 1^(r+1)
  cert.fixes_rep = rho[rep] == rep;

  std::vector<size_t> id(size_t(1) << n);
  for (size_t i = 0; i < id.size(); ++i) id[i] = i;
  cert.involution = compose_action(rho, rho) == id;

  cert.conjugates_taus = true;
  for (int i = 1; i <= r; ++i) {
    std::vector<size_t> lhs = compose_action(rho, compose_action(tau_ef_action(n, i), rho));
    std::vector<size_t> rhs = slot_perm_action(n, transposition(n, r + i, 2 * r + 1));
    if (lhs != rhs) cert.conjugates_taus = false;
  }

  // rho carries permutations of slots 1..r to permutations of slots r+1..2r
  cert.swaps_factors = true;
  for (int i = 1; i < r; ++i) {
    std::vector<size_t> lhs =
        compose_action(rho, compose_action(slot_swap_action(n, i), rho));
    std::vector<size_t> rhs = slot_swap_action(n, r + i);
    if (lhs != rhs) cert.swaps_factors = false;
  }

  std::vector<std::vector<size_t>> gens;
  for (int i = 1; i < r; ++i) gens.push_back(slot_swap_action(n, i));
  for (int i = 1; i <= r; ++i) gens.push_back(tau_ef_action(n, i));
  for (int i = r + 1; i < n; ++i) gens.push_back(slot_swap_action(n, i));
  gens.push_back(rho);
  cert.closure_order = action_closure(gens).size();
  cert.order_ok =
      cert.closure_order == 2 * factorial(r + 1) * factorial(r + 1);
  return cert;
}

// ---------------------------------------------------------------------------
// explicit matrix-unit witnesses inside a wreath product

/// permutation subgroup of S_n generated by the given permutations
inline Group perm_group(int n, const std::vector<Perm>& gens, const std::string& name) {
  Group G;
  G.name = name;
  std::set<Perm> seen;
  std::vector<Perm> frontier = {perm_identity(n)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    Perm p = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      Perm q = perm_mul(g, p);
      if (seen.insert(q).second) frontier.push_back(q);
    }
  }
  for (const auto& p : seen) G.elements.push_back(GroupElement::permutation(p));
  G.id = GroupElement::permutation(perm_identity(n));
  for (const auto& g : gens) G.generators.push_back(GroupElement::permutation(g));
  G.finish();
  return G;
}

struct MatrixUnitCertificate {
  size_t coset_count = 0;      // m = (G : G_I)
  size_t isotropy_order = 0;
  bool matrix_units = false;   // E relations
  bool conjugation = false;    // T_pi a T_pi^-1 = a^pi on A(I)
  bool upsilon_group = false;  // upsilon(pi) upsilon(pi') = upsilon(pi pi')
  bool upsilon_unit = false;   // upsilon(1) = sum of the orbit idempotents
  bool commutes = false;       // upsilon(pi) central against a^s s t^-1
  bool module_law = false;     // (a^u u s^-1)(b^s s t^-1) = (ab)^u u t^-1
  bool ok() const {
    return matrix_units && conjugation && upsilon_group && upsilon_unit && commutes &&
           module_law;
  }
};

namespace detail {

/// sparse element of (A_1 + ... + A_r)^(x n) x| G with A = direct sum of the
/// given central separable blocks; basis keys are (per-slot A-basis, group)
struct WreathContext {
  std::vector<AlgebraPtr> blocks;
  size_t n = 0;
  const Group* G = nullptr;
  Ring ring;
  std::vector<size_t> offset;  // block -> first A-basis index
  size_t adim = 0;

  using Key = std::pair<std::vector<size_t>, size_t>;
  using Elt = std::map<Key, Scalar>;

  WreathContext(std::vector<AlgebraPtr> bl, size_t nn, const Group& g)
      : blocks(std::move(bl)), n(nn), G(&g), ring(blocks.at(0)->ring) {
    for (const auto& b : blocks) {
      offset.push_back(adim);
      adim += b->dim();
      if (!(b->ring == ring)) throw ring_error("wreath blocks over different rings");
    }
  }

  std::pair<size_t, size_t> split(size_t a) const {
    for (size_t b = blocks.size(); b-- > 0;)
      if (a >= offset[b]) return {b, a - offset[b]};
    throw ring_error("basis index out of range");
  }

  static void add(Elt& e, const Key& k, const Scalar& v) {
    auto it = e.find(k);
    if (it == e.end()) {
      if (!v.is_zero()) e[k] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) e.erase(it);
    }
  }

  Elt mul(const Elt& x, const Elt& y) const {
    Elt out;
    for (const auto& [kx, vx] : x)
      for (const auto& [ky, vy] : y) {
        const GroupElement& gx = G->elements[kx.second];
        Perm pinv = perm_inverse(gx.perm);
        // slotwise product of kx.first with the gx-permuted ky.first
        std::vector<std::pair<std::vector<size_t>, Scalar>> parts = {{{}, vx * vy}};
        bool dead = false;
        for (size_t i = 0; i < n && !dead; ++i) {
          size_t a = kx.first[i];
          size_t b = ky.first[static_cast<size_t>(pinv[i]) - 1];
          auto [ba, ia] = split(a);
          auto [bb, ib] = split(b);
          if (ba != bb) {
            dead = true;
            break;
          }
          const auto& row = blocks[ba]->table[ia][ib];
          std::vector<std::pair<std::vector<size_t>, Scalar>> next;
          for (const auto& [key, v] : parts)
            for (const auto& [k, ck] : row) {
              auto nk = key;
              nk.push_back(offset[ba] + k);
              next.push_back({nk, v * ck});
            }
          parts = std::move(next);
          if (parts.empty()) dead = true;
        }
        if (dead) continue;
        size_t gz = G->index_of(gx * G->elements[ky.second]);
        for (const auto& [key, v] : parts) add(out, {key, gz}, v);
      }
    return out;
  }

  /// unit idempotent e(J) of the orbital summand A(J), group part trivial
  Elt orbit_unit(const std::vector<size_t>& J) const {
    Elt out;
    size_t id = G->index_of(G->id);
    std::vector<std::pair<std::vector<size_t>, Scalar>> parts = {{{}, Scalar(1, ring)}};
    for (size_t i = 0; i < n; ++i) {
      std::vector<std::pair<std::vector<size_t>, Scalar>> next;
      for (const auto& [key, v] : parts)
        for (const auto& [k, ck] : blocks[J[i]]->unit) {
          auto nk = key;
          nk.push_back(offset[J[i]] + k);
          next.push_back({nk, v * ck});
        }
      parts = std::move(next);
    }
    for (const auto& [key, v] : parts) add(out, {key, id}, v);
    return out;
  }

  /// a group element as 1 (x) ... (x) 1 times g (full unit of A^(x n))
  Elt group_elt(const GroupElement& g) const {
    Elt out;
    std::vector<std::pair<std::vector<size_t>, Scalar>> parts = {{{}, Scalar(1, ring)}};
    for (size_t i = 0; i < n; ++i) {
      std::vector<std::pair<std::vector<size_t>, Scalar>> next;
      for (const auto& [key, v] : parts)
        for (size_t b = 0; b < blocks.size(); ++b)
          for (const auto& [k, ck] : blocks[b]->unit) {
            auto nk = key;
            nk.push_back(offset[b] + k);
            next.push_back({nk, v * ck});
          }
      parts = std::move(next);
    }
    size_t gi = G->index_of(g);
    for (const auto& [key, v] : parts) add(out, {key, gi}, v);
    return out;
  }

  /// pure tensor in A(J) with block-local basis indices, group part trivial
  Elt pure(const std::vector<size_t>& J, const std::vector<size_t>& local) const {
    std::vector<size_t> key(n);
    for (size_t i = 0; i < n; ++i) key[i] = offset[J[i]] + local[i];
    Elt out;
    out[{key, G->index_of(G->id)}] = Scalar(1, ring);
    return out;
  }
};

}  // namespace detail

/// Build the explicit isomorphism witnesses for one orbital summand of
/// (A_1 + ... + A_r) wr G: the matrix units E over the coset representatives
/// of the isotropy group of I and the upsilon image of the isotropy group,
/// and verify all their defining relations. Blocks must be k or full matrix
/// algebras (their switch elements realize slot swaps).
inline MatrixUnitCertificate matrix_unit_check(const std::vector<AlgebraPtr>& blocks,
                                               size_t n, const Group& G,
                                               const std::vector<size_t>& I) {
  if (G.order() > 48) throw budget_error("wreath witness group budget exceeded");
  size_t idim = 1;
  for (size_t b : I) idim *= blocks.at(b)->dim();
  if (idim > 16) throw budget_error("wreath witness inner dimension budget exceeded");
  detail::WreathContext W(blocks, n, G);
  using Elt = detail::WreathContext::Elt;

  auto act = [&](const Perm& p, const std::vector<size_t>& J) {
    Perm pinv = perm_inverse(p);
    std::vector<size_t> out(J.size());
    for (size_t i = 0; i < J.size(); ++i) out[i] = J[static_cast<size_t>(pinv[i]) - 1];
    return out;
  };

  // isotropy group and coset representatives in enumeration order
  std::vector<size_t> iso;
  std::vector<size_t> reps;
  std::set<std::vector<size_t>> covered;
  for (size_t gi = 0; gi < G.order(); ++gi) {
    std::vector<size_t> img = act(G.elements[gi].perm, I);
    if (img == I) iso.push_back(gi);
    if (covered.insert(img).second) reps.push_back(gi);
  }
  MatrixUnitCertificate cert;
  cert.coset_count = reps.size();
  cert.isotropy_order = iso.size();

  // E_{s,t} = e(sI) s t^-1
  auto E = [&](size_t s, size_t t) {
    const GroupElement& gs = G.elements[reps[s]];
    const GroupElement& gt = G.elements[reps[t]];
    Elt u = W.orbit_unit(act(gs.perm, I));
    return W.mul(u, W.group_elt(gs * gt.inverse()));
  };
  std::vector<std::vector<Elt>> Emat(reps.size(), std::vector<Elt>(reps.size()));
  for (size_t s = 0; s < reps.size(); ++s)
    for (size_t t = 0; t < reps.size(); ++t) Emat[s][t] = E(s, t);
  cert.matrix_units = true;
  for (size_t a = 0; a < reps.size(); ++a)
    for (size_t b = 0; b < reps.size(); ++b)
      for (size_t c = 0; c < reps.size(); ++c)
        for (size_t d = 0; d < reps.size(); ++d) {
          Elt prod = W.mul(Emat[a][b], Emat[c][d]);
          Elt expect = b == c ? Emat[a][d] : Elt{};
          if (prod != expect) cert.matrix_units = false;
        }

  // T_pi for pi in the isotropy group: product of switch elements over a
  // transposition decomposition of pi (cycles of pi stay within one block)
  auto switch_pair = [&](size_t i, size_t j) {
    // sum over the switch element of the common block placed in slots i, j
    size_t b = I[i];
    const AlgebraPtr& B = blocks[b];
    Elt out;
    if (B->dim() == 1) return W.orbit_unit(I);
    TensorElement sw = switch_element(B);
    for (const auto& [k, v] : sw.terms()) {
      std::vector<size_t> local(n);
      for (size_t s = 0; s < n; ++s) {
        if (s == i) {
          local[s] = k[0];
        } else if (s == j) {
          local[s] = k[1];
        } else {
          if (blocks[I[s]]->unit.size() != 1)
            throw ring_error("wreath witness needs single-term block units");
          local[s] = blocks[I[s]]->unit.begin()->first;
        }
      }
      // non-matrix block units may carry a coefficient
      detail::WreathContext::add(out, W.pure(I, local).begin()->first, v);
    }
    return out;
  };
  auto T_of = [&](const Perm& p, bool inverse) {
    // decompose p into transpositions; for an involution-free listing use
    // cycle peeling: (c1 .. ck) = (c1 ck)(c1 c(k-1)) ... (c1 c2)
    std::vector<std::pair<size_t, size_t>> trans;
    std::vector<char> done(n, 0);
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || static_cast<size_t>(p[i]) == i + 1) continue;
      std::vector<size_t> cyc = {i};
      done[i] = 1;
      size_t j = static_cast<size_t>(p[i]) - 1;
      while (j != i) {
        cyc.push_back(j);
        done[j] = 1;
        j = static_cast<size_t>(p[j]) - 1;
      }
      for (size_t k = cyc.size(); k-- > 1;) trans.push_back({cyc[0], cyc[k]});
    }
    if (inverse) std::reverse(trans.begin(), trans.end());
    Elt out = W.orbit_unit(I);
    for (const auto& [i, j] : trans) out = W.mul(out, switch_pair(i, j));
    return out;
  };

  // enumerate a basis of A(I) as pure tensors
  std::vector<std::vector<size_t>> ibasis;
  {
    std::vector<size_t> cur(n, 0);
    while (true) {
      ibasis.push_back(cur);
      size_t i = n;
      while (i-- > 0) {
        if (++cur[i] < blocks[I[i]]->dim()) break;
        cur[i] = 0;
        if (i == 0) {
          i = SIZE_MAX;
          break;
        }
      }
      if (i == SIZE_MAX) break;
    }
  }

  cert.conjugation = true;
  for (size_t gi : iso) {
    const Perm& p = G.elements[gi].perm;
    Elt T = T_of(p, false), Tinv = T_of(p, true);
    if (W.mul(T, Tinv) != W.orbit_unit(I)) cert.conjugation = false;
    for (const auto& local : ibasis) {
      Elt a = W.pure(I, local);
      std::vector<size_t> plocal(n);
      Perm pinv = perm_inverse(p);
      for (size_t i = 0; i < n; ++i) plocal[i] = local[static_cast<size_t>(pinv[i]) - 1];
      Elt ap = W.pure(I, plocal);  // a^pi
      if (W.mul(T, a) != W.mul(ap, T)) cert.conjugation = false;
    }
  }

  // upsilon(pi) = sum over coset reps mu of mu T_pi^-1 pi mu^-1
  auto upsilon = [&](size_t gi) {
    Elt Tinv = T_of(G.elements[gi].perm, true);
    Elt out;
    for (size_t mu : reps) {
      const GroupElement& gm = G.elements[mu];
      Elt term = W.mul(W.group_elt(gm), Tinv);
      term = W.mul(term, W.group_elt(G.elements[gi]));
      term = W.mul(term, W.group_elt(gm.inverse()));
      for (const auto& [k, v] : term) detail::WreathContext::add(out, k, v);
    }
    return out;
  };
  std::map<size_t, Elt> ups;
  for (size_t gi : iso) ups[gi] = upsilon(gi);

  cert.upsilon_group = true;
  for (size_t a : iso)
    for (size_t b : iso) {
      size_t c = G.index_of(G.elements[a] * G.elements[b]);
      if (W.mul(ups[a], ups[b]) != ups[c]) cert.upsilon_group = false;
    }

  Elt bi_unit;
  for (size_t mu : reps) {
    Elt u = W.orbit_unit(act(G.elements[mu].perm, I));
    for (const auto& [k, v] : u) detail::WreathContext::add(bi_unit, k, v);
  }
  cert.upsilon_unit = ups[G.index_of(G.id)] == bi_unit;

  cert.commutes = true;
  cert.module_law = true;
  for (size_t s = 0; s < reps.size(); ++s)
    for (size_t t = 0; t < reps.size(); ++t) {
      const GroupElement& gs = G.elements[reps[s]];
      const GroupElement& gt = G.elements[reps[t]];
      for (const auto& local : ibasis) {
        // X = a^s s t^-1
        Elt X = W.mul(W.group_elt(gs), W.mul(W.pure(I, local), W.group_elt(gt.inverse())));
        for (size_t gi : iso)
          if (W.mul(ups[gi], X) != W.mul(X, ups[gi])) cert.commutes = false;
        // module law against b^t t u^-1 for the first rep u and basis b
        for (const auto& local2 : ibasis) {
          Elt Y = W.mul(W.group_elt(gt),
                        W.mul(W.pure(I, local2), W.group_elt(G.elements[reps[0]].inverse())));
          Elt lhs = W.mul(X, Y);
          Elt ab = W.mul(W.pure(I, local), W.pure(I, local2));
          Elt rhs = W.mul(W.group_elt(gs),
                          W.mul(ab, W.group_elt(G.elements[reps[0]].inverse())));
          if (lhs != rhs) cert.module_law = false;
        }
      }
    }
  return cert;
}

}  // namespace sepdef

#endif
