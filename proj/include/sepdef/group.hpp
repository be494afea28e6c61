#ifndef SEPDEF_GROUP_HPP
#define SEPDEF_GROUP_HPP

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepdef/perm.hpp"

namespace sepdef {

/// Element of one of the concrete finite groups below. The payload carries
/// its own moduli so multiplication needs no group context.
struct GroupElement {
  enum class Tag { Cyclic, Dihedral, Permutation, Wreath };
  Tag tag = Tag::Cyclic;

  int exp = 0;        // cyclic exponent / dihedral rotation
  unsigned mod = 1;   // cyclic r / dihedral m
  bool flip = false;  // dihedral reflection bit
  Perm perm;          // permutation part (Permutation, Wreath)
  std::vector<int> comp;  // wreath component tuple, entries mod cmod
  unsigned cmod = 2;

  static GroupElement cyclic(int e, unsigned r) {
    GroupElement g;
    g.tag = Tag::Cyclic;
    g.mod = r;
    g.exp = ((e % static_cast<int>(r)) + r) % r;
    return g;
  }
  static GroupElement dihedral(int rot, bool fl, unsigned m) {
    GroupElement g;
    g.tag = Tag::Dihedral;
    g.mod = m;
    g.exp = ((rot % static_cast<int>(m)) + m) % m;
    g.flip = fl;
    return g;
  }
  static GroupElement permutation(Perm p) {
    GroupElement g;
    g.tag = Tag::Permutation;
    g.perm = std::move(p);
    return g;
  }
  static GroupElement wreath(std::vector<int> c, Perm p, unsigned cm = 2) {
    GroupElement g;
    g.tag = Tag::Wreath;
    g.cmod = cm;
    for (auto& v : c) v = ((v % static_cast<int>(cm)) + cm) % cm;
    g.comp = std::move(c);
    g.perm = std::move(p);
    return g;
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    auto key = [](const GroupElement& g) {
      return std::tie(g.tag, g.exp, g.mod, g.flip, g.perm, g.comp, g.cmod);
    };
    return key(a) < key(b);
  }

  bool is_identity() const {
    switch (tag) {
      case Tag::Cyclic: return exp == 0;
      case Tag::Dihedral: return exp == 0 && !flip;
      case Tag::Permutation: return perm == perm_identity(static_cast<int>(perm.size()));
      case Tag::Wreath:
        for (int v : comp)
          if (v != 0) return false;
        return perm == perm_identity(static_cast<int>(perm.size()));
    }
    return false;
  }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.tag != b.tag) throw std::invalid_argument("group element kind mismatch");
    switch (a.tag) {
      case Tag::Cyclic:
        if (a.mod != b.mod) throw std::invalid_argument("cyclic modulus mismatch");
        return cyclic(a.exp + b.exp, a.mod);
      case Tag::Dihedral: {
        if (a.mod != b.mod) throw std::invalid_argument("dihedral order mismatch");
        // rot^j flip^f * rot^k flip^g = rot^{j + (-1)^f k} flip^{f xor g}
        int rot = a.exp + (a.flip ? -b.exp : b.exp);
        return dihedral(rot, a.flip != b.flip, a.mod);
      }
      case Tag::Permutation:
        return permutation(perm_mul(a.perm, b.perm));
      case Tag::Wreath: {
        // (a, sigma)(b, tau) = (a + sigma.b, sigma tau), (sigma.b)_i = b_{sigma^{-1}(i)}
        if (a.comp.size() != b.comp.size() || a.cmod != b.cmod)
          throw std::invalid_argument("wreath shape mismatch");
        Perm si = perm_inverse(a.perm);
        std::vector<int> c(a.comp.size());
        for (size_t i = 0; i < c.size(); ++i)
          c[i] = a.comp[i] + b.comp[si[i] - 1];
        return wreath(std::move(c), perm_mul(a.perm, b.perm), a.cmod);
      }
    }
    throw std::logic_error("unreachable");
  }

  GroupElement inverse() const {
    switch (tag) {
      case Tag::Cyclic: return cyclic(-exp, mod);
      case Tag::Dihedral:
        return flip ? *this : dihedral(-exp, false, mod);
      case Tag::Permutation: return permutation(perm_inverse(perm));
      case Tag::Wreath: {
        // (a, sigma)^{-1} = (-sigma^{-1}.a, sigma^{-1})
        Perm si = perm_inverse(perm);
        std::vector<int> c(comp.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = -comp[perm[i] - 1];
        return wreath(std::move(c), si, cmod);
      }
    }
    throw std::logic_error("unreachable");
  }

  std::string str() const {
    switch (tag) {
      case Tag::Cyclic: return "g^" + std::to_string(exp);
      case Tag::Dihedral:
        return "r^" + std::to_string(exp) + (flip ? "*s" : "");
      case Tag::Permutation: return cycle_str(perm);
      case Tag::Wreath: {
        std::string out = "(";
        for (size_t i = 0; i < comp.size(); ++i) {
          if (i) out += ",";
          out += std::to_string(comp[i]);
        }
        out += ")|" + cycle_str(perm);
        return out;
      }
    }
    return "?";
  }
};

/// A concrete finite group: full element list plus generators.
struct Group {
  std::string name;
  std::vector<GroupElement> elements;
  std::vector<GroupElement> generators;
  GroupElement id;

  size_t order() const { return elements.size(); }

  size_t index_of(const GroupElement& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) throw std::invalid_argument("element not in group");
    return it->second;
  }
  bool contains(const GroupElement& g) const { return index_.count(g) != 0; }

  void finish() {
    index_.clear();
    for (size_t i = 0; i < elements.size(); ++i) index_[elements[i]] = i;
    if (index_.size() != elements.size())
      throw std::logic_error("duplicate group elements");
  }

  static Group cyclic(unsigned r) {
    Group G;
    G.name = "C" + std::to_string(r);
    for (unsigned e = 0; e < r; ++e)
      G.elements.push_back(GroupElement::cyclic(static_cast<int>(e), r));
    G.id = GroupElement::cyclic(0, r);
    if (r > 1) G.generators.push_back(GroupElement::cyclic(1, r));
    G.finish();
    return G;
  }

  static Group dihedral(unsigned m) {
    Group G;
    G.name = "Dih" + std::to_string(m);
    for (unsigned e = 0; e < m; ++e)
      for (bool f : {false, true})
        G.elements.push_back(GroupElement::dihedral(static_cast<int>(e), f, m));
    G.id = GroupElement::dihedral(0, false, m);
    G.generators = {GroupElement::dihedral(1, false, m),
                    GroupElement::dihedral(0, true, m)};
    G.finish();
    return G;
  }

  static Group symmetric(int n) {
    Group G;
    G.name = "S" + std::to_string(n);
    for (auto& p : all_perms(n)) G.elements.push_back(GroupElement::permutation(p));
    G.id = GroupElement::permutation(perm_identity(n));
    for (int i = 1; i < n; ++i)
      G.generators.push_back(GroupElement::permutation(adjacent(n, i)));
    G.finish();
    return G;
  }

  /// hyperoctahedral group B_n = C_2 wr S_n
  static Group weyl_b(int n) {
    Group G;
    G.name = "B" + std::to_string(n);
    build_signed(G, n, /*even_only=*/false);
    return G;
  }

  /// Weyl group D_n: signed permutations with an even number of sign flips
  static Group weyl_d(int n) {
    Group G;
    G.name = "D" + std::to_string(n);
    build_signed(G, n, /*even_only=*/true);
    return G;
  }

 private:
  static void build_signed(Group& G, int n, bool even_only) {
    auto perms = all_perms(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (even_only && __builtin_popcount(mask) % 2 != 0) continue;
      std::vector<int> comp(n);
      for (int i = 0; i < n; ++i) comp[i] = (mask >> i) & 1;
      for (const auto& p : perms)
        G.elements.push_back(GroupElement::wreath(comp, p, 2));
    }
    G.id = GroupElement::wreath(std::vector<int>(n, 0), perm_identity(n), 2);
    for (int i = 1; i < n; ++i)
      G.generators.push_back(
          GroupElement::wreath(std::vector<int>(n, 0), adjacent(n, i), 2));
    if (!even_only) {
      std::vector<int> c(n, 0);
      c[n - 1] = 1;
      G.generators.push_back(GroupElement::wreath(c, perm_identity(n), 2));
    } else if (n >= 2) {
      std::vector<int> c(n, 0);
      c[n - 1] = c[n - 2] = 1;
      G.generators.push_back(GroupElement::wreath(c, perm_identity(n), 2));
    }
    G.finish();
  }

  std::map<GroupElement, size_t> index_;
};

/// partition of G into conjugacy classes (brute force, budget-guarded)
inline std::vector<std::vector<GroupElement>> conjugacy_classes(const Group& G) {
  if (G.order() > 100000) throw std::invalid_argument("group too large to enumerate");
  std::vector<char> done(G.order(), 0);
  std::vector<std::vector<GroupElement>> classes;
  for (size_t i = 0; i < G.order(); ++i) {
    if (done[i]) continue;
    std::vector<GroupElement> cls;
    std::map<GroupElement, char> seen;
    for (const auto& h : G.elements) {
      GroupElement c = h * G.elements[i] * h.inverse();
      if (seen.emplace(c, 1).second) cls.push_back(c);
    }
    for (const auto& c : cls) done[G.index_of(c)] = 1;
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Orbit and stabilizer of a point under a group action, with a homomorphism
/// audit: act(g, act(h, x)) = act(g*h, x) for generator pairs across the orbit.
template <typename Point>
struct OrbitData {
  std::vector<Point> orbit;
  std::vector<GroupElement> stabilizer;
};

template <typename Point, typename Act>
OrbitData<Point> orbit_stabilizer(const Group& G, Act act, const Point& start) {
  OrbitData<Point> out;
  std::map<Point, char> seen;
  std::vector<Point> frontier = {start};
  seen[start] = 1;
  out.orbit.push_back(start);
  while (!frontier.empty()) {
    std::vector<Point> next;
    for (const auto& x : frontier)
      for (const auto& g : G.generators) {
        Point y = act(g, x);
        if (seen.emplace(y, 1).second) {
          out.orbit.push_back(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  for (const auto& x : out.orbit)
    for (const auto& g : G.generators)
      for (const auto& h : G.generators)
        if (act(g, act(h, x)) != act(g * h, x))
          throw std::invalid_argument("action is not a homomorphism");
  for (const auto& g : G.elements)
    if (act(g, start) == start) out.stabilizer.push_back(g);
  if (out.orbit.size() * out.stabilizer.size() != G.order())
    throw std::logic_error("orbit-stabilizer count mismatch");
  return out;
}

// ---------------------------------------------------------------------------
// The permutation representation of S_{n+1} on 0/1 strings of length n.

/// Operator for the transposition (i, n+1) on a length-n bit string: if
/// entry i is 1, every other entry is complemented; i = n+1 is the identity.
inline std::string bitflip_operator(int n, int i, std::string s) {
  if (static_cast<int>(s.size()) != n) throw std::invalid_argument("bad string length");
  if (i < 1 || i > n + 1) throw std::invalid_argument("operator index out of range");
  if (i == n + 1 || s[i - 1] == '0') return s;
  for (int j = 0; j < n; ++j)
    if (j != i - 1) s[j] = (s[j] == '0') ? '1' : '0';
  return s;
}

/// entry swap (i, i+1), i < n, acting on positions of the string
inline std::string bitswap_operator(int i, std::string s) {
  std::swap(s[i - 1], s[i]);
  return s;
}

/// Image of a permutation of S_{n+1} as an operator on bit strings, using the
/// generators: (i,i+1) for i < n acts by entry swap, (n,n+1) by the flip rule.
inline std::string bitaction_apply(int n, const Perm& w, std::string s) {
  if (static_cast<int>(w.size()) != n + 1) throw std::invalid_argument("bad rank");
  auto word = reduced_word(w);
  // rightmost generator acts first
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    s = (*it < n) ? bitswap_operator(*it, std::move(s))
                  : bitflip_operator(n, n, std::move(s));
  return s;
}

struct BitactionCertificate {
  bool homomorphism = false;
  bool faithful = false;
};

inline std::vector<std::string> all_bitstrings(int n) {
  std::vector<std::string> out;
  for (unsigned m = 0; m < (1u << n); ++m) {
    std::string s(n, '0');
    for (int j = 0; j < n; ++j)
      if ((m >> j) & 1) s[j] = '1';
    out.push_back(s);
  }
  return out;
}

/// Verify the defining relations of S_{n+1} pointwise on all 2^n strings and
/// decide faithfulness by testing generators of the minimal normal subgroups.
inline BitactionCertificate bitaction_verify(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("rank out of range");
  auto strings = all_bitstrings(n);
  auto gen = [&](int i, const std::string& s) {
    return (i < n) ? bitswap_operator(i, s) : bitflip_operator(n, n, s);
  };
  BitactionCertificate cert;
  for (const auto& s : strings) {
    for (int i = 1; i <= n; ++i) {
      if (gen(i, gen(i, s)) != s)
        throw std::logic_error("involution relation fails");
      for (int j = i + 2; j <= n; ++j)
        if (gen(i, gen(j, s)) != gen(j, gen(i, s)))
          throw std::logic_error("commuting relation fails");
      if (i + 1 <= n) {
        if (gen(i, gen(i + 1, gen(i, s))) != gen(i + 1, gen(i, gen(i + 1, s))))
          throw std::logic_error("braid relation fails");
      }
    }
  }
  cert.homomorphism = true;
  // The kernel is a normal subgroup of S_{n+1}; it is trivial iff a generator
  // of each minimal normal subgroup acts nontrivially.
  auto moves = [&](const Perm& w) {
    for (const auto& s : strings)
      if (bitaction_apply(n, w, s) != s) return true;
    return false;
  };
  int N = n + 1;
  if (N < 3) {
    Perm t = transposition(N, 1, 2);
    cert.faithful = moves(t);  // S_2: kernel trivial iff the swap moves something
  } else if (N == 4) {
    // minimal normal subgroup is the Klein four group
    Perm v = perm_mul(transposition(4, 1, 2), transposition(4, 3, 4));
    Perm t = transposition(4, 1, 2);
    cert.faithful = moves(v) && moves(t) &&
                    moves(perm_mul(transposition(4, 1, 3), transposition(4, 2, 4)));
  } else {
    // minimal normal subgroup is the alternating group; also rule out A_{n+1}
    // itself being the kernel complement case via a transposition
    Perm c = perm_mul(transposition(N, 1, 2), transposition(N, 2, 3));  // 3-cycle
    Perm t = transposition(N, 1, 2);
    cert.faithful = moves(c) && moves(t);
  }
  return cert;
}

}  // namespace sepdef

#endif
