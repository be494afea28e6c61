#ifndef SEPDEF_PERM_HPP
#define SEPDEF_PERM_HPP

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepdef {

/// Permutation of {1..n} stored as an image array: p[i-1] is the image of i.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

inline bool perm_valid(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

/// composition: (a*b)(i) = a(b(i))
inline Perm perm_mul(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}

inline Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
  return q;
}

inline Perm transposition(int n, int i, int j) {
  Perm p = perm_identity(n);
  std::swap(p[i - 1], p[j - 1]);
  return p;
}

/// adjacent transposition s_i = (i, i+1)
inline Perm adjacent(int n, int i) { return transposition(n, i, i + 1); }

/// Coxeter length = inversion count
inline int coxeter_length(const Perm& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

/// A reduced word for w: indices i with w = s_{i1}...s_{ik}, k = length(w).
/// Bubble-sort: strip descents on the right, one inversion at a time.
inline std::vector<int> reduced_word(const Perm& w) {
  std::vector<int> word;
  Perm p = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        // p = p' * s_i with p' shorter; record s_i on the right
        std::swap(p[i], p[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        moved = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

inline Perm perm_from_word(int n, const std::vector<int>& word) {
  Perm p = perm_identity(n);
  for (int i : word) p = perm_mul(p, adjacent(n, i));
  return p;
}

/// cycle notation, e.g. "(1,2)(3,4)"; identity prints as "()"
inline std::string cycle_str(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i) + 1) continue;
    out += "(";
    int j = static_cast<int>(i) + 1;
    bool first = true;
    while (!seen[j - 1]) {
      seen[j - 1] = 1;
      if (!first) out += ",";
      out += std::to_string(j);
      first = false;
      j = p[j - 1];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace sepdef

#endif
