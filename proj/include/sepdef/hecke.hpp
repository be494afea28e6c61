#ifndef SEPDEF_HECKE_HPP
#define SEPDEF_HECKE_HPP

#include "sepdef/algebra.hpp"

namespace sepdef {

/// Element of H_n(q) over Z[q, q^-1]: sparse combination of the T_w basis.
/// Relations: T_s T_w = T_{sw} when the length goes up, and
/// T_s T_w = (q - q^-1) T_w + T_{sw} when it goes down.
class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(int n) : n_(n) {}

  static HeckeElement unit(int n) {
    HeckeElement x(n);
    x.c_[perm_identity(n)] = Scalar(1, Ring{});
    return x;
  }
  static HeckeElement basis(int n, const Perm& w) {
    if (static_cast<int>(w.size()) != n || !perm_valid(w))
      throw ring_error("bad permutation for Hecke basis");
    HeckeElement x(n);
    x.c_[w] = Scalar(1, Ring{});
    return x;
  }
  static HeckeElement generator(int n, int i) { return basis(n, adjacent(n, i)); }

  int rank() const { return n_; }
  const std::map<Perm, Scalar>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(const Perm& w) const {
    auto it = c_.find(w);
    return it == c_.end() ? Scalar(0, Ring{}) : it->second;
  }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) {
    return !(a == b);
  }

  HeckeElement operator-() const {
    HeckeElement r = *this;
    for (auto& [w, v] : r.c_) v = -v;
    return r;
  }
  friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    a.check(b);
    HeckeElement r = a;
    for (const auto& [w, v] : b.c_) r.add(w, v);
    return r;
  }
  friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
    return a + (-b);
  }
  friend HeckeElement operator*(const Scalar& s, const HeckeElement& a) {
    HeckeElement r(a.n_);
    for (const auto& [w, v] : a.c_) r.add(w, s * v);
    return r;
  }

  void add(const Perm& w, const Scalar& v) {
    auto it = c_.find(w);
    if (it == c_.end()) {
      if (!v.is_zero()) c_[w] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [w, v] : c_) {
      if (!out.empty()) out += " + ";
      std::string vs = v.str();
      if (vs.find_first_of("+-") != std::string::npos && vs[0] != '-')
        vs = "(" + vs + ")";
      out += vs + "*T[" + cycle_str(w) + "]";
    }
    return out;
  }

 private:
  void check(const HeckeElement& o) const {
    if (n_ != o.n_) throw ring_error("Hecke rank mismatch");
  }

  int n_ = 0;
  std::map<Perm, Scalar> c_;
};

enum class Side { Left, Right };

/// T_{s_i} * x (or x * T_{s_i}) by the defining relations
inline HeckeElement multiply_by_generator(int i, const HeckeElement& x, Side side) {
  int n = x.rank();
  if (i < 1 || i >= n) throw ring_error("generator index out of range");
  Perm s = adjacent(n, i);
  Scalar qq = parse_scalar("q - q^-1");
  HeckeElement r(n);
  for (const auto& [w, v] : x.terms()) {
    Perm sw = (side == Side::Left) ? perm_mul(s, w) : perm_mul(w, s);
    if (coxeter_length(sw) > coxeter_length(w)) {
      r.add(sw, v);
    } else {
      r.add(w, qq * v);
      r.add(sw, v);
    }
  }
  return r;
}

/// T_v * T_w via a reduced word for v, rightmost generator applied first
inline HeckeElement hecke_multiply(const HeckeElement& x, const HeckeElement& y) {
  if (x.rank() != y.rank()) throw ring_error("Hecke rank mismatch");
  HeckeElement out(x.rank());
  for (const auto& [v, cv] : x.terms()) {
    auto word = reduced_word(v);
    HeckeElement acc = y;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      acc = multiply_by_generator(*it, acc, Side::Left);
    out = out + cv * acc;
  }
  return out;
}

inline HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
  return hecke_multiply(x, y);
}

/// specialization T_w -> w at q = 1, landing in the group algebra of S_n
inline AlgebraElement specialize_q1(const HeckeElement& x, const AlgebraPtr& ZSn,
                                    const Group& Sn) {
  AlgebraElement out(ZSn);
  Substitution q1(ZSn->ring);
  q1.set("q", Scalar(1, ZSn->ring));
  for (const auto& [w, v] : x.terms()) {
    Scalar c = specialize(v, q1);
    out += c * AlgebraElement::basis(ZSn, Sn.index_of(GroupElement::permutation(w)));
  }
  return out;
}

/// H_n(q) as a structure-constant algebra over Q(q) (for the idempotent solver)
inline AlgebraPtr hecke_algebra(int n) {
  auto Sn = all_perms(n);
  auto A = std::make_shared<Algebra>();
  A->name = "H" + std::to_string(n);
  A->ring = Ring{};
  std::map<Perm, size_t> index;
  for (size_t i = 0; i < Sn.size(); ++i) {
    A->labels.push_back("T[" + cycle_str(Sn[i]) + "]");
    index[Sn[i]] = i;
  }
  size_t d = Sn.size();
  A->table.assign(d, std::vector<Algebra::Row>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      HeckeElement p = HeckeElement::basis(n, Sn[i]) * HeckeElement::basis(n, Sn[j]);
      Algebra::Row r;
      for (const auto& [w, v] : p.terms()) r[index[w]] = v;
      A->table[i][j] = std::move(r);
    }
  A->unit = {{index[perm_identity(n)], Scalar(1, Ring{})}};
  A->verify_axioms();
  return A;
}

}  // namespace sepdef

#endif
