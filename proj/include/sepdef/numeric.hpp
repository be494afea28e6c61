#ifndef SEPDEF_NUMERIC_HPP
#define SEPDEF_NUMERIC_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepdef {

struct ring_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct pole_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coefficient ring tag: characteristic p (0 for Q) with a primitive r-th
/// root of unity adjoined (r = 1 means none).
struct Ring {
  unsigned long p = 0;
  unsigned r = 1;
  friend bool operator==(const Ring&, const Ring&) = default;
};

inline std::string to_string(const Ring& rg) {
  std::string s = rg.p == 0 ? "Q" : "F" + std::to_string(rg.p);
  if (rg.r > 1) s += "(z" + std::to_string(rg.r) + ")";
  return s;
}

namespace detail {

// ascending-degree integer coefficients of the r-th cyclotomic polynomial,
// obtained by exact division of y^r - 1 by the lower cyclotomic factors
inline const std::vector<mpz_class>& cyclotomic_coeffs(unsigned r) {
  static std::map<unsigned, std::vector<mpz_class>> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  if (r == 0) throw ring_error("cyclotomic order must be positive");
  std::vector<mpz_class> f(r + 1, 0);
  f[0] = -1;
  f[r] = 1;
  for (unsigned d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    const auto& g = cyclotomic_coeffs(d);
    // monic long division; remainder must vanish
    std::vector<mpz_class> q(f.size() - g.size() + 1, 0);
    std::vector<mpz_class> rem = f;
    for (int k = static_cast<int>(rem.size()) - 1;
         k >= static_cast<int>(g.size()) - 1; --k) {
      mpz_class c = rem[k];
      if (c == 0) continue;
      q[k - (g.size() - 1)] = c;
      for (size_t j = 0; j < g.size(); ++j) rem[k - (g.size() - 1) + j] -= c * g[j];
    }
    for (const auto& c : rem)
      if (c != 0) throw ring_error("cyclotomic division not exact");
    f = std::move(q);
  }
  return cache.emplace(r, std::move(f)).first->second;
}

inline unsigned cyclotomic_degree(unsigned r) {
  return static_cast<unsigned>(cyclotomic_coeffs(r).size() - 1);
}

// canonical residue of a rational modulo a prime; the denominator must be
// invertible
inline mpz_class mod_p(const mpq_class& q, unsigned long p) {
  mpz_class pp(static_cast<unsigned long>(p));
  mpz_class den = q.get_den() % pp;
  if (den < 0) den += pp;
  if (den == 0) throw pole_error("denominator not invertible mod p");
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t()) == 0)
    throw pole_error("denominator not invertible mod p");
  mpz_class v = (q.get_num() % pp) * inv % pp;
  if (v < 0) v += pp;
  return v;
}

}  // namespace detail

/// Element of Q, F_p, Q(z_r) or F_p[y]/Phi_r(y): a coefficient vector of
/// degree < deg Phi_r in the adjoined root.
class Num {
 public:
  Num() : ring_{}, c_(1, 0) {}
  explicit Num(const Ring& rg) : ring_(rg), c_(detail::cyclotomic_degree(rg.r), 0) {
    normalize();
  }
  Num(long v, const Ring& rg = Ring{}) : Num(mpq_class(v), rg) {}
  Num(const mpq_class& v, const Ring& rg = Ring{}) : Num(rg) {
    c_[0] = v;
    normalize();
  }

  /// the adjoined primitive r-th root of unity
  static Num root(const Ring& rg) {
    Num n(rg);
    if (rg.r == 1) {
      n.c_[0] = 1;  // y = 1 when r = 1
    } else if (rg.r == 2) {
      n.c_[0] = -1;
    } else {
      n.c_[1] = 1;
    }
    n.normalize();
    return n;
  }

  const Ring& ring() const { return ring_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (c != 0) return false;
    return true;
  }
  bool is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  /// true when no root-of-unity part is present
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  mpq_class rational() const {
    if (!is_rational()) throw ring_error("not a rational value");
    return c_[0];
  }

  friend bool operator==(const Num& a, const Num& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
  }

  Num operator-() const {
    Num n = *this;
    for (auto& c : n.c_) c = -c;
    n.normalize();
    return n;
  }
  friend Num operator+(const Num& a, const Num& b) {
    a.check(b);
    Num n = a;
    for (size_t i = 0; i < n.c_.size(); ++i) n.c_[i] += b.c_[i];
    n.normalize();
    return n;
  }
  friend Num operator-(const Num& a, const Num& b) { return a + (-b); }
  friend Num operator*(const Num& a, const Num& b) {
    a.check(b);
    size_t d = a.c_.size();
    std::vector<mpq_class> prod(2 * d - 1, 0);
    for (size_t i = 0; i < d; ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < d; ++j)
        if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    // reduce modulo the monic cyclotomic polynomial
    const auto& phi = detail::cyclotomic_coeffs(a.ring_.r);
    for (int k = static_cast<int>(prod.size()) - 1; k >= static_cast<int>(d); --k) {
      mpq_class c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (size_t j = 0; j < d; ++j) prod[k - d + j] -= c * phi[j];
    }
    Num n(a.ring_);
    for (size_t i = 0; i < d; ++i) n.c_[i] = prod[i];
    n.normalize();
    return n;
  }

  Num inverse() const {
    if (is_zero()) throw pole_error("division by zero");
    if (is_rational() && ring_.p == 0) return Num(1 / c_[0], ring_);
    // extended euclid against Phi_r in (Q or F_p)[y]
    using V = std::vector<mpq_class>;
    const auto& phi_z = detail::cyclotomic_coeffs(ring_.r);
    V a(phi_z.begin(), phi_z.end());
    V b = c_;
    trim(b);
    V s0(1, 0), s1(1, 1);  // cofactors of b
    while (!b.empty()) {
      V q, r;
      divmod(a, b, q, r);
      V s2 = sub(s0, mul(q, s1));
      a = std::move(b);
      b = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (a.size() != 1) throw pole_error("element not invertible in quotient ring");
    Num out(ring_);
    mpq_class lead = field_inv(a[0]);
    for (size_t i = 0; i < s0.size() && i < out.c_.size(); ++i)
      out.c_[i] = s0[i] * lead;
    out.normalize();
    return out;
  }
  friend Num operator/(const Num& a, const Num& b) { return a * b.inverse(); }

  /// image in a target ring: reduce rationals mod p when the target has
  /// positive characteristic and carry the root of unity across
  Num map_to(const Ring& target) const {
    if (!is_rational() && target.r != ring_.r)
      throw ring_error("cannot map root of unity between distinct orders");
    Num out(target);
    for (size_t i = 0; i < c_.size() && i < out.c_.size(); ++i) out.c_[i] = c_[i];
    out.normalize();
    return out;
  }

 private:
  void check(const Num& o) const {
    if (!(ring_ == o.ring_)) throw ring_error("coefficient ring mismatch");
  }
  void normalize() {
    if (ring_.p == 0) {
      for (auto& c : c_) c.canonicalize();
      return;
    }
    for (auto& c : c_) c = mpq_class(detail::mod_p(c, ring_.p));
  }
  mpq_class field_inv(const mpq_class& v) const {
    if (v == 0) throw pole_error("division by zero");
    if (ring_.p == 0) return 1 / v;
    mpz_class pp(ring_.p), inv;
    mpz_class n = detail::mod_p(v, ring_.p);
    if (mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()) == 0)
      throw pole_error("not invertible mod p");
    return mpq_class(inv);
  }
  mpq_class reduce_q(const mpq_class& v) const {
    if (ring_.p == 0) return v;
    return mpq_class(detail::mod_p(v, ring_.p));
  }
  static void trim(std::vector<mpq_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
  std::vector<mpq_class> mul(const std::vector<mpq_class>& a,
                             const std::vector<mpq_class>& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<mpq_class> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    for (auto& c : out) c = reduce_q(c);
    trim(out);
    return out;
  }
  std::vector<mpq_class> sub(const std::vector<mpq_class>& a,
                             const std::vector<mpq_class>& b) const {
    std::vector<mpq_class> out = a;
    if (out.size() < b.size()) out.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) out[i] = reduce_q(out[i] - b[i]);
    trim(out);
    return out;
  }
  void divmod(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
              std::vector<mpq_class>& q, std::vector<mpq_class>& r) const {
    r = a;
    trim(r);
    q.assign(r.size() > b.size() - 1 ? r.size() - b.size() + 1 : 1, 0);
    mpq_class lead_inv = field_inv(b.back());
    while (r.size() >= b.size()) {
      mpq_class c = reduce_q(r.back() * lead_inv);
      size_t shift = r.size() - b.size();
      q[shift] = c;
      for (size_t j = 0; j < b.size(); ++j)
        r[shift + j] = reduce_q(r[shift + j] - c * b[j]);
      trim(r);
      if (r.size() > shift + b.size()) throw ring_error("divmod invariant");
    }
    trim(q);
  }

  Ring ring_;
  std::vector<mpq_class> c_;
};

}  // namespace sepdef

#endif
