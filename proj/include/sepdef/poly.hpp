#ifndef SEPDEF_POLY_HPP
#define SEPDEF_POLY_HPP

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "sepdef/numeric.hpp"

namespace sepdef {

/// Monomial: sorted (variable, exponent) pairs, exponents nonzero.
/// Negative exponents are legal in transit; stored polynomials keep them
/// nonnegative (Laurent behaviour lives in the fraction field).
struct Mono {
  std::vector<std::pair<std::string, int>> v;

  static Mono one() { return {}; }
  static Mono var(const std::string& name, int e = 1) {
    Mono m;
    if (e != 0) m.v.push_back({name, e});
    return m;
  }
  bool is_one() const { return v.empty(); }
  int exponent(const std::string& name) const {
    for (const auto& [n, e] : v)
      if (n == name) return e;
    return 0;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [n, e] : v) d += e;
    return d;
  }
  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono out;
    size_t i = 0, j = 0;
    while (i < a.v.size() || j < b.v.size()) {
      if (j == b.v.size() || (i < a.v.size() && a.v[i].first < b.v[j].first)) {
        out.v.push_back(a.v[i++]);
      } else if (i == a.v.size() || b.v[j].first < a.v[i].first) {
        out.v.push_back(b.v[j++]);
      } else {
        int e = a.v[i].second + b.v[j].second;
        if (e != 0) out.v.push_back({a.v[i].first, e});
        ++i, ++j;
      }
    }
    return out;
  }
  Mono inverse() const {
    Mono out = *this;
    for (auto& [n, e] : out.v) e = -e;
    return out;
  }
  /// a/b, or nullopt if the quotient has a negative exponent
  static bool try_divide(const Mono& a, const Mono& b, Mono& out) {
    out = a * b.inverse();
    for (const auto& [n, e] : out.v)
      if (e < 0) return false;
    return true;
  }
  friend bool operator==(const Mono&, const Mono&) = default;
};

/// lexicographic monomial order (variable names ascending, higher power wins)
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const {
    size_t i = 0, j = 0;
    while (i < a.v.size() || j < b.v.size()) {
      if (i == a.v.size()) {
        // a lacks b's variable: a's exponent there is 0
        return b.v[j].second > 0;
      }
      if (j == b.v.size()) return a.v[i].second < 0;
      if (a.v[i].first < b.v[j].first) {
        if (a.v[i].second != 0) return a.v[i].second < 0;
        ++i;
        continue;
      }
      if (b.v[j].first < a.v[i].first) {
        if (b.v[j].second != 0) return b.v[j].second > 0;
        ++j;
        continue;
      }
      if (a.v[i].second != b.v[j].second) return a.v[i].second < b.v[j].second;
      ++i, ++j;
    }
    return false;
  }
};

/// Sparse multivariate polynomial over Num.
class Poly {
 public:
  using Terms = std::map<Mono, Num, MonoLess>;

  Poly() : ring_{} {}
  explicit Poly(const Ring& rg) : ring_(rg) {}
  Poly(const Num& c) : ring_(c.ring()) {
    if (!c.is_zero()) t_[Mono::one()] = c;
  }
  Poly(long v, const Ring& rg) : Poly(Num(v, rg)) {}
  static Poly var(const std::string& name, const Ring& rg, int e = 1) {
    Poly p(rg);
    p.t_[Mono::var(name, e)] = Num(1, rg);
    return p;
  }
  static Poly term(const Mono& m, const Num& c) {
    Poly p(c.ring());
    if (!c.is_zero()) p.t_[m] = c;
    return p;
  }

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const {
    return t_.size() == 1 && t_.begin()->first.is_one() && t_.begin()->second.is_one();
  }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
  }
  Num constant_term() const {
    auto it = t_.find(Mono::one());
    return it == t_.end() ? Num(0, ring_) : it->second;
  }
  /// leading term under the monomial order
  const std::pair<const Mono, Num>& leading() const {
    if (t_.empty()) throw ring_error("leading term of zero");
    return *t_.rbegin();
  }
  int degree(const std::string& v) const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.exponent(v));
    return d;
  }
  int low_degree(const std::string& v) const {
    if (t_.empty()) return 0;
    int d = t_.begin()->first.exponent(v);
    for (const auto& [m, c] : t_) d = std::min(d, m.exponent(v));
    return d;
  }
  std::set<std::string> variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : t_)
      for (const auto& [n, e] : m.v) out.insert(n);
    return out;
  }

  void add_term(const Mono& m, const Num& c) {
    auto it = t_.find(m);
    if (it == t_.end()) {
      if (!c.is_zero()) t_.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ring_ == b.ring_ && a.t_ == b.t_;
  }
  Poly operator-() const {
    Poly p(ring_);
    for (const auto& [m, c] : t_) p.t_[m] = -c;
    return p;
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check(b);
    Poly p = a;
    for (const auto& [m, c] : b.t_) p.add_term(m, c);
    return p;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly p(a.ring_);
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) p.add_term(ma * mb, ca * cb);
    return p;
  }
  friend Poly operator*(const Num& c, const Poly& a) { return Poly(c) * a; }
  Poly pow(unsigned e) const {
    Poly out(Num(1, ring_));
    Poly base = *this;
    while (e) {
      if (e & 1) out = out * base;
      base = base * base;
      e >>= 1;
    }
    return out;
  }

  /// exact division; throws if the quotient does not exist in the ring
  friend Poly div_exact(const Poly& a, const Poly& b) {
    a.check(b);
    if (b.is_zero()) throw pole_error("division by zero polynomial");
    Poly rem = a, quot(a.ring_);
    const auto& [lm, lc] = b.leading();
    Num lc_inv = lc.inverse();
    while (!rem.is_zero()) {
      const auto& [rm, rc] = rem.leading();
      Mono q;
      if (!Mono::try_divide(rm, lm, q)) throw ring_error("inexact polynomial division");
      Num qc = rc * lc_inv;
      quot.add_term(q, qc);
      rem = rem - Poly::term(q, qc) * b;
    }
    return quot;
  }
  friend bool divides(const Poly& b, const Poly& a) {
    try {
      div_exact(a, b);
      return true;
    } catch (const ring_error&) {
      return false;
    }
  }

  /// formal derivative
  Poly derivative(const std::string& v) const {
    Poly out(ring_);
    for (const auto& [m, c] : t_) {
      int e = m.exponent(v);
      if (e == 0) continue;
      out.add_term(m * Mono::var(v, -1), Num(e, ring_) * c);
    }
    return out;
  }

  /// monic w.r.t. the monomial order
  Poly monic() const {
    if (is_zero()) return *this;
    return leading().second.inverse() * *this;
  }

 private:
  void check(const Poly& o) const {
    if (!(ring_ == o.ring_)) throw ring_error("polynomial ring mismatch");
  }

  Ring ring_;
  Terms t_;
};

namespace detail {

// view as univariate in v with Poly coefficients
inline std::map<int, Poly> univariate_view(const Poly& p, const std::string& v) {
  std::map<int, Poly> out;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(v);
    Mono rest = m * Mono::var(v, -e);
    auto it = out.find(e);
    if (it == out.end()) it = out.emplace(e, Poly(p.ring())).first;
    it->second.add_term(rest, c);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace detail

/// gcd of multivariate polynomials over a field of coefficients, returned
/// monic w.r.t. the monomial order. Primitive PRS with recursive contents.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto va = a.variables();
  auto vb = b.variables();
  std::set<std::string> vars = va;
  vars.insert(vb.begin(), vb.end());
  if (vars.empty()) return Poly(Num(1, a.ring()));

  // gcd with a monomial is the largest common monomial divisor
  if (a.terms().size() == 1 || b.terms().size() == 1) {
    const Poly& mono = a.terms().size() == 1 ? a : b;
    const Poly& other = a.terms().size() == 1 ? b : a;
    Mono g = mono.terms().begin()->first;
    for (const auto& [m, c] : other.terms()) {
      Mono h;
      for (const auto& [name, e] : g.v) {
        int e2 = std::min(e, m.exponent(name));
        if (e2 != 0) h.v.push_back({name, e2});
      }
      g = std::move(h);
      if (g.is_one()) break;
    }
    return Poly::term(g, Num(1, a.ring()));
  }

  const std::string v = *vars.begin();
  if (vars.size() == 1) {
    // univariate over the coefficient field: plain euclidean gcd
    Poly f = a.monic(), g = b.monic();
    if (f.degree(v) < g.degree(v)) std::swap(f, g);
    while (!g.is_zero()) {
      int dg = g.degree(v);
      Poly r = f;
      while (!r.is_zero() && r.degree(v) >= dg) {
        const auto& [rm, rc] = r.leading();
        r = r - Poly::term(Mono::var(v, rm.exponent(v) - dg), rc) * g;
      }
      f = g;
      g = r.is_zero() ? r : r.monic();
    }
    return f.monic();
  }
  auto ua = detail::univariate_view(a, v);
  auto ub = detail::univariate_view(b, v);

  auto content = [&](const std::map<int, Poly>& u) {
    Poly c(a.ring());
    for (const auto& [e, coeff] : u) c = poly_gcd(c, coeff);
    return c;
  };
  auto primitive = [&](const Poly& p, const Poly& cont) { return div_exact(p, cont); };

  Poly ca = content(ua), cb = content(ub);
  Poly cg = poly_gcd(ca, cb);

  Poly f = primitive(a, ca), g = primitive(b, cb);
  if (f.degree(v) < g.degree(v)) std::swap(f, g);
  while (!g.is_zero()) {
    // pseudo-remainder of f by g in v
    int df = f.degree(v), dg = g.degree(v);
    if (dg == 0) {
      g = Poly(a.ring());
      f = Poly(Num(1, a.ring()));
      break;
    }
    Poly lg(a.ring());
    for (const auto& [m, c] : g.terms())
      if (m.exponent(v) == dg) lg.add_term(m * Mono::var(v, -dg), c);
    Poly r = f;
    while (!r.is_zero() && r.degree(v) >= dg) {
      int dr = r.degree(v);
      Poly lr(a.ring());
      for (const auto& [m, c] : r.terms())
        if (m.exponent(v) == dr) lr.add_term(m * Mono::var(v, -dr), c);
      r = lg * r - Poly::term(Mono::var(v, dr - dg), Num(1, a.ring())) * lr * g;
    }
    f = g;
    g = r;
    if (!g.is_zero()) {
      Poly cr = content(detail::univariate_view(g, v));
      g = div_exact(g, cr);
    }
  }
  return (cg * f).monic();
}

}  // namespace sepdef

#endif
