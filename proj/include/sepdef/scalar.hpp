#ifndef SEPDEF_SCALAR_HPP
#define SEPDEF_SCALAR_HPP

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sepdef/poly.hpp"

namespace sepdef {

/// Element of the fraction field of a (Laurent) polynomial ring over Q, F_p,
/// or a cyclotomic extension. Canonical form: num/den coprime polynomials
/// with nonnegative exponents, den normalized (integral primitive with
/// positive leading coefficient in characteristic 0, monic otherwise).
class Scalar {
 public:
  Scalar() : num_(), den_(Num(1)) {}
  explicit Scalar(const Ring& rg) : num_(rg), den_(Num(1, rg)) {}
  Scalar(const Num& c) : num_(c), den_(Num(1, c.ring())) {}
  Scalar(long v, const Ring& rg = Ring{}) : Scalar(Num(v, rg)) {}
  Scalar(const Poly& p) : num_(p), den_(Num(1, p.ring())) {}
  Scalar(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  static Scalar variable(const std::string& name, const Ring& rg = Ring{}) {
    return Scalar(Poly::var(name, rg));
  }
  /// the adjoined primitive root of unity of the ring
  static Scalar root(const Ring& rg) { return Scalar(Num::root(rg)); }
  static Scalar integer(const mpq_class& v, const Ring& rg = Ring{}) {
    return Scalar(Num(v, rg));
  }

  const Ring& ring() const { return num_.ring(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// true when the value lies in the subring with integer coefficients
  /// (denominator 1 and, in characteristic 0, integral rational parts)
  bool is_integral() const {
    if (!den_.is_one()) return false;
    if (ring().p != 0) return true;
    for (const auto& [m, c] : num_.terms())
      for (const auto& q : c.coeffs())
        if (q.get_den() != 1) return false;
    return true;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
  }
  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw pole_error("division by zero");
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const {
    if (is_zero()) throw pole_error("inverting zero");
    return Scalar(den_, num_);
  }
  Scalar pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar out(1, ring());
    Scalar base = *this;
    unsigned ue = static_cast<unsigned>(e);
    while (ue) {
      if (ue & 1) out = out * base;
      base = base * base;
      ue >>= 1;
    }
    return out;
  }

  std::string str() const;

 private:
  void reduce() {
    if (den_.is_zero()) throw pole_error("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(Num(1, num_.ring()));
      return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = div_exact(num_, g);
      den_ = div_exact(den_, g);
    }
    // canonical representative: monic denominator
    Num lead = den_.leading().second;
    if (!lead.is_one()) {
      Num inv = lead.inverse();
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  Poly num_, den_;
};

// ---------------------------------------------------------------------------
// printing

namespace detail {

inline std::string num_str(const Num& c) {
  std::string out;
  int printed = 0;
  for (size_t i = c.coeffs().size(); i-- > 0;) {
    const mpq_class& q = c.coeffs()[i];
    if (q == 0) continue;
    std::string part;
    mpq_class aq = abs(q);
    if (i == 0) {
      part = aq.get_str();
    } else {
      std::string zp = i == 1 ? "z" : "z^" + std::to_string(i);
      part = aq == 1 ? zp : aq.get_str() + "*" + zp;
    }
    if (printed == 0)
      out += (q < 0 ? "-" : "") + part;
    else
      out += (q < 0 ? " - " : " + ") + part;
    ++printed;
  }
  if (printed == 0) return "0";
  if (printed > 1) return "(" + out + ")";
  return out;
}

inline std::string mono_str(const Mono& m) {
  std::string out;
  for (const auto& [n, e] : m.v) {
    if (!out.empty()) out += "*";
    out += n;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::string poly_str(const Poly& p, const Mono& shift = Mono::one()) {
  if (p.is_zero()) return "0";
  std::string out;
  // highest monomial first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Mono m = it->first * shift;
    std::string cs = num_str(it->second);
    bool neg = false;
    if (!cs.empty() && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    std::string body;
    if (m.is_one())
      body = cs;
    else if (cs == "1")
      body = mono_str(m);
    else
      body = cs + "*" + mono_str(m);
    if (out.empty())
      out += (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace detail

inline std::string Scalar::str() const {
  if (den_.is_one()) return detail::poly_str(num_);
  if (den_.terms().size() == 1 && den_.leading().second.is_one()) {
    // monomial denominator folds into Laurent exponents
    return detail::poly_str(num_, den_.leading().first.inverse());
  }
  // display-only rescaling: integral primitive denominator with positive
  // leading coefficient (parse re-canonicalizes, so this round-trips)
  Poly dn = den_, nm = num_;
  if (ring().p == 0) {
    mpz_class lcm_den = 1, gcd_num = 0;
    for (const auto& [m, c] : dn.terms())
      for (const auto& q : c.coeffs())
        if (q != 0)
          mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                  q.get_den().get_mpz_t());
    for (const auto& [m, c] : dn.terms())
      for (const auto& q : c.coeffs())
        if (q != 0) {
          mpz_class n = q.get_num() * (lcm_den / q.get_den());
          mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
        }
    mpq_class scale(lcm_den, gcd_num);
    scale.canonicalize();
    mpq_class key = 0;
    for (const auto& q : dn.leading().second.coeffs())
      if (q != 0) {
        key = q;
        break;
      }
    if (key < 0) scale = -scale;
    nm = Num(scale, ring()) * nm;
    dn = Num(scale, ring()) * dn;
  }
  std::string d = detail::poly_str(dn);
  std::string n = detail::poly_str(nm);
  bool n_par = nm.terms().size() > 1;
  bool d_par = dn.terms().size() > 1;
  return (n_par ? "(" + n + ")" : n) + "/" + (d_par ? "(" + d + ")" : d);
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

// ---------------------------------------------------------------------------
// parsing of the canonical text form

namespace detail {

class ScalarParser {
 public:
  ScalarParser(const std::string& s, const Ring& rg) : s_(s), rg_(rg) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ring_error("trailing input in scalar: " + s_);
    return v;
  }

 private:
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        v += term();
      } else if (peek() == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }
  Scalar term() {
    Scalar v = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        v *= factor();
      } else if (peek() == '/') {
        ++pos_;
        v /= factor();
      } else {
        return v;
      }
    }
  }
  Scalar factor() {
    Scalar v = base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      v = v.pow(parse_int());
    }
    return v;
  }
  Scalar base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      skip_ws();
      if (peek() != ')') throw ring_error("expected ')' in scalar: " + s_);
      ++pos_;
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return Scalar::integer(mpq_class(s_.substr(start, pos_ - start)), rg_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "z") return Scalar::root(rg_);
      return Scalar::variable(name, rg_);
    }
    throw ring_error("unexpected character in scalar: " + s_);
  }
  int parse_int() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) throw ring_error("expected integer exponent: " + s_);
    int v = std::stoi(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  const std::string& s_;
  Ring rg_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Scalar parse_scalar(const std::string& s, const Ring& rg = Ring{}) {
  return detail::ScalarParser(s, rg).parse();
}

// ---------------------------------------------------------------------------
// specialization (ring morphisms)

/// One substitution step: variable bindings plus a target ring. Bindings are
/// simultaneous within a step; steps compose in order via specialize().
struct Substitution {
  Ring target;
  std::map<std::string, Scalar> bind;

  Substitution(const Ring& rg = Ring{}) : target(rg) {}
  Substitution& set(const std::string& var, const Scalar& value) {
    bind[var] = value;
    return *this;
  }
  Substitution& set(const std::string& var, const std::string& value) {
    bind[var] = parse_scalar(value, target);
    return *this;
  }
};

inline Scalar specialize(const Poly& p, const Substitution& s) {
  Scalar acc(0, s.target);
  for (const auto& [m, c] : p.terms()) {
    Scalar t(c.map_to(s.target));
    for (const auto& [n, e] : m.v) {
      auto it = s.bind.find(n);
      Scalar img = it != s.bind.end() ? it->second : Scalar::variable(n, s.target);
      if (e < 0 && img.is_zero()) throw pole_error("evaluation at pole: " + n);
      t *= img.pow(e);
    }
    acc += t;
  }
  return acc;
}

namespace detail {

/// rescale num/den by a common rational so both have coprime integer content;
/// the canonical monic-denominator form would otherwise hide unit denominators
/// (e.g. 1/(4t^3 - 27) is stored as (1/4)/(t^3 - 27/4), whose reduction mod 2
/// would wrongly hit the non-invertible 1/4)
inline void clear_rational_content(Poly& n, Poly& d) {
  mpz_class lcm_den = 1, gcd_num = 0;
  auto fold = [&](const Poly& p) {
    for (const auto& [m, c] : p.terms())
      for (const auto& q : c.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
  };
  fold(n), fold(d);
  auto fold2 = [&](const Poly& p) {
    for (const auto& [m, c] : p.terms())
      for (const auto& q : c.coeffs()) {
        mpq_class v = q * lcm_den;
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.get_num().get_mpz_t());
      }
  };
  fold2(n), fold2(d);
  if (gcd_num == 0) gcd_num = 1;
  mpq_class f(lcm_den, gcd_num);
  f.canonicalize();
  if (f == 1) return;
  Num scale(f, n.ring());
  n = scale * n;
  d = scale * d;
}

}  // namespace detail

inline Scalar specialize(const Scalar& x, const Substitution& s) {
  Poly n = x.num(), d = x.den();
  if (x.ring().p == 0 && s.target.p != 0) detail::clear_rational_content(n, d);
  Scalar dn = specialize(d, s);
  if (dn.is_zero()) throw pole_error("evaluation at pole");
  return specialize(n, s) / dn;
}

inline Scalar specialize(const Scalar& x, const std::vector<Substitution>& steps) {
  Scalar v = x;
  for (const auto& s : steps) v = specialize(v, s);
  return v;
}

// ---------------------------------------------------------------------------
// quantum integers

/// 1 + base + ... + base^{i-1}, the exact quotient (1 - base^i)/(1 - base)
inline Scalar quantum_integer(unsigned i, const Scalar& base) {
  if (i < 1) throw ring_error("quantum integer index must be >= 1");
  Scalar acc(0, base.ring());
  Scalar p(1, base.ring());
  for (unsigned k = 0; k < i; ++k) {
    acc += p;
    p *= base;
  }
  return acc;
}

/// product of quantum_integer(j, base) for j = 2..n (1 for n = 1)
inline Scalar quantum_factorial(unsigned n, const Scalar& base) {
  if (n < 1) throw ring_error("quantum factorial index must be >= 1");
  Scalar acc(1, base.ring());
  for (unsigned j = 2; j <= n; ++j) acc *= quantum_integer(j, base);
  return acc;
}

}  // namespace sepdef

#endif
