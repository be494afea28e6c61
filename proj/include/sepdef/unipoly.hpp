#ifndef SEPDEF_UNIPOLY_HPP
#define SEPDEF_UNIPOLY_HPP

#include <string>
#include <vector>

#include "sepdef/scalar.hpp"

namespace sepdef {

/// Dense univariate polynomial with Scalar coefficients (ascending degree).
/// The indeterminate is abstract: it is whatever variable the quotient
/// algebra adjoins, not one of the Scalar's own variables.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Ring& rg) : ring_(rg) {}
  UniPoly(std::vector<Scalar> coeffs, const Ring& rg)
      : ring_(rg), c_(std::move(coeffs)) {
    trim();
  }
  static UniPoly x(const Ring& rg) {
    return UniPoly({Scalar(0, rg), Scalar(1, rg)}, rg);
  }
  static UniPoly constant(const Scalar& c) { return UniPoly({c}, c.ring()); }
  static UniPoly monomial(const Scalar& c, unsigned deg) {
    std::vector<Scalar> v(deg + 1, Scalar(0, c.ring()));
    v[deg] = c;
    return UniPoly(std::move(v), c.ring());
  }

  const Ring& ring() const { return ring_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar coeff(size_t i) const {
    return i < c_.size() ? c_[i] : Scalar(0, ring_);
  }
  const Scalar& leading() const {
    if (c_.empty()) throw ring_error("leading coefficient of zero");
    return c_.back();
  }
  const std::vector<Scalar>& coeffs() const { return c_; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }
  UniPoly operator-() const {
    UniPoly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly p = a;
    if (p.c_.size() < b.c_.size()) p.c_.resize(b.c_.size(), Scalar(0, a.ring_));
    for (size_t i = 0; i < b.c_.size(); ++i) p.c_[i] += b.c_[i];
    p.trim();
    return p;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.ring_);
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0, a.ring_));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(out), a.ring_);
  }
  friend UniPoly operator*(const Scalar& s, const UniPoly& a) {
    UniPoly p = a;
    for (auto& c : p.c_) c *= s;
    p.trim();
    return p;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly(ring_);
    std::vector<Scalar> out(c_.size() - 1, Scalar(0, ring_));
    for (size_t i = 1; i < c_.size(); ++i)
      out[i - 1] = Scalar(static_cast<long>(i), ring_) * c_[i];
    return UniPoly(std::move(out), ring_);
  }

  Scalar eval(const Scalar& x) const {
    Scalar acc(0, ring_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// remainder under field division
  friend UniPoly rem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw pole_error("division by zero polynomial");
    UniPoly r = a;
    Scalar inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      Scalar c = r.leading() * inv;
      int shift = r.degree() - b.degree();
      for (int j = 0; j <= b.degree(); ++j) r.c_[shift + j] -= c * b.c_[j];
      r.trim();
    }
    return r;
  }

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Ring ring_;
  std::vector<Scalar> c_;
};

inline std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string cs = c_[i].str();
    // a sign can only be pulled out of a single-term coefficient: stripping
    // the leading minus of a sum would negate just its first term
    bool compound = cs.find_first_of("+-", 1) != std::string::npos ||
                    cs.find('/') != std::string::npos;
    bool neg = !compound && !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (compound && cs.front() != '(') cs = "(" + cs + ")";
    std::string body;
    if (i == 0)
      body = cs;
    else {
      std::string xp = i == 1 ? var : var + "^" + std::to_string(i);
      body = cs == "1" ? xp : cs + "*" + xp;
    }
    if (out.empty())
      out += (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

/// resultant over the Scalar field, via the euclidean remainder sequence
inline Scalar resultant(const UniPoly& f, const UniPoly& g) {
  const Ring& rg = f.ring();
  if (f.is_zero() || g.is_zero()) return Scalar(0, rg);
  if (f.degree() == 0) return f.leading().pow(g.degree());
  if (g.degree() == 0) return g.leading().pow(f.degree());
  UniPoly r = rem(f, g);
  if (r.is_zero()) return Scalar(0, rg);
  Scalar sign((f.degree() * g.degree()) % 2 == 0 ? 1 : -1, rg);
  return sign * g.leading().pow(f.degree() - r.degree()) * resultant(g, r);
}

/// discriminant with the classical sign, disc(x^3 - t*x - 1) = 4t^3 - 27
inline Scalar discriminant(const UniPoly& f) {
  int d = f.degree();
  if (d < 1) throw ring_error("discriminant needs degree >= 1");
  UniPoly fp = f.derivative();
  Scalar res = fp.is_zero() ? Scalar(0, f.ring()) : resultant(f, fp);
  Scalar sign((d * (d - 1) / 2) % 2 == 0 ? 1 : -1, f.ring());
  return sign * res / f.leading();
}

/// the r-th cyclotomic polynomial over the given coefficient ring
inline UniPoly cyclotomic(unsigned r, const Ring& rg = Ring{}) {
  const auto& z = detail::cyclotomic_coeffs(r);
  std::vector<Scalar> c;
  c.reserve(z.size());
  for (const auto& v : z) c.push_back(Scalar::integer(mpq_class(v), rg));
  return UniPoly(std::move(c), rg);
}

}  // namespace sepdef

#endif
