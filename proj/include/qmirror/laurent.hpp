#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qmirror/rational.hpp"

namespace qmirror {

/// Element of the Laurent polynomial ring Q[y, y^-1]. Canonical form:
/// no zero coefficients stored, terms keyed by exponent.
///
/// The ring is a Euclidean domain with size function spread() = top
/// exponent minus bottom exponent; units are the nonzero monomials.
class LaurentPoly {
public:
  using TermMap = std::map<long, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) terms_[0] = Rational(c); }
  LaurentPoly(const Rational& c) { if (!c.is_zero()) terms_[0] = c; }

  static LaurentPoly monomial(long exp, const Rational& c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_[exp] = c;
    return p;
  }
  static LaurentPoly y(long exp = 1) { return monomial(exp, Rational(1)); }
  /// y - 1, the torsion generator used throughout.
  static LaurentPoly y_minus_one() {
    LaurentPoly p = y();
    p -= LaurentPoly(1);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
  }
  /// Units of Q[y, y^-1] are exactly the single-term monomials.
  bool is_unit() const { return terms_.size() == 1; }

  long lo_exp() const {
    if (is_zero()) throw std::logic_error("LaurentPoly: lo_exp of zero");
    return terms_.begin()->first;
  }
  long hi_exp() const {
    if (is_zero()) throw std::logic_error("LaurentPoly: hi_exp of zero");
    return terms_.rbegin()->first;
  }
  /// Euclidean size; 0 for (nonzero) units.
  long spread() const { return hi_exp() - lo_exp(); }
  size_t term_count() const { return terms_.size(); }

  Rational coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational leading_coeff() const { return terms_.rbegin()->second; }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_[e] = c;
      } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        long e = ea + eb;
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
          Rational c = ca * cb;
          if (!c.is_zero()) r.terms_[e] = c;
        } else {
          it->second += ca * cb;
          if (it->second.is_zero()) r.terms_.erase(it);
        }
      }
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiplies by the unit that shifts the lowest exponent to 0 and makes
  /// the polynomial monic. Returns {normalized, unit} with
  /// *this == unit * normalized.
  std::pair<LaurentPoly, LaurentPoly> unit_normalize() const {
    if (is_zero()) return {LaurentPoly(), LaurentPoly(1)};
    long lo = lo_exp();
    LaurentPoly shifted;
    for (const auto& [e, c] : terms_) shifted.terms_[e - lo] = c;
    Rational lead = shifted.leading_coeff();
    LaurentPoly norm;
    for (const auto& [e, c] : shifted.terms_) norm.terms_[e] = c / lead;
    return {norm, monomial(lo, lead)};
  }
  LaurentPoly normalized() const { return unit_normalize().first; }

  LaurentPoly unit_inverse() const {
    if (!is_unit()) throw std::invalid_argument("LaurentPoly: not a unit");
    auto [e, c] = *terms_.begin();
    return monomial(-e, c.inverse());
  }

  /// Euclidean division: *this == q * d + r with r == 0 or spread(r) < spread(d).
  std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("LaurentPoly: division by zero");
    LaurentPoly q, r = *this;
    const long ddeg = d.spread();
    const long dlo = d.lo_exp();
    const Rational dlead = d.leading_coeff();
    while (!r.is_zero() && r.spread() >= ddeg) {
      // Cancel the top term of r against the top term of d.
      long shift = r.hi_exp() - (dlo + ddeg);
      Rational f = r.leading_coeff() / dlead;
      LaurentPoly t = monomial(shift, f);
      q += t;
      r -= t * d;
    }
    return {q, r};
  }

  bool divides(const LaurentPoly& other) const {
    if (is_zero()) return other.is_zero();
    return other.divmod(*this).second.is_zero();
  }

  friend LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
      LaurentPoly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.normalized();
  }

  LaurentPoly exact_quotient(const LaurentPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("LaurentPoly: exact_quotient not exact");
    return q;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string coeff = c.pretty();
      bool neg = coeff.size() && coeff[0] == '-';
      if (!out.empty()) {
        out += neg ? " - " : " + ";
        if (neg) coeff = coeff.substr(1);
      }
      std::string mono;
      if (e == 0) {
        mono = coeff;
      } else {
        std::string ypart = e == 1 ? "y" : "y^" + std::to_string(e);
        mono = (coeff == "1" ? "" : (coeff == "-1" ? "-" : coeff + "*")) + ypart;
      }
      out += mono;
    }
    return out;
  }

private:
  TermMap terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline bool is_unit(const LaurentPoly& p) { return p.is_unit(); }

/// Greatest common unit divisor of a family: y^(min lo_exp) scaled by
/// gcd(coefficient numerators)/lcm(denominators). 1 for an all-zero family.
/// Dividing the family by it yields integer coefficients with content 1.
template <typename Iter>
LaurentPoly common_unit_content(Iter begin, Iter end) {
  mpz_class num_gcd = 0, den_lcm = 1;
  bool any = false;
  long lo = 0;
  for (Iter it = begin; it != end; ++it) {
    const LaurentPoly& p = *it;
    if (p.is_zero()) continue;
    if (!any || p.lo_exp() < lo) lo = p.lo_exp();
    any = true;
    for (const auto& [e, c] : p.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
  }
  if (!any) return LaurentPoly(1);
  return LaurentPoly::monomial(lo, Rational::from_parts(num_gcd, den_lcm));
}

/// Pivot-selection weight for elimination: fewer terms first, then
/// smaller exponent spread.
inline std::pair<long, long> complexity(const LaurentPoly& p) {
  if (p.is_zero()) return {0, 0};
  return {static_cast<long>(p.term_count()), p.spread()};
}

/// Bezout data: u*a + v*b == g with g == gcd(a, b) in normalized form.
struct ExtGcd {
  LaurentPoly g, u, v;
};

inline ExtGcd ext_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r0 = a, r1 = b;
  LaurentPoly u0(1), u1, v0, v1(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    LaurentPoly u2 = u0 - q * u1;
    u0 = std::move(u1);
    u1 = std::move(u2);
    LaurentPoly v2 = v0 - q * v1;
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  auto [g, unit] = r0.unit_normalize();
  LaurentPoly inv = unit.unit_inverse();
  return ExtGcd{g, u0 * inv, v0 * inv};
}

}  // namespace qmirror
