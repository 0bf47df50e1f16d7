#pragma once

#include <string>
#include <utility>

#include "rees/poly.hpp"
#include "rees/poly_algorithms.hpp"
#include "rees/rational.hpp"

namespace rees {

/// Element of Q(t, tstar), kept as num/den in lowest terms with a monic denominator.
/// Q(t) is the subfield whose elements do not mention tstar.
class RationalFunction {
 public:
  using P = Poly<Rational>;

  static const Vars& vars() {
    static const Vars v = make_vars({"t", "tstar"});
    return v;
  }

  RationalFunction() : num_(vars()), den_(P::constant(vars(), Rational(1))) {}
  RationalFunction(int v) : RationalFunction(Rational(v)) {}   // NOLINT(implicit)
  RationalFunction(long v) : RationalFunction(Rational(v)) {}  // NOLINT(implicit)
  RationalFunction(const Rational& r)                          // NOLINT(implicit)
      : num_(P::constant(vars(), r)), den_(P::constant(vars(), Rational(1))) {}
  explicit RationalFunction(P num) : num_(std::move(num)), den_(P::constant(vars(), Rational(1))) {}
  RationalFunction(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error(errc::division_by_zero, "zero denominator in rational function");
    normalize();
  }

  static RationalFunction t() { return RationalFunction(P::variable(vars(), 0)); }
  static RationalFunction tstar() { return RationalFunction(P::variable(vars(), 1)); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  RationalFunction& operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
      if (!den_.is_constant()) normalize();
      return *this;
    }
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    // Henrici: only the gcd of the denominators can cancel
    P g = gcd(den_, o.den_);
    if (g.is_constant()) {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ = den_ * o.den_;
      make_monic();
      return *this;
    }
    P d1 = exact_divide(den_, g), d2 = exact_divide(o.den_, g);
    num_ = num_ * d2 + o.num_ * d1;
    den_ = den_ * d2;
    if (num_.is_zero()) {
      den_ = P::constant(vars(), Rational(1));
      return *this;
    }
    P h = gcd(num_, g);
    if (!h.is_constant()) {
      num_ = exact_divide(num_, h);
      den_ = exact_divide(den_, h);
    }
    make_monic();
    return *this;
  }
  RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }

  RationalFunction& operator*=(const RationalFunction& o) {
    if (den_.is_constant() && o.den_.is_constant()) {
      num_ = num_ * o.num_;
      return *this;
    }
    P g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    num_ = exact_divide(num_, g1) * exact_divide(o.num_, g2);
    den_ = exact_divide(den_, g2) * exact_divide(o.den_, g1);
    make_monic();
    return *this;
  }
  RationalFunction& operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw error(errc::division_by_zero, "division by zero rational function");
    return *this *= o.inverse();
  }

  RationalFunction inverse() const {
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    r.make_monic();
    return r;
  }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }

  std::string str() const {
    if (den_.is_constant()) return num_.str();
    std::string n = num_.str();
    if (num_.size() > 1) n = "(" + n + ")";
    return n + "/(" + den_.str() + ")";
  }

 private:
  void make_monic() {
    if (num_.is_zero()) {
      den_ = P::constant(vars(), Rational(1));
      return;
    }
    Rational lc = den_.leading_coeff();
    if (!lc.is_one()) {
      Rational inv = Rational(1) / lc;
      num_ *= inv;
      den_ *= inv;
    }
  }
  void normalize() {
    if (num_.is_zero()) {
      den_ = P::constant(vars(), Rational(1));
      return;
    }
    if (!den_.is_constant()) {
      P g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
      }
    }
    make_monic();
  }

  P num_, den_;
};

inline std::string to_string(const RationalFunction& r) { return r.str(); }
inline bool is_rational(const RationalFunction& r) { return r.is_rational(); }
inline Rational to_rational(const RationalFunction& r) { return r.num().constant_term() / r.den().constant_term(); }

}  // namespace rees
