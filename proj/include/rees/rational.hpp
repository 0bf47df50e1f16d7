#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>

#include "rees/errors.hpp"

namespace rees {

/// Element of Q with arbitrary-precision numerator and denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(implicit)
  Rational(int v) : q_(v) {}   // NOLINT(implicit)
  explicit Rational(const mpz_class& v) : q_(v) {}
  explicit Rational(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw error(errc::division_by_zero, "zero denominator");
    q_.canonicalize();
  }

  /// Parses `p` or `p/q` with optional sign.
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw error(errc::parse_error, "bad rational '" + s + "'");
    if (q.get_den() == 0) throw error(errc::division_by_zero, "zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
  }

  const mpq_class& value() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw error(errc::division_by_zero, "rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  std::string str() const { return q_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline std::string to_string(const Rational& r) { return r.str(); }
inline bool is_rational(const Rational&) { return true; }
inline Rational to_rational(const Rational& r) { return r; }

/// Exact square root in Q when it exists.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

}  // namespace rees
