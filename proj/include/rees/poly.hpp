#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rees/errors.hpp"
#include "rees/ext_nat.hpp"

namespace rees {

inline constexpr std::size_t max_vars = 8;

/// Ordered list of variable names shared between polynomials of one ring.
using Vars = std::shared_ptr<const std::vector<std::string>>;

inline Vars make_vars(std::vector<std::string> names) {
  if (names.size() > max_vars) throw error(errc::invalid_input, "too many variables");
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline bool same_vars(const Vars& a, const Vars& b) { return a == b || (a && b && *a == *b); }

/// Exponent vector; unused slots stay zero.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<unsigned> e) {
    std::size_t i = 0;
    for (unsigned v : e) set(i++, v);
  }

  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned v) {
    deg_ = deg_ - e_[i] + v;
    e_[i] = static_cast<std::uint16_t>(v);
  }
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < max_vars; ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] + b.e_[i]);
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < max_vars; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// Caller guarantees `b.divides(a)`.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < max_vars; ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

  /// Graded lexicographic order with the first variable largest.
  friend bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    return a.e_ > b.e_ ? false : a.e_ != b.e_;
  }

 private:
  std::array<std::uint16_t, max_vars> e_{};
  unsigned deg_ = 0;
};

struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

/// Sparse multivariate polynomial over a field `K`, terms kept in descending graded-lex order.
template <class K>
class Poly {
 public:
  using coeff_type = K;
  using term_map = std::map<Monomial, K, GrlexDesc>;

  Poly() = default;
  explicit Poly(Vars vars) : vars_(std::move(vars)) {}

  static Poly constant(const Vars& vars, const K& c) {
    Poly p(vars);
    if (!c.is_zero()) p.terms_.emplace(Monomial{}, c);
    return p;
  }
  static Poly variable(const Vars& vars, std::size_t i) {
    Poly p(vars);
    Monomial m;
    m.set(i, 1);
    p.terms_.emplace(m, K(1));
    return p;
  }
  static Poly monomial(const Vars& vars, const Monomial& m, const K& c) {
    Poly p(vars);
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }

  const Vars& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const term_map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const K& leading_coeff() const { return terms_.begin()->second; }

  K coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }
  K constant_term() const { return coeff(Monomial{}); }

  /// Total degree; -1 for zero.
  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(leading_monomial().degree()); }

  /// Lowest total degree of a term (order at the origin); infinite for zero.
  ext_nat min_degree() const {
    if (terms_.empty()) return ext_nat::infinity();
    unsigned d = terms_.rbegin()->first.degree();
    return ext_nat(d);
  }

  int degree_in(std::size_t i) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[i]));
    return d;
  }

  /// Lowest exponent of variable `i` over all terms; infinite for zero.
  ext_nat order_in(std::size_t i) const {
    if (terms_.empty()) return ext_nat::infinity();
    unsigned d = ~0u;
    for (const auto& [m, c] : terms_) d = std::min(d, m[i]);
    return ext_nat(d);
  }

  void add_term(const Monomial& m, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const K& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.vars_ ? a.vars_ : b.vars_);
    if (a.vars_ && b.vars_ && !same_vars(a.vars_, b.vars_))
      throw error(errc::invalid_input, "polynomials over different variable lists");
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly mul_monomial(const Monomial& m, const K& c) const {
    Poly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
    return r;
  }

  Poly pow(unsigned e) const {
    Poly result = constant(vars_, K(1));
    Poly base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  /// Terms of total degree strictly below `n`.
  Poly truncate_below(unsigned n) const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() < n) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
  }

  /// Scales so that the leading coefficient is one.
  Poly monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / leading_coeff();
    Poly r = *this;
    r *= inv;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (!(m == ib->first) || !(c == ib->second)) return false;
      ++ib;
    }
    return true;
  }

  std::string str() const;

 private:
  void adopt(const Poly& o) {
    if (!vars_) vars_ = o.vars_;
    else if (o.vars_ && !same_vars(vars_, o.vars_))
      throw error(errc::invalid_input, "polynomials over different variable lists");
  }

  Vars vars_;
  term_map terms_;
};

namespace detail {
inline bool needs_parens(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-') return true;
  return false;
}
}  // namespace detail

/// Canonical text form: descending graded-lex, `c*X^a*Y^b` terms.
template <class K>
std::string Poly<K>::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = to_string(c);
    bool neg = false;
    if (!detail::needs_parens(cs) && !cs.empty() && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    } else if (detail::needs_parens(cs)) {
      cs = "(" + cs + ")";
    }
    if (first) out += neg ? "-" : "";
    else out += neg ? "-" : "+";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

template <class K>
std::string to_string(const Poly<K>& p) {
  return p.str();
}

}  // namespace rees
