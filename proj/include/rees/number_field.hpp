#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rees/errors.hpp"
#include "rees/linalg.hpp"
#include "rees/poly.hpp"
#include "rees/rational.hpp"
#include "rees/univariate.hpp"

namespace rees {

/// Q-coordinates of an element in the power basis alpha^i beta^j (i fastest).
using QVec = std::vector<Rational>;

/// A tower Q ⊂ Q(alpha) [⊂ Q(alpha)(beta)] of total degree at most 8.
///
/// The first level is given by a monic minimal polynomial over Q; the optional
/// second level by a monic polynomial whose coefficients are Q(alpha)-elements
/// (each a length-n1 coordinate vector). Multiplication goes through a
/// precomputed structure table; inversion solves the multiplication matrix.
class NumberField {
 public:
  static std::shared_ptr<const NumberField> make(std::vector<std::string> names, QUnivariate m1,
                                                 std::vector<QVec> m2 = {}, bool assume_irreducible = false) {
    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->names_ = std::move(names);
    f->m1_ = std::move(m1);
    f->m2_ = std::move(m2);
    f->validate(assume_irreducible);
    f->build_table();
    f->build_automorphisms();
    return f;
  }

  std::size_t degree() const { return n1_ * n2_; }
  std::size_t level_degree(std::size_t level) const { return level == 0 ? n1_ : n2_; }
  std::size_t depth() const { return m2_.empty() ? 1 : 2; }
  const std::vector<std::string>& names() const { return names_; }

  /// Canonical description used for structural equality.
  const std::string& signature() const { return signature_; }

  QVec zero() const { return QVec(degree(), Rational(0)); }
  QVec one() const {
    QVec v = zero();
    v[0] = Rational(1);
    return v;
  }
  QVec generator(std::size_t level) const {
    QVec v = zero();
    v[level == 0 ? 1 : n1_] = Rational(1);
    return v;
  }

  QVec mul(const QVec& a, const QVec& b) const {
    const std::size_t n = degree();
    QVec r = zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j].is_zero()) continue;
        Rational ab = a[i] * b[j];
        const QVec& t = table_[i * n + j];
        for (std::size_t k = 0; k < n; ++k)
          if (!t[k].is_zero()) r[k] += ab * t[k];
      }
    }
    return r;
  }

  QVec inverse(const QVec& a) const {
    const std::size_t n = degree();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t k = 0; k < n; ++k) {
      QVec e = zero();
      e[k] = Rational(1);
      QVec col = mul(a, e);
      for (std::size_t r = 0; r < n; ++r) m[r][k] = col[r];
    }
    auto x = solve_dense(std::move(m), one());
    if (!x) throw error(errc::reducible_minimal_polynomial, "zero divisor found in " + signature_);
    return *x;
  }

  std::size_t automorphism_count() const { return autos_.size(); }

  QVec apply_automorphism(std::size_t k, const QVec& a) const {
    const auto& img = autos_.at(k);
    QVec r = zero();
    for (std::size_t i = 0; i < degree(); ++i)
      if (!a[i].is_zero())
        for (std::size_t j = 0; j < degree(); ++j) r[j] += a[i] * img[i][j];
    return r;
  }

  /// Square root inside the field when the field is a tower of quadratics.
  std::optional<QVec> sqrt(const QVec& a) const;

  std::string format(const QVec& a) const {
    Vars gens = make_vars(names_);
    Poly<Rational> p(gens);
    for (std::size_t j = 0; j < n2_; ++j)
      for (std::size_t i = 0; i < n1_; ++i) {
        Monomial m;
        m.set(0, static_cast<unsigned>(i));
        if (depth() == 2) m.set(1, static_cast<unsigned>(j));
        p.add_term(m, a[i + n1_ * j]);
      }
    return p.str();
  }

 private:
  NumberField() = default;

  // level-1 arithmetic on length-n1 vectors
  QVec mul1(const QVec& a, const QVec& b) const {
    QVec r(2 * n1_, Rational(0));
    for (std::size_t i = 0; i < n1_; ++i)
      for (std::size_t j = 0; j < n1_; ++j) r[i + j] += a[i] * b[j];
    for (std::size_t k = r.size(); k-- > n1_;) {
      if (r[k].is_zero()) continue;
      Rational c = r[k];
      for (std::size_t i = 0; i <= n1_; ++i) r[k - n1_ + i] -= c * m1_[i];
    }
    r.resize(n1_);
    return r;
  }
  QVec add1(QVec a, const QVec& b) const {
    for (std::size_t i = 0; i < n1_; ++i) a[i] += b[i];
    return a;
  }
  QVec scale1(QVec a, const Rational& s) const {
    for (auto& x : a) x *= s;
    return a;
  }
  QVec inv1(const QVec& a) const {
    std::vector<std::vector<Rational>> m(n1_, std::vector<Rational>(n1_));
    for (std::size_t k = 0; k < n1_; ++k) {
      QVec e(n1_, Rational(0));
      e[k] = Rational(1);
      QVec col = mul1(a, e);
      for (std::size_t r = 0; r < n1_; ++r) m[r][k] = col[r];
    }
    QVec rhs(n1_, Rational(0));
    rhs[0] = Rational(1);
    auto x = solve_dense(std::move(m), rhs);
    if (!x) throw error(errc::reducible_minimal_polynomial, "zero divisor in first level");
    return *x;
  }
  bool is_zero1(const QVec& a) const {
    for (const auto& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Square root in the first level when it is quadratic.
  std::optional<QVec> sqrt1(const QVec& a) const;

  void validate(bool assume_irreducible);
  void build_table();
  void build_automorphisms();
  std::optional<std::vector<QVec>> roots_of_quadratic_level2(const QVec& b, const QVec& c) const;

  std::vector<std::string> names_;
  QUnivariate m1_;
  std::vector<QVec> m2_;
  std::size_t n1_ = 1, n2_ = 1;
  std::vector<QVec> table_;
  std::vector<std::vector<QVec>> autos_;
  std::string signature_;
};

inline std::optional<QVec> NumberField::sqrt1(const QVec& a) const {
  if (n1_ == 1) {
    auto r = rational_sqrt(a[0]);
    if (!r) return std::nullopt;
    return QVec{*r};
  }
  if (n1_ != 2) return std::nullopt;
  // alpha^2 + b alpha + c = 0; beta = alpha + b/2 satisfies beta^2 = d
  const Rational b = m1_[1], c = m1_[0];
  const Rational d = b * b / Rational(4) - c;
  const Rational s = a[1];
  const Rational r = a[0] - s * b / Rational(2);
  auto from_beta = [&](const Rational& p, const Rational& q) { return QVec{p - q * b / Rational(2), q}; };
  if (s.is_zero()) {
    if (auto q = rational_sqrt(r)) return from_beta(*q, Rational(0));
    if (auto q = rational_sqrt(r / d)) return from_beta(Rational(0), *q);
    return std::nullopt;
  }
  auto n = rational_sqrt(r * r - d * s * s);
  if (!n) return std::nullopt;
  for (const Rational& p2 : {(r + *n) / Rational(2), (r - *n) / Rational(2)}) {
    if (p2.is_zero()) continue;
    if (auto p = rational_sqrt(p2)) return from_beta(*p, s / (Rational(2) * *p));
  }
  return std::nullopt;
}

inline std::optional<QVec> NumberField::sqrt(const QVec& a) const {
  if (depth() == 1) return sqrt1(a);
  if (n2_ != 2) return std::nullopt;
  // a lies in Q(alpha) when its beta-part vanishes
  QVec lo(a.begin(), a.begin() + static_cast<long>(n1_)), hi(a.begin() + static_cast<long>(n1_), a.end());
  if (!is_zero1(hi)) {
    // (p + q beta)^2 = a with general a: solve via the level-1 norm trick is not attempted
    return std::nullopt;
  }
  if (auto y = sqrt1(lo)) {
    QVec r = zero();
    for (std::size_t i = 0; i < n1_; ++i) r[i] = (*y)[i];
    return r;
  }
  // beta^2 + B beta + C = 0; (p + q beta)^2 in Q(alpha) forces p = B q / 2 and q^2 = 4 a / disc
  const QVec& B = m2_[1];
  const QVec& C = m2_[0];
  QVec disc = add1(mul1(B, B), scale1(C, Rational(-4)));
  QVec q2 = mul1(scale1(lo, Rational(4)), inv1(disc));
  auto q = sqrt1(q2);
  if (!q) return std::nullopt;
  QVec p = scale1(mul1(B, *q), Rational(1) / Rational(2));
  QVec r = zero();
  for (std::size_t i = 0; i < n1_; ++i) {
    r[i] = p[i];
    r[i + n1_] = (*q)[i];
  }
  return r;
}

inline void NumberField::validate(bool assume_irreducible) {
  const std::size_t lv = m2_.empty() ? 1 : 2;
  if (names_.size() != lv) throw error(errc::invalid_input, "one generator name per tower level required");
  if (m1_.size() < 3 || !m1_.back().is_one())
    throw error(errc::invalid_input, "first minimal polynomial must be monic of degree >= 2");
  n1_ = m1_.size() - 1;
  signature_ = names_[0] + ":";
  for (const auto& c : m1_) signature_ += c.str() + ",";
  if (lv == 2) {
    if (m2_.size() < 3) throw error(errc::invalid_input, "second minimal polynomial must have degree >= 2");
    for (const auto& c : m2_)
      if (c.size() != n1_) throw error(errc::invalid_input, "second-level coefficient of wrong length");
    QVec lead = m2_.back();
    for (std::size_t i = 0; i < n1_; ++i)
      if (!(lead[i] == Rational(i == 0 ? 1 : 0))) throw error(errc::invalid_input, "second minimal polynomial must be monic");
    n2_ = m2_.size() - 1;
    signature_ += "|" + names_[1] + ":";
    for (const auto& c : m2_) {
      for (const auto& x : c) signature_ += x.str() + " ";
      signature_ += ",";
    }
  }
  if (n1_ * n2_ > 8) throw error(errc::invalid_input, "tower degree exceeds 8");
  if (names_.size() == 2 && names_[0] == names_[1]) throw error(errc::invalid_input, "duplicate generator name");

  auto irr1 = irreducible_over_q(m1_);
  if (irr1.has_value() && !*irr1)
    throw error(errc::reducible_minimal_polynomial, "minimal polynomial of " + names_[0] + " factors over Q");
  if (!irr1.has_value() && !assume_irreducible)
    throw error(errc::invalid_input, "degree >= 5 minimal polynomial requires assume_irreducible");
  if (lv == 2) {
    if (n1_ == 2 && n2_ == 2) {
      QVec disc = add1(mul1(m2_[1], m2_[1]), scale1(m2_[0], Rational(-4)));
      if (sqrt1(disc))
        throw error(errc::reducible_minimal_polynomial, "minimal polynomial of " + names_[1] + " factors over Q(" + names_[0] + ")");
    } else if (!assume_irreducible) {
      throw error(errc::invalid_input,
                  "second-level irreducibility is only checked for quadratic over quadratic; set assume_irreducible");
    }
  }
}

inline void NumberField::build_table() {
  const std::size_t n = degree();
  table_.assign(n * n, QVec());
  // level-2 product of basis elements alpha^i beta^j
  auto basis_l2 = [&](std::size_t idx) {
    std::vector<QVec> v(n2_, QVec(n1_, Rational(0)));
    v[idx / n1_][idx % n1_] = Rational(1);
    return v;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto A = basis_l2(a), B = basis_l2(b);
      std::vector<QVec> r(2 * n2_, QVec(n1_, Rational(0)));
      for (std::size_t i = 0; i < n2_; ++i)
        for (std::size_t j = 0; j < n2_; ++j) r[i + j] = add1(r[i + j], mul1(A[i], B[j]));
      if (!m2_.empty()) {
        for (std::size_t k = r.size(); k-- > n2_;) {
          if (is_zero1(r[k])) continue;
          QVec c = r[k];
          for (std::size_t i = 0; i <= n2_; ++i) r[k - n2_ + i] = add1(r[k - n2_ + i], scale1(mul1(c, m2_[i]), Rational(-1)));
        }
      }
      QVec flat(n, Rational(0));
      for (std::size_t j = 0; j < n2_; ++j)
        for (std::size_t i = 0; i < n1_; ++i) flat[i + n1_ * j] = r[j][i];
      table_[a * n + b] = std::move(flat);
    }
}

inline std::optional<std::vector<QVec>> NumberField::roots_of_quadratic_level2(const QVec& b, const QVec& c) const {
  // roots of x^2 + b x + c with b, c in Q(alpha), searched in the whole field
  QVec bb = zero(), cc = zero();
  for (std::size_t i = 0; i < n1_; ++i) {
    bb[i] = b[i];
    cc[i] = c[i];
  }
  QVec disc = mul(bb, bb);
  QVec four_c = cc;
  for (auto& x : four_c) x *= Rational(4);
  for (std::size_t i = 0; i < degree(); ++i) disc[i] -= four_c[i];
  auto y = sqrt(disc);
  if (!y) return std::nullopt;
  std::vector<QVec> roots;
  for (int s : {1, -1}) {
    QVec r = zero();
    for (std::size_t i = 0; i < degree(); ++i) r[i] = (Rational(s) * (*y)[i] - bb[i]) / Rational(2);
    roots.push_back(r);
  }
  return roots;
}

inline void NumberField::build_automorphisms() {
  const std::size_t n = degree();
  // images of alpha under automorphisms of the first level
  std::vector<QVec> alpha_images{generator(0)};
  if (n1_ == 2) {
    QVec conj = zero();
    conj[0] = -m1_[1];
    conj[1] = Rational(-1);
    alpha_images.push_back(conj);
  }
  std::vector<std::pair<QVec, QVec>> gens;  // (image of alpha, image of beta)
  for (const auto& ai : alpha_images) {
    if (m2_.empty()) {
      gens.emplace_back(ai, one());
      continue;
    }
    if (n2_ != 2) {
      if (&ai == &alpha_images.front()) gens.emplace_back(ai, generator(1));
      continue;
    }
    // apply the first-level map to the coefficients of the second minimal polynomial
    auto image1 = [&](const QVec& x) {
      QVec acc = zero(), pw = one();
      for (std::size_t i = 0; i < n1_; ++i) {
        for (std::size_t k = 0; k < n; ++k) acc[k] += x[i] * pw[k];
        pw = mul(pw, ai);
      }
      return QVec(acc.begin(), acc.begin() + static_cast<long>(n1_));
    };
    auto rts = roots_of_quadratic_level2(image1(m2_[1]), image1(m2_[0]));
    if (!rts) continue;
    for (const auto& r : *rts) gens.emplace_back(ai, r);
  }
  for (const auto& [ai, bi] : gens) {
    std::vector<QVec> img(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
      QVec v = one();
      for (std::size_t i = 0; i < idx % n1_; ++i) v = mul(v, ai);
      for (std::size_t j = 0; j < idx / n1_; ++j) v = mul(v, bi);
      img[idx] = v;
    }
    autos_.push_back(std::move(img));
  }
}

/// Element of a number-field tower; a null field means a plain rational number.
class Algebraic {
 public:
  using Field = std::shared_ptr<const NumberField>;

  Algebraic() : c_{Rational(0)} {}
  Algebraic(int v) : c_{Rational(v)} {}   // NOLINT(implicit)
  Algebraic(long v) : c_{Rational(v)} {}  // NOLINT(implicit)
  Algebraic(const Rational& r) : c_{r} {}  // NOLINT(implicit)
  Algebraic(Field f, QVec c) : f_(std::move(f)), c_(std::move(c)) {
    if (!f_ && c_.size() != 1) throw error(errc::invalid_input, "rational element with several coordinates");
    if (f_ && c_.size() != f_->degree()) throw error(errc::invalid_input, "coordinate vector of wrong length");
  }

  static Algebraic generator(const Field& f, std::size_t level) { return Algebraic(f, f->generator(level)); }

  const Field& field() const { return f_; }
  const QVec& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  Rational rational_part() const { return c_[0]; }

  Algebraic lifted(const Field& f) const {
    if (f_ || !f) return *this;
    QVec v = f->zero();
    v[0] = c_[0];
    return Algebraic(f, v);
  }

  Algebraic operator-() const {
    Algebraic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Algebraic& operator+=(const Algebraic& o) {
    unify(o);
    Algebraic b = o.lifted(f_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
  }
  Algebraic& operator-=(const Algebraic& o) { return *this += -o; }
  Algebraic& operator*=(const Algebraic& o) {
    if (!f_ && !o.f_) {
      c_[0] *= o.c_[0];
      return *this;
    }
    if (o.is_rational() && (!o.f_ || o.f_ == f_)) {
      Rational s = o.c_[0];
      for (auto& x : c_) x *= s;
      return *this;
    }
    unify(o);
    Algebraic b = o.lifted(f_);
    c_ = f_->mul(c_, b.c_);
    return *this;
  }
  Algebraic& operator/=(const Algebraic& o) {
    if (o.is_zero()) throw error(errc::division_by_zero, "division by zero in number field");
    if (o.is_rational()) {
      Rational s = Rational(1) / o.c_[0];
      if (o.f_) unify(o);
      for (auto& x : c_) x *= s;
      return *this;
    }
    unify(o);
    Algebraic b = o.lifted(f_);
    c_ = f_->mul(c_, f_->inverse(b.c_));
    return *this;
  }

  friend Algebraic operator+(Algebraic a, const Algebraic& b) { return a += b; }
  friend Algebraic operator-(Algebraic a, const Algebraic& b) { return a -= b; }
  friend Algebraic operator*(Algebraic a, const Algebraic& b) { return a *= b; }
  friend Algebraic operator/(Algebraic a, const Algebraic& b) { return a /= b; }

  friend bool operator==(const Algebraic& a, const Algebraic& b) {
    if (a.f_ == b.f_ || !a.f_ || !b.f_) {
      const Field& f = a.f_ ? a.f_ : b.f_;
      return a.lifted(f).c_ == b.lifted(f).c_;
    }
    if (a.f_->signature() != b.f_->signature()) return false;
    return a.c_ == b.c_;
  }

  std::string str() const { return f_ ? f_->format(c_) : c_[0].str(); }

 private:
  void unify(const Algebraic& o) {
    if (!o.f_ || o.f_ == f_) return;
    if (!f_) {
      *this = lifted(o.f_);
      return;
    }
    if (f_->signature() != o.f_->signature())
      throw error(errc::incompatible_fields, f_->signature() + " vs " + o.f_->signature());
  }

  Field f_;
  QVec c_;
};

inline std::string to_string(const Algebraic& a) { return a.str(); }
inline bool is_rational(const Algebraic& a) { return a.is_rational(); }
inline Rational to_rational(const Algebraic& a) { return a.rational_part(); }

/// Degree over Q of the field generated by `xs`, by growing a spanning set of the Q-algebra.
inline std::size_t generated_degree(const std::vector<Algebraic>& xs) {
  Algebraic::Field f;
  for (const auto& x : xs)
    if (x.field()) f = x.field();
  if (!f) return 1;
  auto to_sparse = [](const Algebraic& a) {
    SparseVec<Rational> v;
    for (std::size_t i = 0; i < a.coords().size(); ++i)
      if (!a.coords()[i].is_zero()) v.emplace(i, a.coords()[i]);
    return v;
  };
  Echelon<Rational> span;
  std::vector<Algebraic> basis{Algebraic(1).lifted(f)};
  span.insert(to_sparse(basis[0]));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& x : xs) {
      Algebraic p = basis[k] * x.lifted(f);
      if (span.insert(to_sparse(p))) basis.push_back(p);
    }
  return span.rank();
}

}  // namespace rees
