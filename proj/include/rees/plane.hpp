#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rees/errors.hpp"
#include "rees/ext_nat.hpp"
#include "rees/field.hpp"
#include "rees/poly.hpp"
#include "rees/poly_algorithms.hpp"

namespace rees {

/// The ring variables of R = K[X,Y] localized at the origin.
inline const Vars& plane_vars() {
  static const Vars v = make_vars({"X", "Y"});
  return v;
}

/// Chart coordinates; the newest exceptional divisor is always {u = 0}.
inline const Vars& chart_vars() {
  static const Vars v = make_vars({"u", "v"});
  return v;
}

template <class K>
struct Step {
  bool at_infinity = false;
  K c{};

  static Step free(K c) { return {false, std::move(c)}; }
  static Step infinity() { return {true, K(0)}; }
};

/// Divisorial valuation ord_{E_n} given by a chain p_1 = origin, p_2, ..., p_n of
/// infinitely near points. Step k (k >= 2) names the chart of the blowup of p_{k-1}
/// that contains p_k; a last blowup of p_n creates E_n.
template <class K>
class PlaneValuation {
 public:
  const std::vector<Step<K>>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  const std::vector<unsigned>& multiplicities() const { return m_; }
  /// Indices (0-based) of the points that p_k is proximate to.
  const std::vector<std::vector<std::size_t>>& proximity() const { return prox_; }
  std::size_t chi() const { return chi_; }
  const std::string& name() const { return name_; }
  /// X and Y in the chart of the last blowup.
  const Poly<K>& phi_x() const { return phi_x_; }
  const Poly<K>& phi_y() const { return phi_y_; }
  /// Free constants of steps 2..n, in order.
  std::vector<K> constants() const {
    std::vector<K> out;
    for (std::size_t k = 1; k < steps_.size(); ++k)
      if (!steps_[k].at_infinity) out.push_back(steps_[k].c);
    return out;
  }

  template <class L>
  friend PlaneValuation<L> valuation_build(std::vector<Step<L>> steps, std::string name);

 private:
  std::vector<Step<K>> steps_;
  std::vector<unsigned> m_;
  std::vector<std::vector<std::size_t>> prox_;
  std::size_t chi_ = 1;
  std::string name_;
  Poly<K> phi_x_, phi_y_;
};

namespace detail {

/// One blowup chart applied to a pair of chart polynomials.
template <class K>
std::vector<Poly<K>> chart_images(const Step<K>& s) {
  const Vars& uv = chart_vars();
  Poly<K> u = Poly<K>::variable(uv, 0), v = Poly<K>::variable(uv, 1);
  if (s.at_infinity) return {u * v, u};
  return {u, u * (v + Poly<K>::constant(uv, s.c))};
}

template <class K>
Poly<K> final_image_v() {
  const Vars& uv = chart_vars();
  return Poly<K>::variable(uv, 0) * Poly<K>::variable(uv, 1);
}

}  // namespace detail

template <class K>
PlaneValuation<K> valuation_build(std::vector<Step<K>> steps, std::string name = {}) {
  if (steps.empty()) throw error(errc::invalid_input, "a point sequence needs at least one step");
  if (steps[0].at_infinity || !steps[0].c.is_zero())
    throw error(errc::invalid_input, "the first point of a sequence is the origin, encoded Free(0)");
  PlaneValuation<K> V;
  const std::size_t n = steps.size();
  // second[k]: index of the exceptional divisor {v = 0} through p_k, if any
  std::vector<std::optional<std::size_t>> second(n);
  V.prox_.assign(n, {});
  for (std::size_t k = 1; k < n; ++k) {
    V.prox_[k].push_back(k - 1);
    if (steps[k].at_infinity) {
      if (k >= 2) second[k] = k - 2;
    } else if (steps[k].c.is_zero()) {
      second[k] = second[k - 1];
    }
    if (second[k]) V.prox_[k].push_back(*second[k]);
  }
  V.m_.assign(n, 0);
  V.m_[n - 1] = 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    unsigned s = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t p : V.prox_[j])
        if (p == i) s += V.m_[j];
    V.m_[i] = s;
  }

  const Vars& uv = chart_vars();
  Poly<K> x = Poly<K>::variable(uv, 0), y = Poly<K>::variable(uv, 1);
  for (std::size_t k = 1; k < n; ++k) {
    auto img = detail::chart_images(steps[k]);
    x = substitute(x, img, uv);
    y = substitute(y, img, uv);
  }
  std::vector<Poly<K>> last{Poly<K>::variable(uv, 0), detail::final_image_v<K>()};
  V.phi_x_ = substitute(x, last, uv);
  V.phi_y_ = substitute(y, last, uv);
  V.steps_ = std::move(steps);
  V.chi_ = generated_degree(V.constants());
  V.name_ = std::move(name);
  return V;
}

/// Builds over a declared field, rejecting constants that live elsewhere.
inline PlaneValuation<Algebraic> valuation_build(const FieldContext& field, std::vector<Step<Algebraic>> steps,
                                                 std::string name = {}) {
  const auto& f = field.number_field();
  for (auto& s : steps) {
    if (s.at_infinity) continue;
    const auto& cf = s.c.field();
    if (cf && (!f || cf->signature() != f->signature()))
      throw error(errc::constant_outside_field, s.c.str() + " is not in the declared field");
    s.c = s.c.lifted(f);
  }
  return valuation_build(std::move(steps), std::move(name));
}

/// ord_V(f): order along {u = 0} of the total transform.
template <class K>
ext_nat value(const PlaneValuation<K>& V, const Poly<K>& f) {
  if (f.is_zero()) return ext_nat::infinity();
  Poly<K> g = substitute(f, {V.phi_x(), V.phi_y()}, chart_vars());
  return g.order_in(0);
}

/// Multiplicities of f at p_1..p_n, from successive strict transforms.
template <class K>
std::vector<unsigned> strict_transform_orders(const PlaneValuation<K>& V, const Poly<K>& f) {
  if (f.is_zero()) throw error(errc::zero_input, "strict transforms of the zero polynomial");
  const Vars& uv = chart_vars();
  Poly<K> g = rename(f, uv, {0, 1});
  std::vector<unsigned> e;
  for (std::size_t k = 0; k < V.length(); ++k) {
    if (k > 0) {
      unsigned prev = e.back();
      g = substitute(g, detail::chart_images(V.steps()[k]), uv);
      g = exact_divide(g, Poly<K>::monomial(uv, Monomial{prev, 0}, K(1)));
    }
    e.push_back(origin_order(g).value());
  }
  return e;
}

/// Σ m_i mult_{p_i}(f), the proximity-weighted count of multiplicities.
template <class K>
ext_nat noether_value(const PlaneValuation<K>& V, const Poly<K>& f) {
  if (f.is_zero()) return ext_nat::infinity();
  auto e = strict_transform_orders(V, f);
  unsigned s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += V.multiplicities()[i] * e[i];
  return ext_nat(s);
}

template <class K>
struct Curvette {
  K c_star;
  Poly<K> px, py;     ///< X and Y along the branch, polynomials in s
  Poly<K> equation;  ///< implicit equation in X, Y, monic in the tangent-transversal variable
};

namespace detail {

/// Truncated power series, index = exponent.
template <class K>
using Series = std::vector<K>;

template <class K>
Series<K> series_mul(const Series<K>& a, const Series<K>& b, std::size_t n) {
  Series<K> r(n, K(0));
  for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

template <class K>
Series<K> series_inverse(const Series<K>& a, std::size_t n) {
  Series<K> r(n, K(0));
  K inv = K(1) / a[0];
  r[0] = inv;
  for (std::size_t k = 1; k < n; ++k) {
    K acc(0);
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) acc += a[i] * r[k - i];
    r[k] = -acc * inv;
  }
  return r;
}

/// w^(1/a) for a series with w(0) = 1, from a w r' = r w'.
template <class K>
Series<K> series_root(const Series<K>& w, unsigned a, std::size_t n) {
  Series<K> r(n, K(0));
  r[0] = K(1);
  for (std::size_t k = 1; k < n; ++k) {
    K acc(0);
    for (std::size_t i = 1; i <= k && i < w.size(); ++i) {
      long coef = static_cast<long>(i) - static_cast<long>(a) * static_cast<long>(k - i);
      if (coef != 0 && !w[i].is_zero()) acc += K(coef) * w[i] * r[k - i];
    }
    r[k] = acc / K(static_cast<long>(a * k));
  }
  return r;
}

/// tau(s) with s = tau r(tau), by Lagrange inversion: [s^k] tau = [tau^(k-1)] r^(-k) / k.
template <class K>
Series<K> series_revert(const Series<K>& r, std::size_t n) {
  Series<K> R = series_inverse(r, n), P(n, K(0)), out(n, K(0));
  P[0] = K(1);
  for (std::size_t k = 1; k < n; ++k) {
    P = series_mul(P, R, n);
    out[k] = P[k - 1] / K(static_cast<long>(k));
  }
  return out;
}

template <class K>
Series<K> series_compose(const Poly<K>& p, const Series<K>& t, std::size_t n) {
  const int d = p.degree_in(0);
  Series<K> acc(n, K(0));
  for (int k = d; k >= 0; --k) {
    acc = series_mul(acc, t, n);
    acc[0] += p.coeff(Monomial{static_cast<unsigned>(k)});
  }
  return acc;
}

}  // namespace detail

inline const Vars& curvette_vars() {
  static const Vars v = make_vars({"s"});
  return v;
}

/// A curvette of V through the point c* of E_n: the germ of the line {v = c*} of the
/// last chart, brought to the form (c0 s^a, y(s)), truncated past the self-contact
/// Σ m_i^2 and closed up by its norm over K[[X]] (a single branch at the origin).
template <class K>
Curvette<K> curvette(const PlaneValuation<K>& V, const K& c_star) {
  if (c_star.is_zero()) throw error(errc::degenerate_constant, "c* = 0 meets the other exceptional divisor");
  const Vars& sv = curvette_vars();
  std::vector<Poly<K>> at{Poly<K>::variable(sv, 0), Poly<K>::constant(sv, c_star)};
  Poly<K> gx = substitute(V.phi_x(), at, sv), gy = substitute(V.phi_y(), at, sv);
  if (gx.is_zero() || gy.is_zero()) throw error(errc::degenerate_constant, "branch lies on a coordinate axis");
  const bool swapped = gy.order_in(0) < gx.order_in(0);
  if (swapped) std::swap(gx, gy);
  const auto a = static_cast<unsigned>(gx.order_in(0).value());
  unsigned self = 0;
  for (unsigned m : V.multiplicities()) self += m * m;
  const std::size_t n = self + 2;

  // gx = c0 tau^a w(tau), s = tau w^(1/a)
  const K c0 = gx.coeff(Monomial{a});
  detail::Series<K> w(n, K(0));
  for (const auto& [m, c] : gx.terms())
    if (m[0] - a < n) w[m[0] - a] = c / c0;
  detail::Series<K> tau = detail::series_revert(detail::series_root(w, a, n), n);
  detail::Series<K> y = detail::series_compose(gy, tau, n);

  Curvette<K> cv{c_star, Poly<K>::monomial(sv, Monomial{a}, c0), Poly<K>(sv), Poly<K>(plane_vars())};
  for (std::size_t k = 0; k < n; ++k) cv.py.add_term(Monomial{static_cast<unsigned>(k)}, y[k]);

  // norm: det(T - M) where M is multiplication by y(s) on K[X][s]/(s^a - X/c0)
  const std::size_t ix = swapped ? 1 : 0, iy = swapped ? 0 : 1;
  const Vars& xy = plane_vars();
  const K cinv = K(1) / c0;
  std::vector<std::vector<Poly<K>>> M(a, std::vector<Poly<K>>(a, Poly<K>(xy)));
  for (std::size_t j = 0; j < a; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (y[k].is_zero()) continue;
      std::size_t e = j + k, row = e % a;
      auto q = static_cast<unsigned>(e / a);
      K c = y[k];
      for (unsigned i = 0; i < q; ++i) c *= cinv;
      Monomial mx;
      mx.set(ix, q);
      M[row][j].add_term(mx, -c);
    }
  for (std::size_t j = 0; j < a; ++j) M[j][j] += Poly<K>::variable(xy, iy);
  cv.equation = bareiss_determinant(std::move(M), xy);
  if (swapped) std::swap(cv.px, cv.py);
  if (strict_transform_orders(V, cv.equation) != V.multiplicities())
    throw error(errc::degenerate_constant, "curvette at " + to_string(c_star) + " leaves the point sequence");
  return cv;
}

/// Constants 1, 2, 3, ... skipping `avoid`; the default choice of c*.
template <class K>
K next_curvette_constant(const std::vector<K>& avoid, int start = 1) {
  for (int k = start;; ++k) {
    K c(k);
    bool bad = false;
    for (const auto& a : avoid) bad = bad || a == c;
    if (!bad) return c;
  }
}

/// W_t = o(S_t): the order valuation of the point in direction p_t = Y + tX (X for t = inf).
template <class K>
PlaneValuation<K> testing_curve(const std::optional<K>& t) {
  std::vector<Step<K>> s{Step<K>::free(K(0))};
  s.push_back(t ? Step<K>::free(-*t) : Step<K>::infinity());
  return valuation_build(std::move(s), t ? "W_" + to_string(*t) : "W_inf");
}

template <class K>
unsigned testing_curve_values(const Poly<K>& theta, const std::optional<K>& t) {
  if (!(origin_order(theta) == ext_nat(1))) throw error(errc::not_unit_order, theta.str() + " is not of order 1");
  return value(testing_curve(t), theta).value();
}

/// The distinct Galois conjugates of V, V itself first.
template <class K>
std::vector<PlaneValuation<K>> conjugates(const PlaneValuation<K>& V) {
  auto consts = V.constants();
  std::vector<std::vector<K>> seen;
  std::vector<PlaneValuation<K>> out;
  for (const auto& img : conjugate_images(consts)) {
    bool dup = false;
    for (const auto& s : seen) dup = dup || s == img;
    if (dup) continue;
    seen.push_back(img);
    auto steps = V.steps();
    std::size_t j = 0;
    for (std::size_t k = 1; k < steps.size(); ++k)
      if (!steps[k].at_infinity) steps[k].c = img[j++];
    out.push_back(valuation_build(std::move(steps), V.name()));
  }
  if (out.size() != V.chi())
    throw error(errc::non_normal_field, "found " + std::to_string(out.size()) + " conjugates of " + V.name() +
                                            " but chi = " + std::to_string(V.chi()));
  return out;
}

}  // namespace rees
