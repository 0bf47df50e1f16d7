#pragma once

#include <optional>
#include <vector>

#include "rees/errors.hpp"
#include "rees/ext_nat.hpp"
#include "rees/linalg.hpp"
#include "rees/plane.hpp"
#include "rees/poly_algorithms.hpp"
#include "rees/rational_function.hpp"

namespace rees {

inline constexpr unsigned colength_cap = 64;

namespace detail {

/// Column of X^a Y^b, lower degrees first.
inline std::size_t plane_index(unsigned a, unsigned b) {
  const std::size_t d = a + b;
  return d * (d + 1) / 2 + b;
}

/// Coefficients of x^a y^b f of degree <= n as a sparse row.
template <class K>
SparseVec<K> truncated_row(const Poly<K>& f, unsigned a, unsigned b, unsigned n) {
  SparseVec<K> row;
  for (const auto& [m, c] : f.terms()) {
    unsigned ea = m[0] + a, eb = m[1] + b;
    if (ea + eb <= n) row.emplace(plane_index(ea, eb), c);
  }
  return row;
}

/// Span of all multiples x^a y^b f, x^a y^b g truncated at degree n.
template <class K>
Echelon<K> truncated_span(const Poly<K>& f, const Poly<K>& g, unsigned n) {
  Echelon<K> e;
  const unsigned of = static_cast<unsigned>(f.min_degree().value());
  const unsigned og = static_cast<unsigned>(g.min_degree().value());
  for (unsigned d = 0; d <= n; ++d)
    for (unsigned b = 0; b <= d; ++b) {
      if (of + d <= n) e.insert(truncated_row(f, d - b, b, n));
      if (og + d <= n) e.insert(truncated_row(g, d - b, b, n));
    }
  return e;
}

template <class K>
bool vanishes_at_origin(const Poly<K>& p) {
  return p.is_zero() || p.constant_term().is_zero();
}

/// f(0, 0)-style test on the gcd, without forming it when it is expensive.
template <class K>
bool gcd_vanishes_at_origin(const Poly<K>& f, const Poly<K>& g) {
  return vanishes_at_origin(gcd(f, g));
}

/// Over Q(t, t*): clear denominators and take the gcd in Q[X, Y, t, t*]. Factors free of X, Y
/// are units over the function field and do not vanish identically, so the test carries over.
inline bool gcd_vanishes_at_origin(const Poly<RationalFunction>& f, const Poly<RationalFunction>& g) {
  using P = Poly<Rational>;
  const Vars& fv = f.vars() ? f.vars() : g.vars();
  std::vector<std::string> names = *fv;
  const std::size_t n = names.size();
  names.push_back("t");
  names.push_back("tstar");
  const Vars big = make_vars(names);
  auto lift = [&](const Poly<RationalFunction>& p) {
    P L = P::constant(RationalFunction::vars(), Rational(1));
    for (const auto& [m, c] : p.terms()) L = exact_divide(L * c.den(), gcd(L, c.den()));
    P out(big);
    for (const auto& [m, c] : p.terms()) {
      P coeff = c.num() * exact_divide(L, c.den());
      for (const auto& [mt, q] : coeff.terms()) {
        Monomial mm = m;
        mm.set(n, mt[0]);
        mm.set(n + 1, mt[1]);
        out.add_term(mm, q);
      }
    }
    return out;
  };
  P d = gcd(lift(f), lift(g));
  for (const auto& [m, c] : d.terms()) {
    bool free_of_xy = true;
    for (std::size_t i = 0; i < n; ++i) free_of_xy = free_of_xy && m[i] == 0;
    if (free_of_xy) return false;
  }
  return true;
}

}  // namespace detail

/// Colength of (f, g) in the local ring at the origin.
template <class K>
ext_nat intersection_multiplicity(const Poly<K>& f, const Poly<K>& g) {
  if (!detail::vanishes_at_origin(f) || !detail::vanishes_at_origin(g)) return ext_nat(0);
  if (f.is_zero() || g.is_zero()) return ext_nat::infinity();
  if (detail::gcd_vanishes_at_origin(f, g)) return ext_nat::infinity();
  const unsigned start = static_cast<unsigned>((f.min_degree() + g.min_degree()).value());
  for (unsigned n = std::max(start, 1u); n <= colength_cap; ++n) {
    Echelon<K> span = detail::truncated_span(f, g, n);
    bool full = true;
    for (unsigned b = 0; b <= n && full; ++b) full = span.contains(SparseVec<K>{{detail::plane_index(n - b, b), K(1)}});
    if (!full) continue;
    // M^n lies in (f, g), so R/(f, g) = P_{<=n} / span
    const std::size_t dim = detail::plane_index(0, n) + 1;
    return ext_nat(dim - span.rank());
  }
  throw error(errc::truncation_cap, "colength search exceeded degree " + std::to_string(colength_cap));
}

/// Whether p(0, Y) = c Y^deg_Y(p) with c != 0: every root on {X = 0} sits at the origin.
template <class K>
bool is_y_general(const Poly<K>& p) {
  const int d = p.degree_in(1);
  Poly<K> restricted(p.vars());
  for (const auto& [m, c] : p.terms())
    if (m[0] == 0) restricted.add_term(m, c);
  return d >= 0 && restricted.size() == 1 && static_cast<int>(restricted.leading_monomial()[1]) == d;
}

/// ord_X Res_Y(f, g); needs one member all of whose Y-roots tend to the origin.
template <class K>
ext_nat intersection_resultant_oracle(const Poly<K>& f, const Poly<K>& g) {
  if (!detail::vanishes_at_origin(f) || !detail::vanishes_at_origin(g)) return ext_nat(0);
  if (!is_y_general(f) && !is_y_general(g))
    throw error(errc::not_y_general, "neither " + f.str() + " nor " + g.str() + " is Y-general");
  Poly<K> r = resultant(f, g, 1);
  if (r.is_zero()) return ext_nat::infinity();
  return r.order_in(0);
}

/// (X, Y) -> (X + lambda Y, Y), a coordinate change that keeps colengths.
template <class K>
Poly<K> shear(const Poly<K>& f, const K& lambda) {
  const Vars& v = f.vars();
  return substitute(f, {Poly<K>::variable(v, 0) + Poly<K>::variable(v, 1) * Poly<K>::constant(v, lambda),
                        Poly<K>::variable(v, 1)},
                    v);
}

/// The resultant oracle after the first shear X -> X + lambda Y (lambda = 0, 1, 2, ...) making a member Y-general.
template <class K>
std::pair<ext_nat, int> intersection_resultant_sheared(const Poly<K>& f, const Poly<K>& g, int max_lambda = 16) {
  for (int l = 0; l <= max_lambda; ++l) {
    Poly<K> a = l ? shear(f, K(l)) : f, b = l ? shear(g, K(l)) : g;
    if (is_y_general(a) || is_y_general(b)) return {intersection_resultant_oracle(a, b), l};
  }
  throw error(errc::not_y_general, "no shear up to " + std::to_string(max_lambda) + " made the pair Y-general");
}

}  // namespace rees
