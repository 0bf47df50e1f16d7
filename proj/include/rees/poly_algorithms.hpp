#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rees/errors.hpp"
#include "rees/ext_nat.hpp"
#include "rees/poly.hpp"

namespace rees {

/// Multivariate division by a single divisor in graded-lex order.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& f, const Poly<K>& g) {
  if (g.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
  const Vars& vars = f.vars() ? f.vars() : g.vars();
  Poly<K> q(vars), r(vars), p = f;
  const Monomial& lg = g.leading_monomial();
  const K inv = K(1) / g.leading_coeff();
  while (!p.is_zero()) {
    Monomial lp = p.leading_monomial();
    K lc = p.leading_coeff();
    if (lg.divides(lp)) {
      Monomial m = lp / lg;
      K c = lc * inv;
      q.add_term(m, c);
      p -= g.mul_monomial(m, c);
    } else {
      r.add_term(lp, lc);
      p.add_term(lp, -lc);
    }
  }
  return {q, r};
}

template <class K>
Poly<K> exact_divide(const Poly<K>& f, const Poly<K>& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw error(errc::inexact_division, "(" + f.str() + ") / (" + g.str() + ")");
  return q;
}

template <class K>
bool divides(const Poly<K>& g, const Poly<K>& f) {
  return divmod(f, g).second.is_zero();
}

/// Splits `f` by total degree; the components sum back to `f`.
template <class K>
std::map<unsigned, Poly<K>> homogeneous_components(const Poly<K>& f) {
  std::map<unsigned, Poly<K>> out;
  for (const auto& [m, c] : f.terms()) {
    auto [it, _] = out.try_emplace(m.degree(), Poly<K>(f.vars()));
    it->second.add_term(m, c);
  }
  return out;
}

template <class K>
bool is_homogeneous(const Poly<K>& f) {
  return homogeneous_components(f).size() <= 1;
}

template <class K>
ext_nat origin_order(const Poly<K>& f) {
  return f.min_degree();
}

/// Ring homomorphism sending variable i of `f` to `images[i]`; the result lives in `target`.
template <class K>
Poly<K> substitute(const Poly<K>& f, const std::vector<Poly<K>>& images, const Vars& target) {
  if (images.size() < f.nvars()) throw error(errc::invalid_input, "substitution misses a variable");
  std::vector<std::vector<Poly<K>>> powers(f.nvars());
  auto power = [&](std::size_t i, unsigned e) -> const Poly<K>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly<K>::constant(target, K(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Poly<K> out(target);
  for (const auto& [m, c] : f.terms()) {
    Poly<K> term = Poly<K>::constant(target, c);
    for (std::size_t i = 0; i < f.nvars(); ++i)
      if (m[i]) term = term * power(i, m[i]);
    out += term;
  }
  return out;
}

template <class K>
Poly<K> substitute(const Poly<K>& f, const std::vector<Poly<K>>& images) {
  if (images.empty()) return f;
  return substitute(f, images, images.front().vars());
}

/// Coefficients of `f` as a polynomial in variable `v`; entry k multiplies v^k.
template <class K>
std::vector<Poly<K>> coefficients_in(const Poly<K>& f, std::size_t v) {
  std::vector<Poly<K>> out;
  int d = f.degree_in(v);
  if (d < 0) return out;
  out.assign(static_cast<std::size_t>(d) + 1, Poly<K>(f.vars()));
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    mm.set(v, 0);
    out[m[v]].add_term(mm, c);
  }
  return out;
}

template <class K>
Poly<K> from_coefficients(const std::vector<Poly<K>>& cs, std::size_t v, const Vars& vars) {
  Poly<K> out(vars);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    Monomial sh;
    sh.set(v, static_cast<unsigned>(k));
    for (const auto& [m, c] : cs[k].terms()) out.add_term(m * sh, c);
  }
  return out;
}

namespace detail {

template <class K>
int highest_var(const Poly<K>& f) {
  int best = -1;
  for (const auto& [m, c] : f.terms())
    for (std::size_t i = 0; i < max_vars; ++i)
      if (m[i]) best = std::max(best, static_cast<int>(i));
  return best;
}

template <class K>
void trim(std::vector<Poly<K>>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

/// Pseudo-remainder of a by b in the univariate coefficient representation.
template <class K>
std::vector<Poly<K>> prem(std::vector<Poly<K>> a, const std::vector<Poly<K>>& b) {
  const std::size_t n = b.size() - 1;
  const Poly<K>& lb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= n) {
    std::size_t k = a.size() - 1 - n;
    Poly<K> la = a.back();
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i <= n; ++i) a[i + k] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace detail

template <class K>
Poly<K> gcd(const Poly<K>& f, const Poly<K>& g);

/// Content of `f` with respect to variable `v`: gcd of its coefficients.
template <class K>
Poly<K> content_in(const Poly<K>& f, std::size_t v) {
  Poly<K> c(f.vars());
  for (const auto& coeff : coefficients_in(f, v)) {
    if (coeff.is_zero()) continue;
    c = gcd(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

/// Monic gcd over K[vars], recursive on the highest variable with a primitive PRS.
template <class K>
Poly<K> gcd(const Poly<K>& f, const Poly<K>& g) {
  const Vars& vars = f.vars() ? f.vars() : g.vars();
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Poly<K>::constant(vars, K(1));
  int vf = detail::highest_var(f), vg = detail::highest_var(g);
  if (vf != vg) {
    // the variable only occurs in one argument; the other is a coefficient
    if (vf > vg) return gcd(content_in(f, static_cast<std::size_t>(vf)), g);
    return gcd(f, content_in(g, static_cast<std::size_t>(vg)));
  }
  const auto v = static_cast<std::size_t>(vf);
  Poly<K> cf = content_in(f, v), cg = content_in(g, v);
  Poly<K> c = gcd(cf, cg);
  auto a = coefficients_in(exact_divide(f, cf), v);
  auto b = coefficients_in(exact_divide(g, cg), v);
  if (a.size() < b.size()) std::swap(a, b);
  while (b.size() > 1) {
    auto r = detail::prem(a, b);
    a = std::move(b);
    if (r.empty()) {
      b.clear();
      break;
    }
    Poly<K> rp = from_coefficients(r, v, vars);
    rp = exact_divide(rp, content_in(rp, v)).monic();
    b = coefficients_in(rp, v);
  }
  Poly<K> pp(vars);
  if (b.empty()) {
    pp = from_coefficients(a, v, vars);
    pp = exact_divide(pp, content_in(pp, v));
  } else {
    pp = Poly<K>::constant(vars, K(1));  // b is a nonzero constant in v
  }
  return (c * pp).monic();
}

/// Determinant by fraction-free elimination; entries live in a polynomial ring.
template <class K>
Poly<K> bareiss_determinant(std::vector<std::vector<Poly<K>>> m, const Vars& vars) {
  const std::size_t n = m.size();
  if (n == 0) return Poly<K>::constant(vars, K(1));
  bool negate = false;
  Poly<K> prev = Poly<K>::constant(vars, K(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t i = k + 1;
      while (i < n && m[i][k].is_zero()) ++i;
      if (i == n) return Poly<K>(vars);
      std::swap(m[i], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly<K> num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(num, prev);
      }
      m[i][k] = Poly<K>(vars);
    }
    prev = m[k][k];
  }
  Poly<K> d = m[n - 1][n - 1];
  return negate ? -d : d;
}

/// Resultant with respect to variable `v` via the Sylvester determinant.
template <class K>
Poly<K> resultant(const Poly<K>& f, const Poly<K>& g, std::size_t v) {
  const Vars& vars = f.vars() ? f.vars() : g.vars();
  if (f.is_zero() || g.is_zero()) return Poly<K>(vars);
  auto a = coefficients_in(f, v), b = coefficients_in(g, v);
  const std::size_t da = a.size() - 1, db = b.size() - 1;
  const std::size_t n = da + db;
  if (n == 0) return Poly<K>::constant(vars, K(1));
  std::vector<std::vector<Poly<K>>> s(n, std::vector<Poly<K>>(n, Poly<K>(vars)));
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t i = 0; i <= da; ++i) s[r][r + i] = a[da - i];
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t i = 0; i <= db; ++i) s[db + r][r + i] = b[db - i];
  return bareiss_determinant(std::move(s), vars);
}

/// Largest k with p^k dividing f.
template <class K>
unsigned factor_order(const Poly<K>& p, const Poly<K>& f) {
  if (f.is_zero()) throw error(errc::zero_input, "factor_order of the zero polynomial");
  if (p.is_constant()) throw error(errc::invalid_input, "factor_order by a unit");
  unsigned k = 0;
  Poly<K> cur = f;
  for (;;) {
    auto [q, r] = divmod(cur, p);
    if (!r.is_zero()) return k;
    cur = std::move(q);
    ++k;
  }
}

/// Image of `f` in a ring with the variable list `target`, variable i of f going to index map[i].
template <class K>
Poly<K> rename(const Poly<K>& f, const Vars& target, const std::vector<std::size_t>& map) {
  Poly<K> out(target);
  for (const auto& [m, c] : f.terms()) {
    Monomial mm;
    for (std::size_t i = 0; i < f.nvars(); ++i)
      if (m[i]) mm.set(map[i], mm[map[i]] + m[i]);
    out.add_term(mm, c);
  }
  return out;
}

/// Applies `fn` to every coefficient.
template <class K, class Fn>
Poly<K> map_coefficients(const Poly<K>& f, Fn&& fn) {
  Poly<K> out(f.vars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, fn(c));
  return out;
}

}  // namespace rees
