#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rees/contact.hpp"
#include "rees/errors.hpp"
#include "rees/intersection.hpp"
#include "rees/linalg.hpp"
#include "rees/plane.hpp"
#include "rees/poly_algorithms.hpp"
#include "rees/univariate.hpp"

namespace rees {

/// Two members of an M-primary ideal (F, G)R, a common unit factor stripped.
template <class K>
struct Pencil {
  Poly<K> F, G;
};

template <class K>
Pencil<K> make_pencil(const Poly<K>& F, const Poly<K>& G) {
  if (F.is_zero() || G.is_zero()) throw error(errc::zero_input, "pencil members must be nonzero");
  Poly<K> d = gcd(F, G);
  if (d.constant_term().is_zero())
    throw error(errc::not_coprime, "gcd " + d.str() + " of the pencil vanishes at the origin");
  Pencil<K> p{exact_divide(F, d), exact_divide(G, d)};
  if (!p.F.constant_term().is_zero() || !p.G.constant_term().is_zero())
    throw error(errc::invalid_input, "pencil members must vanish at the origin");
  return p;
}

/// Roots in the coefficient field of a univariate polynomial (coefficients low to high).
template <class K>
using RootFinder = std::function<std::vector<K>(const std::vector<K>&)>;

namespace detail {

template <class K>
void trim_k(std::vector<K>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// p / (v - r), exact by construction.
template <class K>
std::vector<K> deflate(const std::vector<K>& p, const K& r) {
  std::vector<K> q(p.size() - 1, K(0));
  K carry(0);
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

template <class K>
K eval_k(const std::vector<K>& p, const K& x) {
  K acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <class K>
std::string univariate_str(const std::vector<K>& p) {
  Poly<K> q(make_vars({"v"}));
  for (std::size_t i = 0; i < p.size(); ++i) q.add_term(Monomial{static_cast<unsigned>(i)}, p[i]);
  return q.str();
}

/// Rational roots, then quadratic leftovers via `sqrt`; anything else is outside the field.
template <class K, class Sqrt>
std::vector<K> roots_with_sqrt(std::vector<K> p, Sqrt&& sqrt) {
  trim_k(p);
  std::vector<K> roots;
  bool rational = true;
  for (const auto& c : p) rational = rational && is_rational(c);
  if (rational) {
    QUnivariate q;
    for (const auto& c : p) q.push_back(to_rational(c));
    for (const auto& r : rational_roots(q)) {
      roots.push_back(K(r));
      while (p.size() > 1 && eval_k(p, K(r)).is_zero()) p = deflate(p, K(r));
    }
  }
  if (p.size() == 2) {
    roots.push_back(-p[0] / p[1]);
  } else if (p.size() == 3) {
    K disc = p[1] * p[1] - K(4) * p[0] * p[2];
    auto s = sqrt(disc);
    if (!s) throw error(errc::root_outside_field, "irreducible factor " + univariate_str(p) + " has no root in the field");
    for (const K& y : {*s, -*s}) {
      K r = (y - p[1]) / (K(2) * p[2]);
      bool dup = false;
      for (const auto& x : roots) dup = dup || x == r;
      if (!dup) roots.push_back(r);
    }
  } else if (p.size() > 3) {
    throw error(errc::root_outside_field, "factor " + univariate_str(p) + " has no root in the field");
  }
  return roots;
}

}  // namespace detail

inline RootFinder<Rational> rational_root_finder() {
  return [](const std::vector<Rational>& p) {
    return detail::roots_with_sqrt(p, [](const Rational& d) { return rational_sqrt(d); });
  };
}

inline RootFinder<Algebraic> algebraic_root_finder(Algebraic::Field f) {
  return [f](const std::vector<Algebraic>& p) {
    return detail::roots_with_sqrt(p, [&f](const Algebraic& d) -> std::optional<Algebraic> {
      if (!f) {
        auto r = rational_sqrt(d.rational_part());
        if (!r || !d.is_rational()) return std::nullopt;
        return Algebraic(*r);
      }
      auto r = f->sqrt(d.lifted(f).coords());
      if (!r) return std::nullopt;
      return Algebraic(f, *r);
    });
  };
}

template <class K>
RootFinder<K> default_root_finder();

template <>
inline RootFinder<Rational> default_root_finder<Rational>() {
  return rational_root_finder();
}

template <>
inline RootFinder<Algebraic> default_root_finder<Algebraic>() {
  return algebraic_root_finder(nullptr);
}

template <class K>
struct BasePointNode {
  std::vector<Step<K>> chain;
  Poly<K> f, g;  ///< transformed pair in chart coordinates, the point at the origin
  unsigned order_f = 0, order_g = 0;
  unsigned removed = 0;     ///< exponent of the new exceptional factored from both members
  bool dicritical = false;  ///< whether the exceptional created by blowing up this point is
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  unsigned long local_intersection = 0;
};

template <class K>
struct Resolution {
  std::vector<BasePointNode<K>> tree;
  std::vector<PlaneValuation<K>> dicriticals;  ///< one per Galois orbit
};

namespace detail {

template <class K>
std::vector<K> dehomogenize(const Poly<K>& h) {
  // h(1, v) in chart coordinates (u, v)
  std::vector<K> out(static_cast<std::size_t>(std::max(h.degree_in(1), 0)) + 1, K(0));
  for (const auto& [m, c] : h.terms()) out[m[1]] += c;
  return out;
}

template <class K>
Poly<K> pull_back(const Poly<K>& f, const Step<K>& s, unsigned e) {
  const Vars& uv = chart_vars();
  Poly<K> r = substitute(f, chart_images(s), uv);
  return exact_divide(r, Poly<K>::monomial(uv, Monomial{e, 0}, K(1)));
}

}  // namespace detail

/// Blows up base points until the pair has none left; records the dicritical exceptionals.
template <class K>
Resolution<K> resolve(const Pencil<K>& p, RootFinder<K> roots = default_root_finder<K>(), bool check_measure = true) {
  const Vars& uv = chart_vars();
  Resolution<K> res;
  BasePointNode<K> root;
  root.chain = {Step<K>::free(K(0))};
  root.f = rename(p.F, uv, {0, 1});
  root.g = rename(p.G, uv, {0, 1});
  res.tree.push_back(std::move(root));
  std::vector<std::size_t> stack{0};
  std::vector<PlaneValuation<K>> found;
  while (!stack.empty()) {
    const std::size_t idx = stack.back();
    stack.pop_back();
    auto& node = res.tree[idx];
    node.order_f = static_cast<unsigned>(origin_order(node.f).value());
    node.order_g = static_cast<unsigned>(origin_order(node.g).value());
    const unsigned a = node.order_f, b = node.order_g, e = std::min(a, b);
    node.removed = e;
    auto comps_f = homogeneous_components(node.f), comps_g = homogeneous_components(node.g);
    const Poly<K>& lf = comps_f.at(a);
    const Poly<K>& lg = comps_g.at(b);
    Poly<K> h(uv);
    if (a == b) {
      node.dicritical = !(lf * Poly<K>::constant(uv, lg.leading_coeff()) == lg * Poly<K>::constant(uv, lf.leading_coeff()));
      h = node.dicritical ? gcd(lf, lg) : lf;
    } else {
      h = a < b ? lf : lg;
    }
    if (check_measure) node.local_intersection = intersection_multiplicity(node.f, node.g).value();
    if (node.dicritical) found.push_back(valuation_build(node.chain));

    std::vector<Step<K>> next;
    if (!h.is_constant()) {
      for (const auto& c : roots(detail::dehomogenize(h))) next.push_back(Step<K>::free(c));
      if (h.coeff(Monomial{0, static_cast<unsigned>(h.total_degree())}).is_zero()) next.push_back(Step<K>::infinity());
    }
    std::vector<std::size_t> kids;
    for (const auto& s : next) {
      BasePointNode<K> child;
      child.chain = res.tree[idx].chain;
      child.chain.push_back(s);
      child.f = detail::pull_back(res.tree[idx].f, s, e);
      child.g = detail::pull_back(res.tree[idx].g, s, e);
      if (!child.f.constant_term().is_zero() || !child.g.constant_term().is_zero())
        throw error(errc::invalid_input, "internal: a computed base point is not common to both members");
      child.parent = idx;
      res.tree.push_back(std::move(child));
      kids.push_back(res.tree.size() - 1);
    }
    res.tree[idx].children = kids;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  if (check_measure) {
    // Σ ι over the children of a point = ι at the point minus e^2
    for (const auto& n : res.tree) {
      unsigned long s = 0;
      for (auto c : n.children) s += res.tree[c].local_intersection;
      if (s + static_cast<unsigned long>(n.removed) * n.removed != n.local_intersection)
        throw error(errc::invalid_input, "internal: intersection measure did not drop by e^2");
    }
  }
  // one representative per Galois orbit
  for (auto& V : found) {
    bool dup = false;
    for (const auto& W : res.dicriticals)
      for (const auto& Ws : conjugates(W)) dup = dup || detail::shared_prefix(V, Ws) == std::max(V.length(), Ws.length());
    if (!dup) res.dicriticals.push_back(std::move(V));
  }
  return res;
}

template <class K>
unsigned completion_value(const Pencil<K>& p, const PlaneValuation<K>& V) {
  return static_cast<unsigned>(std::min(value(V, p.F), value(V, p.G)).value());
}

/// Exponents n_i with (F, G)R completed = Π ζ(V_i)^{n_i}, from Σ_i n_i c(V_k, V_i) = V_k(F, G).
template <class K>
std::vector<std::pair<PlaneValuation<K>, unsigned>> zariski_exponents(const Pencil<K>& p, const Resolution<K>& r) {
  const auto& Vs = r.dicriticals;
  const std::size_t h = Vs.size();
  std::vector<std::vector<Rational>> A(h, std::vector<Rational>(h));
  std::vector<Rational> rhs(h);
  std::string dump;
  for (std::size_t k = 0; k < h; ++k) {
    for (std::size_t i = 0; i < h; ++i) {
      A[k][i] = Rational(static_cast<long>(contact_number(Vs[k], Vs[i]).value));
      dump += A[k][i].str() + (i + 1 < h ? " " : "");
    }
    rhs[k] = Rational(static_cast<long>(completion_value(p, Vs[k])));
    dump += " | " + rhs[k].str() + "; ";
  }
  auto n = solve_dense(A, rhs);
  if (!n) throw error(errc::singular_contact_matrix, "contact system " + dump);
  std::vector<std::pair<PlaneValuation<K>, unsigned>> out;
  for (std::size_t i = 0; i < h; ++i) {
    const Rational& x = (*n)[i];
    if (!(x.den() == 1) || x.sign() <= 0)
      throw error(errc::non_integral_exponent, "exponent " + x.str() + " from contact system " + dump);
    out.emplace_back(Vs[i], static_cast<unsigned>(x.num().get_ui()));
  }
  return out;
}

template <class K>
std::vector<std::pair<PlaneValuation<K>, unsigned>> zariski_exponents(const Pencil<K>& p,
                                                                      RootFinder<K> roots = default_root_finder<K>()) {
  return zariski_exponents(p, resolve(p, std::move(roots)));
}

template <class K>
CompleteIdealSpec<K> completion(const Pencil<K>& p, RootFinder<K> roots = default_root_finder<K>()) {
  CompleteIdealSpec<K> I;
  I.factors = zariski_exponents(p, std::move(roots));
  I.generators = std::make_pair(p.F, p.G);
  return I;
}

}  // namespace rees
