#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rees/errors.hpp"
#include "rees/ext_nat.hpp"
#include "rees/linalg.hpp"
#include "rees/parse.hpp"
#include "rees/poly.hpp"
#include "rees/poly_algorithms.hpp"

namespace rees {

/// X, Y, Z for d = 2; X1..Xd, Z otherwise.
inline Vars family_vars(unsigned d) {
  if (d == 0 || d + 1 > max_vars) throw error(errc::bad_degrees, "d must lie in 1.." + std::to_string(max_vars - 1));
  std::vector<std::string> names;
  if (d == 1) names = {"X"};
  else if (d == 2) names = {"X", "Y"};
  else
    for (unsigned i = 1; i <= d; ++i) names.push_back("X" + std::to_string(i));
  names.push_back("Z");
  return make_vars(std::move(names));
}

/// Coordinates x'_i = X_i / z of the chart, followed by z.
inline Vars chart_family_vars(unsigned d) {
  std::vector<std::string> names;
  const Vars upper = family_vars(d);
  for (const auto& n : *upper) {
    std::string s = n;
    for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    names.push_back(s);
  }
  return make_vars(std::move(names));
}

/// G = Z^m - F_1...F_h + extra terms, each extra homogeneous of degree in [h, m) and divisible by F.
template <class K>
struct HypersurfaceFamily {
  unsigned d = 0, m = 0, h = 0, t = 0;
  Vars vars, chart;
  std::vector<Poly<K>> forms;
  std::vector<std::pair<unsigned, Poly<K>>> extras;
  Poly<K> F, G;
  std::vector<Poly<K>> G_by_z;  ///< coefficients of G in Z, low to high, G_by_z[m] = 1
  std::vector<Poly<K>> g;       ///< g_1..g_t of the chart relation, at index i; g[0] = 1
  std::vector<Poly<K>> f_prime; ///< f'_j in chart coordinates

  std::size_t z_index() const { return d; }
};

/// y = Σ c_b z^b with every c_b free of Z and b < m.
template <class K>
struct SurfaceElement {
  std::vector<Poly<K>> c;
};

namespace detail {

inline Monomial unit_monomial(std::size_t i, unsigned e = 1) {
  Monomial m;
  m.set(i, e);
  return m;
}

template <class K>
void check_vars(const Poly<K>& p, const Vars& v) {
  if (!p.is_zero() && !same_vars(p.vars(), v))
    throw error(errc::invalid_input, p.str() + " is not written in the family variables");
}

/// Replaces z^k, k >= deg, using the monic relation with coefficients `rel` (low to high).
template <class K>
std::vector<Poly<K>> reduce_monic(std::vector<Poly<K>> cs, const std::vector<Poly<K>>& rel, const Vars& vars) {
  const std::size_t n = rel.size() - 1;
  for (std::size_t k = cs.size(); k-- > n;) {
    if (cs[k].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (!rel[i].is_zero()) cs[k - n + i] -= cs[k] * rel[i];
  }
  cs.resize(n, Poly<K>(vars));
  return cs;
}

template <class K>
bool proportional(const Poly<K>& a, const Poly<K>& b) {
  return a * b.leading_coeff() == b * a.leading_coeff();
}

template <class K>
bool is_linear_form(const Poly<K>& p, std::size_t nx) {
  if (p.is_zero()) return false;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != 1) return false;
    for (std::size_t i = nx; i < p.nvars(); ++i)
      if (m[i]) return false;
  }
  return true;
}

/// Automorphism of the chart coordinates sending the linear form l to the variable in slot r.
template <class K>
struct LinearFrame {
  std::size_t r = 0;
  std::vector<Poly<K>> images;

  LinearFrame(const Poly<K>& l, std::size_t nx) {
    const Vars& v = l.vars();
    while (l.coeff(unit_monomial(r)).is_zero()) ++r;
    const K a = l.coeff(unit_monomial(r));
    for (std::size_t i = 0; i < v->size(); ++i) images.push_back(Poly<K>::variable(v, i));
    Poly<K> img = Poly<K>::variable(v, r);
    for (std::size_t i = 0; i < nx; ++i)
      if (i != r) img -= Poly<K>::variable(v, i) * l.coeff(unit_monomial(i));
    images[r] = img * (K(1) / a);
  }

  Poly<K> operator()(const Poly<K>& p) const { return substitute(p, images); }

  /// Multiplicity of the form as a factor of p.
  ext_nat order(const Poly<K>& p) const {
    if (p.is_zero()) return ext_nat::infinity();
    Poly<K> q = (*this)(p);
    unsigned k = ~0u;
    for (const auto& [m, c] : q.terms()) k = std::min(k, m[r]);
    return ext_nat(k);
  }
};

}  // namespace detail

template <class K>
HypersurfaceFamily<K> family_build(unsigned d, unsigned m, std::vector<Poly<K>> forms,
                                   std::vector<std::pair<unsigned, Poly<K>>> extras = {}) {
  HypersurfaceFamily<K> fam;
  fam.d = d;
  fam.m = m;
  fam.vars = family_vars(d);
  fam.chart = chart_family_vars(d);
  const Vars& V = fam.vars;
  fam.h = static_cast<unsigned>(forms.size());
  if (fam.h < 1 || m <= fam.h)
    throw error(errc::bad_degrees, "need m > h >= 1, got m = " + std::to_string(m) + ", h = " + std::to_string(fam.h));
  fam.t = m - fam.h;
  for (auto& f : forms) {
    detail::check_vars(f, V);
    if (!detail::is_linear_form(f, d)) throw error(errc::invalid_input, "form " + f.str() + " is not linear in the X variables");
  }
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      if (detail::proportional(forms[i], forms[j]))
        throw error(errc::not_coprime, "forms " + forms[i].str() + " and " + forms[j].str() + " are proportional");
  fam.forms = forms;
  fam.F = Poly<K>::constant(V, K(1));
  for (const auto& f : forms) fam.F *= f;

  fam.G = Poly<K>::monomial(V, detail::unit_monomial(d, m), K(1)) - fam.F;
  for (auto& [i, gi] : extras) {
    detail::check_vars(gi, V);
    if (i < fam.h || i >= m) throw error(errc::bad_extra_term, "extra term degree " + std::to_string(i) + " outside [h, m)");
    if (gi.is_zero() || !is_homogeneous(gi) || static_cast<unsigned>(gi.total_degree()) != i)
      throw error(errc::bad_extra_term, gi.str() + " is not homogeneous of degree " + std::to_string(i));
    if (!divides(fam.F, gi)) throw error(errc::bad_extra_term, gi.str() + " is not divisible by " + fam.F.str());
    fam.G += gi;
  }
  fam.extras = extras;
  auto comps = homogeneous_components(fam.G);
  if (!comps.count(fam.h)) throw error(errc::bad_extra_term, "the degree-h part of G cancels");
  fam.G_by_z = coefficients_in(fam.G, d);

  // g = G(Z x, Z) / Z^h in chart coordinates
  const Vars& A = fam.chart;
  std::vector<Poly<K>> img;
  const Poly<K> z = Poly<K>::variable(A, d);
  for (unsigned i = 0; i < d; ++i) img.push_back(Poly<K>::variable(A, i) * z);
  img.push_back(z);
  Poly<K> gz = exact_divide(substitute(fam.G, img, A), z.pow(fam.h));
  auto gc = coefficients_in(gz, d);
  gc.resize(fam.t + 1, Poly<K>(A));
  fam.g.assign(fam.t + 1, Poly<K>(A));
  for (unsigned i = 0; i <= fam.t; ++i) fam.g[i] = gc[fam.t - i];

  std::vector<Poly<K>> to_chart;
  for (unsigned i = 0; i < d; ++i) to_chart.push_back(Poly<K>::variable(A, i));
  to_chart.push_back(z);
  for (const auto& f : forms) fam.f_prime.push_back(substitute(f, to_chart, A));

  // Eisenstein at each f'_j: f'_j divides every g_i, exactly once for g_t
  for (std::size_t j = 0; j < fam.h; ++j) {
    detail::LinearFrame<K> frame(fam.f_prime[j], d);
    for (unsigned i = 1; i <= fam.t; ++i) {
      ext_nat o = frame.order(fam.g[i]);
      if (i < fam.t ? o < ext_nat(1) : o != ext_nat(1))
        throw error(errc::not_eisenstein, "g_" + std::to_string(i) + " = " + fam.g[i].str() + " at " + fam.f_prime[j].str());
    }
  }
  return fam;
}

template <class K>
HypersurfaceFamily<K> family_build(unsigned d, unsigned m, const std::vector<std::string>& forms,
                                   const std::vector<std::pair<unsigned, std::string>>& extras = {}) {
  const Vars v = family_vars(d);
  std::vector<Poly<K>> fs;
  for (const auto& f : forms) fs.push_back(parse_poly<K>(f, v));
  std::vector<std::pair<unsigned, Poly<K>>> es;
  for (const auto& [i, e] : extras) es.emplace_back(i, parse_poly<K>(e, v));
  return family_build<K>(d, m, std::move(fs), std::move(es));
}

template <class K>
Poly<K> to_poly(const HypersurfaceFamily<K>& fam, const SurfaceElement<K>& y) {
  return from_coefficients(y.c, fam.z_index(), fam.vars);
}

/// Normal form of p modulo G.
template <class K>
SurfaceElement<K> element(const HypersurfaceFamily<K>& fam, Poly<K> p) {
  detail::check_vars(p, fam.vars);
  if (p.is_zero()) return {std::vector<Poly<K>>(fam.m, Poly<K>(fam.vars))};
  auto cs = coefficients_in(p, fam.z_index());
  if (cs.size() < fam.m) cs.resize(fam.m, Poly<K>(fam.vars));
  return {detail::reduce_monic(std::move(cs), fam.G_by_z, fam.vars)};
}

template <class K>
SurfaceElement<K> element(const HypersurfaceFamily<K>& fam, const std::string& text) {
  return element(fam, parse_poly<K>(text, fam.vars));
}

template <class K>
SurfaceElement<K> multiply(const HypersurfaceFamily<K>& fam, const SurfaceElement<K>& a, const SurfaceElement<K>& b) {
  return element(fam, to_poly(fam, a) * to_poly(fam, b));
}

template <class K>
SurfaceElement<K> add(const HypersurfaceFamily<K>& fam, const SurfaceElement<K>& a, const SurfaceElement<K>& b) {
  return element(fam, to_poly(fam, a) + to_poly(fam, b));
}

template <class K>
bool is_zero(const SurfaceElement<K>& y) {
  for (const auto& c : y.c)
    if (!c.is_zero()) return false;
  return true;
}

namespace detail {

/// z^n modulo g as t coefficients over A'.
template <class K>
std::vector<Poly<K>> z_power(const HypersurfaceFamily<K>& fam, unsigned n) {
  std::vector<Poly<K>> cs(std::max<unsigned>(n, fam.t) + 1, Poly<K>(fam.chart));
  cs[n] = Poly<K>::constant(fam.chart, K(1));
  std::vector<Poly<K>> rel(fam.t + 1, Poly<K>(fam.chart));
  for (unsigned i = 0; i <= fam.t; ++i) rel[fam.t - i] = fam.g[i];
  return reduce_monic(std::move(cs), rel, fam.chart);
}

/// Image of X^a Z^c under X_i -> z x'_i, reduced below z^t.
template <class K>
std::vector<Poly<K>> qdt_monomial(const HypersurfaceFamily<K>& fam, const Monomial& mono,
                                  std::map<unsigned, std::vector<Poly<K>>>& cache) {
  unsigned n = mono.degree();
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, z_power(fam, n)).first;
  Monomial xa = mono;
  xa.set(fam.d, 0);
  std::vector<Poly<K>> out;
  for (const auto& p : it->second) out.push_back(p.mul_monomial(xa, K(1)));
  return out;
}

/// The chart map X^a Z^c -> x'^a z^{|a|+c} mod g, written in a linear frame and reduced
/// modulo the P-th power of the frame variable.
template <class K>
class TruncatedChart {
 public:
  TruncatedChart(const HypersurfaceFamily<K>& fam, const LinearFrame<K>& fr, unsigned P) : fam_(fam), fr_(fr), P_(P) {
    rel_.assign(fam.t + 1, Poly<K>(fam.chart));
    for (unsigned i = 0; i <= fam.t; ++i) rel_[fam.t - i] = cut(fr(fam.g[i]));
    for (unsigned i = 0; i < fam.d; ++i) x_.push_back(cut(fr.images[i]));
    std::vector<Poly<K>> one(fam.t, Poly<K>(fam.chart));
    one[0] = Poly<K>::constant(fam.chart, K(1));
    zpow_.push_back(std::move(one));
  }

  std::vector<Poly<K>> image(const Monomial& mono) {
    const unsigned n = mono.degree();
    while (zpow_.size() <= n) {
      // multiply the last power by z and fold z^t back
      std::vector<Poly<K>> next(fam_.t + 1, Poly<K>(fam_.chart));
      for (unsigned s = 0; s < fam_.t; ++s) next[s + 1] = zpow_.back()[s];
      auto red = reduce_monic(std::move(next), rel_, fam_.chart);
      for (auto& q : red) q = cut(q);
      zpow_.push_back(std::move(red));
    }
    Poly<K> xa = Poly<K>::constant(fam_.chart, K(1));
    for (unsigned i = 0; i < fam_.d; ++i)
      for (unsigned e = 0; e < mono[i]; ++e) xa = cut(xa * x_[i]);
    std::vector<Poly<K>> out;
    for (const auto& q : zpow_[n]) out.push_back(cut(xa * q));
    return out;
  }

 private:
  Poly<K> cut(const Poly<K>& p) const {
    Poly<K> r(fam_.chart);
    for (const auto& [m, c] : p.terms())
      if (m[fr_.r] < P_) r.add_term(m, c);
    return r;
  }

  const HypersurfaceFamily<K>& fam_;
  const LinearFrame<K>& fr_;
  unsigned P_;
  std::vector<Poly<K>> rel_, x_;
  std::vector<std::vector<Poly<K>>> zpow_;
};

}  // namespace detail

/// (d_0..d_{t-1}) with y = Σ d_s z^s in A = A'[z]/(g).
template <class K>
std::vector<Poly<K>> qdt_reduce(const HypersurfaceFamily<K>& fam, const SurfaceElement<K>& y) {
  std::vector<Poly<K>> out(fam.t, Poly<K>(fam.chart));
  std::map<unsigned, std::vector<Poly<K>>> cache;
  const Poly<K> py = to_poly(fam, y);
  for (const auto& [mono, c] : py.terms()) {
    auto img = detail::qdt_monomial(fam, mono, cache);
    for (unsigned s = 0; s < fam.t; ++s) out[s] += img[s] * c;
  }
  return out;
}

/// The valuation V_j: z has value 1 and f'_j value t.
template <class K>
struct DicriticalValuation {
  unsigned j = 0;  ///< 1-based
  Poly<K> form, f_prime_j, f_prime;
  unsigned t = 0;
};

template <class K>
ext_nat v_value(const HypersurfaceFamily<K>& fam, unsigned j, const SurfaceElement<K>& y) {
  if (j < 1 || j > fam.h)
    throw error(errc::index_out_of_range, "valuation index " + std::to_string(j) + " outside 1.." + std::to_string(fam.h));
  auto ds = qdt_reduce(fam, y);
  detail::LinearFrame<K> frame(fam.f_prime[j - 1], fam.d);
  ext_nat best = ext_nat::infinity();
  for (unsigned s = 0; s < fam.t; ++s) {
    ext_nat o = frame.order(ds[s]);
    if (o.is_finite()) best = std::min(best, ext_nat(s + fam.t * o.value()));
  }
  return best;
}

template <class K>
std::vector<DicriticalValuation<K>> dicriticals(const HypersurfaceFamily<K>& fam) {
  std::vector<DicriticalValuation<K>> out;
  const auto z = element(fam, Poly<K>::variable(fam.vars, fam.d));
  Poly<K> fp = Poly<K>::constant(fam.chart, K(1));
  for (const auto& f : fam.f_prime) fp *= f;
  for (unsigned j = 1; j <= fam.h; ++j) {
    if (v_value(fam, j, z) != ext_nat(1) || v_value(fam, j, element(fam, fam.forms[j - 1])) != ext_nat(fam.t + 1))
      throw error(errc::not_eisenstein, "valuation " + std::to_string(j) + " does not take the values 1 on z and t+1 on its form");
    out.push_back({j, fam.forms[j - 1], fam.f_prime[j - 1], fp, fam.t});
  }
  return out;
}

namespace detail {

/// Decides membership in (gens) + (G) near the origin: once all monomials of some degree N
/// lie in the truncated span, membership is read off below degree N + 1.
template <class K>
class LocalIdeal {
 public:
  LocalIdeal(const HypersurfaceFamily<K>& fam, std::vector<Poly<K>> gens, unsigned cap) : fam_(fam) {
    gens.push_back(fam.G);
    unsigned lo = ~0u;
    for (const auto& g : gens) lo = std::min(lo, static_cast<unsigned>(g.min_degree().value()));
    for (unsigned n = lo; n <= cap; ++n) {
      Echelon<K> span;
      index_.clear();
      for (const auto& g : gens) {
        const unsigned og = static_cast<unsigned>(g.min_degree().value());
        if (og > n) continue;
        for (const auto& mono : monomials_up_to(n - og)) span.insert(row(g.mul_monomial(mono, K(1)), n));
      }
      bool full = true;
      for (const auto& mono : monomials_of(n))
        if (!span.contains(row(Poly<K>::monomial(fam.vars, mono, K(1)), n))) {
          full = false;
          break;
        }
      if (full) {
        n_ = n;
        span_ = std::move(span);
        return;
      }
    }
    throw error(errc::degree_bound_exceeded, "no power of the maximal ideal found in the ideal below degree " + std::to_string(cap));
  }

  bool contains(const Poly<K>& y) { return span_.contains(row(y, n_)); }
  unsigned degree() const { return n_; }

 private:
  std::vector<Monomial> monomials_of(unsigned deg) const {
    std::vector<Monomial> out;
    const std::size_t nv = fam_.d + 1;
    Monomial cur;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
      if (i + 1 == nv) {
        cur.set(i, left);
        out.push_back(cur);
        return;
      }
      for (unsigned e = 0; e <= left; ++e) {
        cur.set(i, e);
        rec(i + 1, left - e);
      }
    };
    rec(0, deg);
    return out;
  }
  std::vector<Monomial> monomials_up_to(unsigned deg) const {
    std::vector<Monomial> out;
    for (unsigned k = 0; k <= deg; ++k)
      for (auto& m : monomials_of(k)) out.push_back(m);
    return out;
  }
  SparseVec<K> row(const Poly<K>& p, unsigned n) {
    SparseVec<K> r;
    for (const auto& [m, c] : p.terms())
      if (m.degree() <= n) {
        auto it = index_.try_emplace(m, index_.size()).first;
        r.emplace(it->second, c);
      }
    return r;
  }

  const HypersurfaceFamily<K>& fam_;
  std::map<Monomial, std::size_t, GrlexDesc> index_;
  Echelon<K> span_;
  unsigned n_ = 0;
};

template <class K>
std::vector<Poly<K>> monomial_generators(const HypersurfaceFamily<K>& fam, unsigned p) {
  std::vector<Poly<K>> out;
  const Vars& v = fam.vars;
  std::vector<Poly<K>> cur{Poly<K>::constant(v, K(1))};
  for (unsigned k = 0; k < p; ++k) {
    std::map<Monomial, bool, GrlexDesc> seen;
    std::vector<Poly<K>> next;
    for (const auto& q : cur)
      for (unsigned i = 0; i <= fam.d; ++i) {
        Poly<K> r = q * Poly<K>::variable(v, i);
        if (seen.emplace(r.leading_monomial(), true).second) next.push_back(r);
      }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

/// y in (X_1..X_d, z)^p B.
template <class K>
bool ideal_membership(const HypersurfaceFamily<K>& fam, const SurfaceElement<K>& y, unsigned p, unsigned degree_bound) {
  Poly<K> py = to_poly(fam, y);
  if (py.total_degree() > static_cast<int>(degree_bound))
    throw error(errc::degree_bound_exceeded, "element of degree " + std::to_string(py.total_degree()) +
                                                  " above bound " + std::to_string(degree_bound));
  if (p == 0) return true;
  detail::LocalIdeal<K> I(fam, detail::monomial_generators(fam, p), std::max(p, degree_bound));
  return I.contains(py);
}

struct NormalityRecord {
  unsigned p = 0;
  std::size_t dimension = 0;  ///< of {y : deg y <= D, V_j(y) >= p for all j}
  bool pass = true;
  bool retried = false;
  std::string witness;
};

struct NormalityReport {
  unsigned degree_bound = 0;
  bool pass = true;
  std::vector<NormalityRecord> records;
};

template <class K>
unsigned default_degree_bound(const HypersurfaceFamily<K>& fam, unsigned p_max) {
  return p_max * fam.m + fam.h;
}

/// For p <= p_max: {V_j >= p for all j} = (X, z)^p, verified through degree D.
template <class K>
NormalityReport verify_normality(const HypersurfaceFamily<K>& fam, unsigned p_max, unsigned degree_bound) {
  NormalityReport rep;
  rep.degree_bound = degree_bound;
  const Vars& V = fam.vars;
  // columns: X^a Z^c with c < m and total degree <= D
  std::vector<Monomial> cols;
  std::function<void(std::size_t, unsigned, Monomial)> rec = [&](std::size_t i, unsigned left, Monomial cur) {
    if (i == fam.d) {
      for (unsigned c = 0; c < fam.m && c <= left; ++c) {
        cur.set(i, c);
        cols.push_back(cur);
      }
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.set(i, e);
      rec(i + 1, left - e, cur);
    }
  };
  rec(0, degree_bound, Monomial{});

  // each column's image in every frame, modulo the power of the frame variable the constraints can see
  std::vector<detail::LinearFrame<K>> frames;
  for (const auto& f : fam.f_prime) frames.emplace_back(f, fam.d);
  const unsigned P = std::max(1u, (p_max + fam.t - 1) / fam.t);
  std::vector<std::vector<std::vector<Poly<K>>>> images(cols.size());  // [col][j][s]
  for (const auto& fr : frames) {
    detail::TruncatedChart<K> tc(fam, fr, P);
    for (std::size_t k = 0; k < cols.size(); ++k) images[k].push_back(tc.image(cols[k]));
  }

  for (unsigned p = 0; p <= p_max; ++p) {
    NormalityRecord r;
    r.p = p;
    if (p == 0) {
      r.dimension = cols.size();
      rep.records.push_back(r);
      continue;
    }
    // V_j(y) >= p  <=>  the form's coordinate divides d_s to order ceil((p - s) / t)
    using Key = std::tuple<std::size_t, unsigned, Monomial>;
    auto key_less = [](const Key& a, const Key& b) {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
      return grlex_less(std::get<2>(a), std::get<2>(b));
    };
    std::map<Key, SparseVec<K>, decltype(key_less)> constraints(key_less);
    for (std::size_t k = 0; k < cols.size(); ++k)
      for (std::size_t j = 0; j < frames.size(); ++j)
        for (unsigned s = 0; s < fam.t && s < p; ++s) {
          const unsigned need = (p - s + fam.t - 1) / fam.t;
          for (const auto& [mono, c] : images[k][j][s].terms())
            if (mono[frames[j].r] < need) constraints[{j, s, mono}].emplace(k, c);
        }
    Echelon<K> e;
    for (auto& [key, row] : constraints) e.insert(row);
    auto basis = e.kernel(cols.size());
    r.dimension = basis.size();

    detail::LocalIdeal<K> Mp(fam, detail::monomial_generators(fam, p), std::max(p, degree_bound));
    for (const auto& vec : basis) {
      Poly<K> y(V);
      for (const auto& [k, c] : vec) y.add_term(cols[k], c);
      if (Mp.contains(y)) continue;
      // retry once with a unit at the origin
      if (Mp.contains(y * (Poly<K>::constant(V, K(1)) + Poly<K>::variable(V, 0)))) {
        r.retried = true;
        continue;
      }
      r.pass = false;
      r.witness = y.str();
      break;
    }
    // reverse inclusion on the generators of M^p
    if (r.pass)
      for (const auto& mono : detail::monomial_generators(fam, p)) {
        auto y = element(fam, mono);
        for (unsigned j = 1; j <= fam.h; ++j)
          if (v_value(fam, j, y) < ext_nat(p)) {
            r.pass = false;
            r.witness = mono.str() + " has value below p at V_" + std::to_string(j);
          }
      }
    rep.pass = rep.pass && r.pass;
    rep.records.push_back(std::move(r));
  }
  return rep;
}

/// Whether (H_1^p, ..., H_{d-1}^p, z^p) is a reduction of (X, z)^p.
template <class K>
bool is_reduction(const HypersurfaceFamily<K>& fam, std::vector<Poly<K>> H, unsigned p, unsigned max_n = 3) {
  const Vars& V = fam.vars;
  if (H.size() + 1 != fam.d)
    throw error(errc::invalid_input, "expected " + std::to_string(fam.d - 1) + " linear forms, got " + std::to_string(H.size()));
  Echelon<K> indep;
  for (auto& f : H) {
    detail::check_vars(f, V);
    if (!detail::is_linear_form(f, fam.d)) throw error(errc::invalid_input, f.str() + " is not a linear form in the X variables");
    for (const auto& Fj : fam.forms)
      if (detail::proportional(f, Fj)) throw error(errc::divides_tangent_cone, f.str() + " divides " + fam.F.str());
    SparseVec<K> row;
    for (const auto& [m, c] : f.terms())
      for (unsigned i = 0; i < fam.d; ++i)
        if (m[i]) row.emplace(i, c);
    if (!indep.insert(row)) throw error(errc::invalid_input, "forms are linearly dependent");
  }
  if (p == 0) return true;
  std::vector<Poly<K>> J;
  for (const auto& f : H) J.push_back(f.pow(p));
  J.push_back(Poly<K>::variable(V, fam.d).pow(p));

  for (unsigned j = 1; j <= fam.h; ++j) {
    ext_nat lo = ext_nat::infinity();
    for (const auto& gen : J) lo = std::min(lo, v_value(fam, j, element(fam, gen)));
    if (lo != ext_nat(p)) return false;
  }
  // J (M^p)^n = (M^p)^{n+1} for some n
  for (unsigned n = 0; n <= max_n; ++n) {
    std::vector<Poly<K>> gens;
    for (const auto& mono : detail::monomial_generators(fam, p * n))
      for (const auto& gen : J) gens.push_back(gen * mono);
    try {
      detail::LocalIdeal<K> I(fam, gens, p * (n + 1) + fam.m);
      bool all = true;
      for (const auto& mono : detail::monomial_generators(fam, p * (n + 1))) all = all && I.contains(mono);
      if (all) return true;
    } catch (const error& e) {
      if (e.code() != errc::degree_bound_exceeded) throw;
    }
  }
  return false;
}

/// F squarefree and the degree-h part of G a unit multiple of F.
template <class K>
bool tangent_cone_reduced(const HypersurfaceFamily<K>& fam) {
  for (std::size_t i = 0; i < fam.forms.size(); ++i)
    for (std::size_t j = i + 1; j < fam.forms.size(); ++j)
      if (detail::proportional(fam.forms[i], fam.forms[j])) return false;
  auto comps = homogeneous_components(fam.G);
  auto it = comps.find(fam.h);
  return it != comps.end() && detail::proportional(it->second, fam.F);
}

}  // namespace rees
