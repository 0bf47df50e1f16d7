#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rees/errors.hpp"
#include "rees/ext_nat.hpp"
#include "rees/plane.hpp"

namespace rees {

namespace detail {

template <class K>
bool same_step(const Step<K>& a, const Step<K>& b) {
  if (a.at_infinity || b.at_infinity) return a.at_infinity == b.at_infinity;
  return a.c == b.c;
}

template <class K>
std::size_t shared_prefix(const PlaneValuation<K>& V, const PlaneValuation<K>& W) {
  std::size_t k = 0;
  while (k < V.length() && k < W.length() && same_step(V.steps()[k], W.steps()[k])) ++k;
  return k;
}

template <class K>
void check_compatible(const std::vector<K>&, const std::vector<K>&) {}

inline void check_compatible(const std::vector<Algebraic>& a, const std::vector<Algebraic>& b) {
  Algebraic::Field fa, fb;
  for (const auto& x : a)
    if (x.field()) fa = x.field();
  for (const auto& x : b)
    if (x.field()) fb = x.field();
  if (fa && fb && fa->signature() != fb->signature())
    throw error(errc::incompatible_fields, fa->signature() + " vs " + fb->signature());
}

}  // namespace detail

/// Σ m_i(V) m_i(W) over the points the two chains share, as geometric chains.
template <class K>
unsigned noether_contact(const PlaneValuation<K>& V, const PlaneValuation<K>& W) {
  const std::size_t k = detail::shared_prefix(V, W);
  unsigned s = 0;
  for (std::size_t i = 0; i < k; ++i) s += V.multiplicities()[i] * W.multiplicities()[i];
  return s;
}

struct ContactResult {
  unsigned value = 0;
  std::string method;  ///< "noether", "curvette" or "both-agree"
  unsigned noether = 0;
  std::optional<unsigned> curvette;
  std::string c_star;  ///< the curvette constant that was used
};

/// c(V, W) = V(ζ(W)). A general member of ζ(W) is the norm of a curvette of W, so the
/// Noether count runs over the Galois conjugates of W; χ(V)c(V,W) = χ(W)c(W,V).
template <class K>
ContactResult contact_number(const PlaneValuation<K>& V, const PlaneValuation<K>& W, bool cross_check = false) {
  detail::check_compatible(V.constants(), W.constants());
  auto orbit = conjugates(W);
  ContactResult r;
  for (const auto& Ws : orbit) r.noether += noether_contact(V, Ws);
  r.value = r.noether;
  r.method = "noether";
  if (!cross_check) return r;

  // c* must avoid the point where V leaves E_n of a conjugate it shares all of W's points with
  std::vector<K> avoid;
  for (const auto& Ws : orbit)
    if (detail::shared_prefix(V, Ws) == Ws.length() && V.length() > Ws.length() && !V.steps()[Ws.length()].at_infinity)
      avoid.push_back(V.steps()[Ws.length()].c);
  K c_star = next_curvette_constant(avoid);
  Poly<K> norm = Poly<K>::constant(plane_vars(), K(1));
  for (const auto& Ws : orbit) norm = norm * curvette(Ws, c_star).equation;
  r.curvette = static_cast<unsigned>(value(V, norm).value());
  r.c_star = to_string(c_star);
  r.method = *r.curvette == r.noether ? "both-agree" : "disagree";
  return r;
}

/// A complete ideal Π ζ(V_i)^{n_i}.
template <class K>
struct CompleteIdealSpec {
  std::vector<std::pair<PlaneValuation<K>, unsigned>> factors;
  std::optional<std::pair<Poly<K>, Poly<K>>> generators;
};

template <class K>
CompleteIdealSpec<K> simple_ideal(const PlaneValuation<K>& V, unsigned n = 1) {
  return {{{V, n}}, std::nullopt};
}

/// c(I, I*) = Σ n_i n*_j χ(V_i) c(V_i, V*_j).
template <class K>
unsigned long contact_ideal(const CompleteIdealSpec<K>& I, const CompleteIdealSpec<K>& J) {
  unsigned long s = 0;
  for (const auto& [V, n] : I.factors)
    for (const auto& [W, m] : J.factors)
      s += static_cast<unsigned long>(n) * m * V.chi() * contact_number(V, W).value;
  return s;
}

}  // namespace rees
