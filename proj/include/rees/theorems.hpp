#pragma once

#include <optional>
#include <string>

#include "rees/contact.hpp"
#include "rees/intersection.hpp"
#include "rees/pencil.hpp"
#include "rees/rational_function.hpp"
#include "rees/report.hpp"

namespace rees {

namespace detail {

template <class K>
Poly<RationalFunction> to_function_coefficients(const Poly<K>& f) {
  Poly<RationalFunction> out(f.vars());
  for (const auto& [m, c] : f.terms()) {
    if (!is_rational(c)) throw error(errc::invalid_input, "pencil coefficient " + to_string(c) + " is not rational");
    out.add_term(m, RationalFunction(to_rational(c)));
  }
  return out;
}

inline Poly<RationalFunction> linear_combination(const Poly<RationalFunction>& a, const Poly<RationalFunction>& b,
                                                 const RationalFunction& s) {
  return a + b * Poly<RationalFunction>::constant(a.vars() ? a.vars() : b.vars(), s);
}

inline bool primary_at_origin(const Poly<RationalFunction>& a, const Poly<RationalFunction>& b) {
  return !detail::gcd_vanishes_at_origin(a, b);
}

inline std::string ext_str(ext_nat x) { return x.to_string(); }

template <class K>
std::string spec_str(const CompleteIdealSpec<K>& I) {
  std::string s;
  for (const auto& [V, n] : I.factors) {
    if (!s.empty()) s += " * ";
    s += "zeta[";
    for (std::size_t k = 0; k < V.length(); ++k) {
      const auto& st = V.steps()[k];
      s += (k ? "," : "") + (st.at_infinity ? std::string("inf") : to_string(st.c));
    }
    s += "]^" + std::to_string(n);
  }
  return s;
}

template <class K>
VerificationReport verify_with_iota(const std::string& check, const Poly<K>& F, const Poly<K>& G, const Poly<K>& Fs,
                                    const Poly<K>& Gs, bool two_parameters, RootFinder<K> roots) {
  VerificationReport r;
  r.check = check;
  auto I = completion(make_pencil(F, G), roots);
  auto Is = completion(make_pencil(Fs, Gs), roots);
  const auto t = RationalFunction::t();
  const auto ts = RationalFunction::tstar();
  auto f = to_function_coefficients(F), g = to_function_coefficients(G);
  auto fs = to_function_coefficients(Fs), gs = to_function_coefficients(Gs);
  Poly<RationalFunction> phi = linear_combination(f, g, t);
  Poly<RationalFunction> phis = linear_combination(fs, gs, two_parameters ? ts : t);
  bool swapped = false;
  if (!two_parameters && !primary_at_origin(phi, phis)) {
    phis = linear_combination(gs, fs, t);
    swapped = true;
  }
  r.set("Phi", phi.str()).set("Phi*", phis.str());
  if (!two_parameters) r.set("swapped", swapped ? "true" : "false");
  r.set("I", spec_str(I)).set("I*", spec_str(Is));
  ext_nat iota = intersection_multiplicity(phi, phis);
  unsigned long c1 = contact_ideal(I, Is), c2 = contact_ideal(Is, I);
  r.set("iota", ext_str(iota)).set("c(I,I*)", std::to_string(c1)).set("c(I*,I)", std::to_string(c2));
  r.pass = iota.is_finite() && iota.value() == c1 && c1 == c2;
  if (!r.pass)
    r.witness = "iota=" + ext_str(iota) + " c(I,I*)=" + std::to_string(c1) + " c(I*,I)=" + std::to_string(c2);
  return r;
}

}  // namespace detail

/// c(I, I*) = ι(F + tG, F* + tG*) over Q(t) = c(I*, I); swaps to G* + tF* when the first choice shares a component.
template <class K>
VerificationReport verify_4_6_1(const Poly<K>& F, const Poly<K>& G, const Poly<K>& Fs, const Poly<K>& Gs,
                                RootFinder<K> roots = default_root_finder<K>()) {
  return detail::verify_with_iota("4.6.1", F, G, Fs, Gs, false, std::move(roots));
}

/// Same with F* + t* G* over Q(t, t*); no primality caveat.
template <class K>
VerificationReport verify_4_6_3(const Poly<K>& F, const Poly<K>& G, const Poly<K>& Fs, const Poly<K>& Gs,
                                RootFinder<K> roots = default_root_finder<K>()) {
  return detail::verify_with_iota("4.6.3", F, G, Fs, Gs, true, std::move(roots));
}

/// c(I, I*) = c(I*, I) for two complete ideals given by their factorizations.
template <class K>
VerificationReport verify_4_6_2(const CompleteIdealSpec<K>& I, const CompleteIdealSpec<K>& Is) {
  VerificationReport r;
  r.check = "4.6.2";
  unsigned long c1 = contact_ideal(I, Is), c2 = contact_ideal(Is, I);
  r.set("I", detail::spec_str(I)).set("I*", detail::spec_str(Is));
  r.set("c(I,I*)", std::to_string(c1)).set("c(I*,I)", std::to_string(c2));
  r.pass = c1 == c2;
  if (I.generators && Is.generators) {
    // the route through ι over Q(t), with the swap that makes the pair primary
    auto f = detail::to_function_coefficients(I.generators->first), g = detail::to_function_coefficients(I.generators->second);
    auto fs = detail::to_function_coefficients(Is.generators->first);
    auto gs = detail::to_function_coefficients(Is.generators->second);
    auto phi = detail::linear_combination(f, g, RationalFunction::t());
    auto phis = detail::linear_combination(fs, gs, RationalFunction::t());
    if (!detail::primary_at_origin(phi, phis)) phis = detail::linear_combination(gs, fs, RationalFunction::t());
    ext_nat iota = intersection_multiplicity(phi, phis);
    r.set("iota", iota.to_string());
    r.pass = r.pass && iota.is_finite() && iota.value() == c1;
  }
  if (!r.pass) r.witness = "c(I,I*)=" + std::to_string(c1) + " c(I*,I)=" + std::to_string(c2);
  return r;
}

/// Experimental: does ι(Φ, Φ*; R) = c(I, I*) for these particular members of I and I*?
template <class K>
VerificationReport probe_4_10(const Pencil<K>& P, const Pencil<K>& Ps, const Poly<K>& phi, const Poly<K>& phis,
                              RootFinder<K> roots = default_root_finder<K>()) {
  VerificationReport r;
  r.check = "4.10-probe";
  auto I = completion(P, roots), Is = completion(Ps, roots);
  bool in_i = true, in_is = true;
  for (const auto& [V, n] : I.factors) in_i = in_i && value(V, phi) >= ext_nat(completion_value(P, V));
  for (const auto& [V, n] : Is.factors) in_is = in_is && value(V, phis) >= ext_nat(completion_value(Ps, V));
  ext_nat iota = intersection_multiplicity(phi, phis);
  unsigned long c = contact_ideal(I, Is);
  r.set("Phi in I", in_i ? "true" : "false").set("Phi* in I*", in_is ? "true" : "false");
  r.set("iota", iota.to_string()).set("c(I,I*)", std::to_string(c));
  r.pass = in_i && in_is && iota.is_finite() && iota.value() == c;
  if (!r.pass) r.witness = in_i && in_is ? "counterexample: iota differs from the contact number" : "not members";
  return r;
}

}  // namespace rees
