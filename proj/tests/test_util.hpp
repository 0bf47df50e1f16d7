#pragma once

#include <ostream>
#include <random>
#include <string>

#include "rees/field.hpp"
#include "rees/parse.hpp"
#include "rees/poly.hpp"

namespace rees::testing {

inline Rational random_rational(std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<int> n(-span, span), d(1, span);
  return Rational(n(rng), d(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int span = 5) {
  for (;;) {
    Rational r = random_rational(rng, span);
    if (!r.is_zero()) return r;
  }
}

inline Algebraic random_algebraic(std::mt19937_64& rng, const Algebraic::Field& f) {
  QVec c(f->degree());
  for (auto& x : c) x = random_rational(rng, 4);
  return Algebraic(f, c);
}

inline RationalFunction random_function(std::mt19937_64& rng, bool two_vars) {
  using P = Poly<Rational>;
  const Vars& v = RationalFunction::vars();
  auto rp = [&](bool nonzero) {
    for (;;) {
      P p(v);
      std::uniform_int_distribution<unsigned> e(0, 2), k(1, 3);
      unsigned nt = k(rng);
      for (unsigned i = 0; i < nt; ++i)
        p.add_term(Monomial{e(rng), two_vars ? e(rng) : 0u}, random_rational(rng, 4));
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  return RationalFunction(rp(false), rp(true));
}

template <class K, class Coef>
Poly<K> random_poly(std::mt19937_64& rng, const Vars& v, unsigned max_deg, unsigned nterms, Coef&& coef) {
  Poly<K> p(v);
  std::uniform_int_distribution<unsigned> e(0, max_deg);
  for (unsigned i = 0; i < nterms; ++i) {
    Monomial m;
    unsigned left = max_deg;
    for (std::size_t j = 0; j < v->size(); ++j) {
      unsigned x = std::min(left, e(rng));
      m.set(j, x);
      left -= x;
    }
    p.add_term(m, coef());
  }
  return p;
}

inline Poly<Rational> qpoly(const std::string& s, const Vars& v) { return parse_poly<Rational>(s, v); }

}  // namespace rees::testing

namespace rees {
template <class K>
void PrintTo(const Poly<K>& p, std::ostream* os) {
  *os << p.str();
}
}  // namespace rees
