#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "rees/rational.hpp"

namespace rees {

/// Dense univariate polynomial over Q, index = exponent.
using QUnivariate = std::vector<Rational>;

namespace detail {

inline void trim_q(QUnivariate& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Rational eval_q(const QUnivariate& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Integer coefficients with the same roots.
inline std::vector<mpz_class> integral_q(const QUnivariate& p) {
  mpz_class l = 1;
  for (const auto& c : p) l = lcm(l, c.den());
  std::vector<mpz_class> out;
  for (const auto& c : p) out.push_back(mpz_class(c.num() * (l / c.den())));
  return out;
}

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> fac;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    fac.emplace_back(p, e);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : fac) {
    std::size_t cur = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < cur; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace detail

/// Distinct rational roots of a nonzero polynomial.
inline std::vector<Rational> rational_roots(QUnivariate p) {
  detail::trim_q(p);
  std::vector<Rational> roots;
  if (p.size() <= 1) return roots;
  if (p.front().is_zero()) {
    roots.emplace_back(0);
    while (!p.empty() && p.front().is_zero()) p.erase(p.begin());
  }
  if (p.size() <= 1) return roots;
  auto z = detail::integral_q(p);
  auto dn = detail::positive_divisors(z.front());
  auto dd = detail::positive_divisors(z.back());
  std::set<mpq_class> seen;
  for (const auto& a : dn)
    for (const auto& b : dd)
      for (int s : {1, -1}) {
        Rational cand(mpz_class(a * s), b);
        if (!seen.insert(cand.value()).second) continue;
        if (detail::eval_q(p, cand).is_zero()) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Whether a monic quartic over Q splits into two rational quadratics.
inline bool quartic_has_quadratic_factor(const QUnivariate& monic) {
  // rescale x = y/D to a monic integer quartic
  mpz_class D = 1;
  for (const auto& c : monic) D = lcm(D, c.den());
  std::vector<mpz_class> b(5);
  mpz_class pw = 1;
  for (int k = 4; k >= 0; --k) {
    b[k] = mpz_class(monic[k].value() * pw);
    pw *= D;
  }
  if (b[0] == 0) return true;
  for (const auto& dv : detail::positive_divisors(b[0])) {
    for (int sg : {1, -1}) {
      mpz_class q = dv * sg, s = b[0] / q;
      if (q != s) {
        mpz_class num = b[1] - q * b[3], den = s - q;
        if (num % den != 0) continue;
        mpz_class p = num / den, r = b[3] - p;
        if (p * r + q + s == b[2]) return true;
      } else {
        if (q * b[3] != b[1]) continue;
        mpz_class disc = b[3] * b[3] - 4 * (b[2] - 2 * q);
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) return true;
      }
    }
  }
  return false;
}

/// Irreducibility over Q for degree <= 4; nullopt for larger degrees.
inline std::optional<bool> irreducible_over_q(const QUnivariate& monic) {
  const std::size_t deg = monic.size() - 1;
  if (deg > 4) return std::nullopt;
  if (deg <= 1) return true;
  if (!rational_roots(monic).empty()) return false;
  if (deg == 4 && quartic_has_quadratic_factor(monic)) return false;
  return true;
}

}  // namespace rees
