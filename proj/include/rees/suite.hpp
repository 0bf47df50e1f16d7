#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rees/hypersurface.hpp"
#include "rees/pencil.hpp"

namespace rees::suite {

/// Steps written as strings: a constant of the declared field, or "inf".
using StepText = std::vector<std::string>;

struct FactorText {
  StepText steps;
  unsigned n = 1;
};

struct IdealPair {
  std::vector<FactorText> I, Istar;
};

struct Quadruple {
  std::string F, G, Fstar, Gstar;
};

struct FamilyText {
  unsigned d = 2, m = 3;
  std::vector<std::string> forms;
  std::vector<std::pair<unsigned, std::string>> extras;
};

inline const std::vector<std::string>& rational_pool() {
  static const std::vector<std::string> pool{"0", "1", "-1", "2", "1/2"};
  return pool;
}

/// Constants of Q(alpha), alpha^2 = 2, mixed with rationals.
inline const std::vector<std::string>& sqrt2_pool() {
  static const std::vector<std::string> pool{"0", "1", "-1", "alpha", "-alpha", "1+alpha"};
  return pool;
}

inline StepText random_chain(std::mt19937_64& rng, std::size_t max_len, const std::vector<std::string>& pool) {
  std::uniform_int_distribution<std::size_t> len(1, max_len), pick(0, pool.size() - 1);
  StepText s{"0"};
  const std::size_t n = len(rng);
  while (s.size() < n) s.push_back(rng() % 5 == 0 ? "inf" : pool[pick(rng)]);
  return s;
}

inline std::vector<std::pair<StepText, StepText>> contact_pairs(std::uint64_t seed, std::size_t count,
                                                                const std::vector<std::string>& pool) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<StepText, StepText>> out;
  while (out.size() < count) {
    auto V = random_chain(rng, 5, pool);
    auto W = random_chain(rng, 5, pool);
    out.emplace_back(std::move(V), std::move(W));
  }
  return out;
}

inline std::vector<IdealPair> ideal_pairs(std::uint64_t seed, std::size_t count, const std::vector<std::string>& pool) {
  std::mt19937_64 rng(seed);
  auto spec = [&] {
    std::vector<FactorText> f;
    const unsigned k = 1 + rng() % 2;
    for (unsigned i = 0; i < k; ++i) f.push_back({random_chain(rng, 5, pool), static_cast<unsigned>(1 + rng() % 3)});
    return f;
  };
  std::vector<IdealPair> out;
  while (out.size() < count) {
    auto I = spec();
    auto Is = spec();
    out.push_back({std::move(I), std::move(Is)});
  }
  return out;
}

namespace detail {

inline std::string small_coefficient(std::mt19937_64& rng, bool nonzero) {
  static const char* pool[] = {"1", "-1", "2", "-2", "3", "1/2", "-3/2"};
  if (!nonzero && rng() % 3 == 0) return "0";
  return pool[rng() % 7];
}

inline std::string monomial_text(unsigned a, unsigned b) {
  std::string s;
  if (a) s += "X" + (a > 1 ? "^" + std::to_string(a) : std::string());
  if (b) s += (s.empty() ? "" : "*") + std::string("Y") + (b > 1 ? "^" + std::to_string(b) : std::string());
  return s.empty() ? "1" : s;
}

/// A sparse member with terms of degree lo..hi.
inline std::string random_member(std::mt19937_64& rng, unsigned lo, unsigned hi, unsigned terms) {
  std::string s;
  for (unsigned i = 0; i < terms; ++i) {
    unsigned d = lo + rng() % (hi - lo + 1), b = rng() % (d + 1);
    s += (s.empty() ? "" : "+") + std::string("(") + small_coefficient(rng, true) + ")*" + monomial_text(d - b, b);
  }
  return s;
}

inline std::size_t max_chain(const Resolution<Rational>& r) {
  std::size_t k = 0;
  for (const auto& n : r.tree) k = std::max(k, n.chain.size());
  return k;
}

}  // namespace detail

/// Pencils over Q whose members have origin order <= 3, with rational base points and resolution depth <= 4.
inline std::vector<Quadruple> pencil_quadruples(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  const Vars xy = plane_vars();
  auto pencil = [&](std::string& F, std::string& G) {
    for (;;) {
      F = detail::random_member(rng, 1 + rng() % 3, 4, 1 + rng() % 3);
      G = detail::random_member(rng, 1 + rng() % 3, 4, 1 + rng() % 3);
      try {
        auto f = parse_poly<Rational>(F, xy), g = parse_poly<Rational>(G, xy);
        if (origin_order(f) > ext_nat(3) || origin_order(g) > ext_nat(3)) continue;
        auto p = make_pencil(f, g);
        auto r = resolve(p, rational_root_finder(), false);
        if (detail::max_chain(r) > 4) continue;
        return;
      } catch (const error&) {
        continue;
      }
    }
  };
  std::vector<Quadruple> out;
  while (out.size() < count) {
    Quadruple q;
    pencil(q.F, q.G);
    pencil(q.Fstar, q.Gstar);
    out.push_back(std::move(q));
  }
  return out;
}

/// Pairs (f, g) with f(0, Y) = c Y^deg_Y f and a finite colength.
inline std::vector<std::pair<std::string, std::string>> y_general_pairs(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  const Vars xy = plane_vars();
  std::vector<std::pair<std::string, std::string>> out;
  while (out.size() < count) {
    const unsigned d = 1 + rng() % 3;
    std::string f = "(" + detail::small_coefficient(rng, true) + ")*Y" + (d > 1 ? "^" + std::to_string(d) : "");
    const unsigned extra = rng() % 3;
    for (unsigned i = 0; i < extra; ++i) {
      unsigned a = 1 + rng() % 3, b = rng() % d;
      f += "+(" + detail::small_coefficient(rng, true) + ")*" + detail::monomial_text(a, b);
    }
    std::string g = detail::random_member(rng, 1, 4, 1 + rng() % 3);
    auto pf = parse_poly<Rational>(f, xy), pg = parse_poly<Rational>(g, xy);
    if (!is_y_general(pf) || intersection_multiplicity(pf, pg).is_infinite()) continue;
    out.emplace_back(std::move(f), std::move(g));
  }
  return out;
}

/// Families in X, Y with m <= 6, distinct linear forms and at least one extra term divisible by F.
inline std::vector<FamilyText> hypersurface_families(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  static const char* forms[] = {"X", "Y", "X+Y", "X-Y", "X+2*Y", "2*X-Y", "X-3*Y"};
  std::vector<FamilyText> out;
  while (out.size() < count) {
    FamilyText f;
    const unsigned h = 1 + rng() % 3;
    f.m = h + 2 + rng() % (5 - h);  // room for at least one extra term
    std::vector<std::string> chosen;
    while (chosen.size() < h) {
      std::string c = forms[rng() % 7];
      if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) chosen.push_back(c);
    }
    f.forms = chosen;
    std::string F;
    for (const auto& c : chosen) F += (F.empty() ? "" : "*") + std::string("(") + c + ")";
    const unsigned forced = h + 1 + rng() % (f.m - h - 1);
    for (unsigned i = h + 1; i < f.m; ++i) {
      if (i != forced && rng() % 2) continue;
      // F times a random form of degree i - h in X, Y, Z
      const unsigned e = i - h;
      std::string q;
      for (unsigned k = 0; k < 2; ++k) {
        unsigned c = rng() % (e + 1), b = rng() % (e - c + 1), a = e - c - b;
        std::string mono = detail::monomial_text(a, b);
        if (c) mono = (mono == "1" ? "" : mono + "*") + "Z" + (c > 1 ? "^" + std::to_string(c) : "");
        q += (q.empty() ? "" : "+") + std::string("(") + detail::small_coefficient(rng, true) + ")*" + mono;
      }
      f.extras.emplace_back(i, F + "*(" + q + ")");
    }
    try {
      family_build<Rational>(f.d, f.m, f.forms, f.extras);
    } catch (const error&) {
      continue;
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace rees::suite
