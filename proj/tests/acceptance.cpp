// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rees/scenario.hpp"
#include "test_util.hpp"

using namespace rees;
using namespace rees::scenario;
using Q = Rational;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

bool report(int n, const char* what, double limit_s, const std::function<Verdict()>& body) {
  const auto start = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = s < limit_s;
  const bool ok = v.pass && in_time;
  std::printf("criterion %d [%s] %s: %s (%.2f s, limit %.0f s)%s\n", n, ok ? "PASS" : "FAIL", what, v.detail.c_str(), s,
              limit_s, in_time ? "" : "; time limit exceeded");
  std::fflush(stdout);
  return ok;
}

/// Runs a scenario and summarizes it; every job must pass.
Verdict all_pass(const json& scenario_json, unsigned threads, const std::string& label, RunResult* keep = nullptr) {
  auto r = run(scenario_json, {threads, std::nullopt, false});
  if (keep) *keep = r;
  std::size_t good = 0;
  std::string first_bad;
  for (const auto& o : r.outcomes) {
    if (o.status == Status::pass) ++good;
    else if (first_bad.empty()) first_bad = o.record.dump();
  }
  Verdict v{good == r.outcomes.size() && !r.outcomes.empty(),
            std::to_string(good) + "/" + std::to_string(r.outcomes.size()) + " " + label};
  if (!first_bad.empty()) v.detail += "; first failure " + first_bad;
  return v;
}

json family(unsigned m, std::vector<std::string> forms) { return json{{"d", 2}, {"m", m}, {"forms", forms}}; }

Poly<Q> random_form_off(std::mt19937_64& rng, const Vars& v, unsigned e, const Poly<Q>& l) {
  for (;;) {
    Poly<Q> p(v);
    for (unsigned b = 0; b <= e; ++b) p.add_term(Monomial{e - b, b}, testing::random_rational(rng, 4));
    if (p.is_zero() || (e > 0 && divides(l, p))) continue;
    return p;
  }
}

unsigned hardware_threads() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

}  // namespace

int main() {
  const unsigned threads = hardware_threads();
  bool ok = true;

  ok &= report(1, "valuation table on Z^3-XY and Z^5-(X-Y)(X+Y)", 5, [] {
    std::size_t checked = 0, bad = 0;
    std::string first;
    auto expect = [&](bool c, const std::string& what) {
      ++checked;
      if (!c && bad++ == 0) first = what;
    };
    for (const auto& fam : {family_build<Q>(2, 3, std::vector<std::string>{"X", "Y"}),
                            family_build<Q>(2, 5, std::vector<std::string>{"X-Y", "X+Y"})}) {
      for (unsigned j = 1; j <= fam.h; ++j) {
        expect(v_value(fam, j, element(fam, fam.forms[j - 1])) == ext_nat(fam.t + 1), fam.G.str() + " F_j");
        expect(v_value(fam, j, element<Q>(fam, "Z")) == ext_nat(1), fam.G.str() + " Z");
        for (unsigned i = 1; i <= fam.h; ++i)
          if (i != j) expect(v_value(fam, j, element(fam, fam.forms[i - 1])) == ext_nat(1), fam.G.str() + " F_i");
      }
      std::mt19937_64 rng(28);
      for (int n = 0; n < 20; ++n) {
        const unsigned j = 1 + rng() % fam.h, e0 = rng() % 4, k = rng() % 3;
        const Poly<Q>& Fj = fam.forms[j - 1];
        Poly<Q> c = random_form_off(rng, fam.vars, e0, Fj) * Fj.pow(k);
        expect(v_value(fam, j, element(fam, c)) == ext_nat(e0 + k + fam.t * k), c.str());
      }
    }
    return Verdict{bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " values" +
                                 (first.empty() ? "" : "; first mismatch " + first)};
  });

  ok &= report(2, "normality of the powers, p <= 4, D = 16", 120, [&] {
    json jobs = json::array();
    for (const auto& f : {family(3, {"X", "Y"}), family(5, {"X-Y", "X+Y"})})
      jobs.push_back({{"type", "hypersurface-verify"}, {"family", f}, {"p_max", 4}, {"degree_bound", 16}});
    const json generated = emit_suite("hypersurface", 7, 5);
    for (const auto& j : generated["jobs"]) jobs.push_back(j);
    std::size_t with_extras = 0;
    for (const auto& j : jobs) with_extras += j["family"].contains("extras") && !j["family"]["extras"].empty();
    auto v = all_pass(json{{"seed", 7}, {"jobs", jobs}}, threads, "families");
    v.detail += ", " + std::to_string(with_extras) + " with extra terms";
    return v;
  });

  ok &= report(3, "reduction X+Y on Z^3-XY", 10, [&] {
    json jobs = json::array();
    for (unsigned p = 1; p <= 3; ++p)
      jobs.push_back({{"type", "reduction-check"}, {"family", family(3, {"X", "Y"})}, {"H", {"X+Y"}}, {"p", p}});
    jobs.push_back({{"type", "reduction-check"}, {"family", family(3, {"X", "Y"})}, {"H", {"X"}}, {"p", 1},
                    {"expect_error", "DividesTangentCone"}});
    return all_pass(json{{"jobs", jobs}}, threads, "checks (p = 1, 2, 3 and H = X)");
  });

  // the suite pencils feed criteria 4 and 8
  const json theorem_jobs = emit_suite("theorem", 7, 20)["jobs"];

  ok &= report(4, "contact = iota over Q(t) and Q(t,t*)", 300, [&] {
    json jobs = json::array();
    const char* worked[][4] = {{"X", "Y", "X", "Y"}, {"Y^2", "X^3", "Y", "X"}, {"Y^2", "X^3", "Y^2", "X^3"}};
    for (const auto& w : worked)
      jobs.push_back({{"type", "theorem-check"}, {"check", {"4.6.1", "4.6.3"}}, {"F", w[0]}, {"G", w[1]},
                      {"Fstar", w[2]}, {"Gstar", w[3]}});
    for (const auto& j : theorem_jobs) jobs.push_back(j);
    return all_pass(json{{"jobs", jobs}}, threads, "quadruples (3 worked + 20 generated)");
  });

  ok &= report(5, "contact_ideal symmetry and chi-weighted symmetry", 120, [&] {
    json sc = emit_suite("ideal", 7, 100);
    auto ctx = parse_field(sc);
    scenario::detail::Env<Algebraic> env{ctx};
    std::size_t chi2 = 0;
    for (const auto& j : sc["jobs"]) {
      bool has = false;
      for (const char* key : {"I", "Istar"})
        for (const auto& [V, n] : scenario::detail::ideal_of(env, j, key).factors) has = has || V.chi() == 2;
      chi2 += has;
    }
    auto v = all_pass(sc, threads, "ideal pairs");
    v.detail += ", " + std::to_string(chi2) + " with a chi = 2 factor";
    v.pass = v.pass && chi2 >= 10;
    // symmetry χ(V)c(V,W) = χ(W)c(W,V) on the same field
    auto c = all_pass(emit_suite("contact", 5, 100), threads, "chi-weighted contact pairs");
    v.pass = v.pass && c.pass;
    v.detail += "; " + c.detail;
    return v;
  });

  ok &= report(6, "oracles: colength vs resultant, Noether vs curvette", 180, [&] {
    auto a = all_pass(emit_suite("intersect", 7, 50), threads, "Y-general pairs");
    json contact{{"field", "Q"}, {"jobs", suite_jobs("contact", 11, 100, field_make(FieldDescriptor::rationals()))}};
    auto b = all_pass(contact, threads, "rational valuation pairs");
    auto c = all_pass(emit_suite("contact", 7, 100), threads, "pairs over Q(sqrt 2)");
    return Verdict{a.pass && b.pass && c.pass, a.detail + "; " + b.detail + "; " + c.detail};
  });

  ok &= report(7, "testing curve, t in {0,1,2,3,inf}", 5, [] {
    const std::vector<std::string> ts{"0", "1", "2", "3", "inf"};
    auto rows = demo_testing_curve(ts);
    std::size_t good = 0;
    std::string bad;
    for (const auto& r : rows) {
      // the value is 2 exactly at the tangent direction
      bool row_ok = r.exactly_one_two;
      for (std::size_t i = 0; i < ts.size(); ++i) row_ok = row_ok && (r.values[i] == 2) == (ts[i] == r.tau);
      good += row_ok;
      if (!row_ok && bad.empty()) bad = r.delta;
    }
    return Verdict{good == rows.size(),
                   std::to_string(good) + "/" + std::to_string(rows.size()) + " rows" + (bad.empty() ? "" : "; bad row " + bad)};
  });

  ok &= report(8, "Zariski exponents re-substitute", 300, [&] {
    json jobs = json::array();
    for (const auto& j : theorem_jobs) {
      jobs.push_back({{"type", "pencil-resolve"}, {"F", j["F"]}, {"G", j["G"]}});
      jobs.push_back({{"type", "pencil-resolve"}, {"F", j["Fstar"]}, {"G", j["Gstar"]}});
    }
    const std::vector<std::pair<std::string, std::string>> worked{{"Y^2", "X^3"}, {"Y*(Y-X)", "X^3"}, {"X^2", "Y*(Y-X)"}};
    for (const auto& [F, G] : worked) jobs.push_back({{"type", "pencil-resolve"}, {"F", F}, {"G", G}});
    RunResult r;
    auto v = all_pass(json{{"jobs", jobs}}, threads, "pencils", &r);
    std::size_t dicriticals = 0;
    for (const auto& o : r.outcomes)
      dicriticals += o.record.value("dicriticals", json::array()).size();
    v.detail += ", " + std::to_string(dicriticals) + " dicriticals";
    return v;
  });

  std::printf("acceptance: %s\n", ok ? "all criteria pass" : "some criteria fail");
  return ok ? 0 : 1;
}
