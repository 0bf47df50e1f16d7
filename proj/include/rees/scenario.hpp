#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "rees/contact.hpp"
#include "rees/field.hpp"
#include "rees/hypersurface.hpp"
#include "rees/intersection.hpp"
#include "rees/pencil.hpp"
#include "rees/plane.hpp"
#include "rees/suite.hpp"
#include "rees/theorems.hpp"

namespace rees::scenario {

using json = nlohmann::ordered_json;

enum class Status { pass, fail, inconclusive };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

/// The scenario does not match the schema; the run stops with exit code 2.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobOutcome {
  json record;
  Status status = Status::pass;
  std::string summary;  ///< one line for the text table
};

namespace detail {

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::string require_string(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string()) throw SchemaError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

inline unsigned get_unsigned(const json& j, const char* key, std::optional<unsigned> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw SchemaError(std::string("missing field \"") + key + "\"");
  }
  const json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw SchemaError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<unsigned>();
}

inline bool get_bool(const json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) throw SchemaError(std::string("field \"") + key + "\" must be a boolean");
  return j.at(key).get<bool>();
}

inline std::vector<std::string> string_list(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_array()) throw SchemaError(std::string("field \"") + key + "\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (x.is_string()) out.push_back(x.get<std::string>());
    else if (x.is_number_integer()) out.push_back(std::to_string(x.get<long long>()));
    else throw SchemaError(std::string("field \"") + key + "\" must be an array of strings");
  }
  return out;
}

inline json ext_json(ext_nat x) { return x.is_finite() ? json(x.value()) : json("inf"); }

inline bool matches(const json& expect, ext_nat got) {
  if (expect.is_string()) return expect.get<std::string>() == "inf" && got.is_infinite();
  return expect.is_number_integer() && got.is_finite() && expect.get<long long>() == static_cast<long long>(got.value());
}

/// Parsing of constants, polynomials, steps and valuations over the declared field.
template <class K>
struct Env;

template <>
struct Env<Rational> {
  const FieldContext& ctx;
  Rational constant(const std::string& s) const { return parse_constant<Rational>(s); }
  Poly<Rational> poly(const std::string& s, const Vars& v) const { return parse_poly<Rational>(s, v); }
  RootFinder<Rational> roots() const { return rational_root_finder(); }
  PlaneValuation<Rational> valuation(const std::vector<Step<Rational>>& st) const { return valuation_build(st); }
};

template <>
struct Env<Algebraic> {
  const FieldContext& ctx;
  Algebraic constant(const std::string& s) const { return ctx.parse_algebraic(s); }
  Poly<Algebraic> poly(const std::string& s, const Vars& v) const {
    return parse_poly<Algebraic>(s, v, ctx.algebraic_constants());
  }
  RootFinder<Algebraic> roots() const { return algebraic_root_finder(ctx.number_field()); }
  PlaneValuation<Algebraic> valuation(const std::vector<Step<Algebraic>>& st) const { return valuation_build(ctx, st); }
};

template <class K>
std::vector<Step<K>> steps_of(const Env<K>& env, const json& j, const char* key) {
  std::vector<Step<K>> out;
  for (const auto& s : string_list(j, key)) out.push_back(s == "inf" ? Step<K>::infinity() : Step<K>::free(env.constant(s)));
  if (out.empty()) throw SchemaError(std::string("field \"") + key + "\" must list at least one step");
  return out;
}

template <class K>
json steps_json(const PlaneValuation<K>& V) {
  json a = json::array();
  for (const auto& s : V.steps()) a.push_back(s.at_infinity ? std::string("inf") : to_string(s.c));
  return a;
}

template <class K>
CompleteIdealSpec<K> ideal_of(const Env<K>& env, const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_array() || v.empty()) throw SchemaError(std::string("field \"") + key + "\" must be a non-empty array of factors");
  CompleteIdealSpec<K> I;
  for (const auto& f : v) I.factors.emplace_back(env.valuation(steps_of(env, f, "steps")), get_unsigned(f, "n", 1u));
  return I;
}

template <class K>
HypersurfaceFamily<K> family_of(const Env<K>& env, const json& job) {
  const json& f = job.contains("family") ? job.at("family") : job;
  const unsigned d = get_unsigned(f, "d", 2u);
  const Vars v = family_vars(d);
  std::vector<Poly<K>> forms;
  for (const auto& s : string_list(f, "forms")) forms.push_back(env.poly(s, v));
  std::vector<std::pair<unsigned, Poly<K>>> extras;
  if (f.contains("extras")) {
    if (!f.at("extras").is_array()) throw SchemaError("field \"extras\" must be an array of [degree, term] pairs");
    for (const auto& e : f.at("extras")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || e[0].get<long long>() < 0 || !e[1].is_string())
        throw SchemaError("field \"extras\" must be an array of [degree, term] pairs");
      extras.emplace_back(e[0].get<unsigned>(), env.poly(e[1].get<std::string>(), v));
    }
  }
  return family_build<K>(d, get_unsigned(f, "m"), std::move(forms), std::move(extras));
}

inline json family_json(const suite::FamilyText& f) {
  json e = json::array();
  for (const auto& [i, s] : f.extras) e.push_back(json::array({i, s}));
  return json{{"d", f.d}, {"m", f.m}, {"forms", f.forms}, {"extras", e}};
}

inline std::string join(const std::vector<std::string>& xs, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

// ---- jobs -------------------------------------------------------------------------------

template <class K>
JobOutcome job_hypersurface_verify(const Env<K>& env, const json& job) {
  auto fam = family_of(env, job);
  const unsigned p_max = get_unsigned(job, "p_max", 2u);
  const unsigned D = get_unsigned(job, "degree_bound", default_degree_bound(fam, p_max));
  auto rep = verify_normality(fam, p_max, D);
  JobOutcome o;
  json recs = json::array();
  for (const auto& r : rep.records) {
    json x{{"p", r.p}, {"dimension", r.dimension}, {"status", r.pass ? "pass" : "fail"}};
    if (r.retried) x["retried"] = true;
    if (!r.witness.empty()) x["witness"] = r.witness;
    recs.push_back(x);
  }
  const bool reduced = tangent_cone_reduced(fam);
  o.record = {{"claim", "(33)"}, {"G", fam.G.str()}, {"h", fam.h}, {"t", fam.t}, {"degree_bound", D},
              {"tangent_cone_reduced", reduced}, {"records", recs}};
  o.status = rep.pass && reduced ? Status::pass : Status::fail;
  if (o.status == Status::fail) {
    for (const auto& r : rep.records)
      if (!r.pass) o.record["witness"] = "p = " + std::to_string(r.p) + ": " + r.witness;
    if (!reduced) o.record["witness"] = "tangent cone of " + fam.G.str() + " is not reduced";
  }
  o.summary = fam.G.str() + ", p <= " + std::to_string(p_max) + ", verified up to degree " + std::to_string(D);
  return o;
}

template <class K>
JobOutcome job_reduction_check(const Env<K>& env, const json& job) {
  auto fam = family_of(env, job);
  std::vector<Poly<K>> H;
  for (const auto& s : string_list(job, "H")) H.push_back(env.poly(s, fam.vars));
  const unsigned p = get_unsigned(job, "p", 1u);
  const bool expect = get_bool(job, "expect", true);
  const bool got = is_reduction(fam, H, p);
  JobOutcome o;
  o.record = {{"claim", "(45)"}, {"G", fam.G.str()}, {"H", string_list(job, "H")}, {"p", p}, {"is_reduction", got}};
  o.status = got == expect ? Status::pass : Status::fail;
  if (o.status == Status::fail) o.record["witness"] = std::string("is_reduction returned ") + (got ? "true" : "false");
  o.summary = "H = " + join(string_list(job, "H")) + ", p = " + std::to_string(p) + ": " + (got ? "reduction" : "not a reduction");
  return o;
}

template <class K>
JobOutcome job_valuation_eval(const Env<K>& env, const json& job) {
  JobOutcome o;
  ext_nat v;
  if (job.contains("family")) {
    auto fam = family_of(env, job);
    const unsigned j = get_unsigned(job, "j");
    const std::string y = require_string(job, "element");
    v = v_value(fam, j, element(fam, env.poly(y, fam.vars)));
    o.record = {{"claim", "(28)"}, {"G", fam.G.str()}, {"j", j}, {"element", y}, {"value", ext_json(v)}};
    o.summary = "V_" + std::to_string(j) + "(" + y + ") = " + v.to_string();
  } else {
    auto V = env.valuation(steps_of(env, job, "steps"));
    const std::string f = require_string(job, "poly");
    v = value(V, env.poly(f, plane_vars()));
    o.record = {{"claim", "valuation"}, {"steps", steps_json(V)}, {"multiplicities", V.multiplicities()},
                {"chi", V.chi()}, {"poly", f}, {"value", ext_json(v)}};
    o.summary = "V(" + f + ") = " + v.to_string();
  }
  if (job.contains("expect") && !matches(job.at("expect"), v)) {
    o.status = Status::fail;
    o.record["witness"] = "expected " + job.at("expect").dump() + ", got " + v.to_string();
  }
  return o;
}

template <class K>
JobOutcome job_contact(const Env<K>& env, const json& job) {
  auto V = env.valuation(steps_of(env, job, "V"));
  auto W = env.valuation(steps_of(env, job, "W"));
  const bool cross = get_bool(job, "cross_check", true);
  auto vw = contact_number(V, W, cross);
  auto wv = contact_number(W, V, cross);
  JobOutcome o;
  o.record = {{"claim", "c(V,W)"}, {"V", steps_json(V)}, {"W", steps_json(W)}, {"chi_V", V.chi()}, {"chi_W", W.chi()},
              {"c_VW", vw.value}, {"c_WV", wv.value}, {"method", vw.method}};
  if (cross) {
    o.record["curvette_VW"] = *vw.curvette;
    o.record["curvette_WV"] = *wv.curvette;
    o.record["c_star"] = vw.c_star;
  }
  std::string why;
  if (cross && (vw.method != "both-agree" || wv.method != "both-agree")) why = "Noether and curvette counts differ";
  if (V.chi() * vw.value != W.chi() * wv.value) why = "chi(V) c(V,W) != chi(W) c(W,V)";
  if (job.contains("expect") && !matches(job.at("expect"), ext_nat(vw.value)))
    why = "expected " + job.at("expect").dump() + ", got " + std::to_string(vw.value);
  if (!why.empty()) {
    o.status = Status::fail;
    o.record["witness"] = why;
  }
  o.summary = "c(V,W) = " + std::to_string(vw.value) + ", c(W,V) = " + std::to_string(wv.value) + " (" + vw.method + ")";
  return o;
}

template <class K>
JobOutcome job_pencil_resolve(const Env<K>& env, const json& job) {
  const std::string Fs = require_string(job, "F"), Gs = require_string(job, "G");
  auto p = make_pencil(env.poly(Fs, plane_vars()), env.poly(Gs, plane_vars()));
  auto res = resolve(p, env.roots());
  auto z = zariski_exponents(p, res);
  JobOutcome o;
  json ds = json::array();
  std::string why;
  for (const auto& [V, n] : z) {
    unsigned long lhs = 0;
    for (const auto& [W, m] : z) lhs += static_cast<unsigned long>(m) * contact_number(V, W).value;
    const unsigned rhs = completion_value(p, V);
    if (lhs != rhs) why = "exponents do not reproduce the value on " + steps_json(V).dump();
    ds.push_back({{"steps", steps_json(V)}, {"chi", V.chi()}, {"exponent", n}, {"value", rhs}});
  }
  o.record = {{"claim", "(4.1)"}, {"F", p.F.str()}, {"G", p.G.str()}, {"base_points", res.tree.size()}, {"dicriticals", ds}};
  if (job.contains("expect_dicriticals") && job.at("expect_dicriticals") != json(z.size()))
    why = "expected " + job.at("expect_dicriticals").dump() + " dicriticals, got " + std::to_string(z.size());
  if (!why.empty()) {
    o.status = Status::fail;
    o.record["witness"] = why;
  }
  std::string ex;
  for (const auto& [V, n] : z) ex += (ex.empty() ? "" : " ") + steps_json(V).dump() + "^" + std::to_string(n);
  o.summary = "(" + Fs + ", " + Gs + ") -> " + ex;
  return o;
}

template <class K>
JobOutcome job_intersect(const Env<K>& env, const json& job) {
  const std::string fs = require_string(job, "f"), gs = require_string(job, "g");
  auto f = env.poly(fs, plane_vars()), g = env.poly(gs, plane_vars());
  ext_nat iota = intersection_multiplicity(f, g);
  JobOutcome o;
  o.record = {{"claim", "iota"}, {"f", fs}, {"g", gs}, {"iota", ext_json(iota)}};
  std::string why;
  if (get_bool(job, "oracle", false)) {
    auto [r, lambda] = intersection_resultant_sheared(f, g);
    o.record["resultant"] = ext_json(r);
    o.record["shear"] = lambda;
    if (r != iota) why = "colength " + iota.to_string() + " but resultant order " + r.to_string();
  }
  if (job.contains("expect") && !matches(job.at("expect"), iota))
    why = "expected " + job.at("expect").dump() + ", got " + iota.to_string();
  if (!why.empty()) {
    o.status = Status::fail;
    o.record["witness"] = why;
  }
  o.summary = "iota(" + fs + ", " + gs + ") = " + iota.to_string();
  return o;
}

inline json report_json(const VerificationReport& r) {
  json v = json::object();
  for (const auto& [k, x] : r.values) v[k] = x;
  json out{{"check", r.check}, {"status", r.pass ? "pass" : "fail"}, {"values", v}};
  if (!r.pass) out["witness"] = r.witness;
  return out;
}

template <class K>
JobOutcome job_theorem(const Env<K>& env, const json& job) {
  std::vector<std::string> checks;
  const json& c = require(job, "check");
  if (c.is_string()) checks.push_back(c.get<std::string>());
  else checks = string_list(job, "check");
  auto P = [&](const char* key) { return env.poly(require_string(job, key), plane_vars()); };
  JobOutcome o;
  json results = json::array();
  std::string claim, summary;
  bool pass = true;
  json expect = job.contains("expect") ? job.at("expect") : json();
  for (const auto& name : checks) {
    VerificationReport r;
    if (name == "4.6.1") r = verify_4_6_1(P("F"), P("G"), P("Fstar"), P("Gstar"), env.roots());
    else if (name == "4.6.3") r = verify_4_6_3(P("F"), P("G"), P("Fstar"), P("Gstar"), env.roots());
    else if (name == "4.6.2") {
      if (job.contains("I")) r = verify_4_6_2(ideal_of(env, job, "I"), ideal_of(env, job, "Istar"));
      else
        r = verify_4_6_2(completion(make_pencil(P("F"), P("G")), env.roots()),
                         completion(make_pencil(P("Fstar"), P("Gstar")), env.roots()));
    } else if (name == "4.10") {
      r = probe_4_10(make_pencil(P("F"), P("G")), make_pencil(P("Fstar"), P("Gstar")), P("phi"), P("phistar"), env.roots());
    } else {
      throw SchemaError("unknown check \"" + name + "\"");
    }
    if (!expect.is_null() && r.get("c(I,I*)") && *r.get("c(I,I*)") != expect.dump()) {
      r.pass = false;
      r.witness = "expected " + expect.dump() + ", got " + *r.get("c(I,I*)");
    }
    pass = pass && r.pass;
    claim += (claim.empty() ? "" : "+") + ("(" + name + ")");
    const std::string* lhs = r.get("iota");
    const std::string* rhs = r.get("c(I,I*)");
    summary += (summary.empty() ? "" : "; ") + name + ": " + (lhs ? *lhs : "-") + " = " + (rhs ? *rhs : "-");
    results.push_back(report_json(r));
  }
  o.record = {{"claim", claim}};
  // lhs/rhs of the first check, for quick reading
  const json& first = results.at(0)["values"];
  auto number = [](const json& v) {
    const std::string s = v.get<std::string>();
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos ? json(std::stoull(s)) : v;
  };
  if (first.contains("iota")) o.record["lhs"] = number(first["iota"]);
  if (first.contains("c(I,I*)")) o.record["rhs"] = number(first["c(I,I*)"]);
  o.record["results"] = results;
  o.status = pass ? Status::pass : Status::fail;
  if (!pass)
    for (const auto& r : results)
      if (r.contains("witness")) o.record["witness"] = r["witness"];
  o.summary = summary;
  return o;
}

}  // namespace detail

// ---- testing-curve demo -----------------------------------------------------------------

/// Order-one elements whose tangent directions cover the usual samples.
inline std::vector<std::string> default_catalog() {
  return {"Y", "X", "Y+X", "Y+2*X", "Y+3*X", "Y-X", "Y+X^2", "X+Y^2", "Y+2*X-X*Y", "Y+3*X+Y^2"};
}

struct TestingCurveRow {
  std::string delta;
  std::vector<unsigned> values;      ///< W_t(delta) for each sampled t
  std::string tau;                   ///< tangent direction of delta
  std::optional<unsigned> declared;  ///< W_tau(delta) when tau is not sampled
  bool exactly_one_two = false;
};

/// t as a string ("inf" for the X direction) -> optional rational.
inline std::optional<Rational> parse_direction(const std::string& s) {
  if (s == "inf") return std::nullopt;
  return parse_constant<Rational>(s);
}

inline std::vector<TestingCurveRow> demo_testing_curve(const std::vector<std::string>& ts,
                                                       const std::vector<std::string>& catalog = default_catalog()) {
  std::vector<std::optional<Rational>> samples;
  for (const auto& s : ts) samples.push_back(parse_direction(s));
  std::vector<TestingCurveRow> rows;
  for (const auto& d : catalog) {
    auto delta = parse_poly<Rational>(d, plane_vars());
    TestingCurveRow row;
    row.delta = d;
    // tangent direction: a X + b Y vanishes on Y = -t X at t = a / b
    const Rational a = delta.coeff(Monomial{1, 0}), b = delta.coeff(Monomial{0, 1});
    std::optional<Rational> tau;
    if (!b.is_zero()) tau = a / b;
    row.tau = tau ? tau->str() : "inf";
    unsigned twos = 0;
    bool sampled = false;
    for (const auto& t : samples) {
      unsigned v = testing_curve_values(delta, t);
      row.values.push_back(v);
      twos += v == 2;
      sampled = sampled || t == tau;
    }
    if (!sampled) {
      row.declared = testing_curve_values(delta, tau);
      twos += *row.declared == 2;
    }
    row.exactly_one_two = twos == 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string testing_curve_table(const std::vector<std::string>& ts, const std::vector<TestingCurveRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "delta";
  for (const auto& t : ts) out << std::setw(6) << ("t=" + t);
  out << "tau\n";
  for (const auto& r : rows) {
    out << std::setw(14) << r.delta;
    for (unsigned v : r.values) out << std::setw(6) << v;
    out << r.tau;
    if (r.declared) out << " (W_tau = " << *r.declared << ")";
    out << "\n";
  }
  return out.str();
}

namespace detail {

inline JobOutcome job_testing_curve(const json& job) {
  std::vector<std::string> ts = job.contains("ts") ? string_list(job, "ts") : std::vector<std::string>{"0", "1", "2", "3", "inf"};
  std::vector<std::string> catalog = job.contains("catalog") ? string_list(job, "catalog") : default_catalog();
  auto rows = demo_testing_curve(ts, catalog);
  JobOutcome o;
  json rs = json::array();
  std::string bad;
  for (const auto& r : rows) {
    json x{{"delta", r.delta}, {"values", r.values}, {"tau", r.tau}};
    if (r.declared) x["declared"] = *r.declared;
    rs.push_back(x);
    if (!r.exactly_one_two) bad = r.delta;
  }
  o.record = {{"claim", "(4.8)"}, {"ts", ts}, {"rows", rs}};
  if (!bad.empty()) {
    o.status = Status::fail;
    o.record["witness"] = "row " + bad + " does not have exactly one value 2";
  }
  o.summary = std::to_string(rows.size()) + " elements over t in {" + join(ts) + "}";
  return o;
}

}  // namespace detail

// ---- suites -----------------------------------------------------------------------------

/// Rationals plus g, -g, 1+g for each declared generator g.
inline std::vector<std::string> constant_pool(const FieldContext& ctx) {
  std::vector<std::string> pool = suite::rational_pool();
  if (ctx.kind() == FieldKind::number_field)
    for (const auto& lvl : ctx.descriptor().tower) {
      pool.push_back(lvl.name);
      pool.push_back("-" + lvl.name);
      pool.push_back("1+" + lvl.name);
    }
  return pool;
}

inline json suite_jobs(const std::string& kind, std::uint64_t seed, std::size_t count, const FieldContext& ctx) {
  if (count > 10000) throw SchemaError("suite count above 10000");
  json jobs = json::array();
  auto factors = [](const std::vector<suite::FactorText>& fs) {
    json a = json::array();
    for (const auto& f : fs) a.push_back({{"steps", f.steps}, {"n", f.n}});
    return a;
  };
  if (kind == "contact") {
    for (const auto& [V, W] : suite::contact_pairs(seed, count, constant_pool(ctx)))
      jobs.push_back({{"type", "contact"}, {"V", V}, {"W", W}, {"cross_check", true}});
  } else if (kind == "ideal") {
    for (const auto& p : suite::ideal_pairs(seed, count, constant_pool(ctx)))
      jobs.push_back({{"type", "theorem-check"}, {"check", "4.6.2"}, {"I", factors(p.I)}, {"Istar", factors(p.Istar)}});
  } else if (kind == "theorem") {
    for (const auto& q : suite::pencil_quadruples(seed, count))
      jobs.push_back({{"type", "theorem-check"}, {"check", json::array({"4.6.1", "4.6.3"})}, {"F", q.F}, {"G", q.G},
                      {"Fstar", q.Fstar}, {"Gstar", q.Gstar}});
  } else if (kind == "pencil") {
    for (const auto& q : suite::pencil_quadruples(seed, count)) jobs.push_back({{"type", "pencil-resolve"}, {"F", q.F}, {"G", q.G}});
  } else if (kind == "intersect") {
    for (const auto& [f, g] : suite::y_general_pairs(seed, count))
      jobs.push_back({{"type", "intersect"}, {"f", f}, {"g", g}, {"oracle", true}});
  } else if (kind == "hypersurface") {
    for (const auto& f : suite::hypersurface_families(seed, count))
      jobs.push_back({{"type", "hypersurface-verify"}, {"family", detail::family_json(f)}, {"p_max", 4}, {"degree_bound", 16}});
  } else {
    throw SchemaError("unknown suite kind \"" + kind + "\"");
  }
  return jobs;
}

inline json field_json_for_suite(const std::string& kind) {
  if (kind == "contact" || kind == "ideal")
    return json{{"kind", "number"}, {"tower", json::array({json{{"name", "alpha"}, {"minpoly", "alpha^2-2"}}})}};
  return "Q";
}

/// A complete scenario file for one generated suite.
inline json emit_suite(const std::string& kind, std::uint64_t seed, std::size_t count) {
  json field = field_json_for_suite(kind);
  FieldContext ctx = field_make(FieldDescriptor::rationals());
  if (field.is_object()) ctx = field_make(FieldDescriptor::number_field({{"alpha", "alpha^2-2"}}));
  return json{{"field", field}, {"seed", seed}, {"jobs", suite_jobs(kind, seed, count, ctx)}};
}

// ---- running ----------------------------------------------------------------------------

inline FieldContext parse_field(const json& sc) {
  if (!sc.contains("field")) return field_make(FieldDescriptor::rationals());
  const json& f = sc.at("field");
  if (f.is_string()) {
    if (f.get<std::string>() == "Q") return field_make(FieldDescriptor::rationals());
    throw SchemaError("unknown field \"" + f.get<std::string>() + "\"");
  }
  const std::string kind = detail::require_string(f, "kind");
  if (kind == "Q") return field_make(FieldDescriptor::rationals());
  if (kind != "number") throw SchemaError("field kind must be \"Q\" or \"number\"");
  const json& tower = detail::require(f, "tower");
  if (!tower.is_array()) throw SchemaError("field \"tower\" must be an array");
  std::vector<TowerLevel> levels;
  for (const auto& l : tower) levels.push_back({detail::require_string(l, "name"), detail::require_string(l, "minpoly")});
  return field_make(FieldDescriptor::number_field(levels, detail::get_bool(f, "assume_irreducible", false)));
}

struct RunOptions {
  unsigned jobs = 1;
  std::optional<std::uint64_t> seed;
  bool timing = false;
};

struct RunResult {
  json report;
  std::vector<JobOutcome> outcomes;
  int exit_code = 0;
};

namespace detail {

template <class K>
JobOutcome dispatch(const Env<K>& env, const json& job) {
  const std::string type = require_string(job, "type");
  if (type == "hypersurface-verify") return job_hypersurface_verify(env, job);
  if (type == "reduction-check") return job_reduction_check(env, job);
  if (type == "valuation-eval") return job_valuation_eval(env, job);
  if (type == "contact") return job_contact(env, job);
  if (type == "pencil-resolve") return job_pencil_resolve(env, job);
  if (type == "intersect") return job_intersect(env, job);
  if (type == "theorem-check") return job_theorem(env, job);
  if (type == "testing-curve-demo") return job_testing_curve(job);
  throw SchemaError("unknown job type \"" + type + "\"");
}

/// Runs one job; schema problems escape, library errors become fail or inconclusive records.
template <class K>
JobOutcome run_one(const Env<K>& env, const json& job, std::size_t index, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  JobOutcome o;
  std::optional<std::string> expected_error;
  if (job.contains("expect_error")) expected_error = require_string(job, "expect_error");
  try {
    o = dispatch(env, job);
    if (expected_error) {
      o.status = Status::fail;
      o.record["witness"] = "expected error " + *expected_error + " was not raised";
    }
  } catch (const error& e) {
    if (e.code() == errc::parse_error) throw SchemaError(e.what());
    o.record = {{"claim", job.value("type", std::string())}, {"error", std::string(errc_name(e.code()))}};
    if (expected_error && *expected_error == errc_name(e.code())) {
      o.status = Status::pass;
      o.summary = "raised " + *expected_error + " as expected";
    } else if (e.code() == errc::degree_bound_exceeded || e.code() == errc::truncation_cap) {
      o.status = Status::inconclusive;
      o.record["witness"] = e.what();
      o.summary = e.what();
    } else {
      o.status = Status::fail;
      o.record["witness"] = e.what();
      o.summary = e.what();
    }
  }
  json rec{{"job", index}, {"type", job.value("type", std::string())}};
  for (auto it = o.record.begin(); it != o.record.end(); ++it) rec[it.key()] = it.value();
  rec["status"] = status_name(o.status);
  if (timing)
    rec["ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  // keep the witness last so the table and the JSON read the same way
  if (rec.contains("witness")) {
    json w = rec["witness"];
    rec.erase("witness");
    rec["witness"] = w;
  }
  o.record = std::move(rec);
  return o;
}

template <class K>
std::vector<JobOutcome> run_all(const FieldContext& ctx, const json& jobs, unsigned threads, bool timing) {
  Env<K> env{ctx};
  std::vector<JobOutcome> out(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        out[i] = run_one(env, jobs[i], i, timing);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < std::max(1u, threads); ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const SchemaError& e) {
        throw SchemaError("job " + std::to_string(i) + " (" + jobs[i].value("type", std::string("?")) + "): " + e.what());
      } catch (const std::exception& e) {
        throw SchemaError("job " + std::to_string(i) + " (" + jobs[i].value("type", std::string("?")) + "): " + e.what());
      }
    }
  return out;
}

}  // namespace detail

/// Expands "suite" jobs with the scenario seed; other jobs pass through.
inline json expand_jobs(const json& sc, std::uint64_t seed, const FieldContext& ctx) {
  const json& jobs = detail::require(sc, "jobs");
  if (!jobs.is_array()) throw SchemaError("field \"jobs\" must be an array");
  json out = json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const json& j = jobs[i];
    if (!j.is_object()) throw SchemaError("job " + std::to_string(i) + " is not an object");
    if (j.value("type", std::string()) != "suite") {
      out.push_back(j);
      continue;
    }
    try {
      for (auto& g : suite_jobs(detail::require_string(j, "kind"), seed, detail::get_unsigned(j, "count"), ctx)) out.push_back(g);
    } catch (const SchemaError& e) {
      throw SchemaError("job " + std::to_string(i) + " (suite): " + e.what());
    }
  }
  return out;
}

inline RunResult run(const json& sc, const RunOptions& opt = {}) {
  if (!sc.is_object()) throw SchemaError("scenario must be a JSON object");
  FieldContext ctx = [&] {
    try {
      return parse_field(sc);
    } catch (const error& e) {
      throw SchemaError(std::string("field declaration: ") + e.what());
    }
  }();
  std::uint64_t seed = 0;
  if (sc.contains("seed")) {
    const json& v = sc.at("seed");
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      throw SchemaError("field \"seed\" must be a non-negative integer");
    seed = sc.at("seed").get<std::uint64_t>();
  }
  if (opt.seed) seed = *opt.seed;
  json jobs = expand_jobs(sc, seed, ctx);
  RunResult r;
  r.outcomes = ctx.kind() == FieldKind::number_field ? detail::run_all<Algebraic>(ctx, jobs, opt.jobs, opt.timing)
                                                     : detail::run_all<Rational>(ctx, jobs, opt.jobs, opt.timing);
  json recs = json::array();
  for (const auto& o : r.outcomes) {
    recs.push_back(o.record);
    if (o.status != Status::pass) r.exit_code = 1;
  }
  r.report = json{{"jobs", recs}, {"seed", seed}};
  return r;
}

inline std::string table(const RunResult& r) {
  std::ostringstream out;
  out << std::left << std::setw(5) << "#" << std::setw(21) << "type" << std::setw(18) << "claim" << std::setw(14) << "status"
      << "summary\n";
  std::size_t pass = 0;
  for (std::size_t i = 0; i < r.outcomes.size(); ++i) {
    const auto& o = r.outcomes[i];
    pass += o.status == Status::pass;
    out << std::setw(5) << i << std::setw(21) << o.record.value("type", std::string()) << std::setw(18)
        << o.record.value("claim", std::string()) << std::setw(14) << status_name(o.status) << o.summary << "\n";
    if (o.record.contains("witness")) out << "     witness: " << o.record["witness"].get<std::string>() << "\n";
  }
  out << pass << "/" << r.outcomes.size() << " jobs passed\n";
  return out.str();
}

}  // namespace rees::scenario
