// rees: batch front end for the library.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rees/scenario.hpp"

namespace sc = rees::scenario;

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_run(const std::string& path, unsigned jobs, std::optional<std::uint64_t> seed, const std::string& report_path,
            bool timing, bool json_out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 2;
  }
  sc::json scenario;
  try {
    scenario = sc::json::parse(in);
  } catch (const sc::json::parse_error& e) {
    std::cerr << "error: " << path << " is not valid JSON: " << e.what() << "\n";
    return 2;
  }
  sc::RunResult r;
  try {
    r = sc::run(scenario, {jobs, seed, timing});
  } catch (const sc::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const rees::error& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  }
  const std::string text = r.report.dump(2) + "\n";
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << report_path << "\n";
      return 2;
    }
    out << text;
  }
  std::cout << (json_out ? text : sc::table(r));
  return r.exit_code;
}

int cmd_demo(const std::string& ts_text, const std::string& catalog_text) {
  auto ts = split_list(ts_text);
  auto catalog = catalog_text.empty() ? sc::default_catalog() : split_list(catalog_text);
  std::vector<sc::TestingCurveRow> rows;
  try {
    rows = sc::demo_testing_curve(ts, catalog);
  } catch (const rees::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << sc::testing_curve_table(ts, rows);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.exactly_one_two;
  return ok ? 0 : 1;
}

int cmd_emit(const std::string& kind, std::uint64_t seed, std::size_t count, const std::string& out_path) {
  sc::json s;
  try {
    s = sc::emit_suite(kind, seed, count);
  } catch (const sc::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const std::string text = s.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream(out_path, std::ios::binary) << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dicritical divisors, contact numbers and intersection multiplicities"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a scenario file");
  std::string path, report_path;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  bool timing = false, json_out = false;
  run->add_option("scenario", path, "scenario JSON")->required();
  run->add_option("--jobs,-j", jobs, "parallel jobs")->check(CLI::PositiveNumber);
  auto* seed_opt = run->add_option("--seed", seed, "overrides the scenario seed");
  run->add_option("--report", report_path, "write the JSON report here");
  run->add_flag("--timing", timing, "record milliseconds per job");
  run->add_flag("--json", json_out, "print the report instead of the table");

  auto* demo = app.add_subcommand("demo", "Demonstrations");
  demo->require_subcommand(1);
  auto* tc = demo->add_subcommand("testing-curve", "W_t(delta) for sampled directions t");
  std::string ts = "0,1,2,3,inf", catalog;
  tc->add_option("--ts", ts, "comma-separated directions, inf for the X axis");
  tc->add_option("--catalog", catalog, "comma-separated elements of order one");

  auto* emit = app.add_subcommand("emit-suite", "Write a generated scenario");
  std::string kind;
  std::uint64_t emit_seed = 7;
  std::size_t count = 100;
  std::string out_path;
  emit->add_option("--kind", kind, "contact, ideal, theorem, pencil, intersect or hypersurface")->required();
  emit->add_option("--seed", emit_seed);
  emit->add_option("--count", count)->check(CLI::Range(std::size_t{0}, std::size_t{10000}));
  emit->add_option("-o,--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run) {
    std::optional<std::uint64_t> s;
    if (*seed_opt) s = seed;
    return cmd_run(path, jobs, s, report_path, timing, json_out);
  }
  if (*tc) return cmd_demo(ts, catalog);
  if (*emit) return cmd_emit(kind, emit_seed, count, out_path);
  return 2;
}
