/* Copyright 2026 The fqcert Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// fqcert command-line front end.
//
// Exit status: 0 success, 1 usage or I/O error, 2 a checked verdict failed.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "fqcert/census.hpp"
#include "fqcert/macaulay.hpp"
#include "fqcert/oracle_check.hpp"
#include "fqcert/report.hpp"
#include "fqcert/system.hpp"

namespace {

using namespace fqcert;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolated = 2;
constexpr const char* kOutDirEnv = "FQCERT_OUTPUT_DIR";

struct Options {
  unsigned n = 0;
  unsigned s = 0;
  std::string d;
  std::optional<std::uint64_t> q;
  std::string cert = "all";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t cap = kDefaultExhaustiveCap;
  std::uint64_t search_cap = kDefaultOracleInstanceCap;
  std::uint64_t b = 0;
  std::string field;
  std::string system;
  std::string out_dir;
  bool points = false;
  bool records = false;
  bool omit_runtime = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

DegreePattern pattern_from(const Options& o) {
  const auto d = parse_degree_list(o.d);
  if (d.size() != o.s) {
    throw UsageError("--s " + std::to_string(o.s) + " does not match the " + std::to_string(d.size()) + " degrees in --d");
  }
  return DegreePattern::make(o.n, d);
}

std::string guarantee(Certificate c) {
  switch (c) {
    case Certificate::stci:
      return "Z(f) is a set-theoretic complete intersection of pure dimension n-s; f is a regular sequence";
    case Certificate::ci:
      return "(f) is radical; Z(f) is an ideal-theoretic complete intersection of dimension n-s and degree delta";
    case Certificate::nons: return "Z(f) is a nonsingular complete intersection";
    case Certificate::irr: return "Z(f) is an absolutely irreducible complete intersection";
  }
  return "";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Prints the JSON and, with an output directory, stores it (and an optional CSV) there.
void emit(const Options& o, const std::string& name, Json j, const std::string& csv = "") {
  if (o.omit_runtime) j.erase("runtime_ms");
  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (o.out_dir.empty()) return;
  std::filesystem::create_directories(o.out_dir);
  const auto base = std::filesystem::path(o.out_dir) / name;
  std::ofstream(base.string() + ".json") << text;
  if (!csv.empty()) std::ofstream(base.string() + ".csv") << csv;
  if (!std::filesystem::exists(base.string() + ".json")) throw UsageError("cannot write to " + o.out_dir);
}

Json config_json(const std::string& sub, const Options& o) {
  Json c{{"subcommand", sub}};
  if (o.n) c["n"] = o.n;
  if (o.s) c["s"] = o.s;
  if (!o.d.empty()) c["d"] = o.d;
  if (o.q) c["q"] = *o.q;
  if (o.b) c["b"] = o.b;
  if (!o.field.empty()) c["field"] = o.field;
  if (!o.system.empty()) c["system"] = o.system;
  if (sub == "sample" || sub == "exhaustive" || sub == "test") c["cert"] = o.cert;
  if (sub == "sample" || sub == "oracle-check") {
    c["trials"] = o.trials;
    c["seed"] = o.seed;
  }
  if (sub == "sample" || sub == "exhaustive") {
    c["jobs"] = o.jobs;
    c["points"] = o.points;
    c["records"] = o.records;
  }
  if (sub == "exhaustive") c["cap"] = o.cap;
  if (sub == "oracle-check") c["search_cap"] = o.search_cap;
  return c;
}

int run_bounds(const Options& o) {
  const auto p = pattern_from(o);
  Json j = bounds_json(p, o.q, parse_certificate_list(o.cert));
  j["config"] = config_json("bounds", o);
  emit(o, "bounds", j);
  return kExitOk;
}

int run_test(const Options& o) {
  const auto file = parse_system_text(read_file(o.system));
  if (!o.field.empty() && !Field::parse(o.field)->same_as(*file.field)) {
    throw UsageError("--field " + o.field + " differs from the field " + file.field->spec() + " declared in " + o.system);
  }
  const auto sys = PolySystem::make(file.polys);
  Json results = Json::object();
  for (Certificate c : parse_certificate_list(o.cert)) {
    const auto v = projective_empty(build_test_system(sys, c));
    results[std::string(to_string(c))] =
        Json{{"pass", v.empty},
             {"guarantee", v.empty ? guarantee(c) : "inconclusive: a failed certificate implies nothing"},
             {"macaulay", Json{{"degree", v.degree}, {"rank", v.rank}, {"rows", v.rows}, {"cols", v.cols}}}};
  }
  Json j{{"schema", kSchemaVersion},
         {"config", config_json("test", o)},
         {"field", sys.field()->spec()},
         {"pattern", pattern_json(sys.pattern())},
         {"system", serialize_system(sys)},
         {"results", results}};
  emit(o, "test", j);
  return kExitOk;
}

int run_census_cmd(const Options& o, CensusMode mode) {
  if (!o.q) throw UsageError("--q is required");
  CensusConfig cfg;
  cfg.pattern = pattern_from(o);
  cfg.q = *o.q;
  cfg.certs = parse_certificate_list(o.cert);
  cfg.mode = mode;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.jobs = o.jobs;
  cfg.cap = o.cap;
  cfg.count_points = o.points;
  cfg.keep_records = o.records;
  const auto r = run_census(cfg);
  const std::string name = mode == CensusMode::monte_carlo ? "sample" : "exhaustive";
  Json j = census_json(r);
  j["config"] = config_json(name, o);
  emit(o, name, j, census_csv(r));
  return r.any_violated() ? kExitViolated : kExitOk;
}

int run_patterns(const Options& o) {
  const auto l = pattern_landscape(o.b, o.n, o.s);
  Json j = landscape_json(l);
  if (o.q) j["census_bounds"] = hypersurface_json(hypersurface_census_bounds(o.n, o.s, o.b, *o.q));
  j["config"] = config_json("patterns", o);
  emit(o, "patterns", j, landscape_csv(l));
  return l.dominance && l.g_margin ? kExitOk : kExitViolated;
}

int run_chow(const Options& o) {
  Json j = chow_json(pattern_from(o));
  j["config"] = config_json("chow", o);
  const bool ok = j["all_match"].get<bool>();
  emit(o, "chow", j);
  return ok ? kExitOk : kExitViolated;
}

int run_oracle(const Options& o) {
  const auto r = oracle_check(o.trials, o.seed, o.search_cap);
  Json j = oracle_json(r);
  j["config"] = config_json("oracle-check", o);
  emit(o, "oracle-check", j);
  return r.disagreements.empty() ? kExitOk : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates and bounds for homogeneous polynomial systems over finite fields"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv(kOutDirEnv)) o.out_dir = env;

  auto add_pattern = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "projective dimension")->required()->check(CLI::Range(2u, 64u));
    sub->add_option("--s", o.s, "number of forms")->required()->check(CLI::Range(1u, 63u));
    sub->add_option("--d", o.d, "degrees, nonincreasing, e.g. 2,2,1")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out-dir", o.out_dir, std::string("also write results here (default: $") + kOutDirEnv + ")");
    sub->add_flag("--omit-runtime", o.omit_runtime, "leave runtime_ms out so runs can be diffed");
  };
  auto add_census = [&](CLI::App* sub) {
    add_pattern(sub);
    sub->add_option("--q", o.q, "field size (prime power)")->required();
    sub->add_option("--cert", o.cert, "stci, ci, nons, irr, a comma list, or all");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_flag("--points", o.points, "count F_q-points of Z(f) and check them against delta*p_{n-s}");
    sub->add_flag("--records", o.records, "include one record per system");
    add_common(sub);
  };

  auto* bounds = app.add_subcommand("bounds", "closed-form degree and probability bounds");
  add_pattern(bounds);
  bounds->add_option("--q", o.q, "field size (prime power); enables probability bounds");
  bounds->add_option("--cert", o.cert, "stci, ci, nons, irr, a comma list, or all");
  add_common(bounds);

  auto* test = app.add_subcommand("test", "decide certificates for one system file");
  test->add_option("--field", o.field, "expected field, p or p^k");
  test->add_option("--system", o.system, "system file")->required();
  test->add_option("--cert", o.cert, "stci, ci, nons, irr, a comma list, or all");
  add_common(test);

  auto* sample = app.add_subcommand("sample", "Monte Carlo census");
  add_census(sample);
  sample->add_option("--trials", o.trials, "number of sampled systems")->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed, "master seed");

  auto* exhaustive = app.add_subcommand("exhaustive", "census over every system in P^D(F_q)");
  add_census(exhaustive);
  exhaustive->add_option("--cap", o.cap, "largest p_D to enumerate");

  auto* patterns = app.add_subcommand("patterns", "degree patterns with a given Bezout number");
  patterns->add_option("--b", o.b, "Bezout number")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
  patterns->add_option("--n", o.n, "projective dimension")->required()->check(CLI::Range(2u, 64u));
  patterns->add_option("--s", o.s, "number of forms")->required()->check(CLI::Range(1u, 63u));
  patterns->add_option("--q", o.q, "field size; adds the hypersurface census bounds");
  add_common(patterns);

  auto* chow = app.add_subcommand("chow", "Chow-class coefficients against the closed forms");
  add_pattern(chow);
  add_common(chow);

  auto* oracle = app.add_subcommand("oracle-check", "Macaulay emptiness test against brute-force point search");
  oracle->add_option("--trials", o.trials, "number of random instances")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", o.seed, "master seed");
  oracle->add_option("--search-cap", o.search_cap, "largest point search per instance");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bounds) return run_bounds(o);
    if (*test) return run_test(o);
    if (*sample) return run_census_cmd(o, CensusMode::monte_carlo);
    if (*exhaustive) return run_census_cmd(o, CensusMode::exhaustive);
    if (*patterns) return run_patterns(o);
    if (*chow) return run_chow(o);
    if (*oracle) return run_oracle(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
