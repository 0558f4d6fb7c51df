#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "levibranch/lattice.hpp"
#include "levibranch/littelmann.hpp"
#include "levibranch/rootdata.hpp"

namespace levibranch {

enum class Check { crystal, main_i, main_ii, main_iii, degrees, semigroup, saturation, hecke_paths, ct_transitivity };

std::string to_string(Check c);
// "all" or a comma-separated list of check names. Throws ConfigError.
std::set<Check> parse_checks(const std::string& text);

struct SweepConfig {
  std::string type = "A1";
  std::vector<IndexSet> levis;      // empty means every Levi subset
  int max_height = 2;               // bound on the coordinate sum of mu
  std::set<Check> checks;           // empty means all
  std::vector<std::int64_t> q_eval_points{2, 3, 4, 5, 7};
  int jobs = 1;
  std::string output;
  int n_max = 3;                    // saturation scan: N in 2..n_max
  int semigroup_pairs = 100;
  std::uint64_t seed = 1;
  std::size_t crystal_cap = kDefaultCrystalCap;

  // Fills defaults and validates; throws ConfigError.
  void normalize();
  bool wants(Check c) const { return checks.count(c) != 0; }
  nlohmann::json to_json() const;
};

struct Instance {
  IndexSet levi;
  Coweight mu, lambda;
  std::vector<Coweight> nus;  // minimal_nu first, then a larger valid one
};

// Dominant coweights with coordinate sum at most max_height, ordered by
// height and then lexicographically.
std::vector<Coweight> dominant_coweights(const RootDatum& rd, int max_height);

std::vector<Instance> enumerate_instances(const SweepConfig& config);

enum class Verdict { pass, fail, skipped };
std::string to_string(Verdict v);

struct CheckOutcome {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::string detail;
};

struct Record {
  std::string kind;  // "instance", "shape", "saturation", "semigroup", "improved_constant"
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json values = nlohmann::json::object();
  std::vector<CheckOutcome> outcomes;
  double millis = 0;

  void add(std::string name, bool ok, std::string detail = {});
  void skip(std::string name, std::string reason);
};

struct Report {
  SweepConfig config;
  std::vector<Record> records;

  std::size_t count(Verdict v) const;
  bool ok() const { return count(Verdict::fail) == 0; }
  // Schema version 1. Timing fields are omitted when include_timings is
  // false, which makes reports of equal configurations byte-identical.
  nlohmann::json to_json(bool include_timings = true) const;
};

Report run_sweep(SweepConfig config);

// Saturation and semigroup experiments; appended to the sweep report when
// those checks are requested.
std::vector<Record> saturation_scan(const SweepConfig& config);

}  // namespace levibranch
