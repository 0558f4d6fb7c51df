// Command-line front end: `verify` runs a sweep and writes a JSON report,
// `compute` prints a single multiplicity or polynomial.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "levibranch/characters.hpp"
#include "levibranch/errors.hpp"
#include "levibranch/harness.hpp"
#include "levibranch/hecke.hpp"
#include "levibranch/littelmann.hpp"
#include "levibranch/parabolic.hpp"

using namespace levibranch;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

std::vector<IndexSet> parse_levis(const std::string& text, int rank) {
  if (text == "all") return all_levi_subsets(rank);
  return {IndexSet::parse(text, rank)};
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw ConfigError("not an integer: '" + item + "'");
    }
  }
  return out;
}

struct VerifyArgs {
  std::string type = "A1", levi = "all", checks = "all", out, q_points = "2,3,4,5,7";
  int max_height = 2, jobs = 1, n_max = 3, semigroup_pairs = 100;
  std::uint64_t seed = 1;
  bool no_timings = false;
};

int run_verify(const VerifyArgs& a) {
  SweepConfig cfg;
  cfg.type = a.type;
  cfg.levis = parse_levis(a.levi, RootDatum::parse(a.type)->rank());
  cfg.max_height = a.max_height;
  cfg.checks = parse_checks(a.checks);
  cfg.q_eval_points = parse_int_list(a.q_points);
  cfg.jobs = a.jobs;
  cfg.output = a.out;
  cfg.n_max = a.n_max;
  cfg.semigroup_pairs = a.semigroup_pairs;
  cfg.seed = a.seed;
  cfg.normalize();

  const Report report = run_sweep(cfg);
  const std::string text = report.to_json(!a.no_timings).dump(2) + "\n";
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(a.out);
    if (!f) throw ConfigError("cannot write " + a.out);
    f << text;
  }
  std::cerr << cfg.type << ": " << report.records.size() << " records, " << report.count(Verdict::pass)
            << " passed, " << report.count(Verdict::fail) << " failed, " << report.count(Verdict::skipped)
            << " skipped\n";
  return report.ok() ? 0 : kExitFailure;
}

struct ComputeArgs {
  std::string what, type = "A1", levi = "", mu, lambda, nu = "auto", alpha, beta, gamma;
  bool json = false;
};

std::string render_q(const LaurentPoly& p) { return p.even_exponents_only() ? p.to_q_string() : p.to_string(); }

int run_compute(const ComputeArgs& a) {
  const auto rd = RootDatum::parse(a.type);
  const int n = rd->rank();
  auto need = [&](const std::string& value, const char* name) {
    if (value.empty()) throw ConfigError(std::string("--") + name + " is required");
    return parse_coweight(value, n);
  };
  const bool triple = !a.alpha.empty() || !a.beta.empty() || !a.gamma.empty();

  if (triple && (a.what == "n" || a.what == "m")) {
    const Coweight al = need(a.alpha, "alpha"), be = need(a.beta, "beta"), ga = need(a.gamma, "gamma");
    if (a.what == "n") {
      std::cout << tensor_mult_oracle(*rd, al, be, ga) << "\n";
    } else {
      const auto m = structure_constant(*rd, al, be, ga);
      std::cout << (a.json ? m.to_json().dump() : render_q(m)) << "\n";
    }
    return 0;
  }

  const ParabolicSpec P(rd, IndexSet::parse(a.levi, n));
  const Coweight mu = need(a.mu, "mu");
  const Coweight lam = need(a.lambda, "lambda");
  if (!rd->is_dominant(mu)) throw ConfigError("mu = " + mu.to_string() + " is not dominant");
  if (!P.is_M_dominant(lam)) throw ConfigError("lambda = " + lam.to_string() + " is not M-dominant");
  const Coweight nu = a.nu == "auto" ? minimal_nu(P, mu) : parse_coweight(a.nu, n);

  if (a.what == "r") {
    std::cout << branch_mult_oracle(P, mu, lam) << "\n";
  } else if (a.what == "n") {
    if (!rd->is_dominant(nu + lam)) throw ConfigError("nu + lambda is not dominant");
    std::cout << tensor_mult_oracle(*rd, nu, mu, nu + lam) << "\n";
  } else if (a.what == "m") {
    if (!geq_P(P, nu, mu)) throw ConfigError("nu = " + nu.to_string() + " does not satisfy nu >=^P mu");
    if (!rd->is_dominant(nu + lam)) throw ConfigError("nu + lambda is not dominant");
    const auto m = structure_constant(*rd, nu + lam, rd->dual_star(mu), nu);
    std::cout << (a.json ? m.to_json().dump() : render_q(m)) << "\n";
  } else if (a.what == "c") {
    const auto c = constant_term_coeff(P, mu, lam);
    std::cout << (a.json ? c.to_json().dump() : c.to_string()) << "\n";
  } else {
    throw ConfigError("unknown quantity '" + a.what + "' (expected r, n, m or c)");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branching, tensor and Hecke structure constants for split root data"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run an identity sweep and write a JSON report");
  verify->add_option("--type", va.type, "Cartan type, e.g. A2")->required();
  verify->add_option("--levi", va.levi, "Levi subset as 1-based indices, \"none\", or \"all\"");
  verify->add_option("--max-height", va.max_height, "bound on the coordinate sum of mu");
  verify->add_option("--checks", va.checks, "comma-separated checks or \"all\"");
  verify->add_option("--out", va.out, "report path (stdout when omitted)");
  verify->add_option("--jobs", va.jobs, "worker threads");
  verify->add_option("--n-max", va.n_max, "largest N in the saturation scan");
  verify->add_option("--semigroup-pairs", va.semigroup_pairs, "random pairs for the semigroup check");
  verify->add_option("--seed", va.seed, "random seed");
  verify->add_option("--q-points", va.q_points, "q values for nonnegativity spot checks");
  verify->add_flag("--no-timings", va.no_timings, "omit timing fields from the report");

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "print r, n, m or c for one instance");
  compute->add_option("what", ca.what, "r | n | m | c")->required();
  compute->add_option("--type", ca.type, "Cartan type, e.g. A2")->required();
  compute->add_option("--levi", ca.levi, "Levi subset as 1-based indices");
  compute->add_option("--mu", ca.mu, "dominant coweight, e.g. 1,0");
  compute->add_option("--lambda", ca.lambda, "M-dominant coweight");
  compute->add_option("--nu", ca.nu, "\"auto\" or explicit coordinates");
  compute->add_option("--alpha", ca.alpha, "first factor for n or m");
  compute->add_option("--beta", ca.beta, "second factor for n or m");
  compute->add_option("--gamma", ca.gamma, "target for n or m");
  compute->add_flag("--json", ca.json, "print polynomials as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*verify) return run_verify(va);
    return run_compute(ca);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
