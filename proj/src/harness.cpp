#include "levibranch/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "levibranch/characters.hpp"
#include "levibranch/errors.hpp"
#include "levibranch/hecke.hpp"
#include "levibranch/parabolic.hpp"

namespace levibranch {

namespace {

constexpr std::pair<Check, const char*> kCheckNames[] = {
    {Check::crystal, "crystal"},         {Check::main_i, "main_i"},
    {Check::main_ii, "main_ii"},         {Check::main_iii, "main_iii"},
    {Check::degrees, "degrees"},         {Check::semigroup, "semigroup"},
    {Check::saturation, "saturation"},   {Check::hecke_paths, "hecke_paths"},
    {Check::ct_transitivity, "ct_transitivity"},
};

std::set<Check> all_checks() {
  std::set<Check> s;
  for (const auto& [c, name] : kCheckNames) s.insert(c);
  return s;
}

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Runs `body`, turning exceptions into outcomes named `name`.
void guarded(Record& rec, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const ResourceLimit& e) {
    rec.skip(name, e.what());
  } catch (const std::exception& e) {
    rec.add(name, false, std::string("exception: ") + e.what());
  }
}

bool within_cap(const RootDatum& rd, const Coweight& mu, std::size_t cap) {
  return static_cast<std::uint64_t>(rd.weyl_dim(mu)) <= cap;
}

std::string poly_str(const LaurentPoly& p) { return p.to_string(); }

// The polynomial has exponents at most `top` and coefficient `lead` there.
bool degree_law(const LaurentPoly& p, int top, std::int64_t lead) {
  if (!p.is_zero() && p.degree() > top) return false;
  return p.coefficient(top) == lead;
}

std::vector<Record> run_parallel(std::vector<std::function<std::vector<Record>()>> tasks, int jobs) {
  std::vector<std::vector<Record>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < tasks.size();) results[k] = tasks[k]();
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<Record> out;
  for (auto& r : results)
    for (auto& rec : r) out.push_back(std::move(rec));
  return out;
}

Record run_instance(const SweepConfig& cfg, const std::shared_ptr<const RootDatum>& rd_ptr, const Instance& in) {
  const auto t0 = Clock::now();
  const RootDatum& rd = *rd_ptr;
  const ParabolicSpec P(rd_ptr, in.levi);
  const Coweight& mu = in.mu;
  const Coweight& lam = in.lambda;
  const Coweight mu_star = rd.dual_star(mu);

  Record rec;
  rec.kind = "instance";
  rec.inputs = {{"type", rd.name()}, {"levi", in.levi.to_string()}, {"mu", mu.to_string()},
                {"lambda", lam.to_string()}};
  nlohmann::json nus = nlohmann::json::array();
  for (const auto& nu : in.nus) nus.push_back(nu.to_string());
  rec.inputs["nu"] = nus;

  std::int64_t r = 0;
  guarded(rec, "r_oracle", [&] {
    r = branch_mult_oracle(P, mu, lam);
    rec.values["r"] = r;
  });

  if (cfg.wants(Check::crystal)) {
    guarded(rec, "lit_rest", [&] {
      const auto rp = count_branch_paths(P, mu, lam);
      rec.values["r_paths"] = rp;
      rec.add("lit_rest", rp == r, "paths " + std::to_string(rp) + " vs oracle " + std::to_string(r));
    });
    guarded(rec, "lit_tens", [&] {
      std::vector<std::int64_t> counts;
      bool ok = true;
      std::string detail;
      for (const auto& nu : in.nus) {
        const auto np = count_tensor_paths(rd, mu, nu, nu + lam);
        const auto no = tensor_mult_oracle(rd, nu, mu, nu + lam);
        counts.push_back(np);
        if (np != no) {
          ok = false;
          detail += "nu=" + nu.to_string() + ": paths " + std::to_string(np) + " vs oracle " + std::to_string(no) + "; ";
        }
      }
      rec.values["n_paths"] = counts;
      rec.add("lit_tens", ok, detail);
      rec.add("nu_independence", std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end());
    });
    guarded(rec, "nu_shift_bijection", [&] {
      const auto restricted = branch_paths(P, mu, lam);
      bool ok = true;
      for (const auto& nu : in.nus) ok &= tensor_paths(rd, mu, nu, nu + lam) == restricted;
      rec.add("nu_shift_bijection", ok);
    });
  }

  if (cfg.wants(Check::main_ii)) {
    guarded(rec, "main_ii", [&] {
      bool ok = true;
      std::string detail;
      for (const auto& nu : in.nus) {
        const auto n = tensor_mult_oracle(rd, nu + lam, mu_star, nu);
        if (n != r) {
          ok = false;
          detail += "nu=" + nu.to_string() + ": n=" + std::to_string(n) + " r=" + std::to_string(r) + "; ";
        }
      }
      rec.add("main_ii", ok, detail);
    });
  }

  const bool need_hecke = cfg.wants(Check::main_i) || cfg.wants(Check::main_iii) || cfg.wants(Check::degrees);
  if (!need_hecke) {
    rec.millis = millis_since(t0);
    return rec;
  }

  LaurentPoly c;
  bool have_c = false;
  guarded(rec, "constant_term", [&] {
    c = constant_term_coeff(P, mu, lam);
    rec.values["c"] = poly_str(c);
    have_c = true;
  });
  if (!have_c) {
    rec.millis = millis_since(t0);
    return rec;
  }

  if (cfg.wants(Check::main_i) || cfg.wants(Check::degrees)) {
    guarded(rec, "main_i", [&] {
      nlohmann::json ms = nlohmann::json::array();
      bool ok = true, even = true;
      std::string detail;
      for (const auto& nu : in.nus) {
        const auto sides = main_identity_sides(P, mu, lam, nu);
        ms.push_back(poly_str(sides.rhs));
        rec.values["orbit_size"] = poly_str(sides.orbit_size);
        even &= sides.lhs.even_exponents_only() && sides.rhs.even_exponents_only();
        if (!sides.holds()) {
          ok = false;
          detail += "nu=" + nu.to_string() + ": lhs " + poly_str(sides.lhs) + " rhs " + poly_str(sides.rhs) + "; ";
        }
      }
      rec.values["m"] = ms;
      if (cfg.wants(Check::main_i)) {
        rec.add("main_i", ok, detail);
        rec.add("integrality", even, even ? "" : "odd power of v");
      }
    });
  }

  if (cfg.wants(Check::main_iii)) {
    rec.add("r_nonzero_implies_c_nonzero", r == 0 || !c.is_zero());
    if (!c.is_zero()) {
      const int k = rd.k_phi();
      if (!within_cap(rd, k * mu, cfg.crystal_cap)) {
        rec.skip("c_nonzero_implies_r_k_nonzero", "k*mu above the feasibility cap");
      } else {
        guarded(rec, "c_nonzero_implies_r_k_nonzero", [&] {
          const auto rk = branch_mult_oracle(P, k * mu, k * lam);
          rec.values["r_k"] = rk;
          rec.add("c_nonzero_implies_r_k_nonzero", rk != 0, "k=" + std::to_string(k));
        });
      }
    }
  }

  if (cfg.wants(Check::degrees)) {
    guarded(rec, "degree_m", [&] {
      bool ok = true, values_ok = true, coeffs_nonneg = true;
      std::string detail;
      for (const auto& nu : in.nus) {
        const auto m = structure_constant(rd, nu + lam, mu_star, nu);
        const auto n = tensor_mult_oracle(rd, nu + lam, mu_star, nu);
        const int top = rd.two_rho(lam + mu_star);
        if (!degree_law(m, top, n)) {
          ok = false;
          detail += "nu=" + nu.to_string() + ": m=" + poly_str(m) + " n=" + std::to_string(n) + "; ";
        }
        coeffs_nonneg &= m.all_coefficients_nonnegative();
        for (auto q : cfg.q_eval_points) {
          const BigRational x = m.evaluate_at_q(q);
          values_ok &= denominator(x) == 1 && x >= 0;
        }
      }
      rec.add("degree_m", ok, detail);
      rec.add("m_nonnegative_values", values_ok);
      rec.values["m_coefficients_nonnegative"] = coeffs_nonneg;
    });
    guarded(rec, "degree_c", [&] {
      const auto scaled = c.shifted(P.two_rho_N(lam));
      const int top = rd.two_rho(mu + lam) - 2 * P.two_rho_M(lam);
      rec.add("degree_c", degree_law(scaled, top, r), "q^<rho_N,lambda> c = " + poly_str(scaled));
      bool values_ok = scaled.even_exponents_only();
      if (values_ok)
        for (auto q : cfg.q_eval_points) {
          const BigRational x = scaled.evaluate_at_q(q);
          values_ok &= denominator(x) == 1 && x >= 0;
        }
      rec.add("c_count_nonnegative_values", values_ok);
    });
  }

  rec.millis = millis_since(t0);
  return rec;
}

Record run_shape(const SweepConfig& cfg, const std::shared_ptr<const RootDatum>& rd_ptr, const Coweight& mu) {
  const auto t0 = Clock::now();
  const RootDatum& rd = *rd_ptr;
  Record rec;
  rec.kind = "shape";
  rec.inputs = {{"type", rd.name()}, {"mu", mu.to_string()}};

  if (cfg.wants(Check::crystal) || cfg.wants(Check::hecke_paths)) {
    guarded(rec, "crystal", [&] {
      const auto crystal = generate_crystal(rd, mu, cfg.crystal_cap);
      rec.values["paths"] = crystal->paths.size();
      if (cfg.wants(Check::crystal)) {
        rec.add("crystal_size", static_cast<std::int64_t>(crystal->paths.size()) == rd.weyl_dim(mu));
        rec.add("crystal_histogram", endpoint_histogram(*crystal) == freudenthal(rd, mu)->entries);
        bool axioms = true, hull = true;
        for (const auto& p : crystal->paths) {
          for (int i = 0; i < rd.rank(); ++i) {
            if (auto g = f_op(rd, i, p)) axioms &= e_op(rd, i, *g) == p;
            if (auto g = e_op(rd, i, p)) axioms &= f_op(rd, i, *g) == p;
          }
          for (const auto& x : p.breakpoints()) hull &= in_weyl_hull(rd, x, mu);
        }
        rec.add("crystal_axioms", axioms);
        rec.add("crystal_in_hull", hull);
      }
      if (cfg.wants(Check::hecke_paths)) {
        bool ok = true;
        for (const auto& p : crystal->paths) ok &= is_hecke_path(rd, p);
        rec.add("hecke_paths", ok);
      }
    });
  }

  if (cfg.wants(Check::ct_transitivity)) {
    guarded(rec, "ct_transitivity", [&] {
      const IndexSet full = IndexSet::full(rd.rank());
      const auto direct = expand_in_satake_basis(rd, *satake_f(rd, mu, full), IndexSet());
      bool ok = true;
      std::string detail;
      for (IndexSet levi : cfg.levis) {
        const ParabolicSpec P(rd_ptr, levi);
        InvariantElement via{IndexSet(), {}};
        for (const auto& [lam, c] : *constant_term(P, mu)) {
          InvariantElement t{IndexSet(), expand_in_satake_basis(rd, *satake_f(rd, lam, levi), IndexSet())};
          via.add_scaled(c, t);
        }
        if (via.terms != direct) {
          ok = false;
          detail += "levi {" + levi.to_string() + "}; ";
        }
      }
      rec.add("ct_transitivity", ok, detail);
    });
  }
  rec.millis = millis_since(t0);
  return rec;
}

std::vector<Record> scan_shape(const SweepConfig& cfg, const std::shared_ptr<const RootDatum>& rd_ptr, IndexSet levi,
                               const Coweight& mu) {
  const RootDatum& rd = *rd_ptr;
  const ParabolicSpec P(rd_ptr, levi);
  const int k = rd.k_phi();
  const bool improved = rd.type() == CartanType::B || rd.type() == CartanType::C || rd.type() == CartanType::G;
  std::vector<Record> out;
  const auto table = branching(P, mu);
  for (const auto& lam : weights_of(rd, mu)) {
    if (!P.is_M_dominant(lam) || table->count(lam)) continue;
    const auto t0 = Clock::now();
    Record rec;
    rec.kind = "saturation";
    rec.inputs = {{"type", rd.name()}, {"levi", levi.to_string()}, {"mu", mu.to_string()}, {"lambda", lam.to_string()}};
    int hit = 0;
    std::vector<int> skipped;
    for (int N = 2; N <= cfg.n_max && hit == 0; ++N) {
      if (!within_cap(rd, N * mu, cfg.crystal_cap)) {
        skipped.push_back(N);
        continue;
      }
      if (branch_mult_oracle(P, N * mu, N * lam) != 0) hit = N;
    }
    rec.values["r"] = 0;
    rec.values["first_N_with_r_nonzero"] = hit == 0 ? nlohmann::json(nullptr) : nlohmann::json(hit);
    if (!skipped.empty()) rec.values["N_skipped"] = skipped;
    // k_Phi = 1: no (mu, lambda) outside the support may enter it after scaling
    if (rd.type() == CartanType::A)
      rec.add("type_a_saturation", hit == 0, "r_{N mu}(N lambda) != 0 for N=" + std::to_string(hit));
    if (hit != 0) {
      if (within_cap(rd, k * mu, cfg.crystal_cap))
        guarded(rec, "uniform_saturation_c", [&] {
          rec.add("uniform_saturation_c", !constant_term_coeff(P, k * mu, k * lam).is_zero(),
                  "k=" + std::to_string(k));
        });
      else
        rec.skip("uniform_saturation_c", "k*mu above the feasibility cap");
      if (within_cap(rd, k * k * mu, cfg.crystal_cap))
        guarded(rec, "uniform_saturation_r", [&] {
          rec.add("uniform_saturation_r", branch_mult_oracle(P, k * k * mu, k * k * lam) != 0,
                  "k^2=" + std::to_string(k * k));
        });
      else
        rec.skip("uniform_saturation_r", "k^2*mu above the feasibility cap");
      if (improved) {
        Record imp;
        imp.kind = "improved_constant";
        imp.inputs = rec.inputs;
        imp.inputs["k"] = 2;
        try {
          imp.values["c_2mu_2lambda_nonzero"] = !constant_term_coeff(P, 2 * mu, 2 * lam).is_zero();
          imp.values["r_2mu_2lambda_nonzero"] = branch_mult_oracle(P, 2 * mu, 2 * lam) != 0;
        } catch (const std::exception& e) {
          imp.values["error"] = e.what();
        }
        rec.millis = millis_since(t0);
        out.push_back(std::move(rec));
        out.push_back(std::move(imp));
        continue;
      }
    }
    rec.millis = millis_since(t0);
    out.push_back(std::move(rec));
  }
  return out;
}

Record semigroup_check(const SweepConfig& cfg, const std::shared_ptr<const RootDatum>& rd_ptr, IndexSet levi) {
  const auto t0 = Clock::now();
  const RootDatum& rd = *rd_ptr;
  const ParabolicSpec P(rd_ptr, levi);
  Record rec;
  rec.kind = "semigroup";
  rec.inputs = {{"type", rd.name()}, {"levi", levi.to_string()}, {"seed", cfg.seed}};
  std::vector<std::pair<Coweight, Coweight>> support;
  for (const auto& mu : dominant_coweights(rd, cfg.max_height))
    for (const auto& [lam, r] : *branching(P, mu)) support.emplace_back(mu, lam);
  std::mt19937_64 rng(cfg.seed * 1000003u + levi.bits());
  std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
  int tested = 0, skipped = 0;
  std::string failures;
  for (int s = 0; s < cfg.semigroup_pairs; ++s) {
    const auto& [mu1, lam1] = support[pick(rng)];
    const auto& [mu2, lam2] = support[pick(rng)];
    if (!within_cap(rd, mu1 + mu2, cfg.crystal_cap)) {
      ++skipped;
      continue;
    }
    ++tested;
    if (branch_mult_oracle(P, mu1 + mu2, lam1 + lam2) == 0)
      failures += "(" + mu1.to_string() + "|" + lam1.to_string() + ")+(" + mu2.to_string() + "|" + lam2.to_string() + "); ";
  }
  rec.values["pairs_tested"] = tested;
  rec.values["pairs_skipped"] = skipped;
  rec.add("semigroup", failures.empty(), failures);
  if (skipped > 0) rec.skip("semigroup_cap", std::to_string(skipped) + " pairs above the feasibility cap");
  rec.millis = millis_since(t0);
  return rec;
}

}  // namespace

std::string to_string(Check c) {
  for (const auto& [k, name] : kCheckNames)
    if (k == c) return name;
  return "?";
}

std::set<Check> parse_checks(const std::string& text) {
  std::set<Check> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      auto a = all_checks();
      out.insert(a.begin(), a.end());
      continue;
    }
    bool found = false;
    for (const auto& [c, name] : kCheckNames)
      if (item == name) {
        out.insert(c);
        found = true;
      }
    if (!found) throw ConfigError("unknown check '" + item + "'");
  }
  if (out.empty()) throw ConfigError("no checks selected");
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

void SweepConfig::normalize() {
  const auto rd = RootDatum::parse(type);
  type = rd->name();
  if (levis.empty()) levis = all_levi_subsets(rd->rank());
  for (IndexSet s : levis)
    if (!s.is_subset_of(IndexSet::full(rd->rank())))
      throw ConfigError("Levi subset {" + s.to_string() + "} exceeds rank " + std::to_string(rd->rank()));
  if (max_height < 0) throw ConfigError("max_height must be nonnegative");
  if (checks.empty()) checks = all_checks();
  if (jobs < 1) throw ConfigError("jobs must be positive");
  if (n_max < 2) throw ConfigError("n_max must be at least 2");
  for (auto q : q_eval_points)
    if (q < 2) throw ConfigError("q evaluation points must be at least 2");
}

nlohmann::json SweepConfig::to_json() const {
  nlohmann::json levi_list = nlohmann::json::array();
  for (IndexSet s : levis) levi_list.push_back(s.to_string());
  nlohmann::json check_list = nlohmann::json::array();
  for (Check c : checks) check_list.push_back(to_string(c));
  return {{"type", type},       {"levis", levi_list},       {"max_height", max_height},
          {"checks", check_list}, {"q_eval_points", q_eval_points}, {"n_max", n_max},
          {"semigroup_pairs", semigroup_pairs}, {"seed", seed}, {"crystal_cap", crystal_cap}};
}

void Record::add(std::string name, bool ok, std::string detail) {
  outcomes.push_back({std::move(name), ok ? Verdict::pass : Verdict::fail, ok ? std::string() : std::move(detail)});
}

void Record::skip(std::string name, std::string reason) {
  outcomes.push_back({std::move(name), Verdict::skipped, std::move(reason)});
}

std::size_t Report::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& r : records)
    for (const auto& o : r.outcomes) n += o.verdict == v;
  return n;
}

nlohmann::json Report::to_json(bool include_timings) const {
  nlohmann::json records_json = nlohmann::json::array();
  nlohmann::json counterexamples = nlohmann::json::array();
  nlohmann::json skipped = nlohmann::json::array();
  std::size_t instances = 0, negative_coeff = 0;
  for (const auto& r : records) {
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& o : r.outcomes) {
      nlohmann::json entry = {{"verdict", to_string(o.verdict)}};
      if (!o.detail.empty()) entry["detail"] = o.detail;
      checks[o.name] = entry;
      if (o.verdict == Verdict::fail)
        counterexamples.push_back({{"kind", r.kind}, {"inputs", r.inputs}, {"check", o.name}, {"detail", o.detail}});
      if (o.verdict == Verdict::skipped)
        skipped.push_back({{"kind", r.kind}, {"inputs", r.inputs}, {"check", o.name}, {"reason", o.detail}});
    }
    nlohmann::json j = {{"kind", r.kind}, {"inputs", r.inputs}, {"values", r.values}, {"checks", checks}};
    if (include_timings) j["timing_ms"] = r.millis;
    records_json.push_back(std::move(j));
    instances += r.kind == "instance";
    if (r.values.contains("m_coefficients_nonnegative") && !r.values["m_coefficients_nonnegative"].get<bool>())
      ++negative_coeff;
  }
  nlohmann::json summary = {{"records", records.size()},
                            {"instances", instances},
                            {"passed", count(Verdict::pass)},
                            {"failed", count(Verdict::fail)},
                            {"skipped", count(Verdict::skipped)},
                            {"counterexamples", counterexamples},
                            {"skipped_checks", skipped},
                            {"observations", {{"instances_with_negative_m_coefficients", negative_coeff}}}};
  return {{"schema", 1}, {"config", config.to_json()}, {"summary", summary}, {"records", records_json}};
}

std::vector<Coweight> dominant_coweights(const RootDatum& rd, int max_height) {
  std::vector<Coweight> out;
  Coweight c(rd.rank());
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rd.rank()) {
      out.push_back(c);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      c[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, max_height);
  std::stable_sort(out.begin(), out.end(), [](const Coweight& a, const Coweight& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a < b;
  });
  return out;
}

std::vector<Instance> enumerate_instances(const SweepConfig& config) {
  SweepConfig cfg = config;
  cfg.normalize();
  const auto rd = RootDatum::parse(cfg.type);
  std::vector<Instance> out;
  for (IndexSet levi : cfg.levis) {
    const ParabolicSpec P(rd, levi);
    Coweight bump = rd->zero();
    for (int i = 0; i < rd->rank(); ++i)
      if (!levi.contains(i)) bump[i] = 1;
    for (const auto& mu : dominant_coweights(*rd, cfg.max_height)) {
      const Coweight nu = minimal_nu(P, mu);
      std::vector<Coweight> nus{nu};
      if (!bump.is_zero()) nus.push_back(nu + bump);
      for (const auto& lam : weights_of(*rd, mu))
        if (P.is_M_dominant(lam)) out.push_back({levi, mu, lam, nus});
    }
  }
  return out;
}

std::vector<Record> saturation_scan(const SweepConfig& config) {
  SweepConfig cfg = config;
  cfg.normalize();
  const auto rd = RootDatum::parse(cfg.type);
  std::vector<std::function<std::vector<Record>()>> tasks;
  if (cfg.wants(Check::saturation))
    for (IndexSet levi : cfg.levis)
      for (const auto& mu : dominant_coweights(*rd, cfg.max_height))
        tasks.emplace_back([&cfg, rd, levi, mu] { return scan_shape(cfg, rd, levi, mu); });
  if (cfg.wants(Check::semigroup))
    for (IndexSet levi : cfg.levis)
      tasks.emplace_back([&cfg, rd, levi] { return std::vector<Record>{semigroup_check(cfg, rd, levi)}; });
  return run_parallel(std::move(tasks), cfg.jobs);
}

Report run_sweep(SweepConfig config) {
  config.normalize();
  const auto rd = RootDatum::parse(config.type);
  Report report;
  report.config = config;

  std::vector<std::function<std::vector<Record>()>> tasks;
  const bool shape_checks =
      config.wants(Check::crystal) || config.wants(Check::hecke_paths) || config.wants(Check::ct_transitivity);
  if (shape_checks)
    for (const auto& mu : dominant_coweights(*rd, config.max_height))
      tasks.emplace_back([&config, rd, mu] { return std::vector<Record>{run_shape(config, rd, mu)}; });
  const bool instance_checks = config.wants(Check::crystal) || config.wants(Check::main_i) ||
                               config.wants(Check::main_ii) || config.wants(Check::main_iii) ||
                               config.wants(Check::degrees);
  if (instance_checks)
    for (const auto& in : enumerate_instances(config))
      tasks.emplace_back([&config, rd, in] { return std::vector<Record>{run_instance(config, rd, in)}; });
  report.records = run_parallel(std::move(tasks), config.jobs);

  if (config.wants(Check::saturation) || config.wants(Check::semigroup))
    for (auto& r : saturation_scan(config)) report.records.push_back(std::move(r));
  return report;
}

}  // namespace levibranch
