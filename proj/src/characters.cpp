#include "levibranch/characters.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <tuple>

#include "levibranch/errors.hpp"

namespace levibranch {

std::int64_t WeightMultiplicityTable::dimension() const {
  std::int64_t d = 0;
  for (const auto& [w, m] : entries) d += m;
  return d;
}

std::int64_t WeightMultiplicityTable::multiplicity(const Coweight& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

namespace {

// W-invariant form sum_{alpha > 0} <alpha,x><alpha,y> on coweights.
std::int64_t form(const RootDatum& rd, const Coweight& x, const Coweight& y) {
  std::int64_t s = 0;
  for (const auto& a : rd.positive_roots())
    s += static_cast<std::int64_t>(rd.pairing(a, x)) * rd.pairing(a, y);
  return s;
}

Coweight all_ones(int rank) {
  Coweight v(rank);
  for (int i = 0; i < rank; ++i) v[i] = 1;
  return v;
}

std::vector<Coweight> subsystem_coroots(const RootDatum& rd, IndexSet subset) {
  std::vector<Coweight> out;
  const auto& roots = rd.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    bool inside = true;
    for (int i = 0; i < rd.rank(); ++i)
      if (roots[k][i] != 0 && !subset.contains(i)) inside = false;
    if (inside) out.push_back(rd.positive_coroots()[k]);
  }
  return out;
}

using TableKey = std::tuple<std::string, std::uint32_t, Coweight>;

struct TableCache {
  std::shared_mutex mu;
  std::map<TableKey, std::shared_ptr<const WeightMultiplicityTable>> tables;
};

TableCache& table_cache() {
  static TableCache c;
  return c;
}

std::shared_ptr<const WeightMultiplicityTable> compute_table(const RootDatum& rd, const Coweight& mu,
                                                             IndexSet subset) {
  const auto roots = subsystem_coroots(rd, subset);
  const Coweight rho = all_ones(rd.rank());

  // Dominant weights below mu, found by subtracting positive roots while
  // staying dominant.
  std::vector<Coweight> dominant{mu};
  std::set<Coweight> seen{mu};
  for (std::size_t k = 0; k < dominant.size(); ++k)
    for (const auto& b : roots) {
      Coweight w = dominant[k] - b;
      if (rd.is_dominant(w, subset) && seen.insert(w).second) dominant.push_back(w);
    }
  auto depth = [&](const Coweight& w) {
    Rational s = 0;
    for (const auto& k : rd.coroot_coords(mu - w)) s += k;
    return s;
  };
  std::stable_sort(dominant.begin(), dominant.end(),
                   [&](const Coweight& a, const Coweight& b) { return depth(a) < depth(b); });

  std::map<Coweight, std::int64_t> dom_mult;
  auto mult = [&](const Coweight& w) -> std::int64_t {
    auto it = dom_mult.find(rd.dominant_rep(w, subset).dominant);
    return it == dom_mult.end() ? 0 : it->second;
  };
  const std::int64_t top = form(rd, mu + rho, mu + rho);
  for (const auto& lam : dominant) {
    if (lam == mu) {
      dom_mult[lam] = 1;
      continue;
    }
    std::int64_t num = 0;
    for (const auto& b : roots)
      for (int k = 1;; ++k) {
        Coweight w = lam + k * b;
        std::int64_t m = mult(w);
        if (m == 0) break;
        num += m * form(rd, w, b);
      }
    num *= 2;
    const std::int64_t den = top - form(rd, lam + rho, lam + rho);
    if (den <= 0 || num % den != 0)
      throw InternalError("Freudenthal recursion produced a non-integral multiplicity at " + lam.to_string());
    dom_mult[lam] = num / den;
  }

  auto table = std::make_shared<WeightMultiplicityTable>();
  table->highest_weight = mu;
  table->subset = subset;
  for (const auto& [lam, m] : dom_mult) {
    if (m == 0) continue;
    for (const auto& w : rd.weyl_orbit(lam, subset)) table->entries[w] = m;
  }
  return table;
}

// Integer-valued key that strictly increases along every simple coroot of
// the subsystem.
std::int64_t peel_key(const RootDatum& rd, const Coweight& w) { return form(rd, w, all_ones(rd.rank())); }

}  // namespace

std::shared_ptr<const WeightMultiplicityTable> freudenthal(const RootDatum& rd, const Coweight& mu,
                                                           IndexSet subset) {
  if (mu.rank() != rd.rank()) throw DomainError("freudenthal: rank mismatch");
  if (!rd.is_dominant(mu, subset))
    throw DomainError("freudenthal: " + mu.to_string() + " is not dominant");
  TableKey key{rd.name(), subset.bits(), mu};
  auto& cache = table_cache();
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.tables.find(key);
    if (it != cache.tables.end()) return it->second;
  }
  auto table = compute_table(rd, mu, subset);
  std::unique_lock lock(cache.mu);
  return cache.tables.emplace(key, table).first->second;
}

std::shared_ptr<const WeightMultiplicityTable> freudenthal(const RootDatum& rd, const Coweight& mu) {
  return freudenthal(rd, mu, IndexSet::full(rd.rank()));
}

std::vector<Coweight> weights_of(const RootDatum& rd, const Coweight& mu) {
  std::vector<Coweight> out;
  for (const auto& [w, m] : freudenthal(rd, mu)->entries) out.push_back(w);
  return out;
}

Character decompose_character(const RootDatum& rd, Character chi, IndexSet subset) {
  Character out;
  std::erase_if(chi, [](const auto& kv) { return kv.second == 0; });
  while (!chi.empty()) {
    auto best = chi.begin();
    std::int64_t best_key = peel_key(rd, best->first);
    for (auto it = std::next(chi.begin()); it != chi.end(); ++it) {
      std::int64_t k = peel_key(rd, it->first);
      if (k > best_key || (k == best_key && best->first < it->first)) {
        best = it;
        best_key = k;
      }
    }
    const Coweight top = best->first;
    const std::int64_t c = best->second;
    if (!rd.is_dominant(top, subset) || c < 0)
      throw InternalError("decompose_character: character is not a sum of irreducibles (stuck at " +
                          top.to_string() + ")");
    out[top] += c;
    for (const auto& [w, m] : freudenthal(rd, top, subset)->entries) {
      auto& slot = chi[w];
      slot -= c * m;
      if (slot == 0) chi.erase(w);
    }
  }
  return out;
}

Character multiply_characters(const Character& a, const Character& b) {
  Character out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) out[wa + wb] += ma * mb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Character tensor_decomposition(const RootDatum& rd, const Coweight& alpha, const Coweight& beta) {
  if (!rd.is_dominant(alpha) || !rd.is_dominant(beta))
    throw DomainError("tensor_decomposition: arguments must be dominant");
  const Coweight rho = all_ones(rd.rank());
  const IndexSet full = IndexSet::full(rd.rank());
  Character out;
  for (const auto& [w, m] : freudenthal(rd, beta)->entries) {
    auto s = rd.dominant_rep(alpha + w + rho, full);
    bool regular = true;
    for (int i = 0; i < rd.rank(); ++i) regular &= s.dominant[i] > 0;
    if (!regular) continue;
    out[s.dominant - rho] += s.sign * m;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [g, n] : out)
    if (n < 0) throw InternalError("Brauer-Klimyk produced a negative multiplicity");
  return out;
}

std::int64_t tensor_mult_oracle(const RootDatum& rd, const Coweight& alpha, const Coweight& beta,
                                const Coweight& gamma) {
  if (!rd.is_dominant(alpha) || !rd.is_dominant(beta) || !rd.is_dominant(gamma))
    throw DomainError("tensor_mult_oracle: arguments must be dominant");
  if (!rd.in_coroot_lattice(alpha + beta - gamma)) return 0;
  const auto dec = tensor_decomposition(rd, alpha, beta);
  auto it = dec.find(gamma);
  return it == dec.end() ? 0 : it->second;
}

Character tensor_decomposition_by_characters(const RootDatum& rd, const Coweight& alpha,
                                             const Coweight& beta) {
  return decompose_character(
      rd, multiply_characters(freudenthal(rd, alpha)->entries, freudenthal(rd, beta)->entries),
      IndexSet::full(rd.rank()));
}

std::shared_ptr<const Character> branching(const ParabolicSpec& P, const Coweight& mu) {
  const RootDatum& rd = P.datum();
  if (!rd.is_dominant(mu)) throw DomainError("branching: " + mu.to_string() + " is not G-dominant");
  using Key = std::tuple<std::string, std::uint32_t, Coweight>;
  static std::shared_mutex mtx;
  static std::map<Key, std::shared_ptr<const Character>> cache;
  Key key{rd.name(), P.levi().bits(), mu};
  {
    std::shared_lock lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto result = std::make_shared<const Character>(
      decompose_character(rd, freudenthal(rd, mu)->entries, P.levi()));
  std::unique_lock lock(mtx);
  return cache.emplace(key, result).first->second;
}

std::int64_t branch_mult_oracle(const ParabolicSpec& P, const Coweight& mu, const Coweight& lambda) {
  const RootDatum& rd = P.datum();
  if (!rd.is_dominant(mu)) throw DomainError("branch_mult_oracle: " + mu.to_string() + " is not G-dominant");
  if (!P.is_M_dominant(lambda))
    throw DomainError("branch_mult_oracle: " + lambda.to_string() + " is not M-dominant");
  if (!rd.in_coroot_lattice(mu - lambda)) return 0;
  const auto table = branching(P, mu);
  auto it = table->find(lambda);
  return it == table->end() ? 0 : it->second;
}

}  // namespace levibranch
