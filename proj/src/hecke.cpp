#include "levibranch/hecke.hpp"

#include <set>
#include <tuple>

#include "levibranch/characters.hpp"
#include "levibranch/detail/memo.hpp"
#include "levibranch/errors.hpp"

namespace levibranch {

namespace {

std::vector<std::size_t> subsystem_roots(const RootDatum& rd, IndexSet subset) {
  std::vector<std::size_t> out;
  const auto& roots = rd.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    bool inside = true;
    for (int i = 0; i < rd.rank(); ++i)
      if (roots[k][i] != 0 && !subset.contains(i)) inside = false;
    if (inside) out.push_back(k);
  }
  return out;
}

int two_rho_subset(const RootDatum& rd, IndexSet subset, const Coweight& v) {
  int s = 0;
  for (std::size_t k : subsystem_roots(rd, subset)) s += rd.pairing(rd.positive_roots()[k], v);
  return s;
}

void add_to(std::map<Coweight, LaurentPoly>& m, const Coweight& key, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

using SubsetKey = std::tuple<std::string, std::uint32_t, Coweight>;

InvariantElement compute_hall_littlewood(const RootDatum& rd, const Coweight& mu, IndexSet subset) {
  Coweight rho(rd.rank());
  for (int i = 0; i < rd.rank(); ++i) rho[i] = 1;
  const LaurentPoly minus_t = LaurentPoly::monomial(-1, -2);

  // x^{mu+rho} prod_{alpha > 0} (1 - t x^{-alpha^vee})
  std::map<Coweight, LaurentPoly> numerator{{mu + rho, LaurentPoly(1)}};
  for (std::size_t k : subsystem_roots(rd, subset)) {
    const Coweight& b = rd.positive_coroots()[k];
    auto next = numerator;
    for (const auto& [w, c] : numerator) add_to(next, w - b, minus_t * c);
    numerator = std::move(next);
  }

  // Antisymmetrize and divide by the Weyl denominator: each term becomes a
  // signed irreducible character.
  std::map<Coweight, LaurentPoly> sym;
  for (const auto& [eta, c] : numerator) {
    auto s = rd.dominant_rep(eta, subset);
    bool regular = true;
    for (int i : subset.indices()) regular &= s.dominant[i] > 0;
    if (!regular) continue;
    const auto table = freudenthal(rd, s.dominant - rho, subset);
    for (const auto& [w, m] : table->entries)
      if (rd.is_dominant(w, subset)) add_to(sym, w, LaurentPoly(s.sign * m) * c);
  }

  IndexSet stabilizer;
  for (int i : subset.indices())
    if (mu[i] == 0) stabilizer = stabilizer.with(i);
  const LaurentPoly w_mu = poincare_polynomial(rd, stabilizer).substitute_power(-1);

  InvariantElement out{subset, {}};
  for (const auto& [w, c] : sym) out.terms.emplace(w, c.divide_exact(w_mu));
  if (out.coefficient(mu) != LaurentPoly(1))
    throw InternalError("Hall-Littlewood polynomial for " + mu.to_string() + " is not monic");
  return out;
}

}  // namespace

LaurentPoly InvariantElement::coefficient(const Coweight& lambda) const {
  auto it = terms.find(lambda);
  return it == terms.end() ? LaurentPoly() : it->second;
}

std::map<Coweight, LaurentPoly> InvariantElement::monomials(const RootDatum& rd) const {
  std::map<Coweight, LaurentPoly> out;
  for (const auto& [lam, c] : terms)
    for (const auto& w : rd.weyl_orbit(lam, subset)) add_to(out, w, c);
  return out;
}

InvariantElement InvariantElement::from_monomials(const RootDatum& rd, IndexSet subset,
                                                  const std::map<Coweight, LaurentPoly>& monomials) {
  InvariantElement out{subset, {}};
  for (const auto& [w, c] : monomials)
    if (rd.is_dominant(w, subset) && !c.is_zero()) out.terms.emplace(w, c);
  return out;
}

InvariantElement& InvariantElement::add_scaled(const LaurentPoly& c, const InvariantElement& o) {
  if (!(subset == o.subset)) throw InternalError("adding invariant elements over different subsets");
  for (const auto& [lam, d] : o.terms) add_to(terms, lam, c * d);
  return *this;
}

InvariantElement multiply(const RootDatum& rd, const InvariantElement& a, const InvariantElement& b) {
  if (!(a.subset == b.subset)) throw InternalError("multiplying invariant elements over different subsets");
  const auto mono = a.monomials(rd);
  InvariantElement out{a.subset, {}};
  for (const auto& [key, bc] : b.terms)
    for (const auto& x : rd.weyl_orbit(key, b.subset))
      for (const auto& [y, ac] : mono) {
        Coweight s = x + y;
        if (rd.is_dominant(s, a.subset)) add_to(out.terms, s, ac * bc);
      }
  return out;
}

LaurentPoly poincare_polynomial(const RootDatum& rd, IndexSet subset) {
  LaurentPoly p;
  for (const auto& w : rd.weyl_subgroup(subset)) p += LaurentPoly::monomial(1, 2 * w.length);
  return p;
}

std::shared_ptr<const InvariantElement> hall_littlewood(const RootDatum& rd, const Coweight& mu,
                                                        IndexSet subset) {
  if (mu.rank() != rd.rank()) throw DomainError("hall_littlewood: rank mismatch");
  if (!rd.is_dominant(mu, subset))
    throw DomainError("hall_littlewood: " + mu.to_string() + " is not dominant");
  static detail::Memo<SubsetKey, InvariantElement> memo;
  return memo.get({rd.name(), subset.bits(), mu}, [&] { return compute_hall_littlewood(rd, mu, subset); });
}

std::shared_ptr<const InvariantElement> satake_f(const RootDatum& rd, const Coweight& mu, IndexSet subset) {
  static detail::Memo<SubsetKey, InvariantElement> memo;
  return memo.get({rd.name(), subset.bits(), mu}, [&] {
    InvariantElement out = *hall_littlewood(rd, mu, subset);
    const int k = two_rho_subset(rd, subset, mu);
    for (auto& [lam, c] : out.terms) c = c.shifted(k);
    return out;
  });
}

std::map<Coweight, LaurentPoly> expand_in_satake_basis(const RootDatum& rd, const InvariantElement& element,
                                                       IndexSet target) {
  if (!target.is_subset_of(element.subset))
    throw DomainError("expand_in_satake_basis: target subset is not contained in the source subset");
  auto rest = element.subset == target ? element.terms
                                       : InvariantElement::from_monomials(rd, target, element.monomials(rd)).terms;
  std::map<Coweight, LaurentPoly> out;
  // Lower terms of satake_f(lambda) have strictly smaller <2 rho_S, .>, so
  // the maximal key is always a leading term.
  while (!rest.empty()) {
    auto best = rest.begin();
    int best_key = two_rho_subset(rd, target, best->first);
    for (auto it = std::next(rest.begin()); it != rest.end(); ++it) {
      int k = two_rho_subset(rd, target, it->first);
      if (k > best_key || (k == best_key && best->first < it->first)) {
        best = it;
        best_key = k;
      }
    }
    const Coweight lam = best->first;
    const LaurentPoly coeff = best->second.shifted(-best_key);
    out.emplace(lam, coeff);
    for (const auto& [w, c] : satake_f(rd, lam, target)->terms) add_to(rest, w, -(coeff * c));
    if (rest.count(lam)) throw InternalError("expand_in_satake_basis: leading term did not cancel");
  }
  return out;
}

LaurentPoly HeckeExpansion::at(const Coweight& gamma) const {
  auto it = coefficients.find(gamma);
  return it == coefficients.end() ? LaurentPoly() : it->second;
}

std::shared_ptr<const HeckeExpansion> hecke_product(const RootDatum& rd, const Coweight& alpha,
                                                    const Coweight& beta) {
  if (!rd.is_dominant(alpha) || !rd.is_dominant(beta))
    throw DomainError("hecke_product: " + alpha.to_string() + " and " + beta.to_string() +
                      " must both be dominant");
  using Key = std::tuple<std::string, Coweight, Coweight>;
  static detail::Memo<Key, HeckeExpansion> memo;
  return memo.get({rd.name(), alpha, beta}, [&] {
    const IndexSet full = IndexSet::full(rd.rank());
    HeckeExpansion out{alpha, beta, {}};
    out.coefficients = expand_in_satake_basis(rd, multiply(rd, *satake_f(rd, alpha, full), *satake_f(rd, beta, full)), full);
    return out;
  });
}

LaurentPoly structure_constant(const RootDatum& rd, const Coweight& alpha, const Coweight& beta,
                               const Coweight& gamma) {
  if (!rd.is_dominant(gamma)) throw DomainError("structure_constant: " + gamma.to_string() + " is not dominant");
  return hecke_product(rd, alpha, beta)->at(gamma);
}

std::shared_ptr<const std::map<Coweight, LaurentPoly>> constant_term(const ParabolicSpec& P, const Coweight& mu) {
  const RootDatum& rd = P.datum();
  if (!rd.is_dominant(mu)) throw DomainError("constant_term: " + mu.to_string() + " is not G-dominant");
  static detail::Memo<SubsetKey, std::map<Coweight, LaurentPoly>> memo;
  return memo.get({rd.name(), P.levi().bits(), mu}, [&] {
    return expand_in_satake_basis(rd, *satake_f(rd, mu, IndexSet::full(rd.rank())), P.levi());
  });
}

LaurentPoly constant_term_coeff(const ParabolicSpec& P, const Coweight& mu, const Coweight& lambda) {
  if (!P.is_M_dominant(lambda))
    throw DomainError("constant_term: " + lambda.to_string() + " is not M-dominant");
  const auto table = constant_term(P, mu);
  auto it = table->find(lambda);
  return it == table->end() ? LaurentPoly() : it->second;
}

LaurentPoly orbit_size_M(const ParabolicSpec& P, const Coweight& lambda) {
  const RootDatum& rd = P.datum();
  if (!P.is_M_dominant(lambda))
    throw DomainError("orbit_size_M: " + lambda.to_string() + " is not M-dominant");
  int d = 0;
  for (std::size_t k : P.phi_M_plus()) d += rd.pairing(rd.positive_roots()[k], lambda) > 0;
  // The group is sorted by length, so the first element reaching each orbit
  // point is the minimal coset representative.
  std::set<Coweight> seen;
  LaurentPoly sum;
  for (const auto& w : P.weyl_M())
    if (seen.insert(w.apply(lambda)).second) sum += LaurentPoly::monomial(1, 2 * w.length);
  return sum.shifted(2 * (P.two_rho_M(lambda) - d));
}

MainIdentitySides main_identity_sides(const ParabolicSpec& P, const Coweight& mu, const Coweight& lambda,
                                      const Coweight& nu) {
  const RootDatum& rd = P.datum();
  if (!rd.is_dominant(mu)) throw DomainError("main identity: " + mu.to_string() + " is not G-dominant");
  if (!geq_P(P, nu, mu))
    throw DomainError("main identity: nu = " + nu.to_string() + " does not satisfy nu >=^P " + mu.to_string());
  if (!P.is_M_dominant(lambda))
    throw DomainError("main identity: " + lambda.to_string() + " is not M-dominant");
  if (!rd.in_coroot_lattice(mu - lambda))
    throw DomainError("main identity: mu - lambda is not in the coroot lattice");
  if (!rd.is_dominant(nu + lambda))
    throw DomainError("main identity: nu + lambda = " + (nu + lambda).to_string() + " is not G-dominant");
  MainIdentitySides s;
  s.c = constant_term_coeff(P, mu, lambda);
  s.orbit_size = orbit_size_M(P, lambda);
  s.lhs = s.c.shifted(P.two_rho_N(lambda)) * s.orbit_size;
  s.rhs = structure_constant(rd, nu + lambda, rd.dual_star(mu), nu);
  return s;
}

bool verify_main_i(const ParabolicSpec& P, const Coweight& mu, const Coweight& lambda, const Coweight& nu) {
  return main_identity_sides(P, mu, lambda, nu).holds();
}

nlohmann::json to_json(const std::map<Coweight, LaurentPoly>& table) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, p] : table) j[k.to_string()] = p.to_json();
  return j;
}

}  // namespace levibranch
