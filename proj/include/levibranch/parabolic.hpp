#pragma once

#include <memory>
#include <vector>

#include "levibranch/lattice.hpp"
#include "levibranch/rootdata.hpp"

namespace levibranch {

// Levi datum M (simple roots S) inside the standard parabolic P = MN.
class ParabolicSpec {
 public:
  ParabolicSpec(std::shared_ptr<const RootDatum> datum, IndexSet levi);

  const RootDatum& datum() const { return *datum_; }
  const std::shared_ptr<const RootDatum>& datum_ptr() const { return datum_; }
  IndexSet levi() const { return levi_; }
  bool is_full() const { return levi_ == IndexSet::full(datum_->rank()); }

  // Indices into datum().positive_roots().
  const std::vector<std::size_t>& phi_M_plus() const { return phi_m_plus_; }
  const std::vector<std::size_t>& phi_N() const { return phi_n_; }

  // Half-sums as rational vectors in simple-root coordinates.
  const std::vector<Rational>& rho_M() const { return rho_m_; }
  const std::vector<Rational>& rho_N() const { return rho_n_; }
  int two_rho_M(const Coweight& v) const;
  int two_rho_N(const Coweight& v) const;

  const std::vector<WeylElement>& weyl_M() const { return datum_->weyl_subgroup(levi_); }
  bool is_M_dominant(const Coweight& v) const { return datum_->is_dominant(v, levi_); }
  // <alpha, v> = 0 for every root of M.
  bool is_M_central(const Coweight& v) const;

 private:
  std::shared_ptr<const RootDatum> datum_;
  IndexSet levi_;
  std::vector<std::size_t> phi_m_plus_, phi_n_;
  std::vector<Rational> rho_m_, rho_n_;
};

// nu >=^P mu. Requires mu G-dominant (DomainError otherwise). A nu that is not
// M-central never satisfies the relation.
bool geq_P(const ParabolicSpec& P, const Coweight& nu, const Coweight& mu);

// The nu in the N-span of {varpi_i : i not in S} with nu >=^P mu that
// minimizes <rho, nu>, ties broken lexicographically.
Coweight minimal_nu(const ParabolicSpec& P, const Coweight& mu);

// The three equivalent conditions of the convex-hull characterization of
// nu >=^P mu.
struct HullConditions {
  bool geq_p = false;           // (1) nu >=^P mu
  bool hull_in_chamber = false; // (2) Conv(W mu) cap Delta_M inside Delta - nu
  bool root_bounds = false;     // (3) alpha >= alpha(x_{-nu}) on that polytope, alpha in Phi^+ \ Phi_M
};

// Requires nu M-central (DomainError otherwise).
HullConditions hull_conditions(const ParabolicSpec& P, const Coweight& nu, const Coweight& mu);

// Vertices of Conv(W mu) cap Delta_M, sorted.
std::vector<QVec> levi_hull_vertices(const ParabolicSpec& P, const Coweight& mu);

// Every Levi subset of a datum, in increasing bit order.
std::vector<IndexSet> all_levi_subsets(int rank);

}  // namespace levibranch
