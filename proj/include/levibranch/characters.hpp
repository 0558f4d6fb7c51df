#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "levibranch/lattice.hpp"
#include "levibranch/parabolic.hpp"
#include "levibranch/rootdata.hpp"

namespace levibranch {

// Formal character: weight -> multiplicity.
using Character = std::map<Coweight, std::int64_t>;

// Weights of the irreducible representation with highest weight mu of the
// dual group of the reductive subgroup with simple roots `subset` (the full
// set gives G-hat, a Levi subset gives M-hat).
struct WeightMultiplicityTable {
  Coweight highest_weight;
  IndexSet subset;
  Character entries;  // every weight, not only dominant ones

  std::int64_t dimension() const;
  std::int64_t multiplicity(const Coweight& w) const;
};

// Cached; thread-safe. Throws DomainError when mu is not dominant for subset.
std::shared_ptr<const WeightMultiplicityTable> freudenthal(const RootDatum& rd, const Coweight& mu,
                                                           IndexSet subset);
std::shared_ptr<const WeightMultiplicityTable> freudenthal(const RootDatum& rd, const Coweight& mu);

// Omega(mu): the set of weights of V_mu.
std::vector<Coweight> weights_of(const RootDatum& rd, const Coweight& mu);

// Multiplicities of the irreducible constituents of a W_subset-invariant
// character, peeling off highest weights. Throws InternalError when the
// character is not a nonnegative combination of irreducibles.
Character decompose_character(const RootDatum& rd, Character chi, IndexSet subset);

// Pointwise product of two characters.
Character multiply_characters(const Character& a, const Character& b);

// n_{alpha,beta}(gamma) via the Brauer-Klimyk / Racah-Speiser signed sum.
std::int64_t tensor_mult_oracle(const RootDatum& rd, const Coweight& alpha, const Coweight& beta,
                                const Coweight& gamma);
// Full decomposition of V_alpha (x) V_beta by Brauer-Klimyk.
Character tensor_decomposition(const RootDatum& rd, const Coweight& alpha, const Coweight& beta);
// Same decomposition by multiplying characters and peeling highest weights.
Character tensor_decomposition_by_characters(const RootDatum& rd, const Coweight& alpha,
                                             const Coweight& beta);

// r_mu(lambda): multiplicity of V^M_lambda in V^G_mu restricted to M-hat.
std::int64_t branch_mult_oracle(const ParabolicSpec& P, const Coweight& mu, const Coweight& lambda);
// All r_mu(lambda) for fixed mu, keyed by M-dominant lambda.
std::shared_ptr<const Character> branching(const ParabolicSpec& P, const Coweight& mu);

}  // namespace levibranch
