#pragma once

#include <map>
#include <memory>

#include "levibranch/laurent.hpp"
#include "levibranch/lattice.hpp"
#include "levibranch/parabolic.hpp"
#include "levibranch/rootdata.hpp"

namespace levibranch {

// W_S-invariant element of Z[v^{+-1}][X_*(T)], stored as sum_lambda c_lambda m_lambda
// over S-dominant lambda, where m_lambda is the W_S-orbit sum of x^lambda.
struct InvariantElement {
  IndexSet subset;
  std::map<Coweight, LaurentPoly> terms;

  LaurentPoly coefficient(const Coweight& lambda) const;
  // Every monomial x^w with its coefficient.
  std::map<Coweight, LaurentPoly> monomials(const RootDatum& rd) const;
  // Collects a W_S-invariant monomial expansion on its S-dominant keys.
  static InvariantElement from_monomials(const RootDatum& rd, IndexSet subset,
                                         const std::map<Coweight, LaurentPoly>& monomials);

  InvariantElement& add_scaled(const LaurentPoly& c, const InvariantElement& o);
  friend bool operator==(const InvariantElement& a, const InvariantElement& b) {
    return a.subset == b.subset && a.terms == b.terms;
  }
};

// Product of two W_S-invariant elements over the same subset.
InvariantElement multiply(const RootDatum& rd, const InvariantElement& a, const InvariantElement& b);

// Macdonald's Hall-Littlewood polynomial P_mu(x; t) for the reflection
// subgroup W_S, with t = v^{-2}. Cached; thread-safe. DomainError when mu is
// not S-dominant.
std::shared_ptr<const InvariantElement> hall_littlewood(const RootDatum& rd, const Coweight& mu,
                                                        IndexSet subset);

// Satake image of the characteristic function f_mu of K x_mu K, normalized as
// v^{<2 rho_S, mu>} P_mu(x; v^{-2}).
std::shared_ptr<const InvariantElement> satake_f(const RootDatum& rd, const Coweight& mu,
                                                 IndexSet subset);

// Coefficients of `element` in the basis {satake_f(lambda, target)}. The
// element is first restricted to W_target (target must be a subset of
// element.subset). Throws InternalError on a nonzero remainder.
std::map<Coweight, LaurentPoly> expand_in_satake_basis(const RootDatum& rd, const InvariantElement& element,
                                                       IndexSet target);

struct HeckeExpansion {
  Coweight alpha, beta;
  std::map<Coweight, LaurentPoly> coefficients;  // gamma -> m_{alpha,beta}(gamma)

  LaurentPoly at(const Coweight& gamma) const;
};

// f_alpha * f_beta = sum_gamma m_{alpha,beta}(gamma) f_gamma. Cached.
std::shared_ptr<const HeckeExpansion> hecke_product(const RootDatum& rd, const Coweight& alpha,
                                                    const Coweight& beta);
LaurentPoly structure_constant(const RootDatum& rd, const Coweight& alpha, const Coweight& beta,
                               const Coweight& gamma);

// c^G_M(f_mu) = sum_lambda c_mu(lambda) f^M_lambda. Cached.
std::shared_ptr<const std::map<Coweight, LaurentPoly>> constant_term(const ParabolicSpec& P, const Coweight& mu);
LaurentPoly constant_term_coeff(const ParabolicSpec& P, const Coweight& mu, const Coweight& lambda);

// Poincare polynomial sum_{w in W_S} q^{l(w)}, in v.
LaurentPoly poincare_polynomial(const RootDatum& rd, IndexSet subset);

// |K_M x_lambda| as a polynomial in q (written in v).
LaurentPoly orbit_size_M(const ParabolicSpec& P, const Coweight& lambda);

// Both sides of c_mu(lambda) q^{<rho_N,lambda>} |K_M x_lambda| = m_{nu+lambda,mu*}(nu).
struct MainIdentitySides {
  LaurentPoly c;            // c_mu(lambda)
  LaurentPoly orbit_size;   // |K_M x_lambda|
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool holds() const { return lhs == rhs; }
};

// Requires geq_P(nu, mu), lambda M-dominant with mu - lambda in the coroot
// lattice and nu + lambda G-dominant; DomainError otherwise.
MainIdentitySides main_identity_sides(const ParabolicSpec& P, const Coweight& mu, const Coweight& lambda,
                                      const Coweight& nu);
bool verify_main_i(const ParabolicSpec& P, const Coweight& mu, const Coweight& lambda, const Coweight& nu);

nlohmann::json to_json(const std::map<Coweight, LaurentPoly>& table);

}  // namespace levibranch
