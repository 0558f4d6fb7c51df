#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levibranch/lattice.hpp"
#include "levibranch/rational.hpp"

namespace levibranch {

enum class CartanType { A, B, C, D, E, F, G };

// Subset of simple-root indices, stored 0-based. The CLI and reports use the
// 1-based notation "1,3".
class IndexSet {
 public:
  IndexSet() = default;
  static IndexSet full(int rank) { return IndexSet((1u << rank) - 1u); }
  static IndexSet from_bits(std::uint32_t bits) { return IndexSet(bits); }
  // Parses "1,3" (1-based); "", "none" and "-" give the empty set. Throws
  // ConfigError on indices outside 1..rank.
  static IndexSet parse(const std::string& text, int rank);

  bool contains(int i) const { return (bits_ >> i) & 1u; }
  IndexSet with(int i) const { return IndexSet(bits_ | (1u << i)); }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  std::uint32_t bits() const { return bits_; }
  bool is_subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::vector<int> indices() const;
  // 1-based, comma separated; empty set prints as "".
  std::string to_string() const;

  friend bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }
  friend bool operator<(IndexSet a, IndexSet b) { return a.bits_ < b.bits_; }

 private:
  explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

// Element of the Weyl group as a matrix acting on fundamental-coweight
// coordinates, together with its length.
struct WeylElement {
  std::vector<int> matrix;  // row-major rank x rank
  int length = 0;

  Coweight apply(const Coweight& v) const;
  QVec apply(const QVec& v) const;
};

// Root system of an irreducible Cartan type together with its Weyl group and
// coweight-lattice data. Immutable after construction.
class RootDatum {
 public:
  // Supported: A1..A5, B2..B4, C2..C4, D4, F4, G2. Throws ConfigError.
  static std::shared_ptr<const RootDatum> build(CartanType type, int rank);
  // "A2", "g2", ...
  static std::shared_ptr<const RootDatum> parse(const std::string& name);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  const std::string& name() const { return name_; }

  // <alpha_i, alpha_j^vee>
  int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }
  const std::vector<RootVec>& positive_roots() const { return positive_roots_; }
  // positive_coroots()[k] is the coroot of positive_roots()[k], in coweight
  // coordinates.
  const std::vector<Coweight>& positive_coroots() const { return positive_coroots_; }
  const std::vector<int>& highest_root_coeffs() const { return highest_root_coeffs_; }
  Coweight simple_coroot(int j) const;
  Coweight fundamental_coweight(int i) const { return Coweight::unit(rank_, i); }
  Coweight zero() const { return Coweight(rank_); }

  int pairing(const RootVec& root, const Coweight& v) const;
  Rational pairing(const RootVec& root, const QVec& v) const;
  // <2 rho, v>, always an integer.
  int two_rho(const Coweight& v) const;
  // <rho, v>, a half-integer in general.
  Rational rho(const Coweight& v) const { return Rational(two_rho(v), 2); }
  int k_phi() const;

  Coweight reflect(int i, Coweight v) const;
  QVec reflect(int i, QVec v) const;
  // Reflection s_alpha for a positive root (by index into positive_roots()).
  Coweight reflect_by_root(std::size_t root_index, const Coweight& v) const;

  const std::vector<WeylElement>& weyl_group() const { return weyl_; }
  // Subgroup generated by s_i, i in subset. Cached on first use.
  const std::vector<WeylElement>& weyl_subgroup(IndexSet subset) const;
  const WeylElement& longest_element() const;

  // Weyl orbit, sorted.
  std::vector<Coweight> weyl_orbit(const Coweight& v) const;
  std::vector<Coweight> weyl_orbit(const Coweight& v, IndexSet subset) const;
  // Dominant representative for the reflection subgroup on `subset`, and the
  // parity of the number of reflections used.
  struct Straightened {
    Coweight dominant;
    int sign = 1;
  };
  Straightened dominant_rep(Coweight v, IndexSet subset) const;
  Coweight dominant_rep(const Coweight& v) const;

  bool is_dominant(const Coweight& v, IndexSet subset) const;
  bool is_dominant(const Coweight& v) const { return is_dominant(v, IndexSet::full(rank_)); }
  Coweight dual_star(const Coweight& v) const;

  // Coordinates of v in the basis of simple coroots (rational in general).
  std::vector<Rational> coroot_coords(const Coweight& v) const;
  bool in_coroot_lattice(const Coweight& v) const;
  // mu0 <= mu: mu - mu0 is a nonnegative integer combination of simple
  // coroots.
  bool leq_dominance(const Coweight& mu0, const Coweight& mu) const;

  // Dimension of the irreducible representation of the dual group with
  // highest weight mu. Throws DomainError when mu is not dominant.
  std::int64_t weyl_dim(const Coweight& mu) const;

 private:
  RootDatum(CartanType type, int rank);

  CartanType type_;
  int rank_;
  std::string name_;
  std::vector<int> cartan_;
  std::vector<Rational> cartan_inverse_;
  std::vector<RootVec> positive_roots_;
  std::vector<Coweight> positive_coroots_;
  std::vector<int> highest_root_coeffs_;
  std::vector<WeylElement> weyl_;
  std::size_t longest_ = 0;

  struct SubgroupCache;
  std::shared_ptr<SubgroupCache> subgroups_;
};

std::string to_string(CartanType t);

}  // namespace levibranch
