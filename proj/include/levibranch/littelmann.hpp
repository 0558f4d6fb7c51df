#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "levibranch/characters.hpp"
#include "levibranch/lattice.hpp"
#include "levibranch/parabolic.hpp"
#include "levibranch/rational.hpp"
#include "levibranch/rootdata.hpp"

namespace levibranch {

struct Segment {
  Coweight direction;
  Rational duration;

  friend bool operator==(const Segment& a, const Segment& b) {
    return a.direction == b.direction && a.duration == b.duration;
  }
  friend bool operator<(const Segment& a, const Segment& b) {
    if (a.direction != b.direction) return a.direction < b.direction;
    return a.duration < b.duration;
  }
};

// Piecewise-linear path from the origin: segment k moves by
// duration_k * direction_k. Always kept in canonical form (no zero
// durations, no two equal consecutive directions).
class LSPath {
 public:
  LSPath() = default;
  // Canonicalizes; throws DomainError when durations are not positive or do
  // not sum to 1.
  explicit LSPath(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  int rank() const { return segments_.empty() ? 0 : segments_.front().direction.rank(); }

  // Cumulative times 0 = t_0 < ... < t_r = 1 and the positions there.
  std::vector<Rational> breakpoint_times() const;
  std::vector<QVec> breakpoints() const;
  QVec endpoint() const;

  friend bool operator==(const LSPath& a, const LSPath& b) { return a.segments_ == b.segments_; }
  friend bool operator<(const LSPath& a, const LSPath& b) { return a.segments_ < b.segments_; }

  // [{"direction": ["1/1", "0/1"], "duration": "1/2"}, ...]
  nlohmann::json to_json() const;
  static LSPath from_json(const nlohmann::json& j);

 private:
  std::vector<Segment> segments_;
};

LSPath straight_path(const Coweight& mu);

// Root operators; i is 0-based. Empty when the operator is undefined.
// Throws DomainError for an out-of-range index.
std::optional<LSPath> f_op(const RootDatum& rd, int i, const LSPath& path);
std::optional<LSPath> e_op(const RootDatum& rd, int i, const LSPath& path);

inline constexpr std::size_t kDefaultCrystalCap = 200000;

struct Crystal {
  Coweight mu;
  std::vector<LSPath> paths;      // sorted
  std::vector<Coweight> endpoints;
  // minima[k][i] = min over t of <alpha_i, paths[k](t)>.
  std::vector<Coweight> minima;
};

// All LS paths of shape mu. Cached per (datum, mu); thread-safe. Throws
// ResourceLimit when the crystal would exceed `cap` paths and DomainError
// when mu is not dominant.
std::shared_ptr<const Crystal> generate_crystal(const RootDatum& rd, const Coweight& mu,
                                                std::size_t cap = kDefaultCrystalCap);

Character endpoint_histogram(const Crystal& crystal);

// |B_mu(o, lambda) cap Delta_M|; zero when lambda is not M-dominant.
std::int64_t count_branch_paths(const ParabolicSpec& P, const Coweight& mu, const Coweight& lambda);
// |B_mu(nu, target) cap Delta_G|; zero when target is not dominant.
// DomainError when nu is not dominant.
std::int64_t count_tensor_paths(const RootDatum& rd, const Coweight& mu, const Coweight& nu,
                                const Coweight& target);
// Every lambda with its branch path count.
Character branch_path_histogram(const ParabolicSpec& P, const Coweight& mu);
// Every target with its tensor path count.
Character tensor_path_histogram(const RootDatum& rd, const Coweight& mu, const Coweight& nu);

std::vector<LSPath> branch_paths(const ParabolicSpec& P, const Coweight& mu, const Coweight& lambda);
std::vector<LSPath> tensor_paths(const RootDatum& rd, const Coweight& mu, const Coweight& nu,
                                 const Coweight& target);

// Whether the point lies in Conv(W mu).
bool in_weyl_hull(const RootDatum& rd, const QVec& x, const Coweight& mu);

// At every break the outgoing direction must be reachable from the incoming
// one by reflections in root hyperplanes through the break point, each
// applied to a direction pairing strictly negatively with its root.
bool is_hecke_path(const RootDatum& rd, const LSPath& path);

}  // namespace levibranch
