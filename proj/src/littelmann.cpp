#include "levibranch/littelmann.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "levibranch/detail/memo.hpp"
#include "levibranch/errors.hpp"

namespace levibranch {

LSPath::LSPath(std::vector<Segment> segments) {
  if (segments.empty()) throw DomainError("LSPath: no segments");
  Rational total = 0;
  for (const auto& s : segments) {
    if (s.duration < Rational(0)) throw DomainError("LSPath: negative duration");
    if (s.direction.rank() != segments.front().direction.rank())
      throw DomainError("LSPath: directions of different rank");
    total += s.duration;
  }
  if (total != Rational(1)) throw DomainError("LSPath: durations sum to " + to_string(total));
  for (auto& s : segments) {
    if (s.duration == Rational(0)) continue;
    if (!segments_.empty() && segments_.back().direction == s.direction)
      segments_.back().duration += s.duration;
    else
      segments_.push_back(std::move(s));
  }
}

std::vector<Rational> LSPath::breakpoint_times() const {
  std::vector<Rational> t{Rational(0)};
  for (const auto& s : segments_) t.push_back(t.back() + s.duration);
  return t;
}

std::vector<QVec> LSPath::breakpoints() const {
  std::vector<QVec> pts{QVec(rank())};
  for (const auto& s : segments_) {
    QVec next = pts.back();
    next.add_scaled(s.duration, s.direction);
    pts.push_back(next);
  }
  return pts;
}

QVec LSPath::endpoint() const { return breakpoints().back(); }

nlohmann::json LSPath::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : segments_) {
    nlohmann::json dir = nlohmann::json::array();
    for (int c : s.direction.coords()) dir.push_back(to_string(Rational(c)));
    arr.push_back({{"direction", dir}, {"duration", to_string(s.duration)}});
  }
  return arr;
}

LSPath LSPath::from_json(const nlohmann::json& j) {
  std::vector<Segment> segs;
  for (const auto& item : j) {
    std::vector<int> coords;
    for (const auto& c : item.at("direction")) {
      Rational r = parse_rational(c.get<std::string>());
      if (r.denominator() != 1) throw DomainError("LSPath: non-integral direction");
      coords.push_back(static_cast<int>(r.numerator()));
    }
    segs.push_back({Coweight::from(coords), parse_rational(item.at("duration").get<std::string>())});
  }
  return LSPath(std::move(segs));
}

LSPath straight_path(const Coweight& mu) { return LSPath({Segment{mu, Rational(1)}}); }

namespace {

void check_index(const RootDatum& rd, int i) {
  if (i < 0 || i >= rd.rank())
    throw DomainError("root operator index " + std::to_string(i + 1) + " out of range 1.." +
                      std::to_string(rd.rank()));
}

// Applies s_i to the directions on the time window [a, b].
LSPath reflect_window(const RootDatum& rd, int i, const LSPath& path, const Rational& a, const Rational& b) {
  std::vector<Segment> out;
  Rational start = 0;
  for (const auto& s : path.segments()) {
    const Rational end = start + s.duration;
    const Rational lo = std::max(start, a), hi = std::min(end, b);
    if (lo < hi) {
      out.push_back({s.direction, lo - start});
      out.push_back({rd.reflect(i, s.direction), hi - lo});
      out.push_back({s.direction, end - hi});
    } else {
      out.push_back(s);
    }
    start = end;
  }
  return LSPath(std::move(out));
}

}  // namespace

std::optional<LSPath> f_op(const RootDatum& rd, int i, const LSPath& path) {
  check_index(rd, i);
  const auto times = path.breakpoint_times();
  const auto pts = path.breakpoints();
  const std::size_t r = path.segments().size();
  Rational m = pts[0][i];
  for (const auto& p : pts) m = std::min(m, p[i]);
  if (pts[r][i] - m < Rational(1)) return std::nullopt;

  std::size_t kp = 0;
  for (std::size_t k = 0; k <= r; ++k)
    if (pts[k][i] == m) kp = k;
  // First time after the last minimum at which the height reaches m + 1.
  for (std::size_t k = kp; k < r; ++k) {
    if (pts[k + 1][i] < m + 1) continue;
    const Rational x = times[k] + (m + 1 - pts[k][i]) / path.segments()[k].direction[i];
    return reflect_window(rd, i, path, times[kp], x);
  }
  throw InternalError("f_op: height never reaches m + 1");
}

std::optional<LSPath> e_op(const RootDatum& rd, int i, const LSPath& path) {
  check_index(rd, i);
  const auto times = path.breakpoint_times();
  const auto pts = path.breakpoints();
  Rational m = pts[0][i];
  for (const auto& p : pts) m = std::min(m, p[i]);
  if (m > Rational(-1)) return std::nullopt;

  std::size_t kq = 0;
  while (pts[kq][i] != m) ++kq;
  // Last time before the first minimum at which the height is m + 1.
  for (std::size_t k = kq; k-- > 0;) {
    if (pts[k][i] < m + 1) continue;
    const Rational y = times[k] + (m + 1 - pts[k][i]) / path.segments()[k].direction[i];
    return reflect_window(rd, i, path, y, times[kq]);
  }
  throw InternalError("e_op: height never reaches m + 1 before the minimum");
}

std::shared_ptr<const Crystal> generate_crystal(const RootDatum& rd, const Coweight& mu, std::size_t cap) {
  if (mu.rank() != rd.rank()) throw DomainError("generate_crystal: rank mismatch");
  if (!rd.is_dominant(mu)) throw DomainError("generate_crystal: " + mu.to_string() + " is not dominant");
  const std::int64_t dim = rd.weyl_dim(mu);
  if (static_cast<std::uint64_t>(dim) > cap)
    throw ResourceLimit("crystal of " + mu.to_string() + " in " + rd.name() + " has " + std::to_string(dim) +
                        " paths, above the cap of " + std::to_string(cap));
  using Key = std::tuple<std::string, Coweight>;
  static detail::Memo<Key, Crystal> memo;
  return memo.get({rd.name(), mu}, [&] {
    // The crystal is connected with the straight path as its unique highest
    // element, so lowering operators alone reach everything.
    std::set<LSPath> seen{straight_path(mu)};
    std::vector<const LSPath*> queue{&*seen.begin()};
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (int i = 0; i < rd.rank(); ++i)
        if (auto g = f_op(rd, i, *queue[k])) {
          auto [it, inserted] = seen.insert(std::move(*g));
          if (inserted) queue.push_back(&*it);
        }
    Crystal c;
    c.mu = mu;
    c.paths.assign(seen.begin(), seen.end());
    for (const auto& p : c.paths) {
      const auto pts = p.breakpoints();
      c.endpoints.push_back(pts.back().to_coweight());
      Coweight lows(rd.rank());
      for (int i = 0; i < rd.rank(); ++i) {
        Rational m = 0;
        for (const auto& x : pts) m = std::min(m, x[i]);
        if (m.denominator() != 1) throw InternalError("LS path with a non-integral minimum");
        lows[i] = static_cast<int>(m.numerator());
      }
      c.minima.push_back(lows);
    }
    return c;
  });
}

Character endpoint_histogram(const Crystal& crystal) {
  Character h;
  for (const auto& e : crystal.endpoints) ++h[e];
  return h;
}

namespace {

bool stays_M_dominant(const ParabolicSpec& P, const Coweight& lows) {
  for (int i : P.levi().indices())
    if (lows[i] < 0) return false;
  return true;
}

bool stays_dominant_from(const Coweight& nu, const Coweight& lows) {
  for (int i = 0; i < nu.rank(); ++i)
    if (nu[i] + lows[i] < 0) return false;
  return true;
}

// An endpoint outside the cone simply has no paths; only the start of the
// path must be valid.
void check_tensor_start(const RootDatum& rd, const Coweight& nu) {
  if (!rd.is_dominant(nu)) throw DomainError(nu.to_string() + " is not dominant");
}

}  // namespace

std::vector<LSPath> branch_paths(const ParabolicSpec& P, const Coweight& mu, const Coweight& lambda) {
  const auto c = generate_crystal(P.datum(), mu);
  std::vector<LSPath> out;
  for (std::size_t k = 0; k < c->paths.size(); ++k)
    if (c->endpoints[k] == lambda && stays_M_dominant(P, c->minima[k])) out.push_back(c->paths[k]);
  return out;
}

std::int64_t count_branch_paths(const ParabolicSpec& P, const Coweight& mu, const Coweight& lambda) {
  return static_cast<std::int64_t>(branch_paths(P, mu, lambda).size());
}

std::vector<LSPath> tensor_paths(const RootDatum& rd, const Coweight& mu, const Coweight& nu,
                                 const Coweight& target) {
  check_tensor_start(rd, nu);
  const auto c = generate_crystal(rd, mu);
  std::vector<LSPath> out;
  for (std::size_t k = 0; k < c->paths.size(); ++k)
    if (nu + c->endpoints[k] == target && stays_dominant_from(nu, c->minima[k])) out.push_back(c->paths[k]);
  return out;
}

std::int64_t count_tensor_paths(const RootDatum& rd, const Coweight& mu, const Coweight& nu,
                                const Coweight& target) {
  return static_cast<std::int64_t>(tensor_paths(rd, mu, nu, target).size());
}

Character branch_path_histogram(const ParabolicSpec& P, const Coweight& mu) {
  if (!P.datum().is_dominant(mu)) throw DomainError(mu.to_string() + " is not G-dominant");
  const auto c = generate_crystal(P.datum(), mu);
  Character h;
  for (std::size_t k = 0; k < c->paths.size(); ++k)
    if (stays_M_dominant(P, c->minima[k])) ++h[c->endpoints[k]];
  return h;
}

Character tensor_path_histogram(const RootDatum& rd, const Coweight& mu, const Coweight& nu) {
  if (!rd.is_dominant(nu)) throw DomainError(nu.to_string() + " is not dominant");
  const auto c = generate_crystal(rd, mu);
  Character h;
  for (std::size_t k = 0; k < c->paths.size(); ++k)
    if (stays_dominant_from(nu, c->minima[k])) ++h[nu + c->endpoints[k]];
  return h;
}

bool in_weyl_hull(const RootDatum& rd, const QVec& x, const Coweight& mu) {
  QVec d = x;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < rd.rank(); ++i)
      if (d[i] < Rational(0)) {
        d = rd.reflect(i, d);
        moved = true;
      }
  }
  // mu - d must be a nonnegative combination of simple coroots; clear
  // denominators to reuse the integer solver.
  std::int64_t den = 1;
  for (int i = 0; i < rd.rank(); ++i) den = std::lcm(den, d[i].denominator());
  Coweight diff(rd.rank());
  for (int i = 0; i < rd.rank(); ++i) {
    const Rational v = Rational(den) * (Rational(mu[i]) - d[i]);
    diff[i] = static_cast<int>(v.numerator());
  }
  for (const auto& c : rd.coroot_coords(diff))
    if (c < Rational(0)) return false;
  return true;
}

bool is_hecke_path(const RootDatum& rd, const LSPath& path) {
  const auto pts = path.breakpoints();
  const auto& segs = path.segments();
  const auto& roots = rd.positive_roots();
  for (std::size_t k = 0; k + 1 < segs.size(); ++k) {
    const QVec& at = pts[k + 1];
    std::vector<std::size_t> walls;
    for (std::size_t a = 0; a < roots.size(); ++a)
      if (rd.pairing(roots[a], at).denominator() == 1) walls.push_back(a);
    const Coweight& target = segs[k + 1].direction;
    std::set<Coweight> seen{segs[k].direction};
    std::vector<Coweight> queue{segs[k].direction};
    bool reached = false;
    for (std::size_t n = 0; n < queue.size() && !reached; ++n)
      for (std::size_t a : walls) {
        if (rd.pairing(roots[a], queue[n]) >= 0) continue;
        Coweight next = rd.reflect_by_root(a, queue[n]);
        if (next == target) {
          reached = true;
          break;
        }
        if (seen.insert(next).second) queue.push_back(next);
      }
    if (!reached) return false;
  }
  return true;
}

}  // namespace levibranch
