#include "levibranch/parabolic.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <optional>
#include <set>

#include "levibranch/errors.hpp"

namespace levibranch {

ParabolicSpec::ParabolicSpec(std::shared_ptr<const RootDatum> datum, IndexSet levi)
    : datum_(std::move(datum)), levi_(levi) {
  const int r = datum_->rank();
  if (!levi_.is_subset_of(IndexSet::full(r)))
    throw ConfigError("Levi subset " + levi_.to_string() + " exceeds rank " + std::to_string(r));
  rho_m_.assign(r, Rational(0));
  rho_n_.assign(r, Rational(0));
  const auto& roots = datum_->positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    bool in_m = true;
    for (int i = 0; i < r; ++i)
      if (roots[k][i] != 0 && !levi_.contains(i)) in_m = false;
    (in_m ? phi_m_plus_ : phi_n_).push_back(k);
    auto& rho = in_m ? rho_m_ : rho_n_;
    for (int i = 0; i < r; ++i) rho[i] += Rational(roots[k][i], 2);
  }
}

int ParabolicSpec::two_rho_M(const Coweight& v) const {
  int s = 0;
  for (std::size_t k : phi_m_plus_) s += datum_->pairing(datum_->positive_roots()[k], v);
  return s;
}

int ParabolicSpec::two_rho_N(const Coweight& v) const {
  int s = 0;
  for (std::size_t k : phi_n_) s += datum_->pairing(datum_->positive_roots()[k], v);
  return s;
}

bool ParabolicSpec::is_M_central(const Coweight& v) const {
  for (int i : levi_.indices())
    if (v[i] != 0) return false;
  return true;
}

namespace {

// For each alpha in Phi_N: min over the Weyl orbit of <alpha, w mu>.
std::vector<int> orbit_minima(const ParabolicSpec& P, const Coweight& mu) {
  const RootDatum& rd = P.datum();
  const auto orbit = rd.weyl_orbit(mu);
  std::vector<int> minima;
  for (std::size_t k : P.phi_N()) {
    int m = std::numeric_limits<int>::max();
    for (const auto& x : orbit) m = std::min(m, rd.pairing(rd.positive_roots()[k], x));
    minima.push_back(m);
  }
  return minima;
}

void require_dominant(const RootDatum& rd, const Coweight& mu, const char* what) {
  if (mu.rank() != rd.rank()) throw DomainError(std::string(what) + ": rank mismatch");
  if (!rd.is_dominant(mu)) throw DomainError(std::string(what) + ": " + mu.to_string() + " is not G-dominant");
}

}  // namespace

bool geq_P(const ParabolicSpec& P, const Coweight& nu, const Coweight& mu) {
  const RootDatum& rd = P.datum();
  require_dominant(rd, mu, "geq_P");
  if (!P.is_M_central(nu)) return false;
  const auto minima = orbit_minima(P, mu);
  for (std::size_t n = 0; n < P.phi_N().size(); ++n)
    if (rd.pairing(rd.positive_roots()[P.phi_N()[n]], nu) + minima[n] < 0) return false;
  return true;
}

Coweight minimal_nu(const ParabolicSpec& P, const Coweight& mu) {
  const RootDatum& rd = P.datum();
  require_dominant(rd, mu, "minimal_nu");
  const auto minima = orbit_minima(P, mu);
  std::vector<int> free;
  for (int i = 0; i < rd.rank(); ++i)
    if (!P.levi().contains(i)) free.push_back(i);
  int bound = 0;
  for (int m : minima) bound = std::max(bound, -m);

  // Every alpha in Phi_N has a positive coefficient on some free index, so
  // coordinates in [0, bound] always contain a solution.
  Coweight best = rd.zero();
  int best_weight = std::numeric_limits<int>::max();
  bool found = false;
  std::vector<int> counter(free.size(), 0);
  while (true) {
    Coweight nu = rd.zero();
    for (std::size_t f = 0; f < free.size(); ++f) nu[free[f]] = counter[f];
    bool ok = true;
    for (std::size_t n = 0; n < P.phi_N().size() && ok; ++n)
      ok = rd.pairing(rd.positive_roots()[P.phi_N()[n]], nu) + minima[n] >= 0;
    if (ok) {
      int w = rd.two_rho(nu);
      if (!found || w < best_weight || (w == best_weight && nu < best)) {
        best = nu;
        best_weight = w;
        found = true;
      }
    }
    std::size_t f = 0;
    while (f < free.size() && counter[f] == bound) counter[f++] = 0;
    if (f == free.size()) break;
    ++counter[f];
  }
  if (!found) throw InternalError("minimal_nu: no solution in the search box");
  return best;
}

namespace {

struct HalfSpace {
  std::vector<Rational> normal;  // f . x <= rhs
  Rational rhs;
};

Rational evaluate(const HalfSpace& h, const QVec& x) {
  Rational s = 0;
  for (std::size_t c = 0; c < h.normal.size(); ++c) s += h.normal[c] * x[static_cast<int>(c)];
  return s;
}

int rank_of(std::vector<std::vector<Rational>> rows, int n) {
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const Rational f = rows[i][col] / rows[rank][col];
      for (int j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<QVec> levi_hull_vertices(const ParabolicSpec& P, const Coweight& mu) {
  const RootDatum& rd = P.datum();
  require_dominant(rd, mu, "levi_hull_vertices");
  const int n = rd.rank();

  // Conv(W mu) = { x : <w omega_j, x> <= <omega_j, mu> for all w, j }.
  std::vector<std::vector<Rational>> inv_cols;
  for (int j = 0; j < n; ++j) inv_cols.push_back(rd.coroot_coords(Coweight::unit(n, j)));
  const auto mu_coords = rd.coroot_coords(mu);
  std::vector<HalfSpace> constraints;
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> omega(n);
    for (int c = 0; c < n; ++c) omega[c] = inv_cols[c][j];
    std::set<std::vector<Rational>> orbit;
    for (const auto& w : rd.weyl_group()) {
      // functional x -> omega . (w x)
      std::vector<Rational> f(n, Rational(0));
      for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) f[c] += omega[r] * w.matrix[r * n + c];
      orbit.insert(f);
    }
    for (const auto& f : orbit) constraints.push_back({f, mu_coords[j]});
  }

  // Start from the vertices W mu and cut by the walls of Delta_M one at a
  // time. A new vertex appears on every edge crossing the wall; two vertices
  // span an edge when the constraints tight at both have rank n - 1.
  std::vector<QVec> vertices;
  for (const auto& w : rd.weyl_orbit(mu)) vertices.emplace_back(w);
  for (int i : P.levi().indices()) {
    std::vector<std::vector<std::size_t>> tight(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v)
      for (std::size_t h = 0; h < constraints.size(); ++h)
        if (evaluate(constraints[h], vertices[v]) == constraints[h].rhs) tight[v].push_back(h);

    std::set<QVec> next;
    for (const auto& x : vertices)
      if (x[i] >= 0) next.insert(x);
    for (std::size_t a = 0; a < vertices.size(); ++a) {
      if (vertices[a][i] <= 0) continue;
      for (std::size_t b = 0; b < vertices.size(); ++b) {
        if (vertices[b][i] >= 0) continue;
        std::vector<std::size_t> shared;
        std::set_intersection(tight[a].begin(), tight[a].end(), tight[b].begin(), tight[b].end(),
                              std::back_inserter(shared));
        if (static_cast<int>(shared.size()) < n - 1) continue;
        std::vector<std::vector<Rational>> normals;
        for (std::size_t h : shared) normals.push_back(constraints[h].normal);
        if (rank_of(std::move(normals), n) != n - 1) continue;
        const Rational t = vertices[a][i] / (vertices[a][i] - vertices[b][i]);
        QVec x(n);
        for (int c = 0; c < n; ++c) x[c] = vertices[a][c] + t * (vertices[b][c] - vertices[a][c]);
        next.insert(x);
      }
    }
    std::vector<Rational> f(n, Rational(0));
    f[i] = -1;
    constraints.push_back({f, Rational(0)});
    vertices.assign(next.begin(), next.end());
  }
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

HullConditions hull_conditions(const ParabolicSpec& P, const Coweight& nu, const Coweight& mu) {
  const RootDatum& rd = P.datum();
  if (!P.is_M_central(nu))
    throw DomainError("hull_conditions: " + nu.to_string() + " is not annihilated by the roots of M");
  HullConditions out;
  out.geq_p = geq_P(P, nu, mu);
  const auto vertices = levi_hull_vertices(P, mu);

  out.hull_in_chamber = true;
  for (const auto& x : vertices)
    for (int i = 0; i < rd.rank(); ++i)
      if (x[i] + nu[i] < 0) out.hull_in_chamber = false;

  out.root_bounds = true;
  for (std::size_t k : P.phi_N()) {
    const auto& alpha = rd.positive_roots()[k];
    const int bound = -rd.pairing(alpha, nu);
    for (const auto& x : vertices)
      if (rd.pairing(alpha, x) < bound) out.root_bounds = false;
  }
  return out;
}

std::vector<IndexSet> all_levi_subsets(int rank) {
  std::vector<IndexSet> out;
  for (std::uint32_t b = 0; b < (1u << rank); ++b) out.push_back(IndexSet::from_bits(b));
  return out;
}

}  // namespace levibranch
