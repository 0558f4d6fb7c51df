#pragma once

// Brute-force vertex enumeration of Conv(W mu) cap Delta_M: solve every
// n-subset of the defining inequalities and keep the feasible solutions.

#include <optional>
#include <set>
#include <vector>

#include "levibranch/parabolic.hpp"

namespace oracle {

using levibranch::QVec;
using levibranch::Rational;

struct HalfSpace {
  std::vector<Rational> normal;  // f . x <= rhs
  Rational rhs;
};

inline std::optional<QVec> solve_square(const std::vector<const HalfSpace*>& rows, int n) {
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = rows[i]->normal[j];
    a[i][n] = rows[i]->rhs;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[col], a[piv]);
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[col][col];
      for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  QVec x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

inline std::vector<QVec> hull_vertices_brute_force(const levibranch::ParabolicSpec& P,
                                                   const levibranch::Coweight& mu) {
  const auto& rd = P.datum();
  const int n = rd.rank();
  std::vector<HalfSpace> constraints;
  const auto mu_coords = rd.coroot_coords(mu);
  for (int j = 0; j < n; ++j) {
    // the fundamental weight omega_j evaluated on coweight coordinates
    std::vector<Rational> omega(n);
    for (int c = 0; c < n; ++c) omega[c] = rd.coroot_coords(levibranch::Coweight::unit(n, c))[j];
    std::set<std::vector<Rational>> orbit;
    for (const auto& w : rd.weyl_group()) {
      std::vector<Rational> f(n, Rational(0));
      for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) f[c] += omega[r] * w.matrix[r * n + c];
      orbit.insert(f);
    }
    for (const auto& f : orbit) constraints.push_back({f, mu_coords[j]});
  }
  for (int i : P.levi().indices()) {
    std::vector<Rational> f(n, Rational(0));
    f[i] = -1;
    constraints.push_back({f, Rational(0)});
  }

  std::set<QVec> vertices;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  const int m = static_cast<int>(constraints.size());
  while (true) {
    std::vector<const HalfSpace*> rows;
    for (int i : pick) rows.push_back(&constraints[i]);
    if (auto x = solve_square(rows, n)) {
      bool feasible = true;
      for (const auto& h : constraints) {
        Rational s = 0;
        for (int c = 0; c < n; ++c) s += h.normal[c] * (*x)[c];
        if (s > h.rhs) {
          feasible = false;
          break;
        }
      }
      if (feasible) vertices.insert(*x);
    }
    int k = n - 1;
    while (k >= 0 && pick[k] == m - n + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int l = k + 1; l < n; ++l) pick[l] = pick[l - 1] + 1;
  }
  return {vertices.begin(), vertices.end()};
}

}  // namespace oracle
