#pragma once

// Explicit (q+1)-regular tree: the building of PGL_2 over a local field with
// residue field of size q. Used as an independent source of rank-one point
// counts.

#include <cstdint>
#include <vector>

namespace oracle {

class RegularTree {
 public:
  // Ball of radius `depth` around the root 0.
  RegularTree(int q, int depth) : q_(q) {
    parent_.push_back(-1);
    depth_.push_back(0);
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (depth_[v] == depth) continue;
      const int children = v == 0 ? q + 1 : q;
      for (int c = 0; c < children; ++c) {
        parent_.push_back(static_cast<int>(v));
        depth_.push_back(depth_[v] + 1);
      }
    }
  }

  int q() const { return q_; }
  int size() const { return static_cast<int>(parent_.size()); }
  int depth(int v) const { return depth_[v]; }
  int parent(int v) const { return parent_[v]; }

  int distance(int a, int b) const {
    int d = 0;
    while (a != b) {
      if (depth_[a] >= depth_[b]) {
        a = parent_[a];
      } else {
        b = parent_[b];
      }
      ++d;
    }
    return d;
  }

  // A vertex at distance `d` from the root, following first children: the
  // ray r_0 = 0, r_1, r_2, ...
  int ray(int d) const {
    int v = 0;
    for (int k = 0; k < d; ++k) v = first_child(v);
    return v;
  }

  // Busemann function of the ray: lim_n d(y, r_n) - n, evaluated with a ray
  // point far enough out (requires depth(y) + 1 <= ray length used).
  int busemann(int y, int ray_length) const { return distance(y, ray(ray_length)) - ray_length; }

  // #{y : d(o, y) = a, d(y, z) = b} for a fixed z with d(o, z) = c.
  std::int64_t triangle_count(int a, int b, int c) const {
    const int z = ray(c);
    std::int64_t n = 0;
    for (int y = 0; y < size(); ++y)
      if (depth_[y] == a && distance(y, z) == b) ++n;
    return n;
  }

  std::int64_t sphere_size(int m) const {
    std::int64_t n = 0;
    for (int y = 0; y < size(); ++y) n += depth_[y] == m;
    return n;
  }

  // #{y : d(o, y) = m, busemann(y) = k}: the horocycle count |N x_k cap K x_m|.
  std::int64_t horocycle_count(int m, int k, int ray_length) const {
    std::int64_t n = 0;
    for (int y = 0; y < size(); ++y)
      if (depth_[y] == m && busemann(y, ray_length) == k) ++n;
    return n;
  }

 private:
  int first_child(int v) const {
    for (int w = v + 1; w < size(); ++w)
      if (parent_[w] == v) return w;
    return -1;
  }

  int q_;
  std::vector<int> parent_;
  std::vector<int> depth_;
};

// Number of points of the projective space P^{n-1}(F_p) for a prime p, by
// normalizing nonzero vectors of F_p^n.
inline std::int64_t projective_points(int p, int n) {
  std::int64_t count = 0;
  std::vector<int> v(n, 0);
  while (true) {
    int k = 0;
    while (k < n && v[k] == 0) ++k;
    if (k < n && v[k] == 1) ++count;  // first nonzero entry normalized to 1
    int i = 0;
    while (i < n && v[i] == p - 1) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
  return count;
}

}  // namespace oracle
