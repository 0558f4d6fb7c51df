#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "levibranch/rational.hpp"

namespace levibranch {

inline constexpr int kMaxRank = 6;

// Fixed-capacity integer vector tagged by the lattice it lives in, so that a
// coweight cannot be passed where simple-root coordinates are expected.
template <class Tag>
class LatticeVec {
 public:
  LatticeVec() = default;
  explicit LatticeVec(int rank) : rank_(rank) {}
  LatticeVec(std::initializer_list<int> coords) {
    for (int x : coords) c_[rank_++] = x;
  }
  static LatticeVec from(std::span<const int> coords) {
    LatticeVec v(static_cast<int>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) v.c_[i] = coords[i];
    return v;
  }
  static LatticeVec unit(int rank, int i) {
    LatticeVec v(rank);
    v.c_[i] = 1;
    return v;
  }

  int rank() const { return rank_; }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  std::span<const int> coords() const { return {c_.data(), static_cast<std::size_t>(rank_)}; }

  bool is_zero() const {
    for (int i = 0; i < rank_; ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  // Sum of coordinates.
  int height() const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) s += c_[i];
    return s;
  }

  LatticeVec& operator+=(const LatticeVec& o) {
    for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticeVec& operator-=(const LatticeVec& o) {
    for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  friend LatticeVec operator-(LatticeVec a) {
    for (int i = 0; i < a.rank_; ++i) a.c_[i] = -a.c_[i];
    return a;
  }
  friend LatticeVec operator*(int k, LatticeVec a) {
    for (int i = 0; i < a.rank_; ++i) a.c_[i] *= k;
    return a;
  }

  friend bool operator==(const LatticeVec& a, const LatticeVec& b) {
    if (a.rank_ != b.rank_) return false;
    for (int i = 0; i < a.rank_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend std::strong_ordering operator<=>(const LatticeVec& a, const LatticeVec& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    for (int i = 0; i < a.rank_; ++i)
      if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(rank_);
    for (int i = 0; i < rank_; ++i)
      h = h * 1000003u ^ static_cast<std::size_t>(static_cast<std::uint32_t>(c_[i]));
    return h;
  }

  // "1,0,-2"
  std::string to_string() const {
    std::string s;
    for (int i = 0; i < rank_; ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s;
  }

 private:
  std::array<int, kMaxRank> c_{};
  int rank_ = 0;
};

struct CoweightTag {};
struct RootTag {};

// Coordinates in the fundamental-coweight basis: coords[i] = <alpha_i, nu>.
using Coweight = LatticeVec<CoweightTag>;
// Coordinates in the simple-root basis.
using RootVec = LatticeVec<RootTag>;

struct LatticeHash {
  template <class Tag>
  std::size_t operator()(const LatticeVec<Tag>& v) const {
    return v.hash();
  }
};

// Parses "1,0,2" (whitespace tolerated). Throws ConfigError.
Coweight parse_coweight(const std::string& text, int rank);

// Rational vector in the coweight basis, used for points on LS paths and
// polytope vertices.
class QVec {
 public:
  QVec() = default;
  explicit QVec(int rank) : rank_(rank) {}
  explicit QVec(const Coweight& v) : rank_(v.rank()) {
    for (int i = 0; i < rank_; ++i) c_[i] = v[i];
  }
  int rank() const { return rank_; }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }

  QVec& operator+=(const QVec& o) {
    for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  QVec& add_scaled(const Rational& k, const Coweight& v) {
    for (int i = 0; i < rank_; ++i) c_[i] += k * v[i];
    return *this;
  }
  friend QVec operator+(QVec a, const QVec& b) { return a += b; }
  friend bool operator==(const QVec& a, const QVec& b) {
    if (a.rank_ != b.rank_) return false;
    for (int i = 0; i < a.rank_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator<(const QVec& a, const QVec& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    for (int i = 0; i < a.rank_; ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }
  bool is_integral() const {
    for (int i = 0; i < rank_; ++i)
      if (c_[i].denominator() != 1) return false;
    return true;
  }
  // Requires is_integral().
  Coweight to_coweight() const;

 private:
  std::array<Rational, kMaxRank> c_{};
  int rank_ = 0;
};

}  // namespace levibranch

template <class Tag>
struct std::hash<levibranch::LatticeVec<Tag>> {
  std::size_t operator()(const levibranch::LatticeVec<Tag>& v) const { return v.hash(); }
};
