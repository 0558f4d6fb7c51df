#include "levibranch/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "levibranch/errors.hpp"

namespace levibranch {

std::string to_string(CartanType t) {
  static const char* names = "ABCDEFG";
  return std::string(1, names[static_cast<int>(t)]);
}

IndexSet IndexSet::parse(const std::string& text, int rank) {
  IndexSet s;
  if (text.empty() || text == "none" || text == "-") return s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int i = 0;
    try {
      i = std::stoi(item);
    } catch (const std::logic_error&) {
      throw ConfigError("malformed index list '" + text + "'");
    }
    if (i < 1 || i > rank)
      throw ConfigError("simple-root index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
    s = s.with(i - 1);
  }
  return s;
}

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string IndexSet::to_string() const {
  std::string s;
  for (int i : indices()) {
    if (!s.empty()) s += ',';
    s += std::to_string(i + 1);
  }
  return s;
}

Coweight WeylElement::apply(const Coweight& v) const {
  const int r = v.rank();
  Coweight out(r);
  for (int i = 0; i < r; ++i) {
    int s = 0;
    for (int j = 0; j < r; ++j) s += matrix[i * r + j] * v[j];
    out[i] = s;
  }
  return out;
}

QVec WeylElement::apply(const QVec& v) const {
  const int r = v.rank();
  QVec out(r);
  for (int i = 0; i < r; ++i) {
    Rational s = 0;
    for (int j = 0; j < r; ++j) s += matrix[i * r + j] * v[j];
    out[i] = s;
  }
  return out;
}

struct RootDatum::SubgroupCache {
  std::mutex mu;
  std::map<std::uint32_t, std::shared_ptr<const std::vector<WeylElement>>> groups;
};

namespace {

std::vector<int> cartan_matrix(CartanType type, int n) {
  std::vector<int> a(n * n, 0);
  auto at = [&](int i, int j) -> int& { return a[i * n + j]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  auto link = [&](int i, int j) { at(i, j) = at(j, i) = -1; };
  switch (type) {
    case CartanType::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case CartanType::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 2, n - 1) = -2;  // alpha_n short
      break;
    case CartanType::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 1, n - 2) = -2;  // alpha_n long
      break;
    case CartanType::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case CartanType::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      at(1, 2) = -2;  // alpha_1, alpha_2 long
      break;
    case CartanType::G:
      at(0, 1) = -1;  // alpha_1 short
      at(1, 0) = -3;
      break;
    case CartanType::E:
      break;
  }
  return a;
}

bool supported(CartanType type, int rank) {
  switch (type) {
    case CartanType::A: return rank >= 1 && rank <= 5;
    case CartanType::B:
    case CartanType::C: return rank >= 2 && rank <= 4;
    case CartanType::D: return rank == 4;
    case CartanType::F: return rank == 4;
    case CartanType::G: return rank == 2;
    case CartanType::E: return false;
  }
  return false;
}

std::vector<Rational> invert(const std::vector<int>& m, int n) {
  std::vector<Rational> a(n * 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * 2 * n + j] = m[i * n + j];
    a[i * 2 * n + n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (a[piv * 2 * n + col] == 0) ++piv;
    for (int j = 0; j < 2 * n; ++j) std::swap(a[col * 2 * n + j], a[piv * 2 * n + j]);
    Rational p = a[col * 2 * n + col];
    for (int j = 0; j < 2 * n; ++j) a[col * 2 * n + j] /= p;
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i * 2 * n + col] == 0) continue;
      Rational f = a[i * 2 * n + col];
      for (int j = 0; j < 2 * n; ++j) a[i * 2 * n + j] -= f * a[col * 2 * n + j];
    }
  }
  std::vector<Rational> inv(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i * n + j] = a[i * 2 * n + n + j];
  return inv;
}

std::vector<WeylElement> close_under(const std::vector<std::vector<int>>& gens, int n,
                                     const std::function<int(const std::vector<int>&)>& length) {
  std::vector<int> id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> order{id};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& g : gens) {
      std::vector<int> prod(n * n, 0);
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
          int gil = g[i * n + l];
          if (gil == 0) continue;
          for (int j = 0; j < n; ++j) prod[i * n + j] += gil * order[k][l * n + j];
        }
      if (seen.insert(prod).second) order.push_back(std::move(prod));
    }
  }
  std::vector<WeylElement> out;
  out.reserve(order.size());
  for (auto& m : order) {
    int len = length(m);
    out.push_back(WeylElement{std::move(m), len});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const WeylElement& a, const WeylElement& b) { return a.length < b.length; });
  return out;
}

}  // namespace

std::shared_ptr<const RootDatum> RootDatum::build(CartanType type, int rank) {
  if (!supported(type, rank))
    throw ConfigError("unsupported root datum " + to_string(type) + std::to_string(rank));
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const RootDatum>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(static_cast<int>(type), rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const RootDatum> rd(new RootDatum(type, rank));
  cache.emplace(key, rd);
  return rd;
}

std::shared_ptr<const RootDatum> RootDatum::parse(const std::string& name) {
  if (name.size() < 2) throw ConfigError("malformed root datum '" + name + "'");
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (t < 'A' || t > 'G') throw ConfigError("unknown Cartan type '" + name + "'");
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw std::invalid_argument(name);
  } catch (const std::logic_error&) {
    throw ConfigError("malformed root datum '" + name + "'");
  }
  return build(static_cast<CartanType>(t - 'A'), rank);
}

RootDatum::RootDatum(CartanType type, int rank)
    : type_(type),
      rank_(rank),
      name_(to_string(type) + std::to_string(rank)),
      cartan_(cartan_matrix(type, rank)),
      subgroups_(std::make_shared<SubgroupCache>()) {
  cartan_inverse_ = invert(cartan_, rank_);

  // Positive roots and their coroots by closure under simple reflections.
  std::map<RootVec, Coweight> found;
  std::vector<RootVec> queue;
  for (int i = 0; i < rank_; ++i) {
    RootVec r = RootVec::unit(rank_, i);
    found.emplace(r, simple_coroot(i));
    queue.push_back(r);
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    RootVec beta = queue[k];
    Coweight beta_vee = found.at(beta);
    for (int j = 0; j < rank_; ++j) {
      int p = 0;  // <beta, alpha_j^vee>
      for (int l = 0; l < rank_; ++l) p += beta[l] * cartan(l, j);
      if (p == 0) continue;
      RootVec image = beta;
      image[j] -= p;
      bool positive = true;
      for (int l = 0; l < rank_; ++l) positive &= image[l] >= 0;
      if (!positive || image.is_zero()) continue;
      if (found.count(image)) continue;
      found.emplace(image, reflect(j, beta_vee));
      queue.push_back(image);
    }
  }
  std::vector<std::pair<RootVec, Coweight>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.first.height() < b.first.height();
  });
  for (auto& [r, c] : sorted) {
    positive_roots_.push_back(r);
    positive_coroots_.push_back(c);
  }
  const RootVec& top = positive_roots_.back();
  for (const auto& r : positive_roots_)
    if (r.height() == top.height() && !(r == top))
      throw InternalError("highest root is not unique");
  highest_root_coeffs_.assign(top.coords().begin(), top.coords().end());

  std::vector<std::vector<int>> gens;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> m(rank_ * rank_, 0);
    for (int k = 0; k < rank_; ++k) m[k * rank_ + k] = 1;
    for (int k = 0; k < rank_; ++k) m[k * rank_ + i] -= cartan(k, i);
    gens.push_back(std::move(m));
  }
  Coweight regular(rank_);
  for (int i = 0; i < rank_; ++i) regular[i] = 1;
  auto length = [&](const std::vector<int>& m) {
    WeylElement w{m, 0};
    Coweight image = w.apply(regular);
    int len = 0;
    for (const auto& a : positive_roots_) len += pairing(a, image) < 0;
    return len;
  };
  weyl_ = close_under(gens, rank_, length);
  longest_ = weyl_.size() - 1;
  if (static_cast<std::size_t>(weyl_[longest_].length) != positive_roots_.size())
    throw InternalError("longest Weyl element has the wrong length");
}

Coweight RootDatum::simple_coroot(int j) const {
  Coweight v(rank_);
  for (int i = 0; i < rank_; ++i) v[i] = cartan(i, j);
  return v;
}

int RootDatum::pairing(const RootVec& root, const Coweight& v) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += root[i] * v[i];
  return s;
}

Rational RootDatum::pairing(const RootVec& root, const QVec& v) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i)
    if (root[i]) s += root[i] * v[i];
  return s;
}

int RootDatum::two_rho(const Coweight& v) const {
  int s = 0;
  for (const auto& a : positive_roots_) s += pairing(a, v);
  return s;
}

int RootDatum::k_phi() const {
  int l = 1;
  for (int a : highest_root_coeffs_) l = std::lcm(l, a);
  return l;
}

Coweight RootDatum::reflect(int i, Coweight v) const {
  const int p = v[i];
  if (p != 0)
    for (int k = 0; k < rank_; ++k) v[k] -= p * cartan(k, i);
  return v;
}

QVec RootDatum::reflect(int i, QVec v) const {
  const Rational p = v[i];
  if (p != 0)
    for (int k = 0; k < rank_; ++k) v[k] -= p * cartan(k, i);
  return v;
}

Coweight RootDatum::reflect_by_root(std::size_t root_index, const Coweight& v) const {
  const int p = pairing(positive_roots_[root_index], v);
  return v - p * positive_coroots_[root_index];
}

const std::vector<WeylElement>& RootDatum::weyl_subgroup(IndexSet subset) const {
  if (subset == IndexSet::full(rank_)) return weyl_;
  std::lock_guard lock(subgroups_->mu);
  auto it = subgroups_->groups.find(subset.bits());
  if (it != subgroups_->groups.end()) return *it->second;
  std::vector<std::vector<int>> gens;
  for (int i : subset.indices()) {
    std::vector<int> m(rank_ * rank_, 0);
    for (int k = 0; k < rank_; ++k) m[k * rank_ + k] = 1;
    for (int k = 0; k < rank_; ++k) m[k * rank_ + i] -= cartan(k, i);
    gens.push_back(std::move(m));
  }
  Coweight regular(rank_);
  for (int i = 0; i < rank_; ++i) regular[i] = 1;
  auto length = [&](const std::vector<int>& m) {
    WeylElement w{m, 0};
    Coweight image = w.apply(regular);
    int len = 0;
    for (const auto& a : positive_roots_) len += pairing(a, image) < 0;
    return len;
  };
  auto group = std::make_shared<const std::vector<WeylElement>>(close_under(gens, rank_, length));
  subgroups_->groups.emplace(subset.bits(), group);
  return *group;
}

const WeylElement& RootDatum::longest_element() const { return weyl_[longest_]; }

std::vector<Coweight> RootDatum::weyl_orbit(const Coweight& v) const {
  return weyl_orbit(v, IndexSet::full(rank_));
}

std::vector<Coweight> RootDatum::weyl_orbit(const Coweight& v, IndexSet subset) const {
  std::set<Coweight> seen{v};
  std::vector<Coweight> queue{v};
  const auto idx = subset.indices();
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int i : idx) {
      if (queue[k][i] == 0) continue;
      Coweight w = reflect(i, queue[k]);
      if (seen.insert(w).second) queue.push_back(w);
    }
  return {seen.begin(), seen.end()};
}

RootDatum::Straightened RootDatum::dominant_rep(Coweight v, IndexSet subset) const {
  int sign = 1;
  const auto idx = subset.indices();
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : idx)
      if (v[i] < 0) {
        v = reflect(i, v);
        sign = -sign;
        moved = true;
      }
  }
  return {v, sign};
}

Coweight RootDatum::dominant_rep(const Coweight& v) const {
  return dominant_rep(v, IndexSet::full(rank_)).dominant;
}

bool RootDatum::is_dominant(const Coweight& v, IndexSet subset) const {
  for (int i : subset.indices())
    if (v[i] < 0) return false;
  return true;
}

Coweight RootDatum::dual_star(const Coweight& v) const { return -longest_element().apply(v); }

std::vector<Rational> RootDatum::coroot_coords(const Coweight& v) const {
  std::vector<Rational> k(rank_);
  for (int i = 0; i < rank_; ++i) {
    Rational s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_inverse_[i * rank_ + j] * v[j];
    k[i] = s;
  }
  return k;
}

bool RootDatum::in_coroot_lattice(const Coweight& v) const {
  for (const auto& k : coroot_coords(v))
    if (k.denominator() != 1) return false;
  return true;
}

bool RootDatum::leq_dominance(const Coweight& mu0, const Coweight& mu) const {
  for (const auto& k : coroot_coords(mu - mu0))
    if (k.denominator() != 1 || k < 0) return false;
  return true;
}

std::int64_t RootDatum::weyl_dim(const Coweight& mu) const {
  if (!is_dominant(mu)) throw DomainError("weyl_dim: " + mu.to_string() + " is not dominant");
  Rational d = 1;
  for (const auto& a : positive_roots_) {
    int num = 0, den = 0;
    for (int i = 0; i < rank_; ++i) {
      num += a[i] * (mu[i] + 1);
      den += a[i];
    }
    d *= Rational(num, den);
  }
  if (d.denominator() != 1) throw InternalError("Weyl dimension is not integral");
  return d.numerator();
}

}  // namespace levibranch
