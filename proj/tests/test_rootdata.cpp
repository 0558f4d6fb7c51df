#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "levibranch/errors.hpp"
#include "levibranch/rootdata.hpp"

using namespace levibranch;

namespace {

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4",
                                         "C2", "C3", "C4", "D4", "F4", "G2"};

Coweight theta_A2() { return Coweight{1, 1}; }

}  // namespace

TEST_CASE("build: positive roots and highest root") {
  auto a1 = RootDatum::parse("A1");
  REQUIRE(a1->positive_roots().size() == 1);
  CHECK(a1->positive_roots()[0] == RootVec{1});
  CHECK(a1->highest_root_coeffs() == std::vector<int>{1});

  CHECK(RootDatum::parse("A2")->positive_roots().size() == 3);
  CHECK(RootDatum::parse("G2")->highest_root_coeffs() == std::vector<int>{3, 2});
  CHECK(RootDatum::parse("F4")->highest_root_coeffs() == std::vector<int>{2, 3, 4, 2});
  CHECK(RootDatum::parse("B3")->highest_root_coeffs() == std::vector<int>{1, 2, 2});
  CHECK(RootDatum::parse("C3")->highest_root_coeffs() == std::vector<int>{2, 2, 1});
  CHECK(RootDatum::parse("D4")->highest_root_coeffs() == std::vector<int>{1, 2, 1, 1});
}

TEST_CASE("build: unsupported data are configuration errors") {
  CHECK_THROWS_AS(RootDatum::parse("E8"), ConfigError);
  CHECK_THROWS_AS(RootDatum::parse("A6"), ConfigError);
  CHECK_THROWS_AS(RootDatum::parse("B5"), ConfigError);
  CHECK_THROWS_AS(RootDatum::parse("G3"), ConfigError);
  CHECK_THROWS_AS(RootDatum::parse("x"), ConfigError);
  CHECK_THROWS_AS(RootDatum::parse(""), ConfigError);
  CHECK(RootDatum::parse("g2")->name() == "G2");
}

TEST_CASE("root and Weyl group counts match the classification") {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> expected = {
      {"A1", {1, 2}},   {"A2", {3, 6}},   {"A3", {6, 24}},   {"A4", {10, 120}}, {"A5", {15, 720}},
      {"B2", {4, 8}},   {"B3", {9, 48}},  {"B4", {16, 384}}, {"C2", {4, 8}},    {"C3", {9, 48}},
      {"C4", {16, 384}}, {"D4", {12, 192}}, {"F4", {24, 1152}}, {"G2", {6, 12}}};
  for (const auto& [name, counts] : expected) {
    auto rd = RootDatum::parse(name);
    CAPTURE(name);
    CHECK(rd->positive_roots().size() == counts.first);
    CHECK(rd->weyl_group().size() == counts.second);
    CHECK(static_cast<std::size_t>(rd->longest_element().length) == counts.first);
  }
}

TEST_CASE("Cartan matrix shape and involutive simple reflections") {
  for (const auto& name : kTypes) {
    auto rd = RootDatum::parse(name);
    CAPTURE(name);
    const int n = rd->rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j)
          CHECK(rd->cartan(i, j) == 2);
        else
          CHECK(rd->cartan(i, j) <= 0);
      }
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
      Coweight v(n);
      for (int i = 0; i < n; ++i) v[i] = coord(rng);
      for (int i = 0; i < n; ++i) CHECK(rd->reflect(i, rd->reflect(i, v)) == v);
    }
  }
}

TEST_CASE("Bourbaki conventions for non-simply-laced types") {
  auto b2 = RootDatum::parse("B2");
  // alpha_1 long, alpha_2 short
  CHECK(b2->cartan(0, 1) == -2);
  CHECK(b2->cartan(1, 0) == -1);
  auto c2 = RootDatum::parse("C2");
  CHECK(c2->cartan(0, 1) == -1);
  CHECK(c2->cartan(1, 0) == -2);
  auto g2 = RootDatum::parse("G2");
  CHECK(g2->cartan(0, 1) == -1);
  CHECK(g2->cartan(1, 0) == -3);
}

TEST_CASE("k_phi") {
  CHECK(RootDatum::parse("A1")->k_phi() == 1);
  for (const char* a : {"A2", "A3", "A4", "A5"}) CHECK(RootDatum::parse(a)->k_phi() == 1);
  CHECK(RootDatum::parse("G2")->k_phi() == 6);
  CHECK(RootDatum::parse("B2")->k_phi() == 2);
  CHECK(RootDatum::parse("C3")->k_phi() == 2);
  CHECK(RootDatum::parse("D4")->k_phi() == 2);
  CHECK(RootDatum::parse("F4")->k_phi() == 12);
}

TEST_CASE("pairing") {
  auto a2 = RootDatum::parse("A2");
  CHECK(a2->pairing(RootVec{1, 0}, Coweight{1, 0}) == 1);
  CHECK(a2->pairing(RootVec{0, 1}, Coweight{1, 0}) == 0);
  CHECK(a2->pairing(RootVec{1, 1}, theta_A2()) == 2);
  CHECK(a2->pairing(RootVec{0, 1}, Coweight{1, 0} - theta_A2()) == -1);
  // <alpha, alpha^vee> = 2 for every root in every type
  for (const auto& name : kTypes) {
    auto rd = RootDatum::parse(name);
    for (std::size_t k = 0; k < rd->positive_roots().size(); ++k)
      CHECK(rd->pairing(rd->positive_roots()[k], rd->positive_coroots()[k]) == 2);
  }
}

TEST_CASE("weyl_orbit") {
  auto a2 = RootDatum::parse("A2");
  CHECK(a2->weyl_orbit(a2->zero()).size() == 1);
  CHECK(a2->weyl_orbit(Coweight{1, 0}).size() == 3);
  const auto roots = a2->weyl_orbit(theta_A2());
  CHECK(roots.size() == 6);
  std::set<Coweight> coroots;
  for (const auto& c : a2->positive_coroots()) {
    coroots.insert(c);
    coroots.insert(-c);
  }
  CHECK(std::set<Coweight>(roots.begin(), roots.end()) == coroots);
}

TEST_CASE("each orbit has exactly one dominant element") {
  for (const char* name : {"A3", "B3", "C3", "G2", "D4"}) {
    auto rd = RootDatum::parse(name);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
      Coweight v(rd->rank());
      for (int i = 0; i < rd->rank(); ++i) v[i] = coord(rng);
      int dominant = 0;
      const auto orbit = rd->weyl_orbit(v);
      for (const auto& w : orbit) dominant += rd->is_dominant(w);
      CHECK(dominant == 1);
      CHECK(rd->is_dominant(rd->dominant_rep(v)));
      CHECK(std::count(orbit.begin(), orbit.end(), rd->dominant_rep(v)) == 1);
      // orbit closed under simple reflections
      for (const auto& w : orbit)
        for (int i = 0; i < rd->rank(); ++i)
          CHECK(std::binary_search(orbit.begin(), orbit.end(), rd->reflect(i, w)));
    }
  }
}

TEST_CASE("is_dominant on subsets") {
  auto a2 = RootDatum::parse("A2");
  const IndexSet full = IndexSet::full(2);
  const IndexSet s1 = IndexSet::parse("1", 2);
  CHECK(a2->is_dominant(Coweight{1, 0}, full));
  CHECK(a2->is_dominant(Coweight{1, 0} - theta_A2(), s1));
  CHECK_FALSE(a2->is_dominant(Coweight{1, 0} - a2->simple_coroot(0), s1));
}

TEST_CASE("dual_star") {
  auto a1 = RootDatum::parse("A1");
  CHECK(a1->dual_star(a1->zero()) == a1->zero());
  for (int m = 0; m < 5; ++m) CHECK(a1->dual_star(Coweight{m}) == Coweight{m});
  auto a2 = RootDatum::parse("A2");
  CHECK(a2->dual_star(Coweight{1, 0}) == Coweight{0, 1});
  auto d4 = RootDatum::parse("D4");
  CHECK(d4->dual_star(Coweight{1, 0, 0, 0}) == Coweight{1, 0, 0, 0});
}

TEST_CASE("dual_star is an involution preserving rho and dominance") {
  for (const char* name : {"A1", "A2", "A3", "B2", "G2", "D4", "A4"}) {
    auto rd = RootDatum::parse(name);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coord(0, 3);
    for (int trial = 0; trial < 25; ++trial) {
      Coweight a(rd->rank()), b(rd->rank());
      for (int i = 0; i < rd->rank(); ++i) {
        a[i] = coord(rng);
        b[i] = coord(rng);
      }
      const auto as = rd->dual_star(a), bs = rd->dual_star(b);
      CHECK(rd->dual_star(as) == a);
      CHECK(rd->is_dominant(as));
      CHECK(rd->two_rho(as) == rd->two_rho(a));
      CHECK(rd->leq_dominance(a, b) == rd->leq_dominance(as, bs));
    }
  }
}

TEST_CASE("leq_dominance and in_coroot_lattice") {
  auto a1 = RootDatum::parse("A1");
  CHECK(a1->leq_dominance(Coweight{3}, Coweight{3}));
  CHECK(a1->leq_dominance(Coweight{0}, a1->simple_coroot(0)));
  auto a2 = RootDatum::parse("A2");
  CHECK_FALSE(a2->leq_dominance(Coweight{0, 0}, Coweight{1, 0}));
  CHECK(a2->leq_dominance(Coweight{0, 0}, theta_A2()));
  CHECK(a2->in_coroot_lattice(Coweight{0, 0}));
  CHECK(a2->in_coroot_lattice(theta_A2()));
  CHECK_FALSE(a2->in_coroot_lattice(Coweight{1, 0}));
  auto g2 = RootDatum::parse("G2");
  CHECK(g2->in_coroot_lattice(Coweight{1, 0}));  // adjoint = simply connected for G2
}

TEST_CASE("weyl_dim") {
  for (const auto& name : kTypes) {
    auto rd = RootDatum::parse(name);
    CHECK(rd->weyl_dim(rd->zero()) == 1);
  }
  CHECK(RootDatum::parse("A1")->weyl_dim(Coweight{1}) == 2);
  CHECK(RootDatum::parse("A2")->weyl_dim(theta_A2()) == 8);
  // dimensions are for the dual group, so long and short swap
  CHECK(RootDatum::parse("G2")->weyl_dim(Coweight{1, 0}) == 14);
  CHECK(RootDatum::parse("G2")->weyl_dim(Coweight{0, 1}) == 7);
  CHECK(RootDatum::parse("B2")->weyl_dim(Coweight{1, 0}) == 4);
  CHECK(RootDatum::parse("B2")->weyl_dim(Coweight{0, 1}) == 5);
  CHECK(RootDatum::parse("C2")->weyl_dim(Coweight{1, 0}) == 5);
  CHECK(RootDatum::parse("F4")->weyl_dim(Coweight{0, 0, 0, 1}) == 52);
  CHECK(RootDatum::parse("F4")->weyl_dim(Coweight{1, 0, 0, 0}) == 26);
  CHECK(RootDatum::parse("A3")->weyl_dim(Coweight{0, 1, 0}) == 6);
  CHECK(RootDatum::parse("D4")->weyl_dim(Coweight{0, 1, 0, 0}) == 28);
  CHECK_THROWS_AS(RootDatum::parse("A2")->weyl_dim(Coweight{-1, 0}), DomainError);
}

TEST_CASE("rho pairs to one with every simple coroot") {
  for (const auto& name : kTypes) {
    auto rd = RootDatum::parse(name);
    CAPTURE(name);
    for (int i = 0; i < rd->rank(); ++i) CHECK(rd->rho(rd->simple_coroot(i)) == Rational(1));
    // cross-check against the explicit half-sum of positive roots
    std::vector<Rational> half(rd->rank(), Rational(0));
    for (const auto& a : rd->positive_roots())
      for (int i = 0; i < rd->rank(); ++i) half[i] += Rational(a[i], 2);
    for (int j = 0; j < rd->rank(); ++j) {
      const Coweight w = rd->fundamental_coweight(j);
      CHECK(rd->rho(w) == half[j]);
    }
  }
}

TEST_CASE("IndexSet parsing") {
  CHECK(IndexSet::parse("1,3", 3).indices() == std::vector<int>{0, 2});
  CHECK(IndexSet::parse("", 3).empty());
  CHECK(IndexSet::parse("none", 3).empty());
  CHECK(IndexSet::parse(" 2 ", 3).indices() == std::vector<int>{1});
  CHECK(IndexSet::parse("1,3", 3).to_string() == "1,3");
  CHECK_THROWS_AS(IndexSet::parse("4", 3), ConfigError);
  CHECK_THROWS_AS(IndexSet::parse("0", 3), ConfigError);
  CHECK_THROWS_AS(IndexSet::parse("a", 3), ConfigError);
}

TEST_CASE("parse_coweight") {
  CHECK(parse_coweight("1,-2", 2) == Coweight{1, -2});
  CHECK(parse_coweight(" 3 ", 1) == Coweight{3});
  CHECK_THROWS_AS(parse_coweight("1,2", 3), ConfigError);
  CHECK_THROWS_AS(parse_coweight("1,x", 2), ConfigError);
}
