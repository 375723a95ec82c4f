#include <doctest.h>

#include <set>

#include "ba/feasibility.hpp"
#include "support.hpp"

using namespace testsupport;
using config::Family;

namespace {

int cnlm_M(int n, int l, int m) {
  int ratio = n >= 3 ? (2 * l + 1) / (2 * m + 1) : 0;
  return (2 + l) * (n - 1) + m + (n - 1) * (n - 2) * ratio;
}

}  // namespace

TEST_CASE("family builders reproduce the multiplicity tables") {
  auto c = family(Family::Cnlm, 3, 1, 1);
  CHECK(c.entries().size() == 9);
  CHECK(c.total_multiplicity() == cnlm_M(3, 1, 1));
  CHECK(family(Family::Cnlm, 2, 1, 1).entries().size() == 4);
  CHECK(family(Family::Cnlm, 2, 1, 1).total_multiplicity() == 4);
  CHECK(family(Family::Cnlm, 3, 4, 1).total_multiplicity() == cnlm_M(3, 4, 1));
  CHECK(family(Family::Cnlm, 2, 2, 1).total_multiplicity() == cnlm_M(2, 2, 1));
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m) {
      CHECK(family(Family::An1, n, 0, m).total_multiplicity() == m * n * (n - 1) / 2 + n);
      CHECK(family(Family::An2, n, 0, m).total_multiplicity() == m * (n - 1) * (n - 2) / 2 + 2 * n - 1);
      config::FamilyParams p{Family::An1, n, 0, m, {}};
      CHECK(config::family_iterations(p) == family(Family::An1, n, 0, m).total_multiplicity());
      p.family = Family::An2;
      CHECK(config::family_iterations(p) == family(Family::An2, n, 0, m).total_multiplicity());
    }
  CHECK(family(Family::An2, 2, 0, 1).entries().size() == 3);
  CHECK(family(Family::An2, 2, 0, Rational(1, 2)).total_multiplicity() == 3);
}

TEST_CASE("invalid configurations are rejected") {
  WeightedBasis b({1, 1});
  using V = ConfigVector;
  CHECK_THROWS_AS(config::Configuration(b, {{V({1, 0}), 1}, {V({2, 0}), 1}}), Error);   // parallel
  CHECK_THROWS_AS(config::Configuration(b, {{V({1, 0}), 1}, {V({-1, 0}), 1}}), Error);  // antiparallel
  CHECK_THROWS_AS(config::Configuration(b, {{V({0, 0}), 1}}), Error);                   // zero
  CHECK_THROWS_AS(config::Configuration(b, {{V({1, 0}), 0}}), Error);                   // multiplicity
  WeightedBasis lorentz({1, -1});
  CHECK_THROWS_AS(config::Configuration(lorentz, {{V({1, 1}), 1}}), Error);  // isotropic
  CHECK_THROWS_AS(family(Family::An2, 3, 0, Rational(1, 2)), Error);
  CHECK_THROWS_AS(family(Family::Cnlm, 3, 1, 2), Error);  // 3/5 not integral
  CHECK_THROWS_AS(WeightedBasis({1, 0}), Error);
}

TEST_CASE("positive systems: counts, negation closure, witnesses, edges") {
  struct Case {
    config::Configuration c;
    std::size_t chambers;
  };
  std::vector<Case> cases{{family(Family::RootA, 2, 0, 1), 6},   {family(Family::RootA, 3, 0, 1), 24},
                          {family(Family::Cnlm, 2, 1, 1), 8},     {family(Family::Cnlm, 3, 1, 1), 48},
                          {family(Family::An1, 2, 0, 2), 0},      {family(Family::An2, 2, 0, 1), 0}};
  for (auto& [c, chambers] : cases) {
    CAPTURE(c.descriptor());
    auto systems = config::enumerate_positive_systems(c);
    if (chambers) CHECK(systems.size() == chambers);
    std::set<std::vector<int>> signs;
    for (const auto& p : systems) {
      CHECK(config::verify_witness(c, p));
      signs.insert(p.signs);
    }
    CHECK(signs.size() == systems.size());
    for (const auto& s : signs) {
      std::vector<int> neg = s;
      for (auto& x : neg) x = -x;
      CHECK(signs.count(neg) == 1);
    }
    std::vector<bool> edge_somewhere(c.entries().size(), false);
    for (const auto& p : systems)
      for (auto e : config::edge_vectors(c, p)) edge_somewhere[e] = true;
    for (std::size_t i = 0; i < edge_somewhere.size(); ++i) CHECK(edge_somewhere[i]);
  }
}

TEST_CASE("planar arrangements have twice as many systems as lines") {
  std::mt19937 g(kSeed + 11);
  int tested = 0;
  while (tested < 40) {
    WeightedBasis b = random_basis(g, 2);
    std::vector<config::Entry> es;
    std::uniform_int_distribution<int> count(1, 5);
    int k = count(g);
    for (int i = 0; i < k; ++i) {
      ConfigVector v = random_vector(g, 2, false);
      bool ok = b.norm2(v) != 0;
      for (const auto& e : es) ok = ok && algebra::parallel_ratio(v, e.vec) == 0;
      if (ok) es.push_back({v, 1});
    }
    config::Configuration c(b, es);
    CHECK(config::enumerate_positive_systems(c).size() == 2 * es.size());
    ++tested;
  }
}

TEST_CASE("Fourier-Motzkin certificates are exact") {
  std::mt19937 g(kSeed + 12);
  for (int t = 0; t < 1000; ++t) {
    std::vector<config::Inequality> rows;
    for (int r = 0; r < 4; ++r) {
      config::Inequality q;
      for (int i = 0; i < 3; ++i) q.a.push_back(small_rational(g, 3));
      q.b = small_rational(g, 3);
      rows.push_back(q);
    }
    auto u = config::find_feasible_point(rows, 3);
    if (u) {
      for (const auto& r : rows) {
        Rational lhs = 0;
        for (int i = 0; i < 3; ++i) lhs += r.a[i] * (*u)[i];
        REQUIRE(lhs >= r.b);
      }
    }
  }
  // x >= 1 and -x >= 0 is infeasible
  CHECK(!config::find_feasible_point({{{1}, 1}, {{-1}, 0}}, 1));
}
