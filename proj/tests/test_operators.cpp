#include <doctest.h>

#include "ba/family_operators.hpp"
#include "ba/operator.hpp"
#include "support.hpp"

using namespace testsupport;
using algebra::RationalFn;
using config::Family;
using ops::DifferenceOperator;

namespace {

// 1 − c/lin
RationalFn one_minus(const Rational& c, const Poly& lin, std::size_t d) {
  return RationalFn::constant(1) - RationalFn::over_linear(Poly::constant(c), lin, d);
}

Poly k(std::size_t i) { return Poly::kvar(i); }

DifferenceOperator random_poly_operator(std::mt19937& g, std::size_t dim) {
  DifferenceOperator op;
  for (int t = 0; t < 3; ++t) op.add_term(random_vector(g, dim), RationalFn(random_poly(g, dim, 2, 1, true, false)));
  return op;
}

// κ_j → −κ_j on numerator and every denominator factor, and τ_j → −τ_j.
Poly flip(const Poly& p, std::size_t j) {
  Poly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, m.k[j] % 2 ? Rational(-c) : c);
  return out;
}

DifferenceOperator reflect(const DifferenceOperator& d, std::size_t j, std::size_t dim) {
  DifferenceOperator out;
  for (const auto& [tau, a] : d.terms()) {
    RationalFn b(flip(a.num(), j));
    for (const auto& [form, mult] : a.factors())
      for (int i = 0; i < mult; ++i) b = b * RationalFn::over_linear(Poly::constant(1), flip(form.to_poly(), j), dim);
    ConfigVector t = tau;
    t[j] = -t[j];
    out.add_term(t, b);
  }
  return out;
}

}  // namespace

TEST_CASE("composition agrees with successive application") {
  std::mt19937 g(kSeed + 21);
  for (int t = 0; t < 1000; ++t) {
    auto b = random_basis(g, 2);
    DifferenceOperator x = random_poly_operator(g, 2), y = random_poly_operator(g, 2);
    Poly e = random_poly(g, 2, 3, 2, true, true);
    REQUIRE(ops::apply(ops::compose(x, y, b), e, b) == ops::apply(x, ops::apply(y, e, b), b));
    // linearity in both arguments
    Poly f = random_poly(g, 2, 2, 1, true, true);
    Rational s = small_rational(g);
    REQUIRE(ops::apply(x, e + s * f, b) == ops::apply(x, e, b) + s * ops::apply(x, f, b));
    REQUIRE(ops::apply(x + y, e, b) == ops::apply(x, e, b) + ops::apply(y, e, b));
  }
}

TEST_CASE("composition with rational coefficients on the BA chain") {
  for (auto c : {family(Family::Cnlm, 2, 1, 1), family(Family::An2, 2, 0, 1)}) {
    CAPTURE(c.descriptor());
    auto d = ops::family_operator(c);
    auto phi0 = construct::initial_phi0(c);
    CHECK(ops::apply(ops::compose(d, d, c.basis()), phi0, c.basis()) ==
          ops::apply(d, ops::apply(d, phi0, c.basis()), c.basis()));
  }
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937 g(kSeed + 22);
  for (int t = 0; t < 50; ++t) {
    Poly a = random_poly(g, 3, 40, 3, true, true), b = random_poly(g, 3, 40, 3, true, true);
    REQUIRE(kernels::multiply(a, b, kernels::Exec::Serial) == kernels::multiply(a, b, kernels::Exec::Parallel));
    REQUIRE(kernels::multiply(a, b, kernels::Exec::Serial) == a * b);
  }
  auto c = family(Family::Cnlm, 2, 1, 1);
  auto d = ops::family_operator(c);
  auto phi0 = construct::initial_phi0(c);
  CHECK(ops::apply(d, phi0, c.basis(), kernels::Exec::Serial) == ops::apply(d, phi0, c.basis(), kernels::Exec::Parallel));
}

TEST_CASE("application off the holomorphic class reports NotHolomorphic") {
  WeightedBasis b({1, 1});
  DifferenceOperator op = DifferenceOperator::shift(ConfigVector({1, 0}), RationalFn::over_linear(Poly::constant(1), k(0), 2));
  try {
    (void)ops::apply(op, Poly::constant(1), b);
    FAIL("expected NotHolomorphic");
  } catch (const algebra::ResidualError& e) {
    CHECK(e.kind() == ErrorKind::NotHolomorphic);
    CHECK(!e.remainder().is_zero());
  }
}

TEST_CASE("commutator is antisymmetric and vanishes on multiplication operators") {
  std::mt19937 g(kSeed + 23);
  for (int t = 0; t < 200; ++t) {
    auto b = random_basis(g, 2);
    DifferenceOperator x = random_poly_operator(g, 2), y = random_poly_operator(g, 2);
    REQUIRE(ops::equivalent(ops::commutator(x, y, b), Rational(-1) * ops::commutator(y, x, b)));
    auto p = DifferenceOperator::multiplication(RationalFn(random_poly(g, 2, 2, 2, true, false)), 2);
    auto q = DifferenceOperator::multiplication(RationalFn(random_poly(g, 2, 2, 2, true, false)), 2);
    REQUIRE(ops::commutator(p, q, b).is_zero());
  }
}

TEST_CASE("A_{2,1}(1) operator equals the hand-written A_2 Macdonald operator") {
  DifferenceOperator oracle;
  for (std::size_t i = 0; i < 3; ++i) {
    RationalFn a = RationalFn::constant(1);
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) a = a * one_minus(2, k(i) - k(j), 3);
    oracle.add_term(ConfigVector::unit(3, i, 2), a);
  }
  CHECK(ops::equivalent(ops::build_a_n1_op(2, 1), oracle));
  auto root = config::root_a(2, 1);
  std::vector<config::Entry> dual;
  for (const auto& e : root.entries()) dual.push_back({Rational(1, 2) * e.vec, 1});
  CHECK(ops::equivalent(ops::build_macdonald(root.basis(), dual, ConfigVector::unit(3, 0, 2)), oracle));
  CHECK(ops::weyl_orbit(root.basis(), dual, ConfigVector::unit(3, 0, 2)).size() == 3);
  CHECK(!ops::equivalent(ops::build_a_n1_op(2, 2), oracle));
}

TEST_CASE("(2m+1) times the C_n(m,m) operator equals the hand-written B_n operator") {
  for (int n : {2, 3})
    for (int m : {1, 2}) {
      CAPTURE(n);
      CAPTURE(m);
      Rational w = 2 * m + 1;
      DifferenceOperator oracle;
      std::size_t d = n;
      for (std::size_t i = 0; i < d; ++i)
        for (int s : {1, -1}) {
          Poly ki = Rational(s) * k(i);
          RationalFn a = one_minus(w * m, ki, d);
          for (std::size_t j = 0; j < d; ++j)
            if (j != i) a = a * one_minus(w, ki + k(j), d) * one_minus(w, ki - k(j), d);
          oracle.add_term(ConfigVector::unit(d, i, s), a);
        }
      CHECK(ops::equivalent(w * ops::build_c_nlm_op(n, m, m), oracle));
    }
}

TEST_CASE("C_n operator is invariant under each sign reflection") {
  for (auto [n, l, m] : {std::tuple{2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {3, 4, 1}}) {
    auto d = ops::build_c_nlm_op(n, l, m);
    for (int j = 0; j < n; ++j) CHECK(ops::equivalent(reflect(d, j, n), d));
  }
  // control: the A_{2,1} operator has no such symmetry
  auto a = ops::build_a_n1_op(2, 1);
  CHECK(!ops::equivalent(reflect(a, 0, 3), a));
}

TEST_CASE("leading symbols match the closed-form eigenvalues") {
  for (auto c : {family(Family::Cnlm, 2, 1, 1), family(Family::An1, 2, 0, 2), family(Family::An2, 2, 0, 1),
                 family(Family::An2, 2, 0, Rational(1, 2)), family(Family::RootA, 2, 0, 1)}) {
    CAPTURE(c.descriptor());
    CHECK(ops::leading_symbol(ops::family_operator(c)) == construct::eigenvalue_lambda(c));
  }
}
