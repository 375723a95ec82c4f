#include <doctest.h>

#include "ba/rational_fn.hpp"
#include "ba/serialize.hpp"
#include "support.hpp"

using namespace testsupport;
using algebra::KPoly;
using algebra::RationalFn;

TEST_CASE("rationals parse and print canonically") {
  CHECK(algebra::parse_rational("6/4") == Rational(3, 2));
  CHECK(algebra::parse_rational("-7") == Rational(-7));
  CHECK(algebra::to_string(algebra::parse_rational("-3/6")) == "-1/2");
  CHECK_THROWS_AS(algebra::parse_rational("1/0"), Error);
  CHECK_THROWS_AS(algebra::parse_rational("x"), Error);
  CHECK_THROWS_AS(algebra::parse_rational(""), Error);
}

TEST_CASE("canonical text and leading-first order") {
  Poly k1 = Poly::kvar(0), k2 = Poly::kvar(1);
  Poly p = Rational(3, 2) * (k1 * k1) * Poly::exp_of(ConfigVector({Rational(-1, 2), 0})) - k2 + Poly::constant(5);
  CHECK(algebra::to_text(p) == "3/2*κ1^2*u1^-1 - κ2 + 5");
  CHECK(algebra::to_text(Poly()) == "0");
  CHECK(p.k_degree() == 2);
}

TEST_CASE("laplacian of the plane wave is (k,k)") {
  std::mt19937 g(kSeed);
  for (int t = 0; t < 50; ++t) {
    auto b = random_basis(g, 3);
    Poly kk;
    for (std::size_t i = 0; i < 3; ++i) kk += (1 / b.weight(i)) * (Poly::kvar(i) * Poly::kvar(i));
    CHECK(algebra::laplacian(Poly::constant(1), b) == kk);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 g(kSeed + 1);
  for (int t = 0; t < 1000; ++t) {
    bool k = t % 3 != 1, e = t % 3 != 0;
    Poly a = random_poly(g, 2, 4, 2, k, e), b = random_poly(g, 2, 4, 2, k, e), c = random_poly(g, 2, 3, 2, k, e);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a - a).is_zero());
    REQUIRE(a + (-a) == Poly());
    REQUIRE(a * Poly::constant(1) == a);
  }
}

TEST_CASE("shift round trip and hyperplane annihilation") {
  std::mt19937 g(kSeed + 2);
  for (int t = 0; t < 1000; ++t) {
    auto b = random_basis(g, 3);
    Poly e = random_poly(g, 3, 5, 3, true, t % 2 == 0);
    ConfigVector tau = random_vector(g, 3);
    REQUIRE(algebra::shift(algebra::shift(e, b, tau), b, -tau) == e);
    ConfigVector a = random_vector(g, 3);
    REQUIRE(algebra::restrict_to_hyperplane(e * Poly::linear_form(a), a).is_zero());
    // restriction and shift are ring maps
    Poly f = random_poly(g, 3, 3, 2, true, false);
    REQUIRE(algebra::restrict_to_hyperplane(e * f, a) ==
            algebra::restrict_to_hyperplane(e, a) * algebra::restrict_to_hyperplane(f, a));
    REQUIRE(algebra::shift(e * f, b, tau) == algebra::shift(e, b, tau) * algebra::shift(f, b, tau));
  }
}

TEST_CASE("exact division round trips") {
  std::mt19937 g(kSeed + 3);
  for (int t = 0; t < 1000; ++t) {
    Poly a = random_poly(g, 2, 4, 3, true, t % 2 == 0);
    Poly b = random_poly(g, 2, 3, 2, true, false);
    if (b.is_zero()) continue;
    REQUIRE(algebra::exact_divide(a * b, b) == a);
    Poly eb = random_poly(g, 2, 3, 0, false, true);
    if (eb.is_zero()) continue;
    REQUIRE(algebra::exact_divide_exp(a * eb, eb) == a);
  }
}

TEST_CASE("non-divisibility reports the remainder") {
  Poly k1 = Poly::kvar(0);
  try {
    (void)algebra::exact_divide(k1 * k1 + Poly::constant(1), k1);
    FAIL("expected NotDivisible");
  } catch (const algebra::NotDivisible& e) {
    CHECK(e.remainder() == Poly::constant(1));
  }
}

TEST_CASE("derivatives obey the Leibniz rule") {
  std::mt19937 g(kSeed + 4);
  for (int t = 0; t < 300; ++t) {
    auto b = random_basis(g, 2);
    ConfigVector v = random_vector(g, 2);
    Poly f = random_poly(g, 2, 3, 2, true, true);
    Poly h = random_poly(g, 2, 3, 0, false, true);  // bare ExpPoly
    REQUIRE(algebra::derivative(h * f, b, v) ==
            algebra::exp_derivative(h, b, v) * f + h * algebra::derivative(f, b, v));
  }
}

TEST_CASE("branch reduction is a ring map onto the quotient") {
  std::mt19937 g(kSeed + 5);
  algebra::Exponents A{};
  A[0] = 2;
  A[1] = -2;
  for (int t = 0; t < 300; ++t) {
    Poly a = random_poly(g, 2, 4, 1, true, true), b = random_poly(g, 2, 4, 1, true, true);
    for (int eps : {1, -1}) {
      auto r = [&](const Poly& p) { return algebra::reduce_mod_branch(p, A, eps); };
      REQUIRE(r(a * b) == r(r(a) * r(b)));
      REQUIRE(r(a + b) == r(a) + r(b));
    }
  }
  // u1^2 u2^-2 − 1 vanishes on the branch ε = 1 only
  Poly w = Poly::exp_monomial(A) - Poly::constant(1);
  CHECK(algebra::reduce_mod_branch(w, A, 1).is_zero());
  CHECK(algebra::reduce_mod_branch(w, A, -1) == Poly::constant(-2));
}

TEST_CASE("rational function cross-multiplication equality is an equivalence") {
  std::mt19937 g(kSeed + 6);
  for (int t = 0; t < 1000; ++t) {
    Poly num = random_poly(g, 2, 3, 2, true, t % 2 == 0);
    ConfigVector a = random_vector(g, 2), c = random_vector(g, 2);
    Poly la = Poly::linear_form(a, small_rational(g)), lc = Poly::linear_form(c, small_rational(g));
    RationalFn x = RationalFn::over_linear(num, la, 2);
    // (num·lc)/(la·lc), the same value with an extra common factor
    RationalFn y2 = RationalFn::over_linear(num * lc, la, 2) * RationalFn::over_linear(Poly::constant(1), lc, 2);
    REQUIRE(algebra::equivalent(x, x));
    REQUIRE(algebra::equivalent(x, y2));
    REQUIRE(algebra::equivalent(y2, x));
    RationalFn z = y2.reduced();
    REQUIRE(algebra::equivalent(y2, z));
    REQUIRE(algebra::equivalent(x, z));
    REQUIRE(!algebra::equivalent(x, x + RationalFn::constant(1)));
  }
}

TEST_CASE("rational function arithmetic matches expanded fractions") {
  std::mt19937 g(kSeed + 7);
  for (int t = 0; t < 300; ++t) {
    ConfigVector a = random_vector(g, 2), c = random_vector(g, 2);
    RationalFn x = RationalFn::over_linear(random_poly(g, 2, 2, 1, true, false), Poly::linear_form(a, 1), 2);
    RationalFn y = RationalFn::over_linear(random_poly(g, 2, 2, 1, true, false), Poly::linear_form(c, 2), 2);
    RationalFn s = x + y;
    // s·den(x)·den(y) = num(x)·den(y) + num(y)·den(x)
    Poly lhs = s.num() * x.den() * y.den();
    Poly rhs = (x.num() * y.den() + y.num() * x.den()) * s.den();
    REQUIRE(lhs == rhs);
    REQUIRE(algebra::equivalent((x * y) - (y * x), RationalFn()));
  }
}

TEST_CASE("polynomial JSON and text round trip") {
  std::mt19937 g(kSeed + 8);
  for (int t = 0; t < 1000; ++t) {
    Poly p = random_poly(g, 3, 5, 3, true, true);
    auto j = io::to_json(p);
    REQUIRE(io::poly_from_json(io::json::parse(j.dump())) == p);
    REQUIRE(j["text"] == algebra::to_text(p));
    REQUIRE(j["sha256"] == io::sha256_hex(algebra::to_text(p)));
  }
}

TEST_CASE("sha256 matches a known digest") {
  CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
