#pragma once

#include <random>

#include "ba/ba_constructor.hpp"
#include "ba/calculus.hpp"
#include "ba/configuration.hpp"
#include "ba/poly.hpp"

namespace testsupport {

using namespace ba;
using algebra::ConfigVector;
using algebra::Poly;
using algebra::Rational;
using algebra::WeightedBasis;

inline constexpr unsigned kSeed = 20240611;

inline Rational small_rational(std::mt19937& g, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 4);
  Rational q(num(g), den(g));
  q.canonicalize();
  return q;
}

inline Rational nonzero_rational(std::mt19937& g, int span = 5) {
  Rational q;
  do q = small_rational(g, span);
  while (q == 0);
  return q;
}

// Sparse Poly in `dim` variables; with_exp adds Laurent u-exponents.
inline Poly random_poly(std::mt19937& g, std::size_t dim, int terms, int kdeg, bool with_k, bool with_exp) {
  std::uniform_int_distribution<int> kd(0, kdeg), ed(-3, 3);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    algebra::Monomial m;
    for (std::size_t i = 0; i < dim; ++i) {
      if (with_k) m.k[i] = static_cast<std::int16_t>(kd(g));
      if (with_exp) m.e[i] = static_cast<std::int16_t>(ed(g));
    }
    p.add_term(m, small_rational(g));
  }
  return p;
}

inline ConfigVector random_vector(std::mt19937& g, std::size_t dim, bool half = true) {
  std::uniform_int_distribution<int> d(-2, 2);
  ConfigVector v(dim);
  do
    for (std::size_t i = 0; i < dim; ++i) v[i] = half ? Rational(d(g), 2) : Rational(d(g));
  while (v.is_zero());
  for (auto& x : v.coords) x.canonicalize();
  return v;
}

inline WeightedBasis random_basis(std::mt19937& g, std::size_t dim) {
  std::vector<Rational> w;
  for (std::size_t i = 0; i < dim; ++i) w.push_back(nonzero_rational(g, 3));
  return WeightedBasis(w);
}

// ψ(k+τ) for ψ = P e^{(k,x)}: shifts P and multiplies by e^{(τ,x)}.
inline Poly translate(const Poly& e, const WeightedBasis& b, const ConfigVector& tau) {
  return algebra::shift(e, b, tau) * Poly::exp_of(tau);
}

inline config::Configuration family(config::Family f, int n, Rational l, Rational m) {
  config::FamilyParams p;
  p.family = f;
  p.n = n;
  p.l = l;
  p.m = m;
  return config::build_family(p);
}

// sinh-type factor e^{(α,x)} − e^{−(α,x)}.
inline Poly sinh_factor(const ConfigVector& a) { return Poly::exp_of(a) - Poly::exp_of(-a); }

}  // namespace testsupport
