#include "ba/family_operators.hpp"

#include <deque>
#include <set>

#include "ba/error.hpp"

namespace ba::ops {

using algebra::Rational;
using config::Configuration;
using config::Entry;

namespace {

// 1 − c/L as a rational function, L linear in κ.
RationalFn one_minus(const Rational& c, const Poly& lin, std::size_t dim) {
  return RationalFn::over_linear(lin - Poly::constant(c), lin, dim);
}

Poly kappa(std::size_t i) { return Poly::kvar(i); }

Poly cst(const Rational& c) { return Poly::constant(c); }

ConfigVector unit(std::size_t d, std::size_t i, const Rational& s = 1) { return ConfigVector::unit(d, i, s); }

}  // namespace

std::vector<ConfigVector> weyl_orbit(const WeightedBasis& basis, const std::vector<Entry>& data, const ConfigVector& pi) {
  std::set<ConfigVector> seen{pi};
  std::deque<ConfigVector> todo{pi};
  while (!todo.empty()) {
    ConfigVector v = todo.front();
    todo.pop_front();
    for (const auto& e : data) {
      Rational c = 2 * basis.inner(v, e.vec) / basis.norm2(e.vec);
      ConfigVector w = v - c * e.vec;
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

DifferenceOperator build_macdonald(const WeightedBasis& basis, const std::vector<Entry>& data, const ConfigVector& pi) {
  for (const auto& e : data) {
    Rational p = basis.inner(pi, e.vec);
    if (p != 0 && p != 1 && p != -1)
      throw Error(ErrorKind::NotMinuscule, "(π, α) = " + algebra::to_string(p) + " is not in {0, ±1}");
  }
  std::size_t d = basis.dim();
  DifferenceOperator op;
  for (const auto& tau : weyl_orbit(basis, data, pi)) {
    RationalFn coeff = RationalFn::constant(1);
    for (const auto& e : data)
      for (int sign : {1, -1}) {
        ConfigVector a = Rational(sign) * e.vec;
        if (basis.inner(a, tau) == 1) coeff = coeff * one_minus(e.mult, Poly::linear_form(a), d);
      }
    op.add_term(tau, coeff);
  }
  return op;
}

DifferenceOperator build_root_a_op(int n, int m, int r) {
  Configuration c = config::root_a(n, m);
  if (r < 1 || r > n) throw Error(ErrorKind::InvalidParams, "coweight index must be in 1..n");
  std::vector<Entry> dual;
  for (const auto& e : c.entries()) dual.push_back({(1 / c.basis().norm2(e.vec)) * e.vec, e.mult});
  ConfigVector pi(c.dim());
  for (int i = 0; i < r; ++i) pi[i] = 2;
  return build_macdonald(c.basis(), dual, pi);
}

DifferenceOperator build_a_n1_op(int n, int m) {
  Configuration c = config::a_n1(n, m);
  std::size_t d = c.dim(), last = n;
  DifferenceOperator op;
  for (std::size_t i = 0; i < last; ++i) {
    RationalFn a = one_minus(2, kappa(i) - kappa(last) + cst(1 - m), d);
    for (std::size_t j = 0; j < last; ++j)
      if (j != i) a = a * one_minus(2 * m, kappa(i) - kappa(j), d);
    op.add_term(unit(d, i, 2), a);
  }
  RationalFn a = RationalFn::constant(Rational(1, m));
  for (std::size_t i = 0; i < last; ++i) a = a * one_minus(-2 * m, kappa(i) - kappa(last) + cst(1 - m), d);
  op.add_term(unit(d, last, 2), a);
  return op;
}

DifferenceOperator build_c_nlm_op(int n, int l, int m) {
  Configuration c = config::c_nlm(n, l, m);
  std::size_t d = n, last = n - 1;
  const Rational L = 2 * l + 1, Mw = 2 * m + 1;
  DifferenceOperator op;
  for (std::size_t i = 0; i < d; ++i)
    for (int sign : {1, -1}) {
      Poly ki = Rational(sign) * kappa(i);
      RationalFn a;
      if (i < last) {
        a = Rational(1) / Mw * one_minus(Mw * l, ki, d);
        for (std::size_t j = 0; j < last; ++j)
          if (j != i) a = a * one_minus(L, ki + kappa(j), d) * one_minus(L, ki - kappa(j), d);
        a = a * one_minus(Mw, ki + kappa(last) + cst(m - l), d) * one_minus(Mw, ki - kappa(last) + cst(m - l), d);
      } else {
        a = Rational(1) / L * one_minus(L * m, ki, d);
        for (std::size_t j = 0; j < last; ++j)
          a = a * one_minus(L, ki + kappa(j) + cst(l - m), d) * one_minus(L, ki - kappa(j) + cst(l - m), d);
      }
      op.add_term(unit(d, i, sign), a);
    }
  return op;
}

DifferenceOperator build_a_n2_op(int n, const Rational& m) {
  Configuration c = config::a_n2(n, m);
  const auto& basis = c.basis();
  std::size_t d = c.dim();
  // multiplicity m_ij, symmetric in i, j
  auto mult = [&](std::size_t i, std::size_t j) -> Rational {
    if (i > j) std::swap(i, j);
    bool interior = i != 0 && j != d - 1;
    return interior ? m : Rational(1);
  };
  DifferenceOperator op;
  for (std::size_t i = 0; i < d; ++i) {
    const Rational& wi = basis.weight(i);
    RationalFn a = RationalFn::constant(1 / wi);
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      const Rational& wj = basis.weight(j);
      // (k − m_ij α_ij, α_ij) on the left; (k + 2ē_i − α_ij, α_ij) from the right factor
      Poly num = kappa(i) - kappa(j) - cst(mult(i, j) * (wi + wj));
      Poly den = kappa(i) - kappa(j) + cst(wi - wj);
      a = a * RationalFn::over_linear(num, den, d);
    }
    op.add_term(unit(d, i, 2), a);
  }
  return op;
}

DifferenceOperator family_operator(const Configuration& c) {
  const auto& p = c.params();
  switch (c.family()) {
    case config::Family::RootA: {
      for (const auto& e : c.entries())
        if (e.mult != c.entries().front().mult)
          throw Error(ErrorKind::UnsupportedFamily, "root-system operator needs invariant multiplicities");
      return build_root_a_op(p.n, c.entries().front().mult);
    }
    case config::Family::RootC:
    case config::Family::Cnlm:
      return build_c_nlm_op(p.n, static_cast<int>(algebra::to_long(p.l)), static_cast<int>(algebra::to_long(p.m)));
    case config::Family::An1:
      return build_a_n1_op(p.n, static_cast<int>(algebra::to_long(p.m)));
    case config::Family::An2:
      return build_a_n2_op(p.n, p.m);
    case config::Family::Explicit:
      break;
  }
  throw Error(ErrorKind::UnsupportedFamily, "no difference operator for explicit configurations");
}

Poly leading_symbol(const DifferenceOperator& d) {
  Poly out;
  for (const auto& [tau, a] : d.terms()) {
    // limit along k → ∞: ratio of top-degree parts, constant when degrees agree
    const Poly& num = a.num();
    int deg = 0;
    for (const auto& [form, mult] : a.factors()) deg += mult;
    if (num.k_degree() != deg) throw Error(ErrorKind::InvalidParams, "coefficient has no finite nonzero limit");
    Poly top = num.k_homogeneous(deg);
    Poly dtop = algebra::expand(a.factors()).k_homogeneous(deg);
    Rational ratio = top.leading_coefficient() / dtop.leading_coefficient();
    if (!(top == ratio * dtop)) throw Error(ErrorKind::InvalidParams, "coefficient limit depends on direction");
    out += ratio * Poly::exp_of(tau);
  }
  return out;
}

}  // namespace ba::ops
