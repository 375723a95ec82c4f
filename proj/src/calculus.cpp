#include "ba/calculus.hpp"

#include <vector>

namespace ba::algebra {

namespace {

// Powers base^0..base^d of a polynomial, computed lazily.
class PowerCache {
 public:
  explicit PowerCache(Poly base) : pows_{Poly::constant(1)}, base_(std::move(base)) {}
  const Poly& get(int d) {
    while (static_cast<int>(pows_.size()) <= d) pows_.push_back(pows_.back() * base_);
    return pows_[d];
  }

 private:
  std::vector<Poly> pows_;
  Poly base_;
};

Poly shift_variable(const Poly& p, std::size_t i, const Rational& c) {
  PowerCache lin(Poly::linear_form(ConfigVector::unit(i + 1, i), c));
  Poly out;
  for (const auto& [m, coef] : p.terms()) {
    int d = m.k[i];
    if (d == 0) {
      out.add_term(m, coef);
      continue;
    }
    Monomial rest = m;
    rest.k[i] = 0;
    for (const auto& [lm, lc] : lin.get(d).terms()) out.add_term(rest * lm, coef * lc);
  }
  return out;
}

}  // namespace

Poly shift(const Poly& p, const WeightedBasis& basis, const ConfigVector& tau) {
  if (tau.size() != basis.dim()) throw Error(ErrorKind::Dimension, "shift vector dimension mismatch");
  Poly r = p;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    Rational c = tau[i] * basis.weight(i);
    if (c != 0) r = shift_variable(r, i, c);
  }
  return r;
}

Poly restrict_to_hyperplane(const Poly& p, const ConfigVector& alpha, const Rational& offset) {
  if (alpha.is_zero()) throw Error(ErrorKind::ZeroVector, "restriction along the zero vector");
  std::size_t j = alpha.size();
  while (alpha[j - 1] == 0) --j;
  --j;
  // κ_j = -(offset + Σ_{i≠j} a_i κ_i) / a_j
  ConfigVector lin(alpha.size());
  Rational inv = -1 / alpha[j];
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (i != j) lin[i] = alpha[i] * inv;
  PowerCache sub(Poly::linear_form(lin, offset * inv));
  Poly out;
  for (const auto& [m, coef] : p.terms()) {
    int d = m.k[j];
    if (d == 0) {
      out.add_term(m, coef);
      continue;
    }
    Monomial rest = m;
    rest.k[j] = 0;
    for (const auto& [sm, sc] : sub.get(d).terms()) out.add_term(rest * sm, coef * sc);
  }
  return out;
}

Poly exp_derivative(const Poly& p, const WeightedBasis& basis, const ConfigVector& v) {
  std::vector<Rational> scale(basis.dim());
  for (std::size_t i = 0; i < basis.dim(); ++i) scale[i] = v[i] * basis.weight(i) / 2;
  Poly out;
  Rational f;
  for (const auto& [m, coef] : p.terms()) {
    f = 0;
    for (std::size_t i = 0; i < basis.dim(); ++i)
      if (m.e[i]) f += scale[i] * m.e[i];
    out.add_term(m, f * coef);
  }
  return out;
}

Poly derivative(const Poly& p, const WeightedBasis& basis, const ConfigVector& v) {
  if (v.size() != basis.dim()) throw Error(ErrorKind::Dimension, "direction dimension mismatch");
  return exp_derivative(p, basis, v) + Poly::linear_form(v) * p;
}

Poly directional_derivative(const Poly& p, const WeightedBasis& basis, std::size_t i) {
  return derivative(p, basis, ConfigVector::unit(basis.dim(), i));
}

Poly laplacian(const Poly& p, const WeightedBasis& basis) {
  Poly out;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    Poly d2 = directional_derivative(directional_derivative(p, basis, i), basis, i);
    out += (1 / basis.weight(i)) * d2;
  }
  return out;
}

Poly exact_divide(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorKind::InvalidParams, "division by the zero polynomial");
  if (!den.k_only()) throw Error(ErrorKind::InvalidParams, "exact_divide expects a divisor in κ only");
  const Monomial lt = den.leading_monomial();
  const Rational lc_inv = 1 / den.leading_coefficient();
  Poly r = num, q, rem;
  while (!r.is_zero()) {
    auto it = r.terms().begin();
    const Monomial m = it->first;
    bool divisible = true;
    for (std::size_t i = 0; i < kMaxDim; ++i)
      if (m.k[i] < lt.k[i]) { divisible = false; break; }
    if (!divisible) {
      rem.add_term(m, it->second);
      r.add_term(m, -Rational(it->second));
      continue;
    }
    Monomial t;
    for (std::size_t i = 0; i < kMaxDim; ++i) t.k[i] = static_cast<std::int16_t>(m.k[i] - lt.k[i]);
    t.e = m.e;
    Rational c = it->second * lc_inv;
    q.add_term(t, c);
    for (const auto& [dm, dc] : den.terms()) r.add_term(t * dm, -(c * dc));
  }
  if (!rem.is_zero()) throw NotDivisible(ErrorKind::NotDivisible, "polynomial division leaves a nonzero remainder", rem);
  return q;
}

namespace {

Poly divide_laurent(const Poly& num, const Poly& den) {
  // Lex order on u-exponents (the map order for u-only polynomials).  The
  // Newton box of an exact quotient is bounded coordinatewise, which makes
  // the loop finite when den does not divide num.
  Exponents nlo{}, nhi{}, dlo{}, dhi{};
  auto bounds = [](const Poly& p, Exponents& lo, Exponents& hi) {
    bool first = true;
    for (const auto& [m, c] : p.terms())
      for (std::size_t i = 0; i < kMaxDim; ++i) {
        if (first || m.e[i] < lo[i]) lo[i] = m.e[i];
        if (first || m.e[i] > hi[i]) hi[i] = m.e[i];
        if (i + 1 == kMaxDim) first = false;
      }
  };
  bounds(num, nlo, nhi);
  bounds(den, dlo, dhi);
  const Monomial lt = den.leading_monomial();
  const Rational lc_inv = 1 / den.leading_coefficient();
  Poly r = num, q;
  while (!r.is_zero()) {
    const auto& [m, coef] = *r.terms().begin();
    Monomial t;
    bool inside = true;
    for (std::size_t i = 0; i < kMaxDim; ++i) {
      int x = m.e[i] - lt.e[i];
      if (x < nlo[i] - dlo[i] || x > nhi[i] - dhi[i]) inside = false;
      t.e[i] = static_cast<std::int16_t>(x);
    }
    if (!inside) throw NotDivisible(ErrorKind::NotDivisible, "Laurent division leaves a nonzero remainder", r);
    Rational c = coef * lc_inv;
    q.add_term(t, c);
    for (const auto& [dm, dc] : den.terms()) r.add_term(t * dm, -(c * dc));
  }
  return q;
}

}  // namespace

Poly exact_divide_exp(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorKind::InvalidParams, "division by the zero polynomial");
  if (!den.e_only()) throw Error(ErrorKind::InvalidParams, "exact_divide_exp expects a divisor in u only");
  Poly out;
  for (const auto& [k, slice] : num.k_slices()) {
    Poly q = divide_laurent(slice, den);
    Monomial km;
    km.k = k;
    for (const auto& [m, c] : q.terms()) out.add_term(km * m, c);
  }
  return out;
}

Poly reduce_mod_branch(const Poly& p, const Exponents& a, int eps) {
  std::size_t j = 0;
  while (j < kMaxDim && a[j] == 0) ++j;
  if (j == kMaxDim) throw Error(ErrorKind::ZeroVector, "branch relation along the zero exponent");
  Exponents A = a;
  if (A[j] < 0)
    for (auto& x : A) x = static_cast<std::int16_t>(-x);
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    int b = m.e[j];
    int t = b >= 0 ? b / A[j] : -((-b + A[j] - 1) / A[j]);
    Monomial r = m;
    for (std::size_t i = 0; i < kMaxDim; ++i) r.e[i] = static_cast<std::int16_t>(m.e[i] - t * A[i]);
    out.add_term(r, (eps < 0 && (t % 2 != 0)) ? Rational(-c) : c);
  }
  return out;
}

Exponents grain_exponents(const ConfigVector& tau) {
  return Poly::exp_of(tau).leading_monomial().e;
}

}  // namespace ba::algebra
