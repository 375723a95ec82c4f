#pragma once

#include "ba/error.hpp"
#include "ba/poly.hpp"

namespace ba::algebra {

// An error that carries an exact nonzero polynomial as its witness.
class ResidualError : public Error {
 public:
  ResidualError(ErrorKind kind, const std::string& what, Poly residual)
      : Error(kind, what), residual_(std::move(residual)) {}
  const Poly& remainder() const { return residual_; }

 private:
  Poly residual_;
};

using NotDivisible = ResidualError;

// f(k) -> f(k + τ): κ_i -> κ_i + t_i w_i.
Poly shift(const Poly& p, const WeightedBasis& basis, const ConfigVector& tau);

// Restriction to the affine hyperplane Σ a_i κ_i + offset = 0.  The pivot is
// the largest index with a_i != 0; κ_pivot is eliminated.
Poly restrict_to_hyperplane(const Poly& p, const ConfigVector& alpha, const Rational& offset = 0);

// Derivative along Σ v_i f_i of an Element (implicit e^{(k,x)} included).
Poly derivative(const Poly& p, const WeightedBasis& basis, const ConfigVector& v);
Poly directional_derivative(const Poly& p, const WeightedBasis& basis, std::size_t i);
// Same, for a bare Laurent polynomial in u (no plane-wave factor).
Poly exp_derivative(const Poly& p, const WeightedBasis& basis, const ConfigVector& v);
Poly laplacian(const Poly& p, const WeightedBasis& basis);

// q with q*den = num, den a nonzero polynomial in κ only.
Poly exact_divide(const Poly& num, const Poly& den);
// q with q*den = num, den a nonzero Laurent polynomial in u only; slice-wise.
Poly exact_divide_exp(const Poly& num, const Poly& den);

// Reduction modulo u^A = eps (eps = ±1), A a nonzero grain exponent vector.
// Exact normal form in the quotient ring: the result is zero iff p vanishes
// on the hypersurface.
Poly reduce_mod_branch(const Poly& p, const Exponents& a, int eps);

Exponents grain_exponents(const ConfigVector& tau);  // 2τ, must be integral

}  // namespace ba::algebra
