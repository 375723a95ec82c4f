#pragma once

#include <map>
#include <string>

#include "ba/kernels.hpp"
#include "ba/rational_fn.hpp"

namespace ba::ops {

using algebra::ConfigVector;
using algebra::Element;
using algebra::Poly;
using algebra::RationalFn;
using algebra::WeightedBasis;

// Σ a_τ(k) T^τ in left-normal form, one coefficient per distinct shift.
class DifferenceOperator {
 public:
  using Terms = std::map<ConfigVector, RationalFn>;

  DifferenceOperator() = default;
  static DifferenceOperator multiplication(const RationalFn& f, std::size_t dim);
  static DifferenceOperator shift(const ConfigVector& tau, const RationalFn& coeff);

  void add_term(const ConfigVector& tau, const RationalFn& coeff);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  DifferenceOperator reduced() const;

  friend DifferenceOperator operator+(const DifferenceOperator& a, const DifferenceOperator& b);
  friend DifferenceOperator operator-(const DifferenceOperator& a, const DifferenceOperator& b);
  friend DifferenceOperator operator*(const algebra::Rational& s, const DifferenceOperator& a);

 private:
  Terms terms_;
};

DifferenceOperator compose(const DifferenceOperator& a, const DifferenceOperator& b, const WeightedBasis& basis);
DifferenceOperator commutator(const DifferenceOperator& a, const DifferenceOperator& b, const WeightedBasis& basis);
// X ↦ D∘X − X∘D applied r times to the multiplication operator p(k).
DifferenceOperator ad_power(const DifferenceOperator& d, const Poly& p, int r, const WeightedBasis& basis);

// Same shift set and cross-multiplication equality of every coefficient.
bool equivalent(const DifferenceOperator& a, const DifferenceOperator& b);

// Σ a_τ(k) P(k+τ) e^{(τ,x)} divided exactly by the common denominator.
// Throws NotDivisible (kind NotHolomorphic) with the remainder otherwise.
Element apply(const DifferenceOperator& op, const Element& e, const WeightedBasis& basis,
              kernels::Exec exec = kernels::default_exec());

std::string to_text(const RationalFn& f);
std::string to_text(const DifferenceOperator& op);

}  // namespace ba::ops
