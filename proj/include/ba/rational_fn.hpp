#pragma once

#include <compare>
#include <map>
#include <vector>

#include "ba/poly.hpp"

namespace ba::algebra {

// Σ a_i κ_i + c with the first nonzero a_i equal to 1.
struct AffineForm {
  std::vector<Rational> coef;
  Rational constant;

  // Normalizes a nonconstant linear KPoly; returns the factor s with p = s·form.
  static AffineForm from_linear(const Poly& p, std::size_t dim, Rational* scale = nullptr);
  Poly to_poly() const;
  AffineForm shifted(const WeightedBasis& basis, const ConfigVector& tau) const;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
  friend std::strong_ordering operator<=>(const AffineForm& a, const AffineForm& b);
};

// num / Π form^mult.  Kept unreduced; equality is by cross-multiplication.
class RationalFn {
 public:
  using Factors = std::map<AffineForm, int>;

  RationalFn() = default;
  RationalFn(Poly num, Factors den = {});
  static RationalFn constant(const Rational& c) { return RationalFn(Poly::constant(c)); }
  // num / lin for a nonconstant linear polynomial lin.
  static RationalFn over_linear(const Poly& num, const Poly& lin, std::size_t dim);

  const Poly& num() const { return num_; }
  const Factors& factors() const { return den_; }
  Poly den() const;
  bool is_zero() const { return num_.is_zero(); }

  RationalFn shifted(const WeightedBasis& basis, const ConfigVector& tau) const;
  // Cancels denominator factors that divide the numerator exactly.
  RationalFn reduced() const;

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const Rational& s, const RationalFn& a);
  RationalFn operator-() const;

  // Numerator of this function over the denominator `common`, which must be
  // a multiple of den().
  Poly numerator_over(const Factors& common) const;

 private:
  Poly num_;
  Factors den_;
};

RationalFn::Factors lcm(const RationalFn::Factors& a, const RationalFn::Factors& b);
Poly expand(const RationalFn::Factors& f);
bool equivalent(const RationalFn& a, const RationalFn& b);

}  // namespace ba::algebra
