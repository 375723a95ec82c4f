#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "ba/rational.hpp"
#include "ba/weighted_basis.hpp"

namespace ba::algebra {

inline constexpr std::size_t kMaxDim = 6;
using Exponents = std::array<std::int16_t, kMaxDim>;

// k: exponents of κ_i = (k, f_i).  e: exponents of the grain variables
// u_i = e^{x̄_i/2}, so e^{(τ,x)} has e_i = 2 t_i.
struct Monomial {
  Exponents k{};
  Exponents e{};

  int k_degree() const;
  bool k_only() const;
  bool e_only() const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lex on k (larger first), then lex on e.  Maps iterate leading term first.
struct LeadingFirst {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// One sparse carrier for all three polynomial kinds of the engine:
//   KPoly   - only k exponents (scalar polynomial in κ)
//   ExpPoly - only e exponents (Laurent polynomial in u)
//   Element - both, with an implicit factor e^{(k,x)}
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, LeadingFirst>;

  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly kvar(std::size_t i);
  static Poly term(const Monomial& m, const Rational& c);
  static Poly linear_form(const ConfigVector& a, const Rational& offset = 0);  // Σ a_i κ_i + offset
  static Poly exp_monomial(const Exponents& grain_exponents);
  static Poly exp_of(const ConfigVector& tau);  // e^{(τ,x)}, needs 2τ integral

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  int k_degree() const;  // -1 for the zero polynomial
  Poly k_homogeneous(int degree) const;
  bool k_only() const;
  bool e_only() const;
  std::size_t dim_used() const;  // 1 + largest variable index that occurs

  // ExpPoly coefficient of the spectral monomial κ^kexp.
  Poly exp_coefficient(const Exponents& kexp) const;
  std::map<Exponents, Poly> k_slices() const;

 private:
  Terms terms_;
};

using KPoly = Poly;
using ExpPoly = Poly;
using Element = Poly;

Poly pow(const Poly& p, unsigned e);

// Canonical text: terms in leading-first order, e.g. "3/2*κ1^2*u1^-1 - κ2 + 5".
// Variables are 1-based; u_i is the grain variable e^{x̄_i/2}.
std::string to_text(const Poly& p);
std::string to_text(const Monomial& m);

}  // namespace ba::algebra
