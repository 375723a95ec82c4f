#include "ba/rational_fn.hpp"

#include "ba/calculus.hpp"

namespace ba::algebra {

AffineForm AffineForm::from_linear(const Poly& p, std::size_t dim, Rational* scale) {
  AffineForm f;
  f.coef.assign(dim, Rational(0));
  for (const auto& [m, c] : p.terms()) {
    if (m.k_only() && m.k_degree() == 1) {
      std::size_t i = 0;
      while (m.k[i] == 0) ++i;
      if (i >= dim) throw Error(ErrorKind::Dimension, "linear form uses a variable outside the basis");
      f.coef[i] = c;
    } else if (m.k_only() && m.k_degree() == 0) {
      f.constant = c;
    } else {
      throw Error(ErrorKind::InvalidParams, "denominator factor is not affine-linear in κ: " + to_text(p));
    }
  }
  std::size_t lead = 0;
  while (lead < dim && f.coef[lead] == 0) ++lead;
  if (lead == dim) throw Error(ErrorKind::InvalidParams, "constant denominator factor");
  Rational s = f.coef[lead];
  for (auto& c : f.coef) c /= s;
  f.constant /= s;
  if (scale) *scale = s;
  return f;
}

Poly AffineForm::to_poly() const { return Poly::linear_form(ConfigVector(coef), constant); }

AffineForm AffineForm::shifted(const WeightedBasis& basis, const ConfigVector& tau) const {
  AffineForm r = *this;
  for (std::size_t i = 0; i < coef.size(); ++i) r.constant += coef[i] * tau[i] * basis.weight(i);
  return r;
}

std::strong_ordering operator<=>(const AffineForm& a, const AffineForm& b) {
  if (auto c = ConfigVector(a.coef) <=> ConfigVector(b.coef); c != 0) return c;
  int c = cmp(a.constant, b.constant);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

RationalFn::RationalFn(Poly num, Factors den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) den_.clear();
}

RationalFn RationalFn::over_linear(const Poly& num, const Poly& lin, std::size_t dim) {
  Rational s;
  AffineForm f = AffineForm::from_linear(lin, dim, &s);
  Poly n = num;
  n *= 1 / s;
  return RationalFn(std::move(n), Factors{{f, 1}});
}

Poly expand(const RationalFn::Factors& f) {
  Poly p = Poly::constant(1);
  for (const auto& [form, mult] : f) p = p * pow(form.to_poly(), static_cast<unsigned>(mult));
  return p;
}

Poly RationalFn::den() const { return expand(den_); }

RationalFn RationalFn::shifted(const WeightedBasis& basis, const ConfigVector& tau) const {
  Factors d;
  for (const auto& [form, mult] : den_) d[form.shifted(basis, tau)] += mult;
  return RationalFn(shift(num_, basis, tau), std::move(d));
}

RationalFn RationalFn::reduced() const {
  Poly n = num_;
  Factors d;
  for (const auto& [form, mult] : den_) {
    int left = mult;
    Poly lin = form.to_poly();
    while (left > 0) {
      try {
        n = exact_divide(n, lin);
      } catch (const NotDivisible&) {
        break;
      }
      --left;
    }
    if (left > 0) d.emplace(form, left);
  }
  return RationalFn(std::move(n), std::move(d));
}

RationalFn::Factors lcm(const RationalFn::Factors& a, const RationalFn::Factors& b) {
  RationalFn::Factors r = a;
  for (const auto& [form, mult] : b) {
    int& slot = r[form];
    slot = std::max(slot, mult);
  }
  return r;
}

Poly RationalFn::numerator_over(const Factors& common) const {
  Factors extra;
  for (const auto& [form, mult] : common) {
    auto it = den_.find(form);
    int have = it == den_.end() ? 0 : it->second;
    if (have > mult) throw Error(ErrorKind::InvalidParams, "common denominator does not cover a factor");
    if (mult > have) extra.emplace(form, mult - have);
  }
  for (const auto& [form, mult] : den_)
    if (!common.count(form)) throw Error(ErrorKind::InvalidParams, "common denominator does not cover a factor");
  return extra.empty() ? num_ : num_ * expand(extra);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto common = lcm(a.den_, b.den_);
  return RationalFn(a.numerator_over(common) + b.numerator_over(common), common);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) return RationalFn();
  RationalFn::Factors d = a.den_;
  for (const auto& [form, mult] : b.den_) d[form] += mult;
  return RationalFn(a.num_ * b.num_, std::move(d));
}

RationalFn operator*(const Rational& s, const RationalFn& a) {
  Poly n = a.num_;
  n *= s;
  return RationalFn(std::move(n), a.den_);
}

bool equivalent(const RationalFn& a, const RationalFn& b) {
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace ba::algebra
