#include "ba/ba_constructor.hpp"
#include <memory>

#include "ba/calculus.hpp"
#include "ba/error.hpp"
#include "ba/family_operators.hpp"
#include "ba/operator.hpp"

namespace ba::construct {

using algebra::ConfigVector;
using algebra::Poly;
using algebra::Rational;
using algebra::ResidualError;

KPoly leading_product(const Configuration& c) {
  Poly p = Poly::constant(1);
  for (const auto& e : c.entries()) p = p * algebra::pow(Poly::linear_form(e.vec), e.mult);
  return p;
}

Element initial_phi0(const Configuration& c) {
  Poly p = Poly::constant(1);
  for (const auto& e : c.entries()) {
    Poly lin = Poly::linear_form(e.vec);
    Poly sq = lin * lin;
    Rational n2 = c.basis().norm2(e.vec);
    for (int s = 1; s <= e.mult; ++s) p = p * (sq - Poly::constant(s * s * n2 * n2));
  }
  return p;
}

ExpPoly eigenvalue_lambda(const Configuration& c) {
  const auto& p = c.params();
  std::size_t d = c.dim();
  ExpPoly lam;
  switch (c.family()) {
    case config::Family::Cnlm:
    case config::Family::RootC: {
      for (std::size_t j = 0; j < d; ++j) {
        Rational w = c.basis().weight(j);
        for (int sign : {1, -1}) lam += (1 / w) * Poly::exp_of(ConfigVector::unit(d, j, sign));
      }
      return lam;
    }
    case config::Family::An1: {
      for (std::size_t i = 0; i + 1 < d; ++i) lam += Poly::exp_of(ConfigVector::unit(d, i, 2));
      lam += (1 / p.m) * Poly::exp_of(ConfigVector::unit(d, d - 1, 2));
      return lam;
    }
    case config::Family::An2: {
      for (std::size_t i = 0; i < d; ++i) lam += (1 / c.basis().weight(i)) * Poly::exp_of(ConfigVector::unit(d, i, 2));
      return lam;
    }
    case config::Family::RootA: {
      std::vector<config::Entry> dual;
      for (const auto& e : c.entries()) dual.push_back({(1 / c.basis().norm2(e.vec)) * e.vec, e.mult});
      for (const auto& tau : ops::weyl_orbit(c.basis(), dual, ConfigVector::unit(d, 0, 2))) lam += Poly::exp_of(tau);
      return lam;
    }
    case config::Family::Explicit:
      break;
  }
  throw Error(ErrorKind::UnsupportedFamily, "no eigenvalue for explicit configurations");
}

ExpPoly lambda_gradient(const Configuration& c, const ConfigVector& beta) {
  return algebra::exp_derivative(eigenvalue_lambda(c), c.basis(), beta);
}

namespace {
Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

ExpPoly sinh2(const ConfigVector& tau) {  // e^{(τ,x)} − e^{−(τ,x)}
  return Poly::exp_of(tau) - Poly::exp_of(-tau);
}
}  // namespace

ExpPoly predicted_normalizer(const Configuration& c) {
  ExpPoly lam = eigenvalue_lambda(c);
  Poly p = Poly::constant(factorial(c.total_multiplicity()));
  for (const auto& e : c.entries())
    p = p * algebra::pow(algebra::exp_derivative(lam, c.basis(), e.vec), e.mult);
  return p;
}

int half_vector_weight(const Configuration& c) {
  int h = 0;
  for (const auto& e : c.entries()) {
    bool half = false;
    for (const auto& x : e.vec.coords) half = half || !algebra::is_integer(x);
    if (half) h += e.mult;
  }
  return h;
}

ExpPoly closed_form_normalizer(const Configuration& c) {
  const auto& p = c.params();
  std::size_t d = c.dim();
  int M = c.total_multiplicity();
  Poly out = Poly::constant(factorial(M));
  auto e2 = [&](std::size_t i) { return Poly::exp_of(ConfigVector::unit(d, i, 2)); };
  switch (c.family()) {
    case config::Family::Cnlm:
    case config::Family::RootC: {
      // c₀ Π s_i^l s_n^m Π (s_i ± s_j)^{(2l+1)/(2m+1)} Π (s_i ± s_n), s_i = e^{x̄_i} − e^{−x̄_i}
      int l = static_cast<int>(algebra::to_long(p.l)), m = static_cast<int>(algebra::to_long(p.m));
      std::size_t last = d - 1;
      int ratio = (2 * l + 1) / (2 * m + 1);
      std::vector<Poly> s;
      for (std::size_t i = 0; i < d; ++i) s.push_back(sinh2(ConfigVector::unit(d, i)));
      for (std::size_t i = 0; i < last; ++i) out = out * algebra::pow(s[i], l);
      out = out * algebra::pow(s[last], m);
      for (std::size_t i = 0; i < last; ++i)
        for (std::size_t j = i + 1; j < last; ++j)
          out = out * algebra::pow((s[i] + s[j]) * (s[i] - s[j]), ratio);
      for (std::size_t i = 0; i < last; ++i) out = out * (s[i] + s[last]) * (s[i] - s[last]);
      return out;
    }
    case config::Family::An1: {
      // 2^M M! Π (e^{2x_i} − e^{2x_j})^m Π (e^{2x_i} − e^{2x̄_{n+1}})
      int m = static_cast<int>(algebra::to_long(p.m));
      std::size_t last = d - 1;
      out *= Rational(mpz_class(1) << M);
      for (std::size_t i = 0; i < last; ++i)
        for (std::size_t j = i + 1; j < last; ++j) out = out * algebra::pow(e2(i) - e2(j), m);
      for (std::size_t i = 0; i < last; ++i) out = out * (e2(i) - e2(last));
      return out;
    }
    case config::Family::An2: {
      // 2^M M! Π_{i<j} (e^{2x̄_i} − e^{2x̄_j})^{m_ij}
      out *= Rational(mpz_class(1) << M);
      for (const auto& e : c.entries()) {
        std::size_t i = 0, j = 0;
        for (std::size_t t = 0; t < d; ++t) {
          if (e.vec[t] == 1) i = t;
          if (e.vec[t] == -1) j = t;
        }
        out = out * algebra::pow(e2(i) - e2(j), e.mult);
      }
      return out;
    }
    default:
      break;
  }
  throw Error(ErrorKind::UnsupportedFamily, "no closed-form normalizer for " + c.descriptor());
}

LeadingRecurrence::LeadingRecurrence(const Configuration& c) : c_(&c) {
  ExpPoly lam = eigenvalue_lambda(c);
  std::vector<int> start;
  for (const auto& e : c.entries()) {
    grad_.push_back(algebra::exp_derivative(lam, c.basis(), e.vec));
    forms_.push_back(Poly::linear_form(e.vec));
    start.push_back(2 * e.mult);
  }
  state_[start] = Poly::constant(1);
}

void LeadingRecurrence::step() {
  std::map<std::vector<int>, ExpPoly> next;
  const auto& entries = c_->entries();
  for (const auto& [lam, coef] : state_)
    for (std::size_t b = 0; b < entries.size(); ++b) {
      int drop = lam[b] - entries[b].mult;
      if (drop <= 0) continue;
      std::vector<int> lam2 = lam;
      --lam2[b];
      ExpPoly& slot = next[lam2];
      slot += Rational(drop) * (coef * grad_[b]);
      if (slot.is_zero()) next.erase(lam2);
    }
  state_ = std::move(next);
  ++steps_;
}

Element LeadingRecurrence::expand() const {
  std::vector<std::vector<Poly>> pows(forms_.size());
  auto power = [&](std::size_t b, int e) -> const Poly& {
    auto& v = pows[b];
    if (v.empty()) v.push_back(Poly::constant(1));
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * forms_[b]);
    return v[e];
  };
  Element out;
  for (const auto& [lam, coef] : state_) {
    Poly k = Poly::constant(1);
    for (std::size_t b = 0; b < lam.size(); ++b) k = k * power(b, lam[b]);
    out += coef * k;
  }
  return out;
}

std::vector<RecurrenceReport> leading_recurrence_check(const Configuration& c, const std::vector<Element>& chain) {
  std::vector<RecurrenceReport> out;
  LeadingRecurrence rec(c);
  int M = c.total_multiplicity();
  for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
    rec.step();
    RecurrenceReport r;
    r.step = static_cast<int>(s);
    r.predicted = rec.expand();
    r.actual = chain[s + 1].k_homogeneous(2 * M - static_cast<int>(s) - 1);
    r.match = r.predicted == r.actual;
    out.push_back(std::move(r));
  }
  return out;
}

BAResult iterate_ba(const Configuration& c, const Options& opt) {
  BAResult r;
  r.config = c;
  r.M = c.total_multiplicity();
  Element phi = initial_phi0(c);
  r.chain.push_back(phi);
  r.chain_degrees.push_back(phi.k_degree());
  if (c.entries().empty()) {
    r.numerator = phi;
    r.normalizer = Poly::constant(1);
    r.barred_normalizer = r.normalizer;
    return r;
  }
  ops::DifferenceOperator D = ops::family_operator(c);
  r.lambda = eigenvalue_lambda(c);
  std::unique_ptr<LeadingRecurrence> rec;
  if (opt.check_recurrence) rec = std::make_unique<LeadingRecurrence>(c);
  for (int s = 0; s < r.M; ++s) {
    Element next = ops::apply(D, phi, c.basis(), opt.exec) - kernels::multiply(r.lambda, phi, opt.exec);
    int deg = next.k_degree();
    if (deg != 2 * r.M - s - 1)
      throw ResidualError(ErrorKind::ChainDegreeViolation,
                          "deg φ_" + std::to_string(s + 1) + " = " + std::to_string(deg) + ", expected " +
                              std::to_string(2 * r.M - s - 1),
                          next.k_homogeneous(deg));
    if (rec) {
      rec->step();
      Element predicted = rec->expand();
      Element actual = next.k_homogeneous(deg);
      if (!(predicted == actual))
        throw ResidualError(ErrorKind::RecurrenceMismatch,
                            "leading part of φ_" + std::to_string(s + 1) + " differs from the recurrence",
                            actual - predicted);
    }
    phi = std::move(next);
    r.chain.push_back(phi);
    r.chain_degrees.push_back(deg);
  }
  Element tail = ops::apply(D, phi, c.basis(), opt.exec) - kernels::multiply(r.lambda, phi, opt.exec);
  if (!tail.is_zero())
    throw ResidualError(ErrorKind::NonzeroTail, "φ_" + std::to_string(r.M + 1) + " is not zero", tail);

  KPoly T = leading_product(c);
  Element lead = phi.k_homogeneous(r.M);
  const auto& lt = T.leading_monomial();
  ExpPoly cx = (1 / T.leading_coefficient()) * lead.exp_coefficient(lt.k);
  Element diff = lead - cx * T;
  if (!diff.is_zero())
    throw ResidualError(ErrorKind::NormalizerMismatch, "leading part of φ_M is not c(x)·Π(k,α)^m", diff);
  ExpPoly predicted = predicted_normalizer(c);
  if (!(cx == predicted))
    throw ResidualError(ErrorKind::NormalizerMismatch, "c(x) differs from M!·Π(∂_β λ)^m", cx - predicted);
  r.numerator = phi;
  r.normalizer = cx;
  r.barred_normalizer = Rational(mpz_class(1) << half_vector_weight(c)) * cx;
  if (c.family() != config::Family::RootA) {
    ExpPoly closed = closed_form_normalizer(c);
    if (!(closed == r.barred_normalizer))
      throw ResidualError(ErrorKind::NormalizerMismatch, "c(x) differs from the family closed form",
                          r.barred_normalizer - closed);
  }
  return r;
}

}  // namespace ba::construct
