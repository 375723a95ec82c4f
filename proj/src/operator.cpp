#include "ba/operator.hpp"

#include <sstream>
#include <vector>

#include "ba/calculus.hpp"

namespace ba::ops {

using algebra::NotDivisible;
using algebra::Rational;

DifferenceOperator DifferenceOperator::multiplication(const RationalFn& f, std::size_t dim) {
  return shift(ConfigVector(dim), f);
}

DifferenceOperator DifferenceOperator::shift(const ConfigVector& tau, const RationalFn& coeff) {
  DifferenceOperator d;
  d.add_term(tau, coeff);
  return d;
}

void DifferenceOperator::add_term(const ConfigVector& tau, const RationalFn& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(tau);
  if (it == terms_.end()) {
    terms_.emplace(tau, coeff);
    return;
  }
  it->second = it->second + coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

DifferenceOperator DifferenceOperator::reduced() const {
  DifferenceOperator r;
  for (const auto& [tau, a] : terms_) r.terms_.emplace(tau, a.reduced());
  return r;
}

DifferenceOperator operator+(const DifferenceOperator& a, const DifferenceOperator& b) {
  DifferenceOperator r = a;
  for (const auto& [tau, c] : b.terms_) r.add_term(tau, c);
  return r;
}

DifferenceOperator operator-(const DifferenceOperator& a, const DifferenceOperator& b) {
  DifferenceOperator r = a;
  for (const auto& [tau, c] : b.terms_) r.add_term(tau, -c);
  return r;
}

DifferenceOperator operator*(const Rational& s, const DifferenceOperator& a) {
  DifferenceOperator r;
  for (const auto& [tau, c] : a.terms_) r.add_term(tau, s * c);
  return r;
}

DifferenceOperator compose(const DifferenceOperator& a, const DifferenceOperator& b, const WeightedBasis& basis) {
  DifferenceOperator r;
  for (const auto& [tau, at] : a.terms())
    for (const auto& [sigma, bs] : b.terms()) r.add_term(tau + sigma, at * bs.shifted(basis, tau));
  return r;
}

DifferenceOperator commutator(const DifferenceOperator& a, const DifferenceOperator& b, const WeightedBasis& basis) {
  return compose(a, b, basis) - compose(b, a, basis);
}

DifferenceOperator ad_power(const DifferenceOperator& d, const Poly& p, int r, const WeightedBasis& basis) {
  DifferenceOperator x = DifferenceOperator::multiplication(RationalFn(p), basis.dim());
  for (int i = 0; i < r; ++i) x = commutator(d, x, basis).reduced();
  return x;
}

bool equivalent(const DifferenceOperator& a, const DifferenceOperator& b) {
  if (a.terms().size() != b.terms().size()) return false;
  auto ia = a.terms().begin();
  for (auto ib = b.terms().begin(); ib != b.terms().end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return false;
    if (!algebra::equivalent(ia->second, ib->second)) return false;
  }
  return true;
}

Element apply(const DifferenceOperator& op, const Element& e, const WeightedBasis& basis, kernels::Exec exec) {
  if (op.is_zero() || e.is_zero()) return Element();
  RationalFn::Factors common;
  std::vector<std::pair<ConfigVector, const RationalFn*>> work;
  for (const auto& [tau, a] : op.terms()) {
    common = algebra::lcm(common, a.factors());
    work.emplace_back(tau, &a);
  }
  std::vector<Poly> parts(work.size());
  auto one_term = [&](std::size_t t) {
    const auto& [tau, a] = work[t];
    Poly shifted = algebra::shift(e, basis, tau) * Poly::exp_of(tau);
    parts[t] = a->numerator_over(common) * shifted;
  };
  if (exec == kernels::Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t t = 0; t < work.size(); ++t) one_term(t);
  } else {
    for (std::size_t t = 0; t < work.size(); ++t) one_term(t);
  }
  Poly total = kernels::sum(parts);
  for (const auto& [form, mult] : common) {
    Poly lin = form.to_poly();
    for (int i = 0; i < mult; ++i) {
      try {
        total = algebra::exact_divide(total, lin);
      } catch (const NotDivisible& err) {
        throw NotDivisible(ErrorKind::NotHolomorphic,
                           "operator application is not holomorphic along " + algebra::to_text(lin) + " = 0",
                           err.remainder());
      }
    }
  }
  return total;
}

std::string to_text(const RationalFn& f) {
  std::string num = algebra::to_text(f.num());
  if (f.factors().empty()) return num;
  std::ostringstream os;
  os << '(' << num << ")/(";
  bool first = true;
  for (const auto& [form, mult] : f.factors()) {
    if (!first) os << '*';
    first = false;
    os << '(' << algebra::to_text(form.to_poly()) << ')';
    if (mult != 1) os << '^' << mult;
  }
  os << ')';
  return os.str();
}

std::string to_text(const DifferenceOperator& op) {
  std::ostringstream os;
  for (const auto& [tau, a] : op.terms()) {
    os << "T[";
    for (std::size_t i = 0; i < tau.size(); ++i) os << (i ? "," : "") << algebra::to_string(tau[i]);
    os << "]: " << to_text(a) << '\n';
  }
  return os.str();
}

}  // namespace ba::ops
