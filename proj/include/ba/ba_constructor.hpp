#pragma once

#include <map>
#include <vector>

#include "ba/configuration.hpp"
#include "ba/kernels.hpp"
#include "ba/poly.hpp"

namespace ba::construct {

using algebra::Element;
using algebra::ExpPoly;
using algebra::KPoly;
using config::Configuration;

struct BAResult {
  Configuration config;
  int M = 0;
  std::vector<int> chain_degrees;
  std::vector<Element> chain;  // φ_0 .. φ_M
  ExpPoly lambda;
  // ψ = numerator / normalizer; the leading part of ψ is Π (k,α)^{m_α}.
  Element numerator;
  ExpPoly normalizer;
  // normalizer · 2^H, H = Σ multiplicities of vectors with half-integer
  // coordinates: the constant convention of products over k̄_i ± k̄_j.
  ExpPoly barred_normalizer;
};

struct Options {
  kernels::Exec exec = kernels::default_exec();
  bool check_recurrence = true;
};

KPoly leading_product(const Configuration& c);  // Π (k,α)^{m_α}
Element initial_phi0(const Configuration& c);
ExpPoly eigenvalue_lambda(const Configuration& c);
ExpPoly lambda_gradient(const Configuration& c, const algebra::ConfigVector& beta);  // ∂_β λ
ExpPoly predicted_normalizer(const Configuration& c);  // M! Π (∂_β λ)^{m_β}
// Closed forms stated for the families, in the barred convention.
ExpPoly closed_form_normalizer(const Configuration& c);
int half_vector_weight(const Configuration& c);  // H

BAResult iterate_ba(const Configuration& c, const Options& opt = {});

// Leading homogeneous parts tracked in the basis Π (k,β)^{λ_β}, starting
// from λ = 2m and stepping P ↦ Σ_β (λ_β − m_β)(∂_β λ) P/(k,β).
class LeadingRecurrence {
 public:
  explicit LeadingRecurrence(const Configuration& c);
  void step();
  int steps() const { return steps_; }
  Element expand() const;
  const std::map<std::vector<int>, ExpPoly>& state() const { return state_; }

 private:
  const Configuration* c_;
  std::vector<ExpPoly> grad_;
  std::vector<KPoly> forms_;
  std::map<std::vector<int>, ExpPoly> state_;
  int steps_ = 0;
};

struct RecurrenceReport {
  int step = 0;  // compares the prediction for φ_{step+1}
  bool match = false;
  Element predicted;
  Element actual;
};

std::vector<RecurrenceReport> leading_recurrence_check(const Configuration& c, const std::vector<Element>& chain);

}  // namespace ba::construct
