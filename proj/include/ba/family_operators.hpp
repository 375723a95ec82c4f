#pragma once

#include <vector>

#include "ba/configuration.hpp"
#include "ba/operator.hpp"

namespace ba::ops {

// Distinct points of the orbit of π under the reflections in `data`.
std::vector<ConfigVector> weyl_orbit(const WeightedBasis& basis, const std::vector<config::Entry>& data,
                                     const ConfigVector& pi);

// Σ_{τ ∈ Wπ} Π_{α: (α,τ)=1} (1 − m_α/(α,k)) T^τ, α running over ±data.
DifferenceOperator build_macdonald(const WeightedBasis& basis, const std::vector<config::Entry>& data,
                                   const ConfigVector& pi);

DifferenceOperator build_root_a_op(int n, int m, int r = 1);
DifferenceOperator build_a_n1_op(int n, int m);
DifferenceOperator build_c_nlm_op(int n, int l, int m);
DifferenceOperator build_a_n2_op(int n, const algebra::Rational& m);

// The operator D used for the configuration's BA construction.
DifferenceOperator family_operator(const config::Configuration& c);

// Σ_τ (lim_{k→∞} a_τ(k)) e^{(τ,x)}; used to cross-check the closed-form λ.
Poly leading_symbol(const DifferenceOperator& d);

}  // namespace ba::ops
