#pragma once

#include <string>
#include <vector>

#include "ba/ba_constructor.hpp"
#include "ba/configuration.hpp"

namespace ba::verify {

using algebra::Element;
using algebra::KPoly;
using config::Configuration;
using config::PositiveSystem;

struct Witness {
  std::string what;
  int system = -1;  // index into the enumerated positive systems
  int entry = -1;   // index of α in the configuration
  int s = 0;
  int branch = 0;   // ±1 for the direct locus check
  std::string residual;  // canonical text of the nonzero residual, if any
};

struct CheckReport {
  std::string name;
  std::string config;
  bool pass = true;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  double millis = 0;

  void fail(Witness w) {
    pass = false;
    witnesses.push_back(std::move(w));
  }
};

struct Arrangement {
  std::vector<PositiveSystem> systems;
  std::vector<std::vector<std::size_t>> edges;  // per system
};
Arrangement arrangement(const Configuration& c);

// Π_{β ∈ A_+, β ≠ α} Π_{i=1}^{m_β} ((k,β) + i(β,β)), β signed as in A_+.
KPoly axiom_denominator(const Configuration& c, const PositiveSystem& p, std::size_t alpha);

// Residual of condition (k + sα) vs (k − sα) for the given system/edge; zero iff it holds.
Element axiom_residual(const Configuration& c, const PositiveSystem& p, std::size_t alpha, int s, const Element& e);

CheckReport check_axioms(const Configuration& c, const Element& e, const Arrangement* arr = nullptr);
CheckReport check_simple_conditions(const Configuration& c, const Element& e, const Arrangement* arr = nullptr);
CheckReport check_unshifted_symmetry(const Configuration& c, const Element& e);
CheckReport check_compatibility(const Configuration& c, const Arrangement* arr = nullptr);
CheckReport check_ring_membership(const Configuration& c, const KPoly& p);
CheckReport check_schrodinger(const Configuration& c, const construct::BAResult& r);
CheckReport check_subleading(const Configuration& c, const construct::BAResult& r);
CheckReport check_bispectral(const Configuration& c, const construct::BAResult& r);
CheckReport check_commuting_ring(const Configuration& c, const construct::BAResult& r, const KPoly& p, const KPoly& q);
CheckReport check_locus_series(const Configuration& c, const Arrangement* arr = nullptr);
CheckReport check_locus_direct(const Configuration& c, const std::vector<int>& branches = {1, -1});
CheckReport check_reductions(const Configuration& c);
CheckReport check_chain_axioms(const Configuration& c, const construct::BAResult& r, const Arrangement* arr = nullptr);
// Rank-one instance of uniqueness: ψ = (k,α) − (α,α) coth(α,x) for one vector, m = 1.
CheckReport check_rank_one_uniqueness(const Configuration& c, const construct::BAResult& r);

struct SeriesPartition {
  std::size_t alpha = 0;
  std::vector<std::vector<std::size_t>> blocks;
};
SeriesPartition series_partition(const Configuration& c, const PositiveSystem& p, std::size_t alpha);
// Σ_{β∈B} m_β(m_β+1)(β,β)(α,β)^{2s−1} with signed vectors.
algebra::Rational series_sum(const Configuration& c, const PositiveSystem& p, std::size_t alpha,
                             const std::vector<std::size_t>& block, int s);

// Cleared numerator of ∂_α^{2s−1} Σ_{β≠α} 4 m_β(m_β+1)(β,β)/(e^{(β,x)} − e^{−(β,x)})²
// reduced modulo e^{(α,x)} = eps.
algebra::Poly locus_direct_numerator(const Configuration& c, std::size_t alpha, int s, int eps);

KPoly invariant_square(const Configuration& c);  // (k,k)

}  // namespace ba::verify
