#pragma once

#include <string>
#include <vector>

#include "ba/weighted_basis.hpp"

namespace ba::config {

using algebra::ConfigVector;
using algebra::Rational;
using algebra::WeightedBasis;

enum class Family { Explicit, RootA, RootC, An1, Cnlm, An2 };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

struct FamilyParams {
  Family family = Family::Explicit;
  int n = 0;
  Rational l = 0;
  Rational m = 0;
  std::vector<int> mults;  // RootA only: per-root override, entry order

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

struct Entry {
  ConfigVector vec;
  int mult = 1;

  friend bool operator==(const Entry&, const Entry&) = default;
};

class Configuration {
 public:
  Configuration() = default;
  // Validates dimensions, isotropy, parallelism and multiplicities.
  Configuration(WeightedBasis basis, std::vector<Entry> entries, FamilyParams params = {});

  const WeightedBasis& basis() const { return basis_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const FamilyParams& params() const { return params_; }
  Family family() const { return params_.family; }
  std::size_t dim() const { return basis_.dim(); }
  int total_multiplicity() const;
  std::string descriptor() const;

 private:
  WeightedBasis basis_;
  std::vector<Entry> entries_;
  FamilyParams params_;
};

Configuration build_family(const FamilyParams& params);
Configuration root_a(int n, int m);
Configuration root_c(int n, int m);
Configuration a_n1(int n, int m);
Configuration c_nlm(int n, int l, int m);
Configuration a_n2(int n, const Rational& m);

// Closed-form iteration count M from the family formulas.
int family_iterations(const FamilyParams& params);

struct PositiveSystem {
  std::vector<int> signs;  // ±1 per entry
  ConfigVector witness;    // inner(witness, sign·α) >= 1 for all entries

  ConfigVector signed_vector(const Configuration& c, std::size_t i) const;
};

std::vector<PositiveSystem> enumerate_positive_systems(const Configuration& c, std::size_t bound = 16);
std::vector<std::size_t> edge_vectors(const Configuration& c, const PositiveSystem& p);
bool verify_witness(const Configuration& c, const PositiveSystem& p);

}  // namespace ba::config
