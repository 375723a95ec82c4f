#pragma once

#include <optional>
#include <vector>

#include "ba/rational.hpp"

namespace ba::config {

using algebra::Rational;

// a·u >= b
struct Inequality {
  std::vector<Rational> a;
  Rational b;
};

// Exact Fourier–Motzkin elimination.  Returns a point satisfying every
// inequality, or nothing when the system is infeasible.
std::optional<std::vector<Rational>> find_feasible_point(const std::vector<Inequality>& rows, std::size_t dim);

}  // namespace ba::config
