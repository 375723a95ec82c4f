#pragma once

#include <vector>

#include "ba/poly.hpp"

// Hot loops with an OpenMP version and a serial reference.  Both produce the
// same canonical polynomial (exact arithmetic makes merge order irrelevant).
namespace ba::kernels {

enum class Exec { Serial, Parallel };

algebra::Poly multiply(const algebra::Poly& a, const algebra::Poly& b, Exec exec);
algebra::Poly sum(const std::vector<algebra::Poly>& parts);

Exec default_exec();
void set_default_exec(Exec exec);

}  // namespace ba::kernels
