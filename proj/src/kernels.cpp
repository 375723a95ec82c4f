#include "ba/kernels.hpp"

#include <omp.h>

#include <atomic>

namespace ba::kernels {

using algebra::Poly;

namespace {
std::atomic<Exec> g_exec{Exec::Parallel};
}

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec exec) { g_exec.store(exec); }

Poly multiply(const Poly& a, const Poly& b, Exec exec) {
  const Poly& big = a.size() >= b.size() ? a : b;
  const Poly& small = a.size() >= b.size() ? b : a;
  int threads = omp_get_max_threads();
  if (exec == Exec::Serial || threads == 1 || small.size() < 8) return a * b;

  std::vector<Poly::Terms::const_iterator> rows;
  rows.reserve(small.size());
  for (auto it = small.terms().begin(); it != small.terms().end(); ++it) rows.push_back(it);
  int chunks = std::min<int>(threads, static_cast<int>(rows.size()));
  std::vector<Poly> partial(chunks);
#pragma omp parallel for schedule(static)
  for (int c = 0; c < chunks; ++c) {
    Poly acc;
    for (std::size_t r = c; r < rows.size(); r += chunks)
      for (const auto& [mb, cb] : big.terms()) acc.add_term(rows[r]->first * mb, rows[r]->second * cb);
    partial[c] = std::move(acc);
  }
  return sum(partial);
}

Poly sum(const std::vector<Poly>& parts) {
  Poly out;
  for (const auto& p : parts) out += p;
  return out;
}

}  // namespace ba::kernels
