#include <chrono>
#include <cstdio>

#include "ba/ba_constructor.hpp"
#include "ba/family_operators.hpp"
#include "ba/kernels.hpp"
#include "ba/operator.hpp"

using namespace ba;

namespace {

template <class F>
double time_ms(F&& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main() {
  config::FamilyParams p;
  p.family = config::Family::Cnlm;
  p.n = 2;
  p.l = 1;
  p.m = 1;
  auto c = config::build_family(p);
  auto d = ops::family_operator(c);
  auto phi = construct::initial_phi0(c);
  auto sq = phi * phi;

  std::printf("%-28s %12s %12s\n", "kernel", "serial ms", "parallel ms");
  for (auto [name, fn] : {std::pair<const char*, int>{"apply D to phi0 (C2(1,1))", 0}, {"multiply phi0^2 * phi0", 1}}) {
    auto run = [&, fn = fn](kernels::Exec e) {
      if (fn == 0) return time_ms([&] { (void)ops::apply(d, phi, c.basis(), e); }, 3);
      return time_ms([&] { (void)kernels::multiply(sq, phi, e); }, 3);
    };
    double s = run(kernels::Exec::Serial);
    double q = run(kernels::Exec::Parallel);
    std::printf("%-28s %12.2f %12.2f\n", name, s, q);
  }
  for (auto e : {kernels::Exec::Serial, kernels::Exec::Parallel}) {
    construct::Options opt;
    opt.exec = e;
    double ms = time_ms([&] { (void)construct::iterate_ba(c, opt); }, 1);
    std::printf("%-28s %12s %12.2f\n", e == kernels::Exec::Serial ? "iterate_ba serial" : "iterate_ba parallel", "", ms);
  }
  return 0;
}
