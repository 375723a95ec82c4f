#include "ba/feasibility.hpp"

#include <algorithm>
#include <set>

namespace ba::config {

namespace {

// Scale so that the first nonzero entry of (a, b) has absolute value 1;
// positive scaling keeps the inequality direction.
Inequality normalized(Inequality row) {
  Rational pivot = 0;
  for (const auto& x : row.a)
    if (x != 0) { pivot = abs(x); break; }
  if (pivot == 0) return row;
  for (auto& x : row.a) x /= pivot;
  row.b /= pivot;
  return row;
}

struct RowLess {
  bool operator()(const Inequality& x, const Inequality& y) const {
    for (std::size_t i = 0; i < x.a.size(); ++i)
      if (int c = cmp(x.a[i], y.a[i]); c != 0) return c < 0;
    return x.b < y.b;
  }
};

}  // namespace

std::optional<std::vector<Rational>> find_feasible_point(const std::vector<Inequality>& rows, std::size_t dim) {
  // levels[j] holds the system in variables 0..j (variables > j eliminated).
  std::vector<std::vector<Inequality>> levels(dim + 1);
  {
    std::set<Inequality, RowLess> uniq;
    for (const auto& r : rows) uniq.insert(normalized(r));
    levels[dim].assign(uniq.begin(), uniq.end());
  }
  for (std::size_t j = dim; j-- > 0;) {
    const auto& cur = levels[j + 1];
    std::vector<const Inequality*> pos, neg;
    std::set<Inequality, RowLess> next;
    for (const auto& r : cur) {
      if (r.a[j] > 0) pos.push_back(&r);
      else if (r.a[j] < 0) neg.push_back(&r);
      else next.insert(r);
    }
    for (const auto* p : pos)
      for (const auto* q : neg) {
        Inequality c;
        Rational sp = -q->a[j], sq = p->a[j];
        c.a.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) c.a[i] = sp * p->a[i] + sq * q->a[i];
        c.a[j] = 0;
        c.b = sp * p->b + sq * q->b;
        next.insert(normalized(std::move(c)));
      }
    levels[j].assign(next.begin(), next.end());
  }
  for (const auto& r : levels[0])
    if (r.b > 0) return std::nullopt;

  std::vector<Rational> u(dim, Rational(0));
  for (std::size_t j = 0; j < dim; ++j) {
    std::optional<Rational> lo, hi;
    for (const auto& r : levels[j + 1]) {
      if (r.a[j] == 0) continue;
      Rational rest = r.b;
      for (std::size_t i = 0; i < j; ++i) rest -= r.a[i] * u[i];
      Rational bound = rest / r.a[j];
      if (r.a[j] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo) u[j] = *lo;
    else if (hi) u[j] = *hi;
  }
  return u;
}

}  // namespace ba::config
