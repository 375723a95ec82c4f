#include "ba/weighted_basis.hpp"

#include "ba/error.hpp"

namespace ba::algebra {

ConfigVector ConfigVector::unit(std::size_t n, std::size_t i, const Rational& scale) {
  ConfigVector v(n);
  v.coords[i] = scale;
  return v;
}

bool ConfigVector::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

ConfigVector ConfigVector::operator-() const {
  ConfigVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r.coords[i] = -coords[i];
  return r;
}

static void same_dim(const ConfigVector& a, const ConfigVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Dimension, "vector dimension mismatch");
}

ConfigVector operator+(const ConfigVector& a, const ConfigVector& b) {
  same_dim(a, b);
  ConfigVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.coords[i] = a.coords[i] + b.coords[i];
  return r;
}

ConfigVector operator-(const ConfigVector& a, const ConfigVector& b) {
  same_dim(a, b);
  ConfigVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.coords[i] = a.coords[i] - b.coords[i];
  return r;
}

ConfigVector operator*(const Rational& s, const ConfigVector& v) {
  ConfigVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r.coords[i] = s * v.coords[i];
  return r;
}

std::strong_ordering operator<=>(const ConfigVector& a, const ConfigVector& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a.coords[i], b.coords[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Rational parallel_ratio(const ConfigVector& v, const ConfigVector& u) {
  same_dim(v, u);
  Rational ratio = 0;
  bool have = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (u[i] == 0) {
      if (v[i] != 0) return 0;
      continue;
    }
    Rational r = v[i] / u[i];
    if (!have) {
      ratio = r;
      have = true;
    } else if (r != ratio) {
      return 0;
    }
  }
  return ratio;
}

WeightedBasis::WeightedBasis(std::vector<Rational> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw Error(ErrorKind::InvalidParams, "weighted basis must have positive dimension");
  for (const auto& w : w_)
    if (w == 0) throw Error(ErrorKind::InvalidParams, "isotropic basis direction (zero weight)");
}

Rational WeightedBasis::inner(const ConfigVector& u, const ConfigVector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw Error(ErrorKind::Dimension, "vector/basis dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i) s += u[i] * v[i] * w_[i];
  return s;
}

}  // namespace ba::algebra
