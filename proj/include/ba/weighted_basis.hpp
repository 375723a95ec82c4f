#pragma once

#include <compare>
#include <vector>

#include "ba/rational.hpp"

namespace ba::algebra {

struct ConfigVector {
  std::vector<Rational> coords;

  ConfigVector() = default;
  explicit ConfigVector(std::size_t n) : coords(n) {}
  explicit ConfigVector(std::vector<Rational> c) : coords(std::move(c)) {}
  static ConfigVector unit(std::size_t n, std::size_t i, const Rational& scale = 1);

  std::size_t size() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const;

  ConfigVector operator-() const;
  friend ConfigVector operator+(const ConfigVector& a, const ConfigVector& b);
  friend ConfigVector operator-(const ConfigVector& a, const ConfigVector& b);
  friend ConfigVector operator*(const Rational& s, const ConfigVector& v);
  friend bool operator==(const ConfigVector& a, const ConfigVector& b) { return a.coords == b.coords; }
  friend std::strong_ordering operator<=>(const ConfigVector& a, const ConfigVector& b);
};

// If v = c·u for a rational c, returns c; otherwise returns 0.
Rational parallel_ratio(const ConfigVector& v, const ConfigVector& u);

class WeightedBasis {
 public:
  WeightedBasis() = default;
  explicit WeightedBasis(std::vector<Rational> weights);

  std::size_t dim() const { return w_.size(); }
  const Rational& weight(std::size_t i) const { return w_[i]; }
  const std::vector<Rational>& weights() const { return w_; }
  Rational inner(const ConfigVector& u, const ConfigVector& v) const;
  Rational norm2(const ConfigVector& v) const { return inner(v, v); }

  friend bool operator==(const WeightedBasis& a, const WeightedBasis& b) { return a.w_ == b.w_; }

 private:
  std::vector<Rational> w_;
};

}  // namespace ba::algebra
