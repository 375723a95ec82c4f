#include "ba/configuration.hpp"

#include <sstream>

#include "ba/error.hpp"
#include "ba/feasibility.hpp"
#include "ba/poly.hpp"

namespace ba::config {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Explicit: return "explicit";
    case Family::RootA: return "rootA";
    case Family::RootC: return "rootC";
    case Family::An1: return "An1";
    case Family::Cnlm: return "Cnlm";
    case Family::An2: return "An2";
  }
  return "explicit";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::Explicit, Family::RootA, Family::RootC, Family::An1, Family::Cnlm, Family::An2})
    if (name == family_name(f)) return f;
  throw Error(ErrorKind::Parse, "unknown family '" + std::string(name) + "' (expected rootA, rootC, An1, Cnlm, An2)");
}

Configuration::Configuration(WeightedBasis basis, std::vector<Entry> entries, FamilyParams params)
    : basis_(std::move(basis)), entries_(std::move(entries)), params_(std::move(params)) {
  if (basis_.dim() > algebra::kMaxDim)
    throw Error(ErrorKind::InvalidParams, "dimension " + std::to_string(basis_.dim()) + " exceeds the supported maximum " +
                                              std::to_string(algebra::kMaxDim));
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.vec.size() != basis_.dim()) throw Error(ErrorKind::Dimension, "entry " + std::to_string(i) + " has wrong dimension");
    if (e.vec.is_zero()) throw Error(ErrorKind::InvalidParams, "entry " + std::to_string(i) + " is the zero vector");
    if (basis_.norm2(e.vec) == 0) throw Error(ErrorKind::InvalidParams, "entry " + std::to_string(i) + " is isotropic");
    if (e.mult < 1) throw Error(ErrorKind::InvalidParams, "entry " + std::to_string(i) + " has nonpositive multiplicity");
    for (std::size_t j = 0; j < i; ++j)
      if (algebra::parallel_ratio(e.vec, entries_[j].vec) != 0)
        throw Error(ErrorKind::InvalidParams,
                    "entries " + std::to_string(j) + " and " + std::to_string(i) + " are parallel");
  }
}

int Configuration::total_multiplicity() const {
  int s = 0;
  for (const auto& e : entries_) s += e.mult;
  return s;
}

std::string Configuration::descriptor() const {
  std::ostringstream os;
  os << family_name(params_.family);
  switch (params_.family) {
    case Family::Explicit:
      os << "(dim=" << dim() << ",entries=" << entries_.size() << ")";
      break;
    case Family::Cnlm:
      os << "(n=" << params_.n << ",l=" << params_.l << ",m=" << params_.m << ")";
      break;
    default:
      os << "(n=" << params_.n << ",m=" << params_.m;
      if (!params_.mults.empty()) {
        os << ",mults=";
        for (std::size_t i = 0; i < params_.mults.size(); ++i) os << (i ? ":" : "") << params_.mults[i];
      }
      os << ")";
  }
  return os.str();
}

namespace {

int positive_int(const Rational& q, const char* what) {
  if (!algebra::is_integer(q) || q < 1) throw Error(ErrorKind::InvalidParams, std::string(what) + " must be a positive integer");
  return static_cast<int>(algebra::to_long(q));
}

std::vector<Rational> uniform(std::size_t n, const Rational& w) { return std::vector<Rational>(n, w); }

}  // namespace

Configuration root_a(int n, int m) {
  FamilyParams p{Family::RootA, n, 0, m, {}};
  return build_family(p);
}

Configuration root_c(int n, int m) { return build_family({Family::RootC, n, m, m, {}}); }
Configuration a_n1(int n, int m) { return build_family({Family::An1, n, 0, m, {}}); }
Configuration c_nlm(int n, int l, int m) { return build_family({Family::Cnlm, n, l, m, {}}); }
Configuration a_n2(int n, const Rational& m) { return build_family({Family::An2, n, 0, m, {}}); }

Configuration build_family(const FamilyParams& p) {
  if (p.n < 1) throw Error(ErrorKind::InvalidParams, "n must be positive");
  std::vector<Entry> entries;
  switch (p.family) {
    case Family::RootA: {
      int m = positive_int(p.m, "m");
      std::size_t d = p.n + 1;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
          entries.push_back({ConfigVector::unit(d, i) - ConfigVector::unit(d, j), m});
      if (!p.mults.empty()) {
        if (p.mults.size() != entries.size())
          throw Error(ErrorKind::InvalidParams, "mults must list one multiplicity per root (" + std::to_string(entries.size()) + ")");
        for (std::size_t i = 0; i < entries.size(); ++i) entries[i].mult = p.mults[i];
      }
      return Configuration(WeightedBasis(uniform(d, 1)), std::move(entries), p);
    }
    case Family::RootC:
    case Family::Cnlm: {
      if (p.n < 2) throw Error(ErrorKind::InvalidParams, "n must be at least 2");
      int l = positive_int(p.l, "l");
      int m = positive_int(p.m, "m");
      if (p.family == Family::RootC && l != m) throw Error(ErrorKind::InvalidParams, "rootC needs l = m");
      std::size_t d = p.n, last = d - 1;
      int ratio = 0;
      if ((2 * l + 1) % (2 * m + 1) == 0) ratio = (2 * l + 1) / (2 * m + 1);
      else if (p.n >= 3) throw Error(ErrorKind::InvalidParams, "(2l+1)/(2m+1) must be an integer for n >= 3");
      std::vector<Rational> w = uniform(d, 2 * m + 1);
      w[last] = 2 * l + 1;
      Rational half(1, 2);
      for (std::size_t i = 0; i < last; ++i) entries.push_back({ConfigVector::unit(d, i), l});
      entries.push_back({ConfigVector::unit(d, last), m});
      for (std::size_t i = 0; i < last; ++i)
        for (std::size_t j = i + 1; j < last; ++j) {
          entries.push_back({ConfigVector::unit(d, i, half) + ConfigVector::unit(d, j, half), ratio});
          entries.push_back({ConfigVector::unit(d, i, half) - ConfigVector::unit(d, j, half), ratio});
        }
      for (std::size_t i = 0; i < last; ++i) {
        entries.push_back({ConfigVector::unit(d, i, half) + ConfigVector::unit(d, last, half), 1});
        entries.push_back({ConfigVector::unit(d, i, half) - ConfigVector::unit(d, last, half), 1});
      }
      return Configuration(WeightedBasis(std::move(w)), std::move(entries), p);
    }
    case Family::An1: {
      if (p.n < 2) throw Error(ErrorKind::InvalidParams, "n must be at least 2");
      int m = positive_int(p.m, "m");
      std::size_t d = p.n + 1, last = p.n;
      std::vector<Rational> w = uniform(d, 1);
      w[last] = m;
      for (std::size_t i = 0; i < last; ++i)
        for (std::size_t j = i + 1; j < last; ++j)
          entries.push_back({ConfigVector::unit(d, i) - ConfigVector::unit(d, j), m});
      for (std::size_t i = 0; i < last; ++i) entries.push_back({ConfigVector::unit(d, i) - ConfigVector::unit(d, last), 1});
      return Configuration(WeightedBasis(std::move(w)), std::move(entries), p);
    }
    case Family::An2: {
      if (p.n < 2) throw Error(ErrorKind::InvalidParams, "n must be at least 2");
      if (p.m <= 0) throw Error(ErrorKind::InvalidParams, "m must be positive");
      if (p.n >= 3) positive_int(p.m, "m (for n >= 3)");
      if (p.m == -1) throw Error(ErrorKind::InvalidParams, "m = -1 is isotropic");
      std::size_t d = p.n + 1, last = p.n;
      std::vector<Rational> w = uniform(d, 1);
      w[0] = -p.m - 1;
      w[last] = p.m;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
          bool interior = i != 0 && j != last;
          entries.push_back({ConfigVector::unit(d, i) - ConfigVector::unit(d, j),
                             interior ? positive_int(p.m, "m") : 1});
        }
      return Configuration(WeightedBasis(std::move(w)), std::move(entries), p);
    }
    case Family::Explicit:
      break;
  }
  throw Error(ErrorKind::UnsupportedFamily, "build_family needs a named family");
}

int family_iterations(const FamilyParams& p) {
  auto integer = [](const Rational& q) { return static_cast<int>(algebra::to_long(q)); };
  int n = p.n;
  switch (p.family) {
    case Family::Cnlm:
    case Family::RootC: {
      int l = integer(p.l), m = integer(p.m);
      int ratio = (n >= 3) ? (2 * l + 1) / (2 * m + 1) : 0;
      return (2 + l) * (n - 1) + m + (n - 1) * (n - 2) * ratio;
    }
    case Family::An1:
      return integer(p.m) * n * (n - 1) / 2 + n;
    case Family::An2:
      return (n >= 3 ? integer(p.m) * (n - 1) * (n - 2) / 2 : 0) + 2 * n - 1;
    case Family::RootA: {
      if (!p.mults.empty()) {
        int s = 0;
        for (int x : p.mults) s += x;
        return s;
      }
      return integer(p.m) * n * (n + 1) / 2;
    }
    case Family::Explicit:
      break;
  }
  throw Error(ErrorKind::UnsupportedFamily, "no iteration-count formula for explicit configurations");
}

ConfigVector PositiveSystem::signed_vector(const Configuration& c, std::size_t i) const {
  return signs[i] > 0 ? c.entries()[i].vec : -c.entries()[i].vec;
}

namespace {

Inequality positivity_row(const Configuration& c, std::size_t i, int sign) {
  Inequality row;
  row.a.resize(c.dim());
  for (std::size_t k = 0; k < c.dim(); ++k) row.a[k] = sign * c.entries()[i].vec[k] * c.basis().weight(k);
  row.b = 1;
  return row;
}

void extend(const Configuration& c, std::vector<int>& signs, std::vector<Inequality>& rows,
            std::vector<PositiveSystem>& out) {
  std::size_t i = signs.size();
  if (i == c.entries().size()) {
    auto u = find_feasible_point(rows, c.dim());
    out.push_back({signs, ConfigVector(std::move(*u))});
    return;
  }
  for (int sign : {1, -1}) {
    rows.push_back(positivity_row(c, i, sign));
    if (find_feasible_point(rows, c.dim())) {
      signs.push_back(sign);
      extend(c, signs, rows, out);
      signs.pop_back();
    }
    rows.pop_back();
  }
}

}  // namespace

std::vector<PositiveSystem> enumerate_positive_systems(const Configuration& c, std::size_t bound) {
  if (c.entries().size() > bound)
    throw Error(ErrorKind::TooLarge, "configuration has " + std::to_string(c.entries().size()) +
                                         " entries; positive-system enumeration bound is " + std::to_string(bound));
  std::vector<PositiveSystem> out;
  std::vector<int> signs;
  std::vector<Inequality> rows;
  // Depth-first over sign vectors; an infeasible prefix prunes all completions.
  extend(c, signs, rows, out);
  return out;
}

std::vector<std::size_t> edge_vectors(const Configuration& c, const PositiveSystem& p) {
  // α is outside cone(A_+ \ α) iff some y has y·β >= 0 on the others and
  // y·α <= -1 (Farkas), with the plain coordinate pairing.
  std::vector<std::size_t> edges;
  std::size_t n = c.entries().size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Inequality> rows;
    for (std::size_t j = 0; j < n; ++j) {
      ConfigVector v = p.signed_vector(c, j);
      Inequality row{v.coords, 0};
      if (j == i) {
        for (auto& x : row.a) x = -x;
        row.b = 1;
      }
      rows.push_back(std::move(row));
    }
    if (find_feasible_point(rows, c.dim())) edges.push_back(i);
  }
  return edges;
}

bool verify_witness(const Configuration& c, const PositiveSystem& p) {
  for (std::size_t i = 0; i < c.entries().size(); ++i)
    if (c.basis().inner(p.witness, p.signed_vector(c, i)) < 1) return false;
  return true;
}

}  // namespace ba::config
