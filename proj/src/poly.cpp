#include "ba/poly.hpp"

#include <sstream>

#include "ba/error.hpp"

namespace ba::algebra {

int Monomial::k_degree() const {
  int d = 0;
  for (auto x : k) d += x;
  return d;
}

bool Monomial::k_only() const {
  for (auto x : e)
    if (x) return false;
  return true;
}

bool Monomial::e_only() const {
  for (auto x : k)
    if (x) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxDim; ++i) {
    r.k[i] = static_cast<std::int16_t>(a.k[i] + b.k[i]);
    r.e[i] = static_cast<std::int16_t>(a.e[i] + b.e[i]);
  }
  return r;
}

bool LeadingFirst::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.k_degree(), db = b.k_degree();
  if (da != db) return da > db;
  if (a.k != b.k) return a.k > b.k;
  return a.e > b.e;
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::kvar(std::size_t i) {
  Monomial m;
  m.k.at(i) = 1;
  return term(m, 1);
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

Poly Poly::linear_form(const ConfigVector& a, const Rational& offset) {
  if (a.size() > kMaxDim) throw Error(ErrorKind::Dimension, "dimension exceeds supported maximum");
  Poly p = constant(offset);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Monomial m;
    m.k[i] = 1;
    p.add_term(m, a[i]);
  }
  return p;
}

Poly Poly::exp_monomial(const Exponents& grain_exponents) {
  Monomial m;
  m.e = grain_exponents;
  return term(m, 1);
}

Poly Poly::exp_of(const ConfigVector& tau) {
  if (tau.size() > kMaxDim) throw Error(ErrorKind::Dimension, "dimension exceeds supported maximum");
  Exponents e{};
  for (std::size_t i = 0; i < tau.size(); ++i) {
    Rational g = 2 * tau[i];
    if (!is_integer(g)) throw Error(ErrorKind::InvalidParams, "exponent finer than grain 2: " + to_string(tau[i]));
    e[i] = static_cast<std::int16_t>(to_long(g));
  }
  return exp_monomial(e);
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidParams, "leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidParams, "leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  const Poly& big = a.size() >= b.size() ? a : b;
  const Poly& small = a.size() >= b.size() ? b : a;
  Rational prod;
  for (const auto& [ms, cs] : small.terms_)
    for (const auto& [mb, cb] : big.terms_) {
      prod = cs * cb;
      r.add_term(ms * mb, prod);
    }
  return r;
}

int Poly::k_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.k_degree();
}

Poly Poly::k_homogeneous(int degree) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int d = m.k_degree();
    if (d == degree) r.terms_.emplace_hint(r.terms_.end(), m, c);
    else if (d < degree) break;
  }
  return r;
}

bool Poly::k_only() const {
  for (const auto& [m, c] : terms_)
    if (!m.k_only()) return false;
  return true;
}

bool Poly::e_only() const {
  for (const auto& [m, c] : terms_)
    if (!m.e_only()) return false;
  return true;
}

std::size_t Poly::dim_used() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < kMaxDim; ++i)
      if (m.k[i] || m.e[i]) d = std::max(d, i + 1);
  return d;
}

Poly Poly::exp_coefficient(const Exponents& kexp) const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.k == kexp) {
      Monomial em;
      em.e = m.e;
      r.terms_.emplace(em, c);
    }
  return r;
}

std::map<Exponents, Poly> Poly::k_slices() const {
  std::map<Exponents, Poly> out;
  for (const auto& [m, c] : terms_) {
    Monomial em;
    em.e = m.e;
    out[m.k].terms_.emplace(em, c);
  }
  return out;
}

Poly pow(const Poly& p, unsigned e) {
  Poly r = Poly::constant(1);
  Poly b = p;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string to_text(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  auto var = [&](const char* name, std::size_t i, int x) {
    if (!x) return;
    if (!first) os << '*';
    first = false;
    os << name << (i + 1);
    if (x != 1) os << '^' << x;
  };
  for (std::size_t i = 0; i < kMaxDim; ++i) var("κ", i, m.k[i]);
  for (std::size_t i = 0; i < kMaxDim; ++i) var("u", i, m.e[i]);
  return os.str();
}

std::string to_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = to_text(m);
    if (mono.empty()) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << '*';
      os << mono;
    }
  }
  return os.str();
}

}  // namespace ba::algebra
