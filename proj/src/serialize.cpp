#include "ba/serialize.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <iomanip>
#include <sstream>

#include "ba/error.hpp"

namespace ba::io {

using algebra::ConfigVector;
using algebra::Poly;
using algebra::Rational;

std::string sha256_hex(const std::string& text) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

json to_json(const Rational& q) { return algebra::to_string(q); }

json to_json(const ConfigVector& v) {
  json a = json::array();
  for (const auto& x : v.coords) a.push_back(to_json(x));
  return a;
}

json to_json(const Poly& p) {
  std::size_t dim = p.dim_used();
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json k = json::array(), u = json::array();
    for (std::size_t i = 0; i < dim; ++i) {
      k.push_back(m.k[i]);
      u.push_back(m.e[i]);
    }
    terms.push_back({{"k", k}, {"u", u}, {"c", to_json(c)}});
  }
  std::string text = algebra::to_text(p);
  return {{"text", text}, {"sha256", sha256_hex(text)}, {"terms", terms}};
}

json to_json(const ops::DifferenceOperator& d) {
  json terms = json::array();
  for (const auto& [tau, a] : d.terms()) {
    json den = json::array();
    for (const auto& [form, mult] : a.factors())
      den.push_back({{"factor", algebra::to_text(form.to_poly())}, {"power", mult}});
    terms.push_back({{"shift", to_json(tau)}, {"num", algebra::to_text(a.num())}, {"den", den}});
  }
  return {{"text_sha256", sha256_hex(ops::to_text(d))}, {"terms", terms}};
}

json to_json(const config::Configuration& c) {
  json j;
  const auto& p = c.params();
  j["family"] = std::string(config::family_name(c.family()));
  if (c.family() != config::Family::Explicit) {
    j["n"] = p.n;
    if (c.family() == config::Family::Cnlm || c.family() == config::Family::RootC) j["l"] = to_json(p.l);
    j["m"] = to_json(p.m);
    if (!p.mults.empty()) j["mults"] = p.mults;
  }
  json w = json::array();
  for (const auto& x : c.basis().weights()) w.push_back(to_json(x));
  j["weights"] = w;
  json entries = json::array();
  for (const auto& e : c.entries()) entries.push_back({{"coords", to_json(e.vec)}, {"mult", e.mult}});
  j["entries"] = entries;
  j["total_multiplicity"] = c.total_multiplicity();
  if (c.family() != config::Family::Explicit) j["M"] = config::family_iterations(p);
  return j;
}

json summary_json(const construct::BAResult& r) {
  std::string psi = algebra::to_text(r.numerator);
  return {{"config", r.config.descriptor()},
          {"M", r.M},
          {"chain_degrees", r.chain_degrees},
          {"numerator_terms", r.numerator.size()},
          {"numerator_sha256", sha256_hex(psi)},
          {"normalizer", algebra::to_text(r.normalizer)},
          {"barred_normalizer", algebra::to_text(r.barred_normalizer)},
          {"lambda", algebra::to_text(r.lambda)}};
}

json to_json(const construct::BAResult& r) {
  json j;
  j["configuration"] = to_json(r.config);
  j["M"] = r.M;
  j["chain_degrees"] = r.chain_degrees;
  j["lambda"] = to_json(r.lambda);
  j["normalizer"] = to_json(r.normalizer);
  j["barred_normalizer"] = to_json(r.barred_normalizer);
  j["psi_numerator"] = to_json(r.numerator);
  j["summary"] = summary_json(r);
  return j;
}

json to_json(const verify::CheckReport& r, bool timing) {
  json w = json::array();
  for (const auto& x : r.witnesses) {
    json o = {{"what", x.what}};
    if (x.system >= 0) o["system"] = x.system;
    if (x.entry >= 0) o["entry"] = x.entry;
    if (x.s) o["s"] = x.s;
    if (x.branch) o["branch"] = x.branch;
    if (!x.residual.empty()) o["residual"] = x.residual;
    w.push_back(o);
  }
  json j = {{"name", r.name}, {"config", r.config}, {"verdict", r.pass ? "pass" : "fail"}, {"witnesses", w}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (timing) j["timing_ms"] = r.millis;
  return j;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return algebra::parse_rational(j.get<std::string>());
  throw Error(ErrorKind::Parse, "expected a rational as integer or \"p/q\" string, got " + j.dump());
}

namespace {

int int_field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (v.is_number_integer()) return v.get<int>();
  Rational q = rational_from_json(v);
  return static_cast<int>(algebra::to_long(q));
}

config::Configuration explicit_from_json(const json& j) {
  if (!j.at("weights").is_array() || !j.at("entries").is_array())
    throw Error(ErrorKind::Parse, "'weights' and 'entries' must be arrays");
  std::vector<Rational> w;
  for (const auto& x : j.at("weights")) w.push_back(rational_from_json(x));
  std::vector<config::Entry> entries;
  for (const auto& e : j.at("entries")) {
    if (!e.is_object() || !e.contains("coords")) throw Error(ErrorKind::Parse, "each entry needs 'coords'");
    std::vector<Rational> coords;
    for (const auto& x : e.at("coords")) coords.push_back(rational_from_json(x));
    Rational mult = e.contains("mult") ? rational_from_json(e.at("mult")) : Rational(1);
    if (!algebra::is_integer(mult) || mult < 1) throw Error(ErrorKind::InvalidParams, "entry multiplicity must be a positive integer");
    entries.push_back({ConfigVector(std::move(coords)), static_cast<int>(algebra::to_long(mult))});
  }
  return config::Configuration(algebra::WeightedBasis(std::move(w)), std::move(entries));
}

}  // namespace

config::Configuration configuration_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "configuration must be a JSON object");
  bool has_family = j.contains("family") && j.at("family").get<std::string>() != "explicit";
  bool has_entries = j.contains("entries") || j.contains("weights");
  if (!has_family) {
    if (!has_entries) throw Error(ErrorKind::Parse, "configuration needs 'family' or 'weights' + 'entries'");
    return explicit_from_json(j);
  }
  config::FamilyParams p;
  p.family = config::parse_family(j.at("family").get<std::string>());
  p.n = int_field(j, "n");
  if (j.contains("l")) p.l = rational_from_json(j.at("l"));
  if (j.contains("m")) p.m = rational_from_json(j.at("m"));
  if (p.family == config::Family::RootC && !j.contains("l")) p.l = p.m;
  if (j.contains("mults"))
    for (const auto& x : j.at("mults")) p.mults.push_back(x.get<int>());
  config::Configuration c = config::build_family(p);
  if (has_entries) {
    config::Configuration e = explicit_from_json(j);
    if (!(e.basis() == c.basis()) || e.entries() != c.entries())
      throw Error(ErrorKind::InvalidParams, "explicit entries do not match family " + c.descriptor());
  }
  return c;
}

Poly poly_from_json(const json& j) {
  Poly p;
  for (const auto& t : j.at("terms")) {
    algebra::Monomial m;
    const auto& k = t.at("k");
    const auto& u = t.at("u");
    for (std::size_t i = 0; i < k.size(); ++i) m.k.at(i) = static_cast<std::int16_t>(k[i].get<int>());
    for (std::size_t i = 0; i < u.size(); ++i) m.e.at(i) = static_cast<std::int16_t>(u[i].get<int>());
    p.add_term(m, rational_from_json(t.at("c")));
  }
  return p;
}

algebra::KPoly parse_kpoly(const std::string& text, const config::Configuration& c) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorKind::Parse, "empty polynomial");
  const std::string kappa = "κ";
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::Parse, "polynomial '" + text + "': " + why + " at offset " + std::to_string(i));
  };
  auto read_int = [&]() {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected an integer");
    long v = std::stol(s.substr(i, j - i));
    i = j;
    return v;
  };
  Poly out;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-'");
    }
    Poly term = Poly::constant(sign);
    bool first = true;
    while (true) {
      if (!first) {
        if (i < s.size() && s[i] == '*') ++i;
        else break;
      }
      first = false;
      Poly factor;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        factor = Poly::constant(algebra::parse_rational(s.substr(i, j - i)));
        i = j;
      } else if (s.compare(i, 2, "k2") == 0 && (i + 2 == s.size() || !std::isdigit(static_cast<unsigned char>(s[i + 2])))) {
        factor = verify::invariant_square(c);
        i += 2;
      } else {
        std::size_t len = 0;
        if (s.compare(i, kappa.size(), kappa) == 0) len = kappa.size();
        else if (s.compare(i, 5, "kappa") == 0) len = 5;
        else fail("unknown symbol");
        i += len;
        long idx = read_int();
        if (idx < 1 || static_cast<std::size_t>(idx) > c.dim()) fail("variable index out of range");
        factor = Poly::kvar(static_cast<std::size_t>(idx - 1));
      }
      if (i < s.size() && s[i] == '^') {
        ++i;
        factor = algebra::pow(factor, static_cast<unsigned>(read_int()));
      }
      term = term * factor;
    }
    out += term;
  }
  return out;
}

}  // namespace ba::io
