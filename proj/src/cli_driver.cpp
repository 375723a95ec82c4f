#include "ba/cli_driver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "ba/calculus.hpp"
#include "ba/error.hpp"
#include "ba/family_operators.hpp"
#include "ba/serialize.hpp"

namespace ba::cli {

using io::json;

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"axioms",     "simple", "compat",       "ring",         "schrodinger",
                                              "subleading", "bispectral", "commute", "locus-series", "locus-direct",
                                              "reductions"};
  return names;
}

namespace {

config::Configuration load_config(const RunManifest& m) {
  if (!m.config_path.empty()) {
    if (!m.family.empty()) throw Error(ErrorKind::Parse, "use either --config or --family, not both");
    std::ifstream in(m.config_path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + m.config_path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::Parse, m.config_path + ": " + e.what());
    }
    return io::configuration_from_json(j);
  }
  if (m.family.empty()) throw Error(ErrorKind::Parse, "a configuration is required (--family ... or --config FILE)");
  config::FamilyParams p;
  p.family = config::parse_family(m.family);
  if (p.family == config::Family::Explicit) throw Error(ErrorKind::Parse, "explicit configurations need --config");
  p.n = m.n;
  if (!m.m.empty()) p.m = algebra::parse_rational(m.m);
  if (!m.l.empty()) p.l = algebra::parse_rational(m.l);
  else if (p.family == config::Family::RootC) p.l = p.m;
  if (!m.mults.empty()) {
    std::stringstream ss(m.mults);
    std::string item;
    while (std::getline(ss, item, ',')) p.mults.push_back(static_cast<int>(algebra::to_long(algebra::parse_rational(item))));
  }
  return config::build_family(p);
}

void guard_size(const config::Configuration& c, long long budget) {
  // φ₀ is a polynomial of degree 2M in N variables: at most C(2M+N, N) terms
  int M = c.total_multiplicity();
  mpz_class est;
  mpz_bin_uiui(est.get_mpz_t(), static_cast<unsigned long>(2 * M + c.dim()), static_cast<unsigned long>(c.dim()));
  if (est > mpz_class(std::to_string(budget)))
    throw Error(ErrorKind::TooLarge, "predicted φ₀ term count " + est.get_str() + " exceeds --max-size " + std::to_string(budget));
}

int emit(const RunManifest& m, const std::string& payload, const std::string& summary, std::ostream& out,
         std::ostream& err) {
  if (m.out_path.empty()) {
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << '\n';
    return kPass;
  }
  std::ofstream f(m.out_path);
  if (!f) {
    err << "error: cannot write " << m.out_path << '\n';
    return kUsage;
  }
  f << payload;
  if (!payload.empty() && payload.back() != '\n') f << '\n';
  if (!f) {
    err << "error: write failed for " << m.out_path << '\n';
    return kUsage;
  }
  out << summary;
  return kPass;
}

int with_errors(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const algebra::ResidualError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

bool json_format(const RunManifest& m) {
  if (m.format != "json" && m.format != "text") throw Error(ErrorKind::Parse, "--format must be json or text");
  return m.format == "json";
}

std::string build_text(const config::Configuration& c) {
  std::ostringstream os;
  os << c.descriptor() << '\n' << "weights:";
  for (const auto& w : c.basis().weights()) os << ' ' << algebra::to_string(w);
  os << '\n';
  for (const auto& e : c.entries()) {
    os << "  (";
    for (std::size_t i = 0; i < e.vec.size(); ++i) os << (i ? ", " : "") << algebra::to_string(e.vec[i]);
    os << ")  mult " << e.mult << '\n';
  }
  os << "sum of multiplicities: " << c.total_multiplicity() << '\n';
  return os.str();
}

std::string construct_text(const construct::BAResult& r) {
  std::ostringstream os;
  os << r.config.descriptor() << '\n' << "M = " << r.M << '\n' << "chain degrees:";
  for (int d : r.chain_degrees) os << ' ' << d;
  os << '\n'
     << "lambda(x) = " << algebra::to_text(r.lambda) << '\n'
     << "c(x) = " << algebra::to_text(r.normalizer) << '\n'
     << "c(x), barred convention = " << algebra::to_text(r.barred_normalizer) << '\n'
     << "numerator terms: " << r.numerator.size() << '\n'
     << "numerator sha256: " << io::sha256_hex(algebra::to_text(r.numerator)) << '\n';
  return os.str();
}

}  // namespace

int cmd_build(const RunManifest& m, std::ostream& out, std::ostream& err) {
  return with_errors(err, [&] {
    bool as_json = json_format(m);
    config::Configuration c = load_config(m);
    std::string payload = as_json ? io::to_json(c).dump(2) : build_text(c);
    return emit(m, payload, build_text(c), out, err);
  });
}

int cmd_construct(const RunManifest& m, std::ostream& out, std::ostream& err) {
  return with_errors(err, [&]() -> int {
    bool as_json = json_format(m);
    config::Configuration c = load_config(m);
    guard_size(c, m.max_size);
    try {
      construct::BAResult r = construct::iterate_ba(c);
      std::string payload = as_json ? io::to_json(r).dump(2) : construct_text(r);
      return emit(m, payload, construct_text(r), out, err);
    } catch (const algebra::ResidualError& e) {
      json j = {{"config", c.descriptor()},
                {"error", std::string(to_string(e.kind()))},
                {"message", e.what()},
                {"witness", io::to_json(e.remainder())}};
      std::string payload = as_json ? j.dump(2) : std::string(e.what()) + "\nwitness: " + algebra::to_text(e.remainder()) + "\n";
      int code = emit(m, payload, std::string("construction failed: ") + e.what() + "\n", out, err);
      return code == kPass ? kCheckFailed : code;
    }
  });
}

int cmd_verify(const RunManifest& m, std::ostream& out, std::ostream& err) {
  return with_errors(err, [&]() -> int {
    bool as_json = json_format(m);
    config::Configuration c = load_config(m);
    bool named = c.family() != config::Family::Explicit;
    bool empty = c.entries().empty();
    std::vector<std::string> checks = m.checks;
    if (checks.empty()) {
      if (named || empty)
        checks = known_checks();
      else
        checks = {"compat", "ring", "locus-series", "locus-direct"};
    }
    static const std::set<std::string> needs_psi{"axioms", "simple", "schrodinger", "subleading", "bispectral", "commute"};
    bool psi_needed = false;
    for (const auto& name : checks) {
      if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end())
        throw Error(ErrorKind::Parse, "unknown check '" + name + "'");
      psi_needed = psi_needed || needs_psi.count(name);
    }
    if (psi_needed && !named && !empty)
      throw Error(ErrorKind::UnsupportedFamily, "checks on ψ need a named family or the empty configuration");

    std::vector<verify::CheckReport> reports;
    std::optional<construct::BAResult> psi;
    if (psi_needed) {
      guard_size(c, m.max_size);
      try {
        psi = construct::iterate_ba(c);
      } catch (const algebra::ResidualError& e) {
        verify::CheckReport r;
        r.name = "construct";
        r.config = c.descriptor();
        r.fail({std::string(to_string(e.kind())) + ": " + e.what(), -1, -1, 0, 0, algebra::to_text(e.remainder())});
        reports.push_back(r);
      }
    }
    std::optional<verify::Arrangement> arr;
    auto arrangement = [&]() -> const verify::Arrangement* {
      if (!arr) arr = verify::arrangement(c);
      return &*arr;
    };
    algebra::KPoly p = io::parse_kpoly(m.poly, c);
    for (const auto& name : checks) {
      if (needs_psi.count(name) && !psi) continue;
      verify::CheckReport r;
      if (name == "axioms") {
        r = verify::check_chain_axioms(c, *psi, arrangement());
        r.name = "axioms";
      } else if (name == "simple") {
        if (empty) {
          r.name = "simple";
          r.config = c.descriptor();
          r.notes.push_back("empty configuration: nothing to check");
        } else {
          r = verify::check_simple_conditions(c, psi->numerator, arrangement());
          if (c.family() == config::Family::An2) {
            bool holds = verify::check_unshifted_symmetry(c, psi->numerator).pass;
            r.notes.push_back(std::string("unshifted symmetry ψ(k+α) = ψ(k−α): ") + (holds ? "holds" : "fails (expected)"));
          }
        }
      } else if (name == "compat") {
        r = verify::check_compatibility(c, arrangement());
      } else if (name == "ring") {
        r = verify::check_ring_membership(c, p);
      } else if (name == "schrodinger") {
        r = verify::check_schrodinger(c, *psi);
      } else if (name == "subleading") {
        r = verify::check_subleading(c, *psi);
      } else if (name == "bispectral") {
        r = verify::check_bispectral(c, *psi);
      } else if (name == "commute") {
        if (empty) {
          r.name = "commute";
          r.config = c.descriptor();
          r.notes.push_back("empty configuration: nothing to check");
        } else {
          r = verify::check_commuting_ring(c, *psi, p, p);
        }
      } else if (name == "locus-series") {
        r = verify::check_locus_series(c, arrangement());
      } else if (name == "locus-direct") {
        r = verify::check_locus_direct(c);
      } else if (name == "reductions") {
        r = verify::check_reductions(c);
      }
      reports.push_back(std::move(r));
    }
    bool all = true;
    for (const auto& r : reports) all = all && r.pass;

    std::ostringstream text;
    text << c.descriptor() << '\n';
    for (const auto& r : reports) {
      text << (r.pass ? "PASS " : "FAIL ") << r.name;
      if (m.timing) text << " (" << r.millis << " ms)";
      text << '\n';
      for (const auto& n : r.notes) text << "  note: " << n << '\n';
      for (const auto& w : r.witnesses) {
        text << "  witness: " << w.what;
        if (w.system >= 0) text << " [system " << w.system << "]";
        if (w.entry >= 0) text << " [entry " << w.entry << "]";
        if (w.s) text << " [s " << w.s << "]";
        if (w.branch) text << " [branch " << w.branch << "]";
        text << '\n';
        if (!w.residual.empty()) text << "    residual: " << w.residual.substr(0, 400) << (w.residual.size() > 400 ? " ..." : "") << '\n';
      }
    }
    text << (all ? "all checks passed" : "some checks failed") << '\n';
    std::string payload;
    if (as_json) {
      json j;
      j["config"] = c.descriptor();
      j["checks"] = json::array();
      for (const auto& r : reports) j["checks"].push_back(io::to_json(r, m.timing));
      j["verdict"] = all ? "pass" : "fail";
      payload = j.dump(2);
    } else {
      payload = text.str();
    }
    int code = emit(m, payload, text.str(), out, err);
    if (code != kPass) return code;
    return all ? kPass : kCheckFailed;
  });
}

int cmd_show_operator(const RunManifest& m, std::ostream& out, std::ostream& err) {
  return with_errors(err, [&] {
    bool as_json = json_format(m);
    config::Configuration c = load_config(m);
    ops::DifferenceOperator d = ops::family_operator(c);
    std::string text = c.descriptor() + "\n" + ops::to_text(d);
    std::string payload = as_json ? json{{"config", c.descriptor()}, {"operator", io::to_json(d)}}.dump(2) : text;
    return emit(m, payload, text, out, err);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Baker-Akhiezer functions for deformed CMS configurations"};
  app.require_subcommand(1);
  RunManifest m;
  std::string checks;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--family", m.family, "rootA, rootC, An1, Cnlm, An2");
    sub->add_option("--n", m.n, "family rank parameter");
    sub->add_option("--l", m.l, "parameter l (Cnlm)");
    sub->add_option("--m", m.m, "parameter m (rational allowed for An2 with n = 2)");
    sub->add_option("--mults", m.mults, "rootA only: comma-separated multiplicity per root");
    sub->add_option("--config", m.config_path, "configuration JSON file");
    sub->add_option("--out", m.out_path, "write the main output here");
    sub->add_option("--format", m.format, "json or text");
    sub->add_option("--max-size", m.max_size, "budget for the predicted φ₀ term count");
  };
  auto* build = app.add_subcommand("build", "resolve a configuration");
  auto* cons = app.add_subcommand("construct", "run the BA iteration");
  auto* ver = app.add_subcommand("verify", "run verification checks");
  auto* show = app.add_subcommand("show-operator", "render the difference operator D");
  for (auto* sub : {build, cons, ver, show}) common(sub);
  ver->add_option("--checks", checks, "comma-separated subset of the known checks");
  ver->add_option("--poly", m.poly, "polynomial for ring/commute checks; k2 is (k,k)");
  ver->add_flag("--timing", m.timing, "include timings (output is then not byte-stable)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (!checks.empty()) {
    std::stringstream ss(checks);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) m.checks.push_back(item);
  }
  if (*build) return cmd_build(m, out, err);
  if (*cons) return cmd_construct(m, out, err);
  if (*ver) return cmd_verify(m, out, err);
  return cmd_show_operator(m, out, err);
}

}  // namespace ba::cli
