#include "ba/verifier.hpp"

#include <chrono>
#include <numeric>

#include "ba/calculus.hpp"
#include "ba/family_operators.hpp"
#include "ba/operator.hpp"

namespace ba::verify {

using algebra::ConfigVector;
using algebra::ExpPoly;
using algebra::Poly;
using algebra::Rational;
using ops::DifferenceOperator;

namespace {

class Timer {
 public:
  explicit Timer(CheckReport& r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    r_.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  CheckReport& r_;
  std::chrono::steady_clock::time_point t0_;
};

CheckReport start(const char* name, const Configuration& c) {
  CheckReport r;
  r.name = name;
  r.config = c.descriptor();
  return r;
}

std::string vec_text(const ConfigVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + algebra::to_string(v[i]);
  return s + ")";
}

// e(k+τ)·e^{(τ,x)}
Element translate(const Element& e, const algebra::WeightedBasis& b, const ConfigVector& tau) {
  return algebra::shift(e, b, tau) * Poly::exp_of(tau);
}

const Arrangement& ensure(const Configuration& c, const Arrangement* arr, Arrangement& local) {
  if (arr) return *arr;
  local = arrangement(c);
  return local;
}

// ExpPoly e^{(β,x)} − e^{−(β,x)}
ExpPoly sinh_poly(const ConfigVector& beta) { return Poly::exp_of(beta) - Poly::exp_of(-beta); }
ExpPoly cosh_poly(const ConfigVector& beta) { return Poly::exp_of(beta) + Poly::exp_of(-beta); }

ExpPoly exp_laplacian(const ExpPoly& p, const algebra::WeightedBasis& b) {
  ExpPoly out;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    ConfigVector u = ConfigVector::unit(b.dim(), i);
    out += (1 / b.weight(i)) * algebra::exp_derivative(algebra::exp_derivative(p, b, u), b, u);
  }
  return out;
}

}  // namespace

Arrangement arrangement(const Configuration& c) {
  Arrangement a;
  a.systems = config::enumerate_positive_systems(c);
  for (const auto& p : a.systems) a.edges.push_back(config::edge_vectors(c, p));
  return a;
}

KPoly invariant_square(const Configuration& c) {
  Poly p;
  for (std::size_t i = 0; i < c.dim(); ++i) p += (1 / c.basis().weight(i)) * (Poly::kvar(i) * Poly::kvar(i));
  return p;
}

KPoly axiom_denominator(const Configuration& c, const PositiveSystem& p, std::size_t alpha) {
  Poly q = Poly::constant(1);
  for (std::size_t b = 0; b < c.entries().size(); ++b) {
    if (b == alpha) continue;
    ConfigVector beta = p.signed_vector(c, b);
    Rational n2 = c.basis().norm2(beta);
    Poly lin = Poly::linear_form(beta);
    for (int i = 1; i <= c.entries()[b].mult; ++i) q = q * (lin + Poly::constant(i * n2));
  }
  return q;
}

Element axiom_residual(const Configuration& c, const PositiveSystem& p, std::size_t alpha, int s, const Element& e) {
  const auto& basis = c.basis();
  ConfigVector a = p.signed_vector(c, alpha);
  ConfigVector sa = Rational(s) * a;
  KPoly q = axiom_denominator(c, p, alpha);
  Element lhs = translate(e, basis, sa) * algebra::shift(q, basis, -sa);
  Element rhs = translate(e, basis, -sa) * algebra::shift(q, basis, sa);
  return algebra::restrict_to_hyperplane(lhs - rhs, a);
}

CheckReport check_axioms(const Configuration& c, const Element& e, const Arrangement* arr) {
  CheckReport r = start("axioms", c);
  Timer t(r);
  Arrangement local;
  const Arrangement& A = ensure(c, arr, local);
  for (std::size_t sys = 0; sys < A.systems.size(); ++sys)
    for (std::size_t alpha : A.edges[sys])
      for (int s = 1; s <= c.entries()[alpha].mult; ++s) {
        Element res = axiom_residual(c, A.systems[sys], alpha, s, e);
        if (!res.is_zero())
          r.fail({"quasi-invariance fails for α = " + vec_text(A.systems[sys].signed_vector(c, alpha)),
                  static_cast<int>(sys), static_cast<int>(alpha), s, 0, algebra::to_text(res)});
      }
  return r;
}

CheckReport check_simple_conditions(const Configuration& c, const Element& e, const Arrangement* arr) {
  CheckReport r = start("simple", c);
  Timer t(r);
  DifferenceOperator D = ops::family_operator(c);
  const auto& basis = c.basis();
  bool divided = c.family() == config::Family::An2;
  Arrangement local;
  const Arrangement* A = nullptr;
  if (divided) A = &ensure(c, arr, local);
  for (std::size_t alpha = 0; alpha < c.entries().size(); ++alpha) {
    const ConfigVector& a = c.entries()[alpha].vec;
    const ConfigVector* t1 = nullptr;
    const ConfigVector* t2 = nullptr;
    for (const auto& [x, cx] : D.terms())
      for (const auto& [y, cy] : D.terms())
        if (!t1 && x - y == Rational(2) * a) {
          t1 = &x;
          t2 = &y;
        }
    if (!t1) throw Error(ErrorKind::UnsupportedFamily, "no shift pair realizes 2α for α = " + vec_text(a));
    ConfigVector mid = Rational(1, 2) * (*t1 + *t2);
    // systems in which +α is an edge (only used when dividing by Q)
    std::vector<std::size_t> systems{0};
    if (divided) {
      systems.clear();
      for (std::size_t sys = 0; sys < A->systems.size(); ++sys)
        for (std::size_t ed : A->edges[sys])
          if (ed == alpha && A->systems[sys].signs[alpha] > 0) systems.push_back(sys);
    }
    for (std::size_t sys : systems) {
      KPoly q = divided ? axiom_denominator(c, A->systems[sys], alpha) : Poly::constant(1);
      for (int s = 1; s <= c.entries()[alpha].mult; ++s) {
        ConfigVector s1 = Rational(s) * *t1, s2 = Rational(s) * *t2;
        Element diff = translate(e, basis, s1) * algebra::shift(q, basis, s2) -
                       translate(e, basis, s2) * algebra::shift(q, basis, s1);
        Element res = algebra::restrict_to_hyperplane(diff, a, s * basis.inner(a, mid));
        if (!res.is_zero())
          r.fail({"shifted condition fails for α = " + vec_text(a), divided ? static_cast<int>(sys) : -1,
                  static_cast<int>(alpha), s, 0, algebra::to_text(res)});
      }
    }
  }
  return r;
}

CheckReport check_unshifted_symmetry(const Configuration& c, const Element& e) {
  CheckReport r = start("unshifted-symmetry", c);
  Timer t(r);
  for (std::size_t alpha = 0; alpha < c.entries().size(); ++alpha) {
    const ConfigVector& a = c.entries()[alpha].vec;
    for (int s = 1; s <= c.entries()[alpha].mult; ++s) {
      ConfigVector sa = Rational(s) * a;
      Element res = algebra::restrict_to_hyperplane(translate(e, c.basis(), sa) - translate(e, c.basis(), -sa), a);
      if (!res.is_zero())
        r.fail({"ψ(k+sα) ≠ ψ(k−sα) on (k,α) = 0 for α = " + vec_text(a), -1, static_cast<int>(alpha), s, 0,
                algebra::to_text(res)});
    }
  }
  return r;
}

CheckReport check_compatibility(const Configuration& c, const Arrangement* arr) {
  CheckReport r = start("compat", c);
  Timer t(r);
  Arrangement local;
  const Arrangement& A = ensure(c, arr, local);
  const auto& basis = c.basis();
  for (std::size_t alpha = 0; alpha < c.entries().size(); ++alpha) {
    const ConfigVector& a = c.entries()[alpha].vec;
    std::vector<std::size_t> systems;
    for (std::size_t sys = 0; sys < A.systems.size(); ++sys)
      for (std::size_t ed : A.edges[sys])
        if (ed == alpha && A.systems[sys].signs[alpha] > 0) systems.push_back(sys);
    // Restriction to (k,α) = 0 is a ring map, so restrict the shifted factors
    // before multiplying.
    int mult = c.entries()[alpha].mult;
    std::vector<std::vector<std::pair<Poly, Poly>>> qs;  // [system][s-1] = (Q(k+sα), Q(k−sα)) restricted
    for (std::size_t sys : systems) {
      KPoly q = axiom_denominator(c, A.systems[sys], alpha);
      auto& row = qs.emplace_back();
      for (int s = 1; s <= mult; ++s) {
        ConfigVector sa = Rational(s) * a;
        row.emplace_back(algebra::restrict_to_hyperplane(algebra::shift(q, basis, sa), a),
                         algebra::restrict_to_hyperplane(algebra::shift(q, basis, -sa), a));
      }
    }
    for (std::size_t i = 0; i < systems.size(); ++i)
      for (std::size_t j = i + 1; j < systems.size(); ++j)
        for (int s = 1; s <= mult; ++s) {
          const auto& [pi, mi] = qs[i][s - 1];
          const auto& [pj, mj] = qs[j][s - 1];
          Poly res = pi * mj - pj * mi;
          if (!res.is_zero())
            r.fail({"product identity fails between systems " + std::to_string(systems[i]) + " and " +
                        std::to_string(systems[j]),
                    static_cast<int>(systems[j]), static_cast<int>(alpha), s, 0, algebra::to_text(res)});
        }
  }
  return r;
}

CheckReport check_ring_membership(const Configuration& c, const KPoly& p) {
  CheckReport r = start("ring", c);
  Timer t(r);
  for (std::size_t alpha = 0; alpha < c.entries().size(); ++alpha) {
    const ConfigVector& a = c.entries()[alpha].vec;
    for (int s = 1; s <= c.entries()[alpha].mult; ++s) {
      ConfigVector sa = Rational(s) * a;
      Poly res = algebra::restrict_to_hyperplane(algebra::shift(p, c.basis(), sa) - algebra::shift(p, c.basis(), -sa), a);
      if (!res.is_zero())
        r.fail({"p(k+sα) ≠ p(k−sα) on (k,α) = 0 for α = " + vec_text(a), -1, static_cast<int>(alpha), s, 0,
                algebra::to_text(res)});
    }
  }
  return r;
}

CheckReport check_schrodinger(const Configuration& c, const construct::BAResult& br) {
  CheckReport r = start("schrodinger", c);
  Timer t(r);
  const auto& basis = c.basis();
  const Element& F = br.numerator;
  const ExpPoly& cx = br.normalizer;
  std::size_t d = basis.dim();
  // c³·(Δ − (k,k))(F/c) via the quotient rule
  Element grad_dot;
  ExpPoly grad_c2;
  for (std::size_t i = 0; i < d; ++i) {
    ConfigVector u = ConfigVector::unit(d, i);
    ExpPoly dc = algebra::exp_derivative(cx, basis, u);
    Rational wi = 1 / basis.weight(i);
    grad_dot += wi * (algebra::directional_derivative(F, basis, i) * dc);
    grad_c2 += wi * (dc * dc);
  }
  ExpPoly c2 = cx * cx;
  Element kinetic = c2 * algebra::laplacian(F, basis) - Rational(2) * (cx * grad_dot) +
                    (Rational(2) * grad_c2 - cx * exp_laplacian(cx, basis)) * F -
                    c2 * (invariant_square(c) * F);
  std::vector<ExpPoly> s2;
  ExpPoly all = Poly::constant(1);
  for (const auto& e : c.entries()) {
    ExpPoly s = sinh_poly(e.vec);
    s2.push_back(s * s);
    all = all * s2.back();
  }
  Element res = all * kinetic;
  Element c2F = c2 * F;
  for (std::size_t a = 0; a < c.entries().size(); ++a) {
    const auto& e = c.entries()[a];
    ExpPoly others = Poly::constant(1);
    for (std::size_t b = 0; b < c.entries().size(); ++b)
      if (b != a) others = others * s2[b];
    Rational coef = 4 * e.mult * (e.mult + 1) * basis.norm2(e.vec);
    res -= coef * (others * c2F);
  }
  if (!res.is_zero()) r.fail({"Schrödinger residual is nonzero", -1, -1, 0, 0, algebra::to_text(res)});
  return r;
}

CheckReport check_subleading(const Configuration& c, const construct::BAResult& br) {
  CheckReport r = start("subleading", c);
  Timer t(r);
  const auto& basis = c.basis();
  int M = br.M;
  Element sub = br.numerator.k_homogeneous(M - 1);
  KPoly lead = construct::leading_product(c);
  std::vector<ExpPoly> sh;
  ExpPoly all = Poly::constant(1);
  for (const auto& e : c.entries()) {
    sh.push_back(sinh_poly(e.vec));
    all = all * sh.back();
  }
  Element rhs;
  for (std::size_t a = 0; a < c.entries().size(); ++a) {
    const auto& e = c.entries()[a];
    ExpPoly others = Poly::constant(1);
    for (std::size_t b = 0; b < c.entries().size(); ++b)
      if (b != a) others = others * sh[b];
    KPoly reduced = algebra::exact_divide(lead, Poly::linear_form(e.vec));
    Rational coef = Rational(e.mult * (e.mult + 1), 2) * basis.norm2(e.vec);
    rhs += coef * ((cosh_poly(e.vec) * others) * reduced);
  }
  Element res = sub * all + br.normalizer * rhs;
  if (!res.is_zero()) r.fail({"subleading part differs from the closed form", -1, -1, 0, 0, algebra::to_text(res)});
  return r;
}

CheckReport check_bispectral(const Configuration& c, const construct::BAResult& br) {
  CheckReport r = start("bispectral", c);
  Timer t(r);
  if (c.entries().empty()) {
    r.notes.push_back("empty configuration: no operator");
    return r;
  }
  DifferenceOperator D = ops::family_operator(c);
  ExpPoly lam = construct::eigenvalue_lambda(c);
  try {
    Element res = ops::apply(D, br.numerator, c.basis()) - lam * br.numerator;
    if (!res.is_zero()) r.fail({"Dψ − λψ is nonzero", -1, -1, 0, 0, algebra::to_text(res)});
  } catch (const algebra::ResidualError& err) {
    r.fail({err.what(), -1, -1, 0, 0, algebra::to_text(err.remainder())});
  }
  return r;
}

CheckReport check_commuting_ring(const Configuration& c, const construct::BAResult& br, const KPoly& p,
                                 const KPoly& q) {
  CheckReport r = start("commute", c);
  Timer t(r);
  for (const KPoly* poly : {&p, &q}) {
    CheckReport ring = check_ring_membership(c, *poly);
    if (!ring.pass) {
      r.notes.push_back(std::string(to_string(ErrorKind::NotInRing)) + ": " + algebra::to_text(*poly));
      for (auto& w : ring.witnesses) r.fail(w);
      return r;
    }
  }
  const auto& basis = c.basis();
  DifferenceOperator D = ops::family_operator(c);
  DifferenceOperator Dp = ops::ad_power(D, p, std::max(p.k_degree(), 0), basis);
  DifferenceOperator Dq = ops::ad_power(D, q, std::max(q.k_degree(), 0), basis);
  DifferenceOperator c1 = ops::commutator(Dp, D, basis);
  if (!c1.is_zero()) r.fail({"[D_p, D] ≠ 0", -1, -1, 0, 0, ops::to_text(c1)});
  DifferenceOperator c2 = ops::commutator(Dp, Dq, basis);
  if (!c2.is_zero()) r.fail({"[D_p, D_q] ≠ 0", -1, -1, 0, 0, ops::to_text(c2)});
  const Element& F = br.numerator;
  try {
    Element G = ops::apply(Dp, F, basis);
    const auto& lt = F.leading_monomial();
    ExpPoly ap = algebra::exact_divide_exp(G.exp_coefficient(lt.k), F.exp_coefficient(lt.k));
    Element res = G - ap * F;
    if (!res.is_zero()) r.fail({"D_p ψ is not a multiple of ψ", -1, -1, 0, 0, algebra::to_text(res)});
    else r.notes.push_back("a_p(x) = " + algebra::to_text(ap));
  } catch (const algebra::ResidualError& err) {
    r.fail({std::string("D_p ψ: ") + err.what(), -1, -1, 0, 0, algebra::to_text(err.remainder())});
  }
  return r;
}

SeriesPartition series_partition(const Configuration& c, const PositiveSystem& p, std::size_t alpha) {
  SeriesPartition sp;
  sp.alpha = alpha;
  std::size_t n = c.entries().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  ConfigVector a = p.signed_vector(c, alpha);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (i == alpha || j == alpha) continue;
      Rational ratio = algebra::parallel_ratio(p.signed_vector(c, i) - p.signed_vector(c, j), a);
      if (ratio != 0 && algebra::is_integer(ratio)) parent[find(i)] = find(j);
    }
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i)
    if (i != alpha) blocks[find(i)].push_back(i);
  for (auto& [root, members] : blocks) sp.blocks.push_back(std::move(members));
  return sp;
}

Rational series_sum(const Configuration& c, const PositiveSystem& p, std::size_t alpha,
                    const std::vector<std::size_t>& block, int s) {
  ConfigVector a = p.signed_vector(c, alpha);
  Rational sum = 0;
  for (std::size_t b : block) {
    ConfigVector beta = p.signed_vector(c, b);
    int m = c.entries()[b].mult;
    Rational ab = c.basis().inner(a, beta), pw = 1;
    for (int i = 0; i < 2 * s - 1; ++i) pw *= ab;
    sum += m * (m + 1) * c.basis().norm2(beta) * pw;
  }
  return sum;
}

CheckReport check_locus_series(const Configuration& c, const Arrangement* arr) {
  CheckReport r = start("locus-series", c);
  Timer t(r);
  Arrangement local;
  const Arrangement& A = ensure(c, arr, local);
  for (std::size_t sys = 0; sys < A.systems.size(); ++sys)
    for (std::size_t alpha : A.edges[sys]) {
      SeriesPartition sp = series_partition(c, A.systems[sys], alpha);
      for (const auto& block : sp.blocks)
        for (int s = 1; s <= c.entries()[alpha].mult; ++s) {
          Rational sum = series_sum(c, A.systems[sys], alpha, block, s);
          if (sum != 0) {
            std::string members;
            for (std::size_t b : block) members += (members.empty() ? "" : ",") + std::to_string(b);
            r.fail({"series {" + members + "} has nonzero power sum", static_cast<int>(sys), static_cast<int>(alpha), s,
                    0, algebra::to_string(sum)});
          }
        }
    }
  return r;
}

Poly locus_direct_numerator(const Configuration& c, std::size_t alpha, int s, int eps) {
  const auto& basis = c.basis();
  const ConfigVector& a = c.entries()[alpha].vec;
  algebra::Exponents A = algebra::grain_exponents(a);
  int order = 2 * s - 1, power = 2 + order;
  // group terms by their reduced denominator; numerators over S^power
  std::map<std::string, std::pair<ExpPoly, ExpPoly>> groups;
  for (std::size_t b = 0; b < c.entries().size(); ++b) {
    if (b == alpha) continue;
    const auto& e = c.entries()[b];
    ExpPoly S = sinh_poly(e.vec);
    ExpPoly dS = algebra::exp_derivative(S, basis, a);
    ExpPoly N = Poly::constant(4 * e.mult * (e.mult + 1) * basis.norm2(e.vec));
    int p = 2;
    for (int i = 0; i < order; ++i, ++p)  // ∂(N/S^p) = (N'S − pNS')/S^{p+1}
      N = algebra::exp_derivative(N, basis, a) * S - Rational(p) * (N * dS);
    ExpPoly Sr = algebra::reduce_mod_branch(S, A, eps);
    ExpPoly Nr = algebra::reduce_mod_branch(N, A, eps);
    if (Sr.leading_coefficient() < 0) {
      Sr = -Sr;
      if (power % 2) Nr = -Nr;
    }
    auto& slot = groups[algebra::to_text(Sr)];
    slot.first = Sr;
    slot.second += Nr;
  }
  Poly total;
  for (auto g = groups.begin(); g != groups.end(); ++g) {
    Poly term = g->second.second;
    for (auto h = groups.begin(); h != groups.end(); ++h) {
      if (h == g || term.is_zero()) continue;
      for (int i = 0; i < power; ++i) term = algebra::reduce_mod_branch(term * h->second.first, A, eps);
    }
    total += term;
  }
  return algebra::reduce_mod_branch(total, A, eps);
}

CheckReport check_locus_direct(const Configuration& c, const std::vector<int>& branches) {
  CheckReport r = start("locus-direct", c);
  Timer t(r);
  for (std::size_t alpha = 0; alpha < c.entries().size(); ++alpha) {
    try {
      algebra::grain_exponents(c.entries()[alpha].vec);
    } catch (const Error&) {
      r.notes.push_back("UnsupportedBranch: α = " + vec_text(c.entries()[alpha].vec) + " is finer than grain 2");
      continue;
    }
    for (int s = 1; s <= c.entries()[alpha].mult; ++s)
      for (int eps : branches) {
        Poly res = locus_direct_numerator(c, alpha, s, eps);
        if (!res.is_zero())
          r.fail({"locus condition fails for α = " + vec_text(c.entries()[alpha].vec), -1, static_cast<int>(alpha), s, eps,
                  algebra::to_text(res)});
      }
  }
  return r;
}

CheckReport check_reductions(const Configuration& c) {
  CheckReport r = start("reductions", c);
  Timer t(r);
  const auto& p = c.params();
  auto dual_data = [](const Configuration& cfg) {
    std::vector<config::Entry> dual;
    for (const auto& e : cfg.entries()) dual.push_back({(1 / cfg.basis().norm2(e.vec)) * e.vec, e.mult});
    return dual;
  };
  bool a_case = (c.family() == config::Family::An1 && p.m == 1) ||
                (c.family() == config::Family::RootA && p.m == 1 && p.mults.empty());
  bool c_case = (c.family() == config::Family::Cnlm && p.l == p.m) || c.family() == config::Family::RootC;
  if (a_case) {
    Configuration root = config::root_a(p.n, 1);
    DifferenceOperator mac = ops::build_macdonald(root.basis(), dual_data(root), ConfigVector::unit(root.dim(), 0, 2));
    DifferenceOperator d = ops::build_a_n1_op(p.n, 1);
    if (!ops::equivalent(d, mac)) r.fail({"A_{n,1}(1) operator differs from the A_n Macdonald operator", -1, -1, 0, 0, ops::to_text(d - mac)});
  }
  if (c_case) {
    int m = static_cast<int>(algebra::to_long(p.m));
    Configuration cc = config::c_nlm(p.n, m, m);
    DifferenceOperator mac = ops::build_macdonald(cc.basis(), dual_data(cc), ConfigVector::unit(cc.dim(), 0));
    DifferenceOperator d = Rational(2 * m + 1) * ops::build_c_nlm_op(p.n, m, m);
    if (!ops::equivalent(d, mac)) r.fail({"(2m+1)·D differs from the B_n Macdonald operator", -1, -1, 0, 0, ops::to_text(d - mac)});
  }
  if (!a_case && !c_case) r.notes.push_back("no reduction identity applies to this configuration");
  return r;
}

CheckReport check_chain_axioms(const Configuration& c, const construct::BAResult& br, const Arrangement* arr) {
  CheckReport r = start("chain-axioms", c);
  Timer t(r);
  Arrangement local;
  const Arrangement& A = ensure(c, arr, local);
  for (std::size_t s = 0; s < br.chain.size(); ++s) {
    CheckReport one = check_axioms(c, br.chain[s], &A);
    for (auto& w : one.witnesses) {
      w.what = "φ_" + std::to_string(s) + ": " + w.what;
      r.fail(w);
    }
  }
  return r;
}

CheckReport check_rank_one_uniqueness(const Configuration& c, const construct::BAResult& br) {
  CheckReport r = start("uniqueness", c);
  Timer t(r);
  if (c.entries().size() != 1 || c.entries()[0].mult != 1)
    throw Error(ErrorKind::UnsupportedFamily, "rank-one check needs a single vector with multiplicity 1");
  const ConfigVector& a = c.entries()[0].vec;
  // F·S = c·((k,α)·S − (α,α)·C)
  Element expected = br.normalizer * (Poly::linear_form(a) * sinh_poly(a) - c.basis().norm2(a) * cosh_poly(a));
  Element res = br.numerator * sinh_poly(a) - expected;
  if (!res.is_zero()) r.fail({"iteration differs from ((k,α) − (α,α)coth(α,x))e^{(k,x)}", -1, 0, 1, 0, algebra::to_text(res)});
  return r;
}

}  // namespace ba::verify
