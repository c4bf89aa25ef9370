#ifndef SUPERLIE_FOCK_HPP
#define SUPERLIE_FOCK_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "superlie/linalg.hpp"
#include "superlie/prolong.hpp"
#include "superlie/superpoly.hpp"

namespace superlie {

using Operator = std::function<SPoly(const SPoly&)>;

struct OperatorGen {
  std::string name;
  Parity parity = Parity::Even;
  Operator op;
};

/// Operators of a Lie superalgebra W + C z acting on polynomials.
/// The module is the span of monomials of degree <= truncation in the
/// indeterminates, with coefficients in the parameter algebra.
struct OperatorRep {
  VarSpecPtr spec;
  std::vector<OperatorGen> generators;
  OperatorGen central;
  std::optional<OperatorGen> structure;  ///< odd operator of a Q-type module
  int truncation = 0;

  SPoly vacuum() const { return SPoly::constant(spec, 1); }

  /// Rational basis of the truncated module (parameter monomials included).
  std::vector<SPoly> basis() const {
    std::vector<SPoly> out;
    std::vector<std::size_t> params;
    for (std::size_t i = 0; i < spec->size(); ++i)
      if (spec->is_param(i)) params.push_back(i);
    auto pm = params.empty() ? std::vector<Monomial>{Monomial{}} : monomials_up_to(*spec, params, static_cast<int>(params.size()));
    for (const auto& m : monomials_up_to(*spec, spec->indeterminates(), truncation))
      for (const auto& c : pm) {
        Monomial t;
        if (monomial_mul(*spec, c, m, t) == 0) continue;
        out.push_back(SPoly::monomial(spec, c) * SPoly::monomial(spec, m));
      }
    return out;
  }

  /// Dimensions (even|odd) over the parameter algebra: indeterminate monomials only.
  std::pair<int, int> module_dims() const {
    std::pair<int, int> d{0, 0};
    for (const auto& m : monomials_up_to(*spec, spec->indeterminates(), truncation))
      (m.parity(*spec) == Parity::Even ? d.first : d.second) += 1;
    return d;
  }

  const OperatorGen& generator(std::string_view name) const {
    for (const auto& g : generators)
      if (g.name == name) return g;
    if (central.name == name) return central;
    throw AlgebraError("unknown generator " + std::string(name));
  }
};

/// Commutation relations [v, w] = B(v, w) z on a basis of W.
struct CCRSpec {
  DepthKind kind = DepthKind::Hei;
  std::vector<std::string> names;
  std::vector<Parity> parities;
  std::vector<std::vector<Rational>> B;
  Parity central_parity = Parity::Even;

  std::size_t size() const { return names.size(); }
};

/// Checks that B is nondegenerate, superskew and of the declared parity.
inline void validate(const CCRSpec& s) {
  const std::size_t n = s.size();
  if (s.parities.size() != n || s.B.size() != n) throw AlgebraError("inconsistent relation data");
  std::vector<SparseVec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.B[i].size() != n) throw AlgebraError("inconsistent relation data");
    std::map<std::uint32_t, Rational> r;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& b = s.B[i][j];
      if (b == 0) continue;
      r[static_cast<std::uint32_t>(j)] = b;
      if (s.parities[i] + s.parities[j] != s.central_parity) throw AlgebraError("form parity mismatch");
      if (s.B[j][i] != -b * sign_of(s.parities[i], s.parities[j])) throw AlgebraError("form is not superskew");
    }
    rows.push_back(to_sparse(r));
  }
  EchelonBasis eb;
  for (const auto& r : rows) eb.insert(r);
  if (eb.rank() != n) throw AlgebraError("degenerate form");
}

/// hei(2n|m): p_i, q_i even with B(p_i, q_i) = 1; the odd part uses pairs
/// xi_j, eta_j with B(xi_j, eta_j) = 1 and, for odd m, theta with B(theta, theta) = 1.
inline CCRSpec hei_spec(int n, int m) {
  if (n < 0 || m < 0) throw AlgebraError("negative dimension");
  CCRSpec s;
  s.kind = DepthKind::Hei;
  s.central_parity = Parity::Even;
  auto add = [&](std::string name, Parity p) {
    s.names.push_back(std::move(name));
    s.parities.push_back(p);
  };
  for (int i = 1; i <= n; ++i) add("p" + std::to_string(i), Parity::Even);
  for (int i = 1; i <= n; ++i) add("q" + std::to_string(i), Parity::Even);
  int k = m / 2;
  for (int j = 1; j <= k; ++j) add("xi" + std::to_string(j), Parity::Odd);
  for (int j = 1; j <= k; ++j) add("eta" + std::to_string(j), Parity::Odd);
  if (m % 2) add("theta", Parity::Odd);
  const std::size_t N = s.names.size();
  s.B.assign(N, std::vector<Rational>(N, Rational(0)));
  for (int i = 0; i < n; ++i) s.B[i][n + i] = 1, s.B[n + i][i] = -1;
  for (int j = 0; j < k; ++j) {
    std::size_t a = 2 * n + j, b = 2 * n + k + j;
    s.B[a][b] = 1, s.B[b][a] = 1;
  }
  if (m % 2) s.B[N - 1][N - 1] = 1;
  validate(s);
  return s;
}

/// ab(n): q_i even, theta_i odd, B(q_i, theta_i) = 1, z odd.
inline CCRSpec ab_spec(int n) {
  if (n < 0) throw AlgebraError("negative dimension");
  CCRSpec s;
  s.kind = DepthKind::Ab;
  s.central_parity = Parity::Odd;
  for (int i = 1; i <= n; ++i) s.names.push_back("q" + std::to_string(i)), s.parities.push_back(Parity::Even);
  for (int i = 1; i <= n; ++i) s.names.push_back("theta" + std::to_string(i)), s.parities.push_back(Parity::Odd);
  s.B.assign(2 * n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) s.B[i][n + i] = 1, s.B[n + i][i] = -1;
  validate(s);
  return s;
}

namespace detail {

inline Operator mul_op(const SPoly& c) {
  return [c](const SPoly& f) { return c * f; };
}
inline Operator der_op(std::size_t var, const SPoly& c) {
  return [var, c](const SPoly& f) { return c * pder(f, var); };
}
inline Operator sum_op(Operator a, Operator b) {
  return [a, b](const SPoly& f) { return a(f) + b(f); };
}

}  // namespace detail

/// Fock module of hei(2n|m) with central charge hbar: creation operators multiply
/// by the coordinates x_i (from q_i) and y_j (from xi_j), annihilation operators are
/// hbar times derivatives. For odd m, theta acts on the extra odd coordinate u as
/// u + (hbar/2) d/du and the Q-type structure operator is u - (hbar/2) d/du.
inline OperatorRep hei_fock(int n, int m, const Rational& hbar, int truncation) {
  if (n < 0 || m < 0) throw AlgebraError("negative dimension");
  if (hbar == 0) throw AlgebraError("the central charge must be nonzero");
  VarSpecBuilder b;
  for (int i = 1; i <= n; ++i) b.even("x" + std::to_string(i));
  int k = m / 2;
  for (int j = 1; j <= k; ++j) b.odd("y" + std::to_string(j));
  if (m % 2) b.odd("u");
  OperatorRep rep;
  rep.spec = b.build();
  rep.truncation = truncation;
  const auto& spec = rep.spec;
  SPoly h = SPoly::constant(spec, hbar);
  for (int i = 0; i < n; ++i)
    rep.generators.push_back({"p" + std::to_string(i + 1), Parity::Even, detail::der_op(static_cast<std::size_t>(i), h)});
  for (int i = 0; i < n; ++i)
    rep.generators.push_back(
        {"q" + std::to_string(i + 1), Parity::Even, detail::mul_op(SPoly::variable(spec, static_cast<std::size_t>(i)))});
  for (int j = 0; j < k; ++j)
    rep.generators.push_back({"xi" + std::to_string(j + 1), Parity::Odd,
                              detail::mul_op(SPoly::variable(spec, static_cast<std::size_t>(n + j)))});
  for (int j = 0; j < k; ++j)
    rep.generators.push_back(
        {"eta" + std::to_string(j + 1), Parity::Odd, detail::der_op(static_cast<std::size_t>(n + j), h)});
  if (m % 2) {
    std::size_t u = static_cast<std::size_t>(n + k);
    SPoly half = SPoly::constant(spec, Rational(hbar / 2));
    rep.generators.push_back(
        {"theta", Parity::Odd, detail::sum_op(detail::mul_op(SPoly::variable(spec, u)), detail::der_op(u, half))});
    rep.structure = OperatorGen{"J", Parity::Odd,
                                detail::sum_op(detail::mul_op(SPoly::variable(spec, u)), detail::der_op(u, -half))};
  }
  rep.central = {"z", Parity::Even, detail::mul_op(h)};
  return rep;
}

/// The i-th Fock module of ab(n) over Q[xi], xi odd: C[lambda_1..lambda_i; x_{i+1}..x_n]
/// with q_j -> xi d/dlambda_j, theta_j -> lambda_j (j <= i), q_j -> x_j,
/// theta_j -> -xi d/dx_j (j > i), and z -> xi.
inline OperatorRep ab_fock(int n, int i, int truncation) {
  if (n < 0) throw AlgebraError("negative dimension");
  if (i < 0 || i > n) throw AlgebraError("module index out of range");
  VarSpecBuilder b;
  for (int j = 1; j <= i; ++j) b.odd("lambda" + std::to_string(j));
  for (int j = i + 1; j <= n; ++j) b.even("x" + std::to_string(j));
  b.param("xi", Parity::Odd);
  OperatorRep rep;
  rep.spec = b.build();
  rep.truncation = truncation;
  const auto& spec = rep.spec;
  SPoly xi = SPoly::variable(spec, "xi");
  std::vector<OperatorGen> qs, ths;
  for (int j = 0; j < n; ++j) {
    std::size_t v = static_cast<std::size_t>(j);
    std::string s = std::to_string(j + 1);
    if (j < i) {
      qs.push_back({"q" + s, Parity::Even, detail::der_op(v, xi)});
      ths.push_back({"theta" + s, Parity::Odd, detail::mul_op(SPoly::variable(spec, v))});
    } else {
      qs.push_back({"q" + s, Parity::Even, detail::mul_op(SPoly::variable(spec, v))});
      ths.push_back({"theta" + s, Parity::Odd, detail::der_op(v, -xi)});
    }
  }
  rep.generators = qs;
  rep.generators.insert(rep.generators.end(), ths.begin(), ths.end());
  rep.central = {"z", Parity::Odd, detail::mul_op(xi)};
  return rep;
}

struct RepCheck {
  bool ok = true;
  long relations_checked = 0;
  std::vector<std::string> witnesses;  ///< failing pairs, e.g. "[p1,q1]"
};

inline SPoly supercommutator(const OperatorGen& a, const OperatorGen& b, const SPoly& f) {
  return a.op(b.op(f)) - b.op(a.op(f)) * Rational(sign_of(a.parity, b.parity));
}

/// Verifies [A_v, A_w] = B(v, w) Z, that Z and the structure operator supercommute
/// with everything, and that each operator has the parity of its generator, on
/// every basis vector of the truncated module.
inline RepCheck rep_check(const OperatorRep& rep, const CCRSpec& spec) {
  RepCheck out;
  if (rep.generators.size() != spec.size()) throw AlgebraError("generator count mismatch");
  for (std::size_t i = 0; i < spec.size(); ++i)
    if (rep.generators[i].name != spec.names[i] || rep.generators[i].parity != spec.parities[i])
      throw AlgebraError("generator " + spec.names[i] + " does not match the relation data");
  if (rep.central.parity != spec.central_parity) throw AlgebraError("central parity mismatch");
  auto basis = rep.basis();
  auto fail = [&](const std::string& w) {
    out.ok = false;
    if (std::find(out.witnesses.begin(), out.witnesses.end(), w) == out.witnesses.end()) out.witnesses.push_back(w);
  };
  std::vector<const OperatorGen*> all;
  for (const auto& g : rep.generators) all.push_back(&g);
  all.push_back(&rep.central);
  if (rep.structure) all.push_back(&*rep.structure);
  for (const auto* g : all)
    for (const auto& f : basis) {
      SPoly img = g->op(f);
      ++out.relations_checked;
      if (!img.is_zero() && img.parity_if_homogeneous() != std::optional<Parity>(f.parity() + g->parity))
        fail("parity of " + g->name);
    }
  for (std::size_t a = 0; a < spec.size(); ++a)
    for (std::size_t b = 0; b < spec.size(); ++b) {
      const auto& A = rep.generators[a];
      const auto& Bg = rep.generators[b];
      for (const auto& f : basis) {
        ++out.relations_checked;
        SPoly lhs = supercommutator(A, Bg, f);
        SPoly rhs = rep.central.op(f) * spec.B[a][b];
        if (!(lhs == rhs)) {
          fail("[" + A.name + "," + Bg.name + "]");
          break;
        }
      }
    }
  // z and the structure operator against the image; J^2 itself is a scalar
  for (std::size_t s = spec.size(); s < all.size(); ++s)
    for (std::size_t t = 0; t <= spec.size(); ++t) {
      const auto* g = all[t];
      for (const auto& f : basis) {
        ++out.relations_checked;
        if (!supercommutator(*all[s], *g, f).is_zero()) {
          fail("[" + all[s]->name + "," + g->name + "]");
          break;
        }
      }
    }
  return out;
}

/// Copy of `rep` with one generator's operator multiplied by `factor`.
inline OperatorRep perturbed(const OperatorRep& rep, std::string_view name, const Rational& factor) {
  OperatorRep out = rep;
  bool found = false;
  for (auto& g : out.generators)
    if (g.name == name) {
      Operator old = g.op;
      g.op = [old, factor](const SPoly& f) { return old(f) * factor; };
      found = true;
    }
  if (!found) throw AlgebraError("unknown generator " + std::string(name));
  return out;
}

/// Generators killing the vacuum.
inline std::vector<std::string> vacuum_annihilators(const OperatorRep& rep) {
  std::vector<std::string> out;
  SPoly v = rep.vacuum();
  for (const auto& g : rep.generators)
    if (g.op(v).is_zero()) out.push_back(g.name);
  return out;
}

/// Whether words in the generators (and z) applied to the vacuum span the truncated module.
inline bool vacuum_is_cyclic(const OperatorRep& rep) {
  auto target = rep.basis();
  Indexer<Monomial> idx;
  for (const auto& f : target) idx(f.terms().begin()->first);
  auto vec = [&](const SPoly& f) {
    std::map<std::uint32_t, Rational> v;
    for (const auto& [m, c] : f.terms()) v[idx(m)] = c;
    return to_sparse(v);
  };
  auto in_range = [&](const SPoly& f) {
    for (const auto& [m, c] : f.terms())
      if (m.total_degree(*rep.spec) > rep.truncation) return false;
    return true;
  };
  EchelonBasis eb;
  std::vector<SPoly> frontier{rep.vacuum()};
  eb.insert(vec(rep.vacuum()));
  std::vector<const OperatorGen*> ops;
  for (const auto& g : rep.generators) ops.push_back(&g);
  ops.push_back(&rep.central);
  while (!frontier.empty()) {
    std::vector<SPoly> next;
    for (const auto& f : frontier)
      for (const auto* g : ops) {
        SPoly h = g->op(f);
        if (h.is_zero() || !in_range(h)) continue;
        if (eb.insert(vec(h))) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return eb.rank() == target.size();
}

// ---------------------------------------------------------------------------
// Superspace isomorphisms

struct IsoRow {
  int degree = 0;
  std::pair<int, int> lhs, rhs;
};

struct IsoTable {
  std::string lhs_name, rhs_name;
  std::vector<IsoRow> rows;
  bool agree() const {
    for (const auto& r : rows)
      if (r.lhs != r.rhs) return false;
    return true;
  }
};

/// Ordered monomials of degree exactly d in `e` even and `o` odd generators (PBW basis).
inline std::pair<int, int> pbw_count(int e, int o, int d) {
  std::pair<int, int> r{0, 0};
  std::function<void(int, int, int)> rec = [&](int k, int rem, int odd_used) {
    if (k == e + o) {
      if (rem == 0) (odd_used % 2 ? r.second : r.first) += 1;
      return;
    }
    if (k < e) {
      for (int a = 0; a <= rem; ++a) rec(k + 1, rem - a, odd_used);
    } else {
      rec(k + 1, rem, odd_used);
      if (rem > 0) rec(k + 1, rem - 1, odd_used + 1);
    }
  };
  rec(0, d, 0);
  return r;
}

/// Degree-d parts of po(2n|2m) (polynomials in p, q, xi, eta) and of
/// U(hei(2n|2m))/(z - hbar) (PBW monomials in the generators of W), d = 0..D.
/// The third column is the rank of the operators given by degree-d words in
/// the Fock realization, modulo lower-degree words.
struct PoIso {
  IsoTable table;
  std::vector<std::pair<int, int>> operator_ranks;
};

inline PoIso po_weyl_iso(int n, int m, int D) {
  PoIso out;
  out.table.lhs_name = "po(" + std::to_string(2 * n) + "|" + std::to_string(2 * m) + ")";
  out.table.rhs_name = "U(hei(" + std::to_string(2 * n) + "|" + std::to_string(2 * m) + "))/(z-hbar)";
  auto ctx = ContactContext::symplectic(n, 2 * m, ContactVariant::XiEta);
  Weights w = standard_weights(*ctx.spec());
  for (int d = 0; d <= D; ++d) {
    std::pair<int, int> lhs{0, 0};
    for (const auto& mo : monomials_of_weight(*ctx.spec(), ctx.spec()->indeterminates(), w, d))
      (mo.parity(*ctx.spec()) == Parity::Even ? lhs.first : lhs.second) += 1;
    out.table.rows.push_back({d, lhs, pbw_count(2 * n, 2 * m, d)});
  }
  // filtered ranks of words acting on the Fock module; a differential operator of
  // order <= D is determined by its values on polynomials of degree <= D
  OperatorRep rep = hei_fock(n, 2 * m, Rational(1), D);
  auto inputs = rep.basis();
  Indexer<std::pair<std::size_t, Monomial>> idx;
  auto vec = [&](const std::vector<SPoly>& vals) {
    std::map<std::uint32_t, Rational> v;
    for (std::size_t k = 0; k < vals.size(); ++k)
      for (const auto& [mo, c] : vals[k].terms()) v[idx({k, mo})] = c;
    return to_sparse(v);
  };
  EchelonBasis eb;
  struct Word {
    std::vector<SPoly> values;
    Parity parity;
  };
  std::vector<Word> layer{{inputs, Parity::Even}};
  eb.insert(vec(inputs));
  out.operator_ranks.push_back({1, 0});
  for (int d = 1; d <= D; ++d) {
    std::vector<Word> next;
    std::pair<int, int> rk{0, 0};
    for (const auto& wd : layer)
      for (const auto& g : rep.generators) {
        Word nw{{}, wd.parity + g.parity};
        for (const auto& v : wd.values) nw.values.push_back(g.op(v));
        if (eb.insert(vec(nw.values))) {
          (nw.parity == Parity::Even ? rk.first : rk.second) += 1;
          next.push_back(std::move(nw));
        }
      }
    out.operator_ranks.push_back(rk);
    layer = std::move(next);
  }
  return out;
}

/// Degree-d parts of Pi(b(n) (x) C[xi]) and of (U(ab(n)) (x) C[xi])/(z - xi), d = 0..D,
/// both counted over Q.
inline IsoTable antibracket_iso(int n, int D) {
  IsoTable t;
  t.lhs_name = "Pi(b(" + std::to_string(n) + ") x C[xi])";
  t.rhs_name = "U(ab(" + std::to_string(n) + ")) x C[xi]/(z-xi)";
  PericontactContext ctx(n);
  Weights w = standard_weights(*ctx.spec());
  auto qxi = ctx.qxi();
  for (int d = 0; d <= D; ++d) {
    std::pair<int, int> lhs{0, 0}, rhs{0, 0};
    for (const auto& mo : monomials_of_weight(*ctx.spec(), qxi, w, d)) {
      // 1 and xi as coefficients, then the parity shift
      Parity p = mo.parity(*ctx.spec()) + Parity::Odd;
      (p == Parity::Even ? lhs.first : lhs.second) += 1;
      (p + Parity::Odd == Parity::Even ? lhs.first : lhs.second) += 1;
    }
    auto [pe, po] = pbw_count(n, n, d);
    rhs.first = pe + po;
    rhs.second = po + pe;
    t.rows.push_back({d, lhs, rhs});
  }
  return t;
}

}  // namespace superlie

#endif  // SUPERLIE_FOCK_HPP
