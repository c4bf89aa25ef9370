#ifndef SUPERLIE_PROLONG_HPP
#define SUPERLIE_PROLONG_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superlie/deform.hpp"
#include "superlie/genfun.hpp"
#include "superlie/linalg.hpp"
#include "superlie/matsuper.hpp"

namespace superlie {

/// One homogeneous component of a graded algebra of vector fields.
struct GradedSubspace {
  int degree = 0;
  std::vector<VectorField> basis;
  int even = 0, odd = 0;
};

struct ProlongResult {
  VarSpecPtr spec;
  Weights weights;
  std::vector<GradedSubspace> components;  ///< ascending degree, starting at the most negative
  std::optional<int> vanishing_degree;     ///< first positive degree with a zero component

  const GradedSubspace& at(int d) const {
    for (const auto& c : components)
      if (c.degree == d) return c;
    throw AlgebraError("degree outside the computed range");
  }
  int min_degree() const { return components.front().degree; }
  int max_degree() const { return components.back().degree; }
};

namespace detail {

using FieldIndex = Indexer<std::pair<std::size_t, Monomial>>;

inline SparseVec field_vector(const VectorField& d, FieldIndex& idx) {
  std::map<std::uint32_t, Rational> v;
  for (std::size_t i = 0; i < d.coeffs().size(); ++i)
    for (const auto& [m, c] : d.coeffs()[i].terms()) v[idx({i, m})] = c;
  return to_sparse(v);
}

/// Fields m d/dx_j of weighted degree `deg` and the given parity.
inline std::vector<VectorField> field_monomials(const VarSpecPtr& spec, const Weights& w, int deg, Parity par) {
  std::vector<VectorField> out;
  auto vars = spec->indeterminates();
  for (auto j : vars)
    for (const auto& m : monomials_of_weight(*spec, vars, w, deg + w[j]))
      if (m.parity(*spec) + spec->parity(j) == par) out.push_back(VectorField::term(SPoly::monomial(spec, m), j));
  return out;
}

/// Echelon span of homogeneous fields in the shared coordinates.
struct FieldSpan {
  EchelonBasis eb;
  std::vector<VectorField> basis;
  int even = 0, odd = 0;

  bool add(const VectorField& d, FieldIndex& idx) {
    if (!eb.insert(field_vector(d, idx))) return false;
    basis.push_back(d);
    (d.parity() == Parity::Even ? even : odd) += 1;
    return true;
  }
  bool contains(const VectorField& d, FieldIndex& idx) const { return eb.reduce(field_vector(d, idx)).empty(); }
};

inline Parity homogeneous_parity(const VectorField& d) {
  auto p = d.parity_if_homogeneous();
  if (!p) throw AlgebraError("prolongation needs homogeneous fields");
  return *p;
}

inline void check_degree(const VectorField& d, const Weights& w, int deg) {
  auto parts = d.weight_split(w);
  for (const auto& [k, f] : parts)
    if (k != deg && !f.is_zero()) throw AlgebraError("field of the wrong degree in a prolongation component");
}

}  // namespace detail

/// Cartan prolongation of a nonpositive part realized by vector fields.
/// `negative` lists the components of degree -depth..-1; g_i (i >= 1) consists of
/// the degree-i fields D with [D, x] in g_{i+deg x} for every negative x.
inline ProlongResult prolong_fields(const VarSpecPtr& spec, const Weights& w,
                                    const std::vector<std::vector<VectorField>>& negative,
                                    const std::vector<VectorField>& g0, int imax) {
  if (negative.empty()) throw AlgebraError("empty negative part");
  detail::FieldIndex idx;
  const int depth = static_cast<int>(negative.size());
  std::map<int, detail::FieldSpan> spans;
  for (int k = 0; k < depth; ++k) {
    int d = k - depth;
    for (const auto& x : negative[k]) {
      detail::homogeneous_parity(x);
      detail::check_degree(x, w, d);
      spans[d].add(x, idx);
    }
  }
  for (const auto& x : g0) {
    detail::homogeneous_parity(x);
    detail::check_degree(x, w, 0);
    spans[0].add(x, idx);
  }
  // g0 must be a subalgebra acting on the negative part
  for (const auto& a : spans[0].basis) {
    for (const auto& b : spans[0].basis)
      if (!spans[0].contains(bracket(a, b), idx)) throw AlgebraError("g0 is not closed under the bracket");
    for (int d = -depth; d < 0; ++d)
      for (const auto& x : spans[d].basis)
        if (!spans[d].contains(bracket(a, x), idx)) throw AlgebraError("g0 does not preserve the negative part");
  }

  ProlongResult res;
  res.spec = spec;
  res.weights = w;
  for (int i = 1; i <= imax; ++i) {
    detail::FieldSpan& gi = spans[i];
    if (!res.vanishing_degree) {
      for (Parity par : {Parity::Even, Parity::Odd}) {
        auto cands = detail::field_monomials(spec, w, i, par);
        if (cands.empty()) continue;
        Indexer<std::pair<std::size_t, std::uint32_t>> rows;
        std::vector<SparseVec> cols;
        for (const auto& e : cands) {
          std::map<std::uint32_t, Rational> col;
          std::size_t xi = 0;
          for (int d = -depth; d < 0; ++d)
            for (const auto& x : spans[d].basis) {
              SparseVec r = spans[i + d].eb.reduce(detail::field_vector(bracket(e, x), idx));
              for (const auto& [k, c] : r) col[rows({xi, k})] = c;
              ++xi;
            }
          cols.push_back(to_sparse(col));
        }
        for (const auto& v : kernel_of_columns(cols)) {
          VectorField D(spec);
          for (const auto& [k, c] : v) D += cands[k] * c;
          gi.add(D, idx);
        }
      }
      if (gi.basis.empty()) res.vanishing_degree = i;
    }
  }
  for (auto& [d, s] : spans) res.components.push_back(GradedSubspace{d, s.basis, s.even, s.odd});
  return res;
}

/// Superspace coordinates for a format: u_k even, xi_k odd, in format order.
inline std::pair<VarSpecPtr, std::vector<std::size_t>> format_coordinates(const Format& fmt) {
  VarSpecBuilder b;
  int ne = 0, no = 0;
  for (Parity p : fmt) {
    if (p == Parity::Even)
      b.even("u" + std::to_string(++ne));
    else
      b.odd("xi" + std::to_string(++no));
  }
  std::vector<std::size_t> vars(fmt.size());
  for (std::size_t i = 0; i < fmt.size(); ++i) vars[i] = i;
  return {b.build(), vars};
}

/// Prolongation with g_{-1} = span of all d/dx and g0 given by linear fields.
inline ProlongResult field_prolong(const VarSpecPtr& spec, const std::vector<VectorField>& g0, int imax) {
  std::vector<VectorField> neg;
  for (auto v : spec->indeterminates()) neg.push_back(VectorField::partial(spec, v));
  return prolong_fields(spec, standard_weights(*spec), {neg}, g0, imax);
}

/// The dual module: X acts on V* by -X^st.
inline std::vector<SuperMatrix> contragredient(const std::vector<SuperMatrix>& g0) {
  std::vector<SuperMatrix> out;
  for (const auto& X : g0) out.push_back(supertranspose(X) * Rational(-1));
  return out;
}

/// How matrices of g0 are identified with operators on g_{-1}.
/// Vectors: g_{-1} is the module itself (span of d/dx). Coordinates: g0 acts on
/// the coordinates, so g_{-1} is the dual module.
enum class ActionSide { Vectors, Coordinates };

/// (id, g0)_* for a matrix algebra g0, realized through linear_field.
inline ProlongResult field_prolong(const std::vector<SuperMatrix>& g0_in, const Format& fmt, int imax,
                                   ActionSide side = ActionSide::Vectors) {
  auto [spec, vars] = format_coordinates(fmt);
  std::vector<SuperMatrix> g0 = side == ActionSide::Vectors ? g0_in : contragredient(g0_in);
  std::vector<VectorField> fields;
  for (const auto& X : g0) {
    if (!(X.format() == fmt)) throw AlgebraError("matrix format mismatch");
    for (Parity p : {Parity::Even, Parity::Odd}) {
      SuperMatrix part = X.part(p);
      if (!part.is_zero()) fields.push_back(linear_field(part, spec, vars));
    }
  }
  return field_prolong(spec, fields, imax);
}

// ---------------------------------------------------------------------------
// Depth-2 prolongs

enum class DepthKind { Hei, Ab };

inline std::string depth_kind_name(DepthKind k) { return k == DepthKind::Hei ? "hei" : "ab"; }

struct DepthSetting {
  VarSpecPtr spec;
  Weights weights;
  std::vector<VectorField> g_minus2, g_minus1, g0_full;
};

/// hei(2n|m) inside k(2n+1|m), or ab(n) inside m(n), with the full conformal g0.
inline DepthSetting depth_setting(DepthKind kind, int n, int m) {
  DepthSetting s;
  if (kind == DepthKind::Hei) {
    ContactContext ctx(n, m, ContactVariant::Theta);
    s.spec = ctx.spec();
    s.weights = ctx.weights();
    s.g_minus2.push_back(K_field(ctx.one(), ctx));
    for (auto v : ctx.euler_vars()) s.g_minus1.push_back(K_field(ctx.var(v), ctx));
    for (const auto& mo : monomials_of_weight(*s.spec, s.spec->indeterminates(), s.weights, 2))
      s.g0_full.push_back(K_field(SPoly::monomial(s.spec, mo), ctx));
  } else {
    PericontactContext ctx(n);
    s.spec = ctx.spec();
    s.weights = ctx.weights();
    s.g_minus2.push_back(M_field(ctx.one(), ctx));
    for (auto v : ctx.qxi()) s.g_minus1.push_back(M_field(ctx.var(v), ctx));
    for (const auto& mo : monomials_of_weight(*s.spec, s.spec->indeterminates(), s.weights, 2))
      s.g0_full.push_back(M_field(SPoly::monomial(s.spec, mo), ctx));
  }
  return s;
}

/// (hei(2n|m), g0)_* or (ab(n), g0)_*; g0 defaults to the full cosp^sk or cpe^sk.
/// `m` is ignored for ab.
inline ProlongResult depth_prolong(DepthKind kind, int n, int m, const std::optional<std::vector<VectorField>>& g0,
                                   int imax) {
  DepthSetting s = depth_setting(kind, n, m);
  std::vector<VectorField> zero = s.g0_full;
  if (g0) {
    detail::FieldIndex idx;
    detail::FieldSpan full;
    for (const auto& x : s.g0_full) full.add(x, idx);
    for (const auto& x : *g0)
      if (!full.contains(x, idx))
        throw AlgebraError(kind == DepthKind::Hei ? "g0 is not inside cosp" : "g0 is not inside cpe");
    zero = *g0;
  }
  return prolong_fields(s.spec, s.weights, {s.g_minus2, s.g_minus1}, zero, imax);
}

/// Dimensions of the degree-d component of k(2n+1|m) (Hei) or m(n) (Ab) counted
/// from generating functions of weight d + 2; for m the field parity is shifted.
inline std::pair<int, int> generating_dims(DepthKind kind, int n, int m, int d) {
  VarSpecPtr spec;
  Weights w;
  if (kind == DepthKind::Hei) {
    ContactContext ctx(n, m, ContactVariant::Theta);
    spec = ctx.spec();
    w = ctx.weights();
  } else {
    PericontactContext ctx(n);
    spec = ctx.spec();
    w = ctx.weights();
  }
  int e = 0, o = 0;
  if (d + 2 < 0) return {0, 0};
  for (const auto& mo : monomials_of_weight(*spec, spec->indeterminates(), w, d + 2)) {
    Parity p = mo.parity(*spec);
    if (kind == DepthKind::Ab) p = p + Parity::Odd;
    (p == Parity::Even ? e : o) += 1;
  }
  return {e, o};
}

// ---------------------------------------------------------------------------
// Abstract prolongation

/// A linear action of g0 on the module g_{-1}, given by matrices.
struct ModuleAction {
  Format format;
  std::vector<SuperMatrix> g0;
};

/// g_i = (S^i(V*) (x) g0) cap (S^{i+1}(V*) (x) V), with symmetric powers realized as
/// polynomials in the coordinates of V. An element D of S^{i+1}(V*) (x) V lies in
/// g_i iff its Jacobian d_k D^j equals sum_a (-1)^{p(c_a) p_k} c_a X_a(j,k) for some
/// polynomials c_a of degree i. Components are returned as vector fields.
inline ProlongResult abstract_prolong(const ModuleAction& act, int imax) {
  auto [spec, vars] = format_coordinates(act.format);
  Weights w = standard_weights(*spec);
  std::vector<SuperMatrix> g0;
  for (const auto& X : act.g0) {
    if (!(X.format() == act.format)) throw AlgebraError("matrix format mismatch");
    for (Parity p : {Parity::Even, Parity::Odd}) {
      SuperMatrix part = X.part(p);
      if (!part.is_zero()) g0.push_back(part);
    }
  }
  ProlongResult res;
  res.spec = spec;
  res.weights = w;
  detail::FieldIndex idx;
  {
    GradedSubspace neg{-1, {}, 0, 0};
    for (auto v : vars) {
      neg.basis.push_back(VectorField::partial(spec, v));
      (spec->is_odd(v) ? neg.odd : neg.even) += 1;
    }
    res.components.push_back(neg);
    detail::FieldSpan zero;
    for (const auto& X : g0) {
      // the Jacobian of a linear field is the matrix itself
      VectorField D(spec);
      for (std::size_t j = 0; j < vars.size(); ++j)
        for (std::size_t k = 0; k < vars.size(); ++k)
          if (X(j, k) != 0) D.add(vars[j], SPoly::variable(spec, vars[k]) * Rational(X(j, k)));
      zero.add(D, idx);
    }
    res.components.push_back(GradedSubspace{0, zero.basis, zero.even, zero.odd});
  }
  const std::size_t nv = vars.size();
  for (int i = 1; i <= imax; ++i) {
    detail::FieldSpan gi;
    if (!res.vanishing_degree) {
      for (Parity par : {Parity::Even, Parity::Odd}) {
        auto dcands = detail::field_monomials(spec, w, i, par);
        if (dcands.empty()) continue;
        auto cmons = monomials_of_weight(*spec, vars, w, i);
        Indexer<std::tuple<std::size_t, std::size_t, Monomial>> rows;  // (k, j, monomial)
        std::vector<SparseVec> cols;
        for (const auto& e : dcands) {
          std::map<std::uint32_t, Rational> col;
          for (std::size_t j = 0; j < nv; ++j)
            for (std::size_t k = 0; k < nv; ++k) {
              SPoly dk = pder(e.coeff(vars[j]), vars[k]);
              for (const auto& [mm, c] : dk.terms()) col[rows({k, j, mm})] += c;
            }
          cols.push_back(to_sparse(col));
        }
        for (const auto& X : g0)
          for (const auto& cm : cmons) {
            Parity pc = cm.parity(*spec);
            if (pc + X.parity() != par) continue;
            std::map<std::uint32_t, Rational> col;
            for (std::size_t j = 0; j < nv; ++j)
              for (std::size_t k = 0; k < nv; ++k) {
                if (X(j, k) == 0) continue;
                Rational s = sign_of(pc, act.format[k]);
                col[rows({k, j, cm})] -= s * X(j, k);
              }
            cols.push_back(to_sparse(col));
          }
        for (const auto& v : kernel_of_columns(cols)) {
          VectorField D(spec);
          for (const auto& [k, c] : v)
            if (k < dcands.size()) D += dcands[k] * c;
          if (!D.is_zero()) gi.add(D, idx);
        }
      }
      if (gi.basis.empty()) res.vanishing_degree = i;
    }
    res.components.push_back(GradedSubspace{i, gi.basis, gi.even, gi.odd});
  }
  return res;
}

/// Module Pi(Q[xi_1..xi_n] vol^lambda) with vect(0|n) acting by
/// L_D(f vol) = (D(f) + (-1)^{p(D)p(f)} lambda f Div D) vol. The basis vector
/// xi^S vol has parity |S| + 1; g0 is listed over the basis xi^S d/dxi_j.
struct DensityAction {
  ModuleAction action;
  VarSpecPtr xi_spec;
  std::vector<Monomial> module_basis;  ///< xi^S, in format order
  std::vector<VectorField> fields;     ///< the vect(0|n) element behind each matrix
};

inline SuperMatrix density_matrix(const VectorField& D, const Rational& lambda, const VarSpecPtr& spec,
                                  const std::vector<Monomial>& basis, const Format& fmt) {
  std::map<Monomial, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
  Parity pd = detail::homogeneous_parity(D);
  SPoly div = divergence(D);
  SuperMatrix A(fmt);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    SPoly f = SPoly::monomial(spec, basis[c]);
    SPoly img = apply(D, f) + (f * div) * Rational(lambda * sign_of(pd, f.parity()));
    for (const auto& [m, v] : img.terms()) A(pos.at(m), c) += v;
  }
  return A;
}

inline DensityAction lambda_density_action(int n, const Rational& lambda) {
  if (n < 0) throw AlgebraError("negative dimension");
  VarSpecBuilder b;
  for (int i = 1; i <= n; ++i) b.odd("xi" + std::to_string(i));
  DensityAction out;
  out.xi_spec = b.build();
  auto vars = out.xi_spec->indeterminates();
  for (int d = 0; d <= n; ++d)
    for (const auto& m : monomials_of_weight(*out.xi_spec, vars, standard_weights(*out.xi_spec), d))
      out.module_basis.push_back(m);
  Format fmt;
  for (const auto& m : out.module_basis) fmt.push_back(m.parity(*out.xi_spec) + Parity::Odd);
  out.action.format = fmt;
  for (const auto& m : out.module_basis)
    for (auto j : vars) {
      VectorField D = VectorField::term(SPoly::monomial(out.xi_spec, m), j);
      out.fields.push_back(D);
      out.action.g0.push_back(density_matrix(D, lambda, out.xi_spec, out.module_basis, fmt));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Nonstandard gradings

enum class Series { Vect, M, K, Po };

inline std::string series_name(Series s) {
  switch (s) {
    case Series::Vect: return "vect";
    case Series::M: return "m";
    case Series::K: return "k";
    case Series::Po: return "po";
  }
  return "";
}

/// Coordinates with per-variable weights for one grading of a series.
/// `shift` is the degree lowered by the bracket of generating functions
/// (the weight of t, tau, or of a canonical pair); 0 for vect.
struct WeightedRealization {
  VarSpecPtr spec;
  Weights weights;
  int shift = 0;
};

/// Weights for vect(n|m; r), m(n; r), k(2n+1|m; r) and po(2n|m; r).
/// For vect, n even and m odd coordinates; for k and po, m odd coordinates split
/// into xi/eta pairs (and theta when m is odd).
inline WeightedRealization weight_assignment(Series series, int n, int m, int r) {
  if (n < 0 || m < 0 || r < 0) throw AlgebraError("negative parameter");
  WeightedRealization out;
  switch (series) {
    case Series::Vect: {
      if (r > m) throw AlgebraError("r exceeds the number of odd coordinates");
      VarSpecBuilder b;
      for (int i = 1; i <= n; ++i) b.even("u" + std::to_string(i));
      for (int j = 1; j <= m; ++j) b.odd("xi" + std::to_string(j));
      out.spec = b.build();
      out.weights = standard_weights(*out.spec);
      for (int j = 0; j < r; ++j) out.weights[n + j] = 0;
      return out;
    }
    case Series::M: {
      if (r > n) throw AlgebraError("r exceeds n");
      if (r >= 1 && r == n - 1) throw AlgebraError("r = n - 1 does not give a grading of m(n)");
      PericontactContext ctx(n);
      out.spec = ctx.spec();
      out.weights = ctx.weights();
      out.shift = 2;
      if (r == n && r > 0) {
        out.weights[ctx.tau()] = 1;
        for (int i = 0; i < n; ++i) out.weights[ctx.q()[i]] = 1, out.weights[ctx.xi()[i]] = 0;
        out.shift = 1;
      } else {
        for (int i = 0; i < r; ++i) out.weights[ctx.q()[i]] = 2, out.weights[ctx.xi()[i]] = 0;
      }
      return out;
    }
    case Series::K:
    case Series::Po: {
      int k = m / 2;
      if (r > k) throw AlgebraError("r exceeds [m/2]");
      if (series == Series::K && n == 0 && m % 2 == 0 && r >= 1 && r == k - 1)
        throw AlgebraError("r = k - 1 does not give a grading of k(1|2k)");
      ContactContext ctx = series == Series::K ? ContactContext(n, m, ContactVariant::XiEta)
                                               : ContactContext::symplectic(n, m, ContactVariant::XiEta);
      out.spec = ctx.spec();
      out.weights = ctx.weights();
      out.shift = 2;
      if (series == Series::K && n == 0 && m % 2 == 0 && r == k && r > 0) {
        out.weights[ctx.t()] = 1;
        for (int i = 0; i < k; ++i) out.weights[ctx.xi()[i]] = 1, out.weights[ctx.eta()[i]] = 0;
        out.shift = 1;
      } else if (series == Series::K) {
        for (int i = 0; i < r; ++i) out.weights[ctx.xi()[i]] = 2, out.weights[ctx.eta()[i]] = 0;
      } else {
        for (int i = 0; i < r; ++i) out.weights[ctx.xi()[i]] = 0, out.weights[ctx.eta()[i]] = 2;
      }
      return out;
    }
  }
  throw AlgebraError("unknown series");
}

// ---------------------------------------------------------------------------
// Checks

struct ClosureDefect {
  int d1 = 0, d2 = 0;
  std::size_t i1 = 0, i2 = 0;
};

/// Pairs of basis elements whose bracket leaves g_{d1+d2}; brackets landing
/// above the computed range are checked only when the prolong has vanished.
inline std::vector<ClosureDefect> prolong_closure_defects(const ProlongResult& res) {
  detail::FieldIndex idx;
  std::map<int, detail::FieldSpan> spans;
  for (const auto& c : res.components)
    for (const auto& x : c.basis) spans[c.degree].add(x, idx);
  std::vector<ClosureDefect> out;
  for (const auto& a : res.components)
    for (const auto& b : res.components) {
      if (a.degree > b.degree) continue;
      int d = a.degree + b.degree;
      bool known = d <= res.max_degree() || (res.vanishing_degree && d >= *res.vanishing_degree);
      if (!known || d < res.min_degree()) continue;
      for (std::size_t i = 0; i < a.basis.size(); ++i)
        for (std::size_t j = 0; j < b.basis.size(); ++j) {
          VectorField br = bracket(a.basis[i], b.basis[j]);
          bool ok = d <= res.max_degree() ? spans[d].contains(br, idx) : br.is_zero();
          if (!ok) out.push_back({a.degree, b.degree, i, j});
        }
    }
  return out;
}

/// The b-bar model of b_lambda(n): component i (-1 <= i <= n-1) holds the functions
/// with i+1 odd coordinates xi, of field parity i. Returns the dimensions at
/// q-degree <= qmax and whether the main bracket respects this grading on all
/// monomial pairs of total degree <= qmax.
struct BbarCheck {
  std::vector<std::pair<int, std::pair<int, int>>> dims;  ///< (i, (even, odd))
  bool graded = true;
};

inline BbarCheck bbar_check(int n, const Rational& lambda, int qmax) {
  PericontactContext ctx(n);
  BbarCheck out;
  Weights xw(ctx.spec()->size(), 0);
  for (auto x : ctx.xi()) xw[x] = 1;
  std::vector<SPoly> elems;
  auto qx = ctx.qxi();
  for (const auto& m : monomials_up_to(*ctx.spec(), qx, qmax + n)) {
    int qd = 0;
    for (auto q : ctx.q()) qd += m[q];
    if (qd <= qmax) elems.push_back(SPoly::monomial(ctx.spec(), m));
  }
  for (int i = -1; i <= n - 1; ++i) {
    int e = 0, o = 0;
    for (const auto& f : elems)
      if (deg(f, xw) == i + 1) (f.parity() + Parity::Odd == Parity::Even ? e : o) += 1;
    out.dims.push_back({i, {e, o}});
  }
  for (const auto& f : elems)
    for (const auto& g : elems) {
      if (f.terms().begin()->first.total_degree(*ctx.spec()) + g.terms().begin()->first.total_degree(*ctx.spec()) >
          qmax + n)
        continue;
      SPoly h = main_bracket(f, g, lambda, ctx);
      if (h.is_zero()) continue;
      auto parts = weight_split(h, xw);
      int expect = deg(f, xw) + deg(g, xw) - 1;
      if (parts.size() != 1 || parts.begin()->first != expect) out.graded = false;
    }
  return out;
}

}  // namespace superlie

#endif  // SUPERLIE_PROLONG_HPP
