#ifndef SUPERLIE_QUANTIZE_HPP
#define SUPERLIE_QUANTIZE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superlie/parse.hpp"
#include "superlie/prolong.hpp"

namespace superlie {

// ---------------------------------------------------------------------------
// Moyal quantization of the Poisson bracket

/// One term w d/dx_a (x) d/dx_b of the constant bivector P. The partners a, b
/// always have equal parity, so every term is an even operator.
struct BivectorTerm {
  std::size_t a = 0, b = 0;
  Rational w;
};

/// The bivector with P^1(f, g) = {f, g}, one term per coordinate a, sorted by a.
inline std::vector<BivectorTerm> poisson_bivector(const ContactContext& ctx) {
  if (ctx.has_t()) throw AlgebraError("the bivector lives on the symplectic space");
  std::vector<BivectorTerm> out;
  for (int i = 0; i < ctx.n(); ++i) {
    out.push_back({ctx.p()[i], ctx.q()[i], Rational(1)});
    out.push_back({ctx.q()[i], ctx.p()[i], Rational(-1)});
  }
  for (std::size_t j = 0; j < ctx.xi().size(); ++j) {
    out.push_back({ctx.xi()[j], ctx.eta()[j], Rational(-1)});
    out.push_back({ctx.eta()[j], ctx.xi()[j], Rational(-1)});
  }
  for (auto th : ctx.theta()) out.push_back({th, th, Rational(-1)});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
  return out;
}

/// P^k(f, g): P is applied k times to f(x) g(x') in doubled coordinates and x' is set to x.
inline SPoly bivector_power_doubled(const SPoly& f, const SPoly& g, const ContactContext& ctx, int k) {
  const VarSpec& spec = *ctx.spec();
  std::size_t n = spec.size();
  if (2 * n > VarSpec::kMaxVars) throw AlgebraError("too many coordinates to double");
  if (spec.param_mask()) throw AlgebraError("parameters are not supported here");
  VarSpecBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.var(spec[i].name, spec.parity(i));
  for (std::size_t i = 0; i < n; ++i) b.var(spec[i].name + "'", spec.parity(i));
  VarSpecPtr s2 = b.build();
  SPoly F(s2), G(s2);
  for (const auto& [m, c] : f.terms()) F.add_term(m, c);
  for (const auto& [m, c] : g.terms()) {
    Monomial mm;
    for (std::size_t i = 0; i < n; ++i) mm[n + i] = m[i];
    G.add_term(mm, c);
  }
  SPoly h = F * G;
  auto P = poisson_bivector(ctx);
  for (int r = 0; r < k; ++r) {
    SPoly next(s2);
    for (const auto& t : P) next += pder(pder(h, n + t.b), t.a) * t.w;
    h = std::move(next);
  }
  // doubled monomials are (x part)(x' part), so x' -> x is a product
  SPoly out(ctx.spec());
  for (const auto& [m, c] : h.terms()) {
    Monomial lo, hi, prod;
    for (std::size_t i = 0; i < n; ++i) lo[i] = m[i], hi[i] = m[n + i];
    int s = monomial_mul(spec, lo, hi, prod);
    if (s != 0) out.add_term(prod, s > 0 ? c : Rational(-c));
  }
  return out;
}

namespace detail {

inline std::uint32_t triple_key(std::size_t a1, std::size_t a2, std::size_t a3) {
  return static_cast<std::uint32_t>((a1 << 10) | (a2 << 5) | a3);
}

}  // namespace detail

/// Third derivatives d_{a1} d_{a2} d_{a3} f (d_{a3} applied first), keyed by
/// (a1, a2, a3). With `sorted` only a1 <= a2 <= a3 is stored.
struct ThirdDerivatives {
  std::unordered_map<std::uint32_t, SPoly> table;
  bool sorted = false;
};

inline ThirdDerivatives third_derivatives(const SPoly& f, bool sorted) {
  ThirdDerivatives out;
  out.sorted = sorted;
  if (f.is_zero()) return out;
  auto vars = f.spec()->indeterminates();
  for (auto a3 : vars) {
    SPoly d1 = pder(f, a3);
    if (d1.is_zero()) continue;
    for (auto a2 : vars) {
      if (sorted && a2 > a3) break;
      SPoly d2 = pder(d1, a2);
      if (d2.is_zero()) continue;
      for (auto a1 : vars) {
        if (sorted && a1 > a2) break;
        SPoly d3 = pder(d2, a1);
        if (!d3.is_zero()) out.table.emplace(detail::triple_key(a1, a2, a3), std::move(d3));
      }
    }
  }
  return out;
}

/// P^3(f, g) for parity-homogeneous f from its sorted table and the ordered table of g.
/// The three factors of P^3 commute, so each sorted triple stands for all its orderings.
inline SPoly bivector_cube(const ThirdDerivatives& f3, Parity pf, const ThirdDerivatives& g3,
                           const std::vector<BivectorTerm>& P, const VarSpecPtr& spec) {
  if (!f3.sorted || g3.sorted) throw AlgebraError("expected a sorted table for f and an ordered one for g");
  std::vector<const BivectorTerm*> by_a(spec->size(), nullptr);
  for (const auto& t : P) by_a[t.a] = &t;
  SPoly r(spec);
  for (const auto& [key, df] : f3.table) {
    std::size_t a[3] = {key >> 10, (key >> 5) & 31u, key & 31u};
    const BivectorTerm* t[3] = {by_a[a[0]], by_a[a[1]], by_a[a[2]]};
    if (!t[0] || !t[1] || !t[2]) continue;
    auto it = g3.table.find(detail::triple_key(t[0]->b, t[1]->b, t[2]->b));
    if (it == g3.table.end()) continue;
    Parity p[3] = {spec->parity(a[0]), spec->parity(a[1]), spec->parity(a[2])};
    // move d'_{b1}, d'_{b2} to the right of the d_a, then pass the d'_b over f
    int e = bit(p[0]) * (bit(p[1]) + bit(p[2])) + bit(p[1]) * bit(p[2]);
    e += (bit(p[0]) + bit(p[1]) + bit(p[2])) * bit(pf);
    int mult = (a[0] == a[1] && a[1] == a[2]) ? 1 : (a[0] == a[1] || a[1] == a[2]) ? 3 : 6;
    Rational c = t[0]->w * t[1]->w * t[2]->w * mult;
    if (e % 2) c = -c;
    r += (df * it->second) * c;
  }
  return r;
}

/// The order-hbar^2 term c(f, g) = P^3(f, g) of the Moyal bracket. It is a 2-cocycle
/// of the Poisson superalgebra.
inline SPoly moyal_cocycle(const SPoly& f, const SPoly& g, const ContactContext& ctx) {
  auto P = poisson_bivector(ctx);
  ThirdDerivatives g3 = third_derivatives(g, false);
  SPoly r(ctx.spec());
  auto parts = f.parity_components();
  for (int i = 0; i < 2; ++i)
    if (!parts[i].is_zero()) r += bivector_cube(third_derivatives(parts[i], true), parity_of(i), g3, P, ctx.spec());
  return r;
}

inline Cocycle2 moyal_cocycle_of(const ContactContext& ctx) {
  return {"moyal", Parity::Even, [ctx](const SPoly& f, const SPoly& g) { return moyal_cocycle(f, g, ctx); }};
}

// ---------------------------------------------------------------------------
// Half-densities as Hamiltonians

/// The prolong of (Pi(Q[xi_1..xi_n] vol^{1/2}), vect(0|n)) for even n, realized by
/// Hamiltonians. The module carries a unique invariant even form, which pairs each
/// basis vector with one partner. Partners become conjugate coordinates, and degree d
/// is spanned by Hamiltonians of polynomial degree d + 2.
struct HalfDensityImage {
  ContactContext ctx = ContactContext::symplectic(0, 0, ContactVariant::XiEta);
  SuperMatrix form;                      ///< invariant form on the module basis
  std::vector<std::size_t> coordinate;   ///< module basis index -> coordinate whose d/dx it is
  std::vector<Rational> scale;           ///< basis vector = scale * d/dx
  std::vector<std::vector<SPoly>> components;  ///< index d + 1
  std::vector<std::pair<int, int>> dims;

  const std::vector<SPoly>& at(int d) const {
    if (d < -1 || d + 1 >= static_cast<int>(components.size())) throw AlgebraError("degree outside the computed range");
    return components[static_cast<std::size_t>(d + 1)];
  }
  int max_degree() const { return static_cast<int>(components.size()) - 2; }
};

namespace detail {

/// Even forms preserved by every matrix of g0.
inline std::vector<SuperMatrix> invariant_even_forms(const std::vector<SuperMatrix>& g0, const Format& fmt) {
  std::size_t N = fmt.size();
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      if (fmt[a] == fmt[b]) entries.emplace_back(a, b);
  std::vector<SparseVec> cols;
  for (auto [a, b] : entries) {
    SuperMatrix E = SuperMatrix::unit(fmt, a, b);
    std::map<std::uint32_t, Rational> v;
    std::uint32_t off = 0;
    for (const auto& X : g0) {
      SuperMatrix d = aut_defect(X, E);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
          if (d(i, j) != 0) v[off + static_cast<std::uint32_t>(i * N + j)] = d(i, j);
      off += static_cast<std::uint32_t>(N * N);
    }
    cols.push_back(to_sparse(v));
  }
  std::vector<SuperMatrix> out;
  for (const auto& k : kernel_of_columns(cols)) {
    SuperMatrix B(fmt);
    for (const auto& [i, c] : k) B(entries[i].first, entries[i].second) = c;
    out.push_back(B);
  }
  return out;
}

inline SparseVec poly_vector(const SPoly& f, Indexer<Monomial>& idx) {
  std::map<std::uint32_t, Rational> v;
  for (const auto& [m, c] : f.terms()) v[idx(m)] = c;
  return to_sparse(v);
}

inline SPoly poly_from_vector(const SparseVec& v, const Indexer<Monomial>& idx, const VarSpecPtr& spec) {
  SPoly f(spec);
  for (const auto& [i, c] : v) f.add_term(idx.key(i), c);
  return f;
}

}  // namespace detail

inline HalfDensityImage half_density_image(int n, int imax) {
  if (n < 2 || n % 2) throw AlgebraError("the half-density module is symplectic only for even n >= 2");
  if (imax < 0) throw AlgebraError("imax must be nonnegative");
  DensityAction da = lambda_density_action(n, frac(1, 2));
  const Format& fmt = da.action.format;
  const std::size_t N = fmt.size();

  auto forms = detail::invariant_even_forms(da.action.g0, fmt);
  if (forms.size() != 1) throw AlgebraError("expected a unique invariant even form");
  HalfDensityImage img;
  img.form = forms[0];
  std::vector<std::size_t> partner(N);
  for (std::size_t i = 0; i < N; ++i) {
    int nz = 0;
    for (std::size_t j = 0; j < N; ++j)
      if (img.form(i, j) != 0) partner[i] = j, ++nz;
    if (nz != 1) throw AlgebraError("the invariant form does not pair basis vectors");
  }
  int ne = 0, no = 0;
  for (auto p : fmt) (p == Parity::Even ? ne : no) += 1;
  img.ctx = ContactContext::symplectic(ne / 2, no, ContactVariant::XiEta);
  const auto& ctx = img.ctx;
  const VarSpecPtr& spec = ctx.spec();
  img.coordinate.assign(N, 0);
  img.scale.assign(N, Rational(1));
  int ke = 0, ko = 0;
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t j = partner[i];
    if (j < i) continue;
    if (fmt[i] == Parity::Even) {
      img.coordinate[i] = ctx.q()[ke], img.coordinate[j] = ctx.p()[ke];
      ++ke;
    } else {
      img.coordinate[i] = ctx.xi()[ko], img.coordinate[j] = ctx.eta()[ko];
      ++ko;
    }
    img.scale[j] = img.form(i, j);
  }

  // degree -1: coordinates; degree 0: the Hamiltonian of each linear field
  Indexer<Monomial> pidx;
  std::vector<SPoly> lin;
  for (auto v : spec->indeterminates()) lin.push_back(SPoly::variable(spec, v));
  img.components.push_back(lin);
  img.dims.emplace_back(ne, no);

  auto vars = spec->indeterminates();
  auto quad = monomials_of_weight(*spec, vars, standard_weights(*spec), 2);
  detail::FieldIndex fidx;
  std::vector<SparseVec> hcols;
  for (const auto& m : quad) hcols.push_back(detail::field_vector(H_field(SPoly::monomial(spec, m), ctx), fidx));
  std::map<std::uint32_t, std::map<std::uint32_t, Rational>> hrows;
  for (std::uint32_t c = 0; c < hcols.size(); ++c)
    for (const auto& [r, v] : hcols[c]) hrows[r][c] = v;

  EchelonBasis prev;
  std::vector<SPoly> g0;
  int e0 = 0, o0 = 0;
  std::vector<SPoly> torus;
  for (std::size_t x = 0; x < da.action.g0.size(); ++x) {
    const SuperMatrix& X = da.action.g0[x];
    SuperMatrix Y(fmt);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) Y(i, j) = X(i, j) * img.scale[i] / img.scale[j];
    SparseVec target = detail::field_vector(linear_field(Y, spec, img.coordinate), fidx);
    std::vector<SparseVec> rows;
    std::vector<Rational> rhs;
    auto rowsmap = hrows;
    for (const auto& e : target) rowsmap[e.first];
    for (const auto& [r, m] : rowsmap) {
      rows.push_back(to_sparse(m));
      const Rational* t = sparse_find(target, r);
      rhs.push_back(t ? *t : Rational(0));
    }
    auto sol = solve_with_certificate(rows, rhs, static_cast<std::uint32_t>(quad.size()));
    if (!sol.feasible) throw AlgebraError("a degree-0 element is not Hamiltonian in the paired coordinates");
    SPoly F(spec);
    for (const auto& [c, v] : sol.solution) F.add_term(quad[c], v);
    // the fields xi_j d/dxi_j span a torus; its Hamiltonians fix the weight blocks
    const VectorField& D = da.fields[x];
    for (std::size_t k = 0; k < D.coeffs().size(); ++k)
      if (D.coeffs()[k].size() == 1) {
        Monomial only = D.coeffs()[k].terms().begin()->first;
        Monomial xk;
        xk[k] = 1;
        if (only == xk) torus.push_back(F);
      }
    if (prev.insert(detail::poly_vector(F, pidx))) {
      g0.push_back(F);
      (F.parity() == Parity::Even ? e0 : o0) += 1;
    }
  }
  img.components.push_back(g0);
  img.dims.emplace_back(e0, o0);

  // weight of each coordinate under the torus
  std::vector<std::vector<Rational>> wt(spec->size(), std::vector<Rational>(torus.size()));
  for (auto v : vars) {
    SPoly z = SPoly::variable(spec, v);
    for (std::size_t t = 0; t < torus.size(); ++t) {
      SPoly img_z = poisson(torus[t], z, ctx);
      Rational c = img_z.coeff(z.terms().begin()->first);
      if (!(img_z == z * c)) throw AlgebraError("coordinates are not torus weight vectors");
      wt[v][t] = c;
    }
  }

  for (int d = 1; d <= imax; ++d) {
    std::map<std::pair<std::vector<Rational>, int>, std::vector<Monomial>> blocks;
    for (const auto& m : monomials_of_weight(*spec, vars, standard_weights(*spec), d + 2)) {
      std::vector<Rational> w(torus.size());
      for (auto v : vars)
        for (std::size_t t = 0; t < torus.size(); ++t)
          if (m[v]) w[t] += wt[v][t] * m[v];
      blocks[{w, bit(m.parity(*spec))}].push_back(m);
    }
    EchelonBasis cur;
    std::vector<SPoly> gd;
    int ed = 0, od = 0;
    const std::uint32_t stride = 1u << 20;
    for (const auto& [key, mons] : blocks) {
      std::vector<SparseVec> cols;
      for (const auto& m : mons) {
        SPoly f = SPoly::monomial(spec, m);
        SparseVec col;
        for (std::size_t k = 0; k < vars.size(); ++k) {
          SparseVec r = prev.reduce(detail::poly_vector(pder(f, vars[k]), pidx));
          for (auto& e : r) {
            if (e.first >= stride) throw AlgebraError("monomial index overflow");
            col.emplace_back(static_cast<std::uint32_t>(k) * stride + e.first, e.second);
          }
        }
        cols.push_back(col);
      }
      for (const auto& kv : kernel_of_columns(cols)) {
        SPoly F(spec);
        for (const auto& [i, c] : kv) F.add_term(mons[i], c);
        cur.insert(detail::poly_vector(F, pidx));
        (key.second ? od : ed) += 1;
        gd.push_back(F);
      }
    }
    img.components.push_back(gd);
    img.dims.emplace_back(ed, od);
    prev = std::move(cur);
  }
  return img;
}

/// Expected size of degree d: 2^n times the number of monomials of degree d + 1 in n variables.
inline std::pair<int, int> half_density_expected_dims(int n, int d) {
  long c = 1;
  for (int i = 1; i <= n - 1; ++i) c = c * (d + 1 + i) / i;  // binom(d + n, n - 1)
  long half = (1L << n) / 2 * c;
  return {static_cast<int>(half), static_cast<int>(half)};
}

// ---------------------------------------------------------------------------
// Rigidity of the image under the Moyal quantization

struct RigidityCheck {
  int bound = 0;                ///< highest degree of the image taken into account
  long pairs_checked = 0;       ///< ordered pairs whose cocycle value can be nonconstant
  long pairs_constant = 0;      ///< ordered pairs whose value is a constant by degree
  std::optional<std::string> witness;  ///< first pair with a nonconstant value

  bool annihilated() const { return !witness; }
};

/// Evaluates the Moyal cocycle on all ordered pairs of basis elements of degree <= bound,
/// modulo constants. Pairs of total polynomial degree below 7 give constants and are counted only.
inline RigidityCheck quantization_rigidity(const HalfDensityImage& img, int bound) {
  if (bound > img.max_degree()) throw AlgebraError("bound exceeds the computed image");
  RigidityCheck res;
  res.bound = bound;
  auto P = poisson_bivector(img.ctx);
  const VarSpecPtr& spec = img.ctx.spec();
  std::vector<const SPoly*> elems;
  std::vector<int> degs;
  for (int d = -1; d <= bound; ++d)
    for (const auto& f : img.at(d)) elems.push_back(&f), degs.push_back(d + 2);
  std::vector<ThirdDerivatives> sorted(elems.size()), ordered(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    sorted[i] = third_derivatives(*elems[i], true);
    ordered[i] = third_derivatives(*elems[i], false);
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (degs[i] + degs[j] < 7) {
        ++res.pairs_constant;
        continue;
      }
      ++res.pairs_checked;
      SPoly c = bivector_cube(sorted[i], elems[i]->parity(), ordered[j], P, spec);
      c = c.filter([](const Monomial& m) { return !m.is_one(); });
      if (!c.is_zero() && !res.witness)
        res.witness = to_string(*elems[i]) + " | " + to_string(*elems[j]) + " -> " + to_string(c);
    }
  return res;
}

}  // namespace superlie

#endif  // SUPERLIE_QUANTIZE_HPP
