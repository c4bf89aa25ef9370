#ifndef SUPERLIE_DEFORM_HPP
#define SUPERLIE_DEFORM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superlie/genfun.hpp"
#include "superlie/lie.hpp"

namespace superlie {

// ---------------------------------------------------------------------------
// Brackets as Bracket objects

/// Buttin bracket on functions of q, xi; elements have parity p(f) + 1.
inline Bracket buttin_bracket(const PericontactContext& ctx) {
  return {"buttin", Parity::Odd, [ctx](const SPoly& f, const SPoly& g) { return buttin(f, g, ctx); }};
}

/// Pericontact bracket; M_f has parity p(f) + 1.
inline Bracket pericontact_bracket_of(const PericontactContext& ctx) {
  return {"mb", Parity::Odd, [ctx](const SPoly& f, const SPoly& g) { return pericontact_bracket(f, g, ctx); }};
}

inline Bracket poisson_bracket_of(const ContactContext& ctx) {
  return {"poisson", Parity::Even, [ctx](const SPoly& f, const SPoly& g) { return poisson(f, g, ctx); }};
}

/// Weights deg q_i = deg xi_i = 1, deg tau = 2.
inline Weights pericontact_standard_weights(const PericontactContext& ctx) { return ctx.weights(); }

// ---------------------------------------------------------------------------
// Main deformation

namespace detail {

/// {f,g}_B.b. + lambda (c(f,g) f Delta g + (-1)^{p(f)} c(g,f) (Delta f) g), split by standard degree.
template <class Coef>
SPoly main_bracket_with(const SPoly& f, const SPoly& g, const Rational& lambda, const PericontactContext& ctx,
                        Coef coef) {
  SPoly r = buttin(f, g, ctx);
  if (lambda == 0) return r;
  Weights w = ctx.weights();
  for (const auto& [df, fd] : weight_split(f, w))
    for (const auto& [dg, gd] : weight_split(g, w)) {
      // a coefficient is needed only where the Laplacian it multiplies is nonzero
      SPoly lg = odd_laplacian(gd, ctx);
      if (!lg.is_zero()) r += fd * lg * Rational(lambda * coef(df, dg));
      if (odd_laplacian(fd, ctx).is_zero()) continue;
      Rational c21 = coef(dg, df);
      r += by_parity(fd, SPoly(ctx.spec()), [&](const SPoly& a, Parity p) {
        return (odd_laplacian(a, ctx) * gd) * Rational(lambda * c21 * sign_of(p));
      });
    }
  return r;
}

inline void require_generic(const Rational& den, const Rational& lambda, int d) {
  if (den == 0)
    throw AlgebraError("non-generic lambda " + to_string(lambda) + " for degree " + std::to_string(d) +
                       ": vanishing denominator");
}

}  // namespace detail

/// Main deformation of the Buttin bracket on tau-free functions,
/// {f,g}_B.b. + lambda (c(f,g) f Delta g + (-1)^{p(f)} c(g,f) (Delta f) g) with
/// c(f,g) = (2 - deg f) / (2 + lambda (deg g - 2 - n)) and deg q = deg xi = 1.
/// This is the bracket of b_lambda(n) transported along f -> f|_{tau=0}.
inline SPoly main_bracket(const SPoly& f, const SPoly& g, const Rational& lambda, const PericontactContext& ctx) {
  const int n = ctx.n();
  return detail::main_bracket_with(f, g, lambda, ctx, [&](int d1, int d2) {
    Rational den = Rational(2) + lambda * Rational(d2 - 2 - n);
    detail::require_generic(den, lambda, d2);
    return Rational(Rational(2 - d1) / den);
  });
}

/// The same shape with c(f,g) = (deg f - 2) / (2 + lambda (deg g - n)). Kept for
/// comparison: it violates the Jacobi identity for lambda != 0.
inline SPoly main_bracket_uncorrected(const SPoly& f, const SPoly& g, const Rational& lambda,
                                      const PericontactContext& ctx) {
  const int n = ctx.n();
  return detail::main_bracket_with(f, g, lambda, ctx, [&](int d1, int d2) {
    Rational den = Rational(2) + lambda * Rational(d2 - n);
    detail::require_generic(den, lambda, d2);
    return Rational(Rational(d1 - 2) / den);
  });
}

/// f + tau phi(f) in b_{a,b}(n) with phi(f) = a (bn - aE)^{-1} Delta f.
inline SPoly lift_to_b_ab(const SPoly& f, const Rational& a, const Rational& b, const PericontactContext& ctx) {
  SPoly f1(ctx.spec());
  for (const auto& [d, part] : weight_split(odd_laplacian(f, ctx), ctx.weights())) {
    Rational den = b * ctx.n() - a * d;
    if (den == 0) throw AlgebraError("no tau-lift in degree " + std::to_string(d + 2));
    f1 += part * Rational(a / den);
  }
  return f + ctx.var(ctx.tau()) * f1;
}

inline Bracket main_bracket_of(const Rational& lambda, const PericontactContext& ctx) {
  return {"main(" + to_string(lambda) + ")", Parity::Odd,
          [lambda, ctx](const SPoly& f, const SPoly& g) { return main_bracket(f, g, lambda, ctx); }};
}

inline Bracket main_bracket_uncorrected_of(const Rational& lambda, const PericontactContext& ctx) {
  return {"main-uncorrected(" + to_string(lambda) + ")", Parity::Odd,
          [lambda, ctx](const SPoly& f, const SPoly& g) { return main_bracket_uncorrected(f, g, lambda, ctx); }};
}

/// Point of the projective parameter line, in the lambda chart or the (a, b) chart
/// related by lambda = 2a / (n (a - b)). lambda = infinity exists only as a = b.
class DeformParams {
 public:
  static DeformParams from_lambda(const Rational& l) {
    DeformParams p;
    p.lambda_ = l;
    return p;
  }
  static DeformParams from_ab(const Rational& a, const Rational& b) {
    if (a == 0 && b == 0) throw AlgebraError("(a, b) = (0, 0) is not a point of the parameter line");
    DeformParams p;
    p.ab_ = {a, b};
    return p;
  }
  static DeformParams infinity() { return from_ab(1, 1); }

  bool is_infinite() const { return !lambda_ && ab_->first == ab_->second; }
  /// lambda; throws at infinity.
  Rational lambda(int n) const {
    if (lambda_) return *lambda_;
    if (is_infinite()) throw AlgebraError("lambda is infinite");
    return Rational(2 * ab_->first / (Rational(n) * (ab_->first - ab_->second)));
  }
  /// (a, b) with a = n lambda, b = n lambda - 2 in the lambda chart.
  std::pair<Rational, Rational> ab(int n) const {
    if (ab_) return *ab_;
    Rational a = Rational(n) * *lambda_;
    return {a, Rational(a - 2)};
  }
  std::string describe(int n) const {
    if (is_infinite()) return "infinity";
    return to_string(lambda(n));
  }

 private:
  std::optional<Rational> lambda_;
  std::optional<std::pair<Rational, Rational>> ab_;
};

/// (bn - aE) df/dtau - a Delta f, zero exactly on generating functions of b_{a,b}(n).
inline SPoly b_ab_defect(const SPoly& f, const Rational& a, const Rational& b, const PericontactContext& ctx) {
  SPoly ft = pder(f, ctx.tau());
  SPoly r = ft * Rational(b * ctx.n()) - euler(ft, ctx.euler_vars()) * a;
  return r - odd_laplacian(f, ctx) * a;
}

inline bool b_ab_member(const SPoly& f, const Rational& a, const Rational& b, const PericontactContext& ctx) {
  return b_ab_defect(f, a, b, ctx).is_zero();
}

/// Gradings of m(n) used for b_{a,b}(n): the first one bounds sweeps.
enum class PericontactGrading {
  Standard,  ///< deg q = deg xi = 1, deg tau = 2
  Regraded   ///< deg q = deg tau = 1, deg xi = 0
};

struct GradingSet {
  std::vector<Weights> weights;
  std::vector<std::string> names;
};

/// Primary weight, then omega_i = deg_{q_i} - deg_{xi_i}, then the odd degree
/// (xi and tau counted). All are gradings of the pericontact bracket and of the
/// b_{a,b} membership equation.
inline GradingSet pericontact_gradings(const PericontactContext& ctx, PericontactGrading g) {
  GradingSet gs;
  Weights w = ctx.weights();
  if (g == PericontactGrading::Regraded) {
    for (auto x : ctx.xi()) w[x] = 0;
    w[ctx.tau()] = 1;
  }
  gs.weights.push_back(w);
  gs.names.push_back(g == PericontactGrading::Standard ? "weight" : "weight(n;n)");
  for (int i = 0; i < ctx.n(); ++i) {
    Weights o(ctx.spec()->size(), 0);
    o[ctx.q()[i]] = 1;
    o[ctx.xi()[i]] = -1;
    gs.weights.push_back(o);
    gs.names.push_back("omega" + std::to_string(i + 1));
  }
  Weights od(ctx.spec()->size(), 0);
  for (auto x : ctx.xi()) od[x] = 1;
  od[ctx.tau()] = 1;
  gs.weights.push_back(od);
  gs.names.push_back("d_od");
  return gs;
}

/// Basis of {f in span(monomials in vars) : op(f) = 0} for primary weights in
/// [wmin, wmax], computed per multidegree. `op` must be homogeneous for every grading.
template <class Op>
GradedBasis kernel_basis(const VarSpecPtr& spec, const std::vector<std::size_t>& vars, const GradingSet& gs, int wmin,
                         int wmax, Op op) {
  GradedBasis basis(spec, gs.weights, gs.names);
  for (int w = wmin; w <= wmax; ++w) {
    std::map<std::vector<int>, std::vector<Monomial>> classes;
    for (const auto& m : monomials_of_weight(*spec, vars, gs.weights[0], w)) {
      std::vector<int> d;
      for (const auto& g : gs.weights) d.push_back(monomial_weight(m, g));
      classes[d].push_back(m);
    }
    for (const auto& [d, monos] : classes) {
      Indexer<Monomial> idx;
      std::vector<SparseVec> cols;
      for (const auto& m : monos) {
        SPoly img = op(SPoly::monomial(spec, m));
        std::map<std::uint32_t, Rational> col;
        for (const auto& [mm, c] : img.terms()) col[idx(mm)] = c;
        cols.push_back(to_sparse(col));
      }
      std::vector<SPoly> ker;
      for (const auto& v : kernel_of_columns(cols)) {
        SPoly p(spec);
        for (const auto& [j, c] : v) p.add_term(monos[j], c);
        ker.push_back(std::move(p));
      }
      basis.add_component(echelon_span(ker));
    }
  }
  return basis;
}

/// Generating functions of b_{a,b}(n) with primary weight in [wmin, wmax].
inline GradedBasis b_ab_basis(const PericontactContext& ctx, const Rational& a, const Rational& b, int wmin, int wmax,
                              PericontactGrading g = PericontactGrading::Standard) {
  return kernel_basis(ctx.spec(), ctx.spec()->indeterminates(), pericontact_gradings(ctx, g), wmin, wmax,
                      [&](const SPoly& f) { return b_ab_defect(f, a, b, ctx); });
}

/// Monomials in q, xi (tau excluded) with primary weight in [wmin, wmax].
inline GradedBasis buttin_basis(const PericontactContext& ctx, int wmin, int wmax,
                                PericontactGrading g = PericontactGrading::Standard) {
  return kernel_basis(ctx.spec(), ctx.qxi(), pericontact_gradings(ctx, g), wmin, wmax,
                      [&](const SPoly& f) { return SPoly(f.spec()); });
}

// ---------------------------------------------------------------------------
// Singular cocycles

enum class SingularFamily { B0, BMinus1, B1, BInfinity };

inline std::string family_name(SingularFamily f) {
  switch (f) {
    case SingularFamily::B0: return "b0";
    case SingularFamily::BMinus1: return "b-1";
    case SingularFamily::B1: return "b1";
    case SingularFamily::BInfinity: return "binf";
  }
  return "?";
}

inline SingularFamily parse_family(const std::string& s) {
  if (s == "b0") return SingularFamily::B0;
  if (s == "b-1" || s == "b_-1" || s == "bm1") return SingularFamily::BMinus1;
  if (s == "b1") return SingularFamily::B1;
  if (s == "binf" || s == "b_inf" || s == "binfty") return SingularFamily::BInfinity;
  throw AlgebraError("unknown cocycle family: " + s);
}

/// The point of the parameter line carrying each family.
inline DeformParams family_params(SingularFamily f) {
  switch (f) {
    case SingularFamily::B0: return DeformParams::from_lambda(0);
    case SingularFamily::BMinus1: return DeformParams::from_lambda(-1);
    case SingularFamily::B1: return DeformParams::from_lambda(1);
    case SingularFamily::BInfinity: return DeformParams::infinity();
  }
  return DeformParams::from_lambda(0);
}

/// Odd degree of each monomial: xi always counts, tau when `count_tau`.
inline Weights odd_degree_weights(const PericontactContext& ctx, bool count_tau) {
  Weights w(ctx.spec()->size(), 0);
  for (auto x : ctx.xi()) w[x] = 1;
  if (count_tau) w[ctx.tau()] = 1;
  return w;
}

namespace detail {

/// (d_od(g) - 1) g, split by odd degree.
inline SPoly odd_degree_minus_one(const SPoly& g, const Weights& od) {
  SPoly r(g.spec());
  for (const auto& [d, part] : weight_split(g, od)) r += part * Rational(d - 1);
  return r;
}

/// Cocycle supported on one distinguished element v (f = v row of the table),
/// extended by super antisymmetry and by zero on the complement.
inline Cocycle2 distinguished_cocycle(const std::string& name, Parity parity, const SPoly& v, const SPoly& self_value,
                                      const Weights& od) {
  Monomial vm = v.terms().begin()->first;
  Rational vc = v.terms().begin()->second;
  Parity pv = v.parity() + Parity::Odd;
  Cocycle2 c;
  c.name = name;
  c.parity = parity;
  c.fn = [v, vm, vc, pv, self_value, od](const SPoly& x, const SPoly& y) {
    SPoly r(x.spec() ? x.spec() : y.spec());
    Rational ax = x.coeff(vm) / vc, ay = y.coeff(vm) / vc;
    SPoly xr = x - v * ax, yr = y - v * ay;
    if (ax != 0 && ay != 0) r += self_value * Rational(ax * ay);
    if (ax != 0) r += odd_degree_minus_one(yr, od) * ax;
    if (ay != 0)
      r -= by_parity(xr, SPoly(r.spec()), [&](const SPoly& part, Parity p) {
        return odd_degree_minus_one(part, od) * Rational(sign_of(p + Parity::Odd, pv));
      }) * ay;
    return r;
  };
  return c;
}

}  // namespace detail

/// Singular cocycles of b_lambda(n), with element parity p + 1.
/// b0: (-1)^{p(f)} (d_od f - 1)(d_od g - 1) f g on tau-free functions.
/// b-1: on pure q-monomials, (4 - |k| - |l|) q^{k+l} vol + tau Delta(q^{k+l} vol).
/// b1, b_inf: C(v, g) = (d_od g - 1) g for g off v, where v = vol or tau vol, and
/// C(v, v) = 2 (d_od v - 1) v when nonzero (n even for b1, n odd for b_inf).
/// `count_tau` decides whether tau counts towards the odd degree in those rows.
inline Cocycle2 singular_cocycle(SingularFamily fam, const PericontactContext& ctx, bool count_tau = true) {
  const int n = ctx.n();
  if (n < 2) throw AlgebraError("singular cocycles need n >= 2");
  SPoly vol = ctx.one();
  for (auto x : ctx.xi()) vol *= ctx.var(x);
  switch (fam) {
    case SingularFamily::B0: {
      Weights od = odd_degree_weights(ctx, false);
      Cocycle2 c;
      c.name = "b0";
      c.parity = Parity::Odd;
      c.fn = [od](const SPoly& x, const SPoly& y) {
        return detail::bilinear_by_parity(x, y, [&](const SPoly& f, const SPoly& g) {
          SPoly r(f.spec());
          for (const auto& [df, fp] : weight_split(f, od))
            for (const auto& [dg, gp] : weight_split(g, od))
              r += (fp * gp) * Rational((df - 1) * (dg - 1) * sign_of(f.parity()));
          return r;
        });
      };
      return c;
    }
    case SingularFamily::BMinus1: {
      Cocycle2 c;
      c.name = "b-1";
      c.parity = parity_of(n + 1);
      std::vector<std::size_t> odd = ctx.xi();
      odd.push_back(ctx.tau());
      c.fn = [ctx, vol, odd](const SPoly& x, const SPoly& y) {
        auto pure_q = [&](const SPoly& f) {
          return f.filter([&](const Monomial& m) {
            for (auto o : odd)
              if (m[o]) return false;
            return true;
          });
        };
        SPoly px = pure_q(x), py = pure_q(y);
        SPoly r(ctx.spec());
        SPoly tau = ctx.var(ctx.tau());
        for (const auto& [mx, cx] : px.terms())
          for (const auto& [my, cy] : py.terms()) {
            int k = mx.total_degree(*ctx.spec()), l = my.total_degree(*ctx.spec());
            SPoly w = SPoly::monomial(ctx.spec(), mx) * SPoly::monomial(ctx.spec(), my) * vol;
            r += (w * Rational(4 - k - l) + tau * odd_laplacian(w, ctx)) * Rational(cx * cy);
          }
        return r;
      };
      return c;
    }
    case SingularFamily::B1: {
      SPoly self = (n % 2 == 0) ? vol * Rational(2 * (n - 1)) : SPoly(ctx.spec());
      return detail::distinguished_cocycle("b1", parity_of(n + 1), vol, self, odd_degree_weights(ctx, count_tau));
    }
    case SingularFamily::BInfinity: {
      SPoly v = ctx.var(ctx.tau()) * vol;
      SPoly self = (n % 2 == 1) ? v * Rational(2 * n) : SPoly(ctx.spec());
      return detail::distinguished_cocycle("binf", parity_of(n), v, self, odd_degree_weights(ctx, count_tau));
    }
  }
  throw AlgebraError("unknown cocycle family");
}

/// Standard weight of the element carrying a b1 or b_inf cocycle; 0 otherwise.
inline int cocycle_support_weight(SingularFamily fam, const PericontactContext& ctx) {
  if (fam == SingularFamily::B1) return ctx.n();
  if (fam == SingularFamily::BInfinity) return ctx.n() + 2;
  return 0;
}

/// The bracket of b_lambda(n) that each family deforms: Buttin for b0, the
/// pericontact bracket on b_{a,b}(n) otherwise.
inline Bracket singular_base_bracket(SingularFamily fam, const PericontactContext& ctx) {
  return fam == SingularFamily::B0 ? buttin_bracket(ctx) : pericontact_bracket_of(ctx);
}

/// Basis of the algebra each family lives on, primary weight <= wmax.
inline GradedBasis singular_family_basis(SingularFamily fam, const PericontactContext& ctx, int wmax) {
  if (fam == SingularFamily::B0) return buttin_basis(ctx, 0, wmax);
  auto [a, b] = family_params(fam).ab(ctx.n());
  return b_ab_basis(ctx, a, b, 0, wmax);
}

/// {f,g}_old + hbar C(f,g) for hbar-free f, g; hbar may be a number or a parameter.
inline SPoly singular_bracket(const SPoly& f, const SPoly& g, SingularFamily fam, const SPoly& hbar,
                              const PericontactContext& ctx) {
  return singular_base_bracket(fam, ctx)(f, g) + hbar * singular_cocycle(fam, ctx)(f, g);
}

// ---------------------------------------------------------------------------
// h_lambda(2|2)

/// Coordinates p1, q1 (even), xi1, eta1 (odd) of the (2|2) space.
inline ContactContext h22_context(const std::vector<VarEntry>& params = {}) {
  return ContactContext::symplectic(1, 2, ContactVariant::XiEta, params);
}

/// hbar(lambda) = (2 lambda - 1) / lambda
inline Rational hbar_of_lambda(const Rational& lambda) {
  if (lambda == 0) throw AlgebraError("hbar(lambda) is undefined at lambda = 0");
  return Rational((2 * lambda - 1) / lambda);
}

/// W_f = (int_0^p d/deta df/dxi dp) d/dp + (-1)^{p(f)} df/dxi d/deta
inline VectorField W_field(const SPoly& f, const ContactContext& ctx) {
  std::size_t p = ctx.p()[0], xi = ctx.xi()[0], eta = ctx.eta()[0];
  return detail::by_parity(f, VectorField(ctx.spec()), [&](const SPoly& g, Parity par) {
    VectorField w(ctx.spec());
    SPoly gx = pder(g, xi);
    w.add(p, formal_integral(pder(gx, eta), p));
    w.add(eta, gx * Rational(sign_of(par)));
    return w;
  });
}

/// D_f = H_f + hbar(lambda) W_f
inline VectorField hlambda_field(const SPoly& f, const Rational& lambda, const ContactContext& ctx) {
  return H_field(f, ctx) + W_field(f, ctx) * hbar_of_lambda(lambda);
}

/// The cocycle c(f, g) with [D_f, D_g] = D_{{f,g}} + hbar(lambda) D_{c(f,g)}.
/// Path integrals: along p from (0, q), then along q from (0, 0) at p = 0.
inline SPoly hlambda_cocycle(const SPoly& f, const SPoly& g, const ContactContext& ctx) {
  std::size_t p = ctx.p()[0], q = ctx.q()[0], xi = ctx.xi()[0], eta = ctx.eta()[0];
  return detail::by_parity(f, SPoly(ctx.spec()), [&](const SPoly& a, Parity par) {
    Rational s = sign_of(par);
    SPoly r = -(pder(a, p) * formal_integral(pder(pder(g, xi), eta), p));
    r += pder(g, p) * formal_integral(pder(pder(a, xi), eta), p);
    SPoly along_p = formal_integral(pder(a, p) * pder(g, xi) * s - pder(a, xi) * pder(g, p), p);
    SPoly along_q = formal_integral(at_zero(pder(a, q) * pder(g, xi) * s - pder(a, xi) * pder(g, q), p), q);
    r += pder(along_p + along_q, eta);
    SPoly at0 = at_zero(at_zero(pder(a, xi) * pder(g, eta) * s + pder(a, eta) * pder(g, xi), p), q);
    r += ctx.var(xi) * pder(at0, xi);
    return r;
  });
}

inline Cocycle2 hlambda_cocycle_of(const ContactContext& ctx) {
  return {"c", Parity::Even, [ctx](const SPoly& f, const SPoly& g) { return hlambda_cocycle(f, g, ctx); }};
}

/// Poisson bracket on h(2|2) = po(2|2) / constants: constants are dropped.
inline Bracket hamiltonian_bracket_of(const ContactContext& ctx) {
  return {"poisson/const", Parity::Even, [ctx](const SPoly& f, const SPoly& g) {
            SPoly r = poisson(f, g, ctx);
            return r.filter([](const Monomial& m) { return !m.is_one(); });
          }};
}

/// Cocycle c on h(2|2), dropping constants as well.
inline Cocycle2 hamiltonian_cocycle_of(const ContactContext& ctx) {
  return {"c/const", Parity::Even, [ctx](const SPoly& f, const SPoly& g) {
            return hlambda_cocycle(f, g, ctx).filter([](const Monomial& m) { return !m.is_one(); });
          }};
}

// ---------------------------------------------------------------------------
// Grozman's twist

/// f vol^weight, with f a polyvector written in checked coordinates
/// (q = even coordinates, xi = their checked partners).
struct TwistedPoly {
  SPoly f;
  Rational weight;
};

/// ((nu-1)(mu+nu-1) Div X . Y + (-1)^{p(X)} (mu-1)(mu+nu-1) X Div Y - (mu-1)(nu-1) Div(XY)) vol^{mu+nu}
inline TwistedPoly grozman_bracket(const TwistedPoly& X, const TwistedPoly& Y, const PericontactContext& ctx) {
  const Rational& mu = X.weight;
  const Rational& nu = Y.weight;
  Rational s = mu + nu - 1;
  SPoly r = detail::by_parity(X.f, SPoly(ctx.spec()), [&](const SPoly& x, Parity p) {
    SPoly t = (odd_laplacian(x, ctx) * Y.f) * Rational((nu - 1) * s);
    t += (x * odd_laplacian(Y.f, ctx)) * Rational((mu - 1) * s * sign_of(p));
    t -= odd_laplacian(x * Y.f, ctx) * Rational((mu - 1) * (nu - 1));
    return t;
  });
  return {r, Rational(mu + nu)};
}

/// t^e P: a polynomial P in the variables of a Buttin space with one extra pair
/// (t, t_check) = (q_{n+1}, xi_{n+1}), times a rational power of t.
struct TPower {
  SPoly poly;
  Rational t_exponent;
};

/// t^{-lambda} f + 1/(lambda - 1) t^{-lambda+1} t_check Delta f, in the space
/// `ext` with one more coordinate pair than `ctx`.
inline TPower grozman_embed(const SPoly& f, const Rational& lambda, const PericontactContext& ctx,
                            const PericontactContext& ext) {
  if (lambda == 1) throw AlgebraError("the embedding is undefined at lambda = 1");
  if (ext.n() != ctx.n() + 1) throw AlgebraError("target must have one more coordinate pair");
  SPoly t = ext.var(ext.q().back()), tc = ext.var(ext.xi().back());
  SPoly body = transfer(f, ext.spec());
  body += t * tc * transfer(odd_laplacian(f, ctx), ext.spec()) * Rational(1 / (lambda - 1));
  return {body, Rational(-lambda)};
}

/// Buttin bracket of t-power twisted functions in `ext` (t = q_{n+1}).
inline TPower twisted_buttin(const TPower& F, const TPower& G, const PericontactContext& ext) {
  std::size_t t = ext.q().back(), tc = ext.xi().back();
  SPoly tv = ext.var(t);
  // d/dt (t^e P) = t^{e-1} (e P + t dP/dt)
  auto dt = [&](const TPower& X) { return X.poly * X.t_exponent + tv * pder(X.poly, t); };
  SPoly r = detail::by_parity(F.poly, SPoly(ext.spec()), [&](const SPoly& a, Parity p) {
    Rational s = sign_of(p);
    SPoly v(ext.spec());
    for (int i = 0; i + 1 < ext.n(); ++i) {
      v += pder(a, ext.q()[i]) * pder(G.poly, ext.xi()[i]);
      v += pder(a, ext.xi()[i]) * pder(G.poly, ext.q()[i]) * s;
    }
    SPoly res = tv * v;
    TPower A{a, F.t_exponent};
    res += dt(A) * pder(G.poly, tc);
    res += pder(a, tc) * dt(G) * s;
    return res;
  });
  return {r, Rational(F.t_exponent + G.t_exponent - 1)};
}

/// t^e1 P1 == t^e2 P2 as Laurent-type expressions.
inline bool tpower_equal(const TPower& x, const TPower& y, const PericontactContext& ext) {
  Rational d = x.t_exponent - y.t_exponent;
  if (x.poly.is_zero() || y.poly.is_zero()) return x.poly.is_zero() && y.poly.is_zero();
  if (d.get_den() != 1) return false;
  long k = d.get_num().get_si();
  SPoly t = ext.var(ext.q().back());
  SPoly a = x.poly, b = y.poly;
  for (long i = 0; i < k; ++i) a = a * t;
  for (long i = 0; i < -k; ++i) b = b * t;
  return a == b;
}


/// Odd Laplacian of t^e P in `ext`: t^{e-1} (t Delta P + e dP/dt_check).
inline TPower tpower_laplacian(const TPower& X, const PericontactContext& ext) {
  SPoly tv = ext.var(ext.q().back());
  SPoly r = tv * odd_laplacian(X.poly, ext) + pder(X.poly, ext.xi().back()) * X.t_exponent;
  return {r, Rational(X.t_exponent - 1)};
}

/// The scalar s with [embed(X, mu), embed(Y, nu)] = s embed(grozman_bracket(X, Y)),
/// namely (-1)^{p(X)+1} / ((mu - 1)(nu - 1)).
inline Rational grozman_transport_factor(Parity px, const Rational& mu, const Rational& nu) {
  return Rational(Rational(-sign_of(px)) / ((mu - 1) * (nu - 1)));
}

/// Difference of the two sides of the relation above, for parity-homogeneous X.
inline TPower grozman_homomorphism_defect(const TwistedPoly& X, const TwistedPoly& Y, const PericontactContext& ctx,
                                          const PericontactContext& ext) {
  TPower lhs = twisted_buttin(grozman_embed(X.f, X.weight, ctx, ext), grozman_embed(Y.f, Y.weight, ctx, ext), ext);
  TwistedPoly z = grozman_bracket(X, Y, ctx);
  TPower rhs = grozman_embed(z.f, z.weight, ctx, ext);
  // lhs carries t^{e - 1} times a multiple of t
  SPoly r = ext.var(ext.q().back()) * rhs.poly * grozman_transport_factor(X.f.parity(), X.weight, Y.weight);
  return {lhs.poly - r, lhs.t_exponent};
}

// ---------------------------------------------------------------------------
// Dimension tables

enum class DimAlgebra { BLambda, HLambda22, Le, Sm, Sle, Sb };

inline std::string dim_algebra_name(DimAlgebra a) {
  switch (a) {
    case DimAlgebra::BLambda: return "b_lambda";
    case DimAlgebra::HLambda22: return "h_lambda";
    case DimAlgebra::Le: return "le";
    case DimAlgebra::Sm: return "sm";
    case DimAlgebra::Sle: return "sle";
    case DimAlgebra::Sb: return "sb";
  }
  return "?";
}

inline DimAlgebra parse_dim_algebra(const std::string& s) {
  for (auto a : {DimAlgebra::BLambda, DimAlgebra::HLambda22, DimAlgebra::Le, DimAlgebra::Sm, DimAlgebra::Sle,
                 DimAlgebra::Sb})
    if (dim_algebra_name(a) == s) return a;
  if (s == "b") return DimAlgebra::BLambda;
  throw AlgebraError("unknown algebra: " + s);
}

struct DimRow {
  int degree = 0;
  int even = 0, odd = 0;
  friend bool operator==(const DimRow&, const DimRow&) = default;
};

struct DimTable {
  std::string algebra;
  std::vector<DimRow> rows;
  bool same_dims(const DimTable& o) const { return rows == o.rows; }
};

namespace detail {

inline DimTable table_from_basis(const std::string& name, const GradedBasis& basis, int offset, Parity shift,
                                 int dmin, int dmax) {
  DimTable t;
  t.algebra = name;
  for (int d = dmin; d <= dmax; ++d) {
    auto [e, o] = basis.dims(d + offset, shift);
    t.rows.push_back({d, e, o});
  }
  return t;
}

/// tau-free functions of weight in [wmin, wmax] killed by `op`.
template <class Op>
GradedBasis buttin_kernel(const PericontactContext& ctx, int wmin, int wmax, Op op) {
  return kernel_basis(ctx.spec(), ctx.qxi(), pericontact_gradings(ctx, PericontactGrading::Standard), wmin, wmax, op);
}

}  // namespace detail

/// Dimensions (even|odd) of the components of degree dmin..dmax, computed from the
/// defining equations. Degrees are those of the vector-field realization:
/// weight(f) - weight(tau) for b_lambda and its relatives, deg f - 2 for h(2|2).
/// `params` is used by b_lambda and h_lambda (hbar = 2 at infinity); `grading` selects
/// (n) or (n;n) for b_lambda.
inline DimTable graded_dim_table(DimAlgebra alg, int n, const DeformParams& params, PericontactGrading grading,
                                 int dmin, int dmax) {
  if (alg == DimAlgebra::HLambda22) {
    ContactContext ctx = h22_context();
    const Rational hbar = params.is_infinite() ? Rational(2) : hbar_of_lambda(params.lambda(n));
    DimTable t;
    t.algebra = "h_lambda(2|2)";
    for (int d = dmin; d <= dmax; ++d) {
      DimRow row{d, 0, 0};
      if (d + 2 >= 1) {
        for (Parity par : {Parity::Even, Parity::Odd}) {
          // rank of f -> D_f on functions of degree d + 2
          Indexer<std::pair<std::size_t, Monomial>> idx;
          EchelonBasis eb;
          int rank = 0;
          for (const auto& m : monomials_of_weight(*ctx.spec(), ctx.spec()->indeterminates(), ctx.weights(), d + 2)) {
            if (m.parity(*ctx.spec()) != par) continue;
            SPoly f = SPoly::monomial(ctx.spec(), m);
            VectorField D = H_field(f, ctx) + W_field(f, ctx) * hbar;
            std::map<std::uint32_t, Rational> v;
            for (std::size_t i = 0; i < D.coeffs().size(); ++i)
              for (const auto& [mm, c] : D.coeffs()[i].terms()) v[idx({i, mm})] = c;
            if (eb.insert(to_sparse(v))) ++rank;
          }
          (par == Parity::Even ? row.even : row.odd) = rank;
        }
      }
      t.rows.push_back(row);
    }
    return t;
  }
  PericontactContext ctx(n);
  const int wmax = dmax + 2;
  switch (alg) {
    case DimAlgebra::BLambda: {
      auto [a, b] = params.ab(n);
      int off = grading == PericontactGrading::Standard ? 2 : 1;
      auto basis = b_ab_basis(ctx, a, b, 0, dmax + off, grading);
      return detail::table_from_basis("b_" + params.describe(n) + "(" + std::to_string(n) +
                                          (grading == PericontactGrading::Regraded ? ";" + std::to_string(n) : "") + ")",
                                      basis, off, Parity::Odd, dmin, dmax);
    }
    case DimAlgebra::Sm: {
      auto basis = b_ab_basis(ctx, Rational(n), Rational(1), 0, wmax);
      return detail::table_from_basis("sm(" + std::to_string(n) + ")", basis, 2, Parity::Odd, dmin, dmax);
    }
    case DimAlgebra::Le: {
      auto basis = buttin_basis(ctx, 1, wmax);
      return detail::table_from_basis("le(" + std::to_string(n) + ")", basis, 2, Parity::Odd, dmin, dmax);
    }
    case DimAlgebra::Sb:
    case DimAlgebra::Sle: {
      int w0 = alg == DimAlgebra::Sb ? 0 : 1;
      auto basis = detail::buttin_kernel(ctx, w0, wmax, [&](const SPoly& f) { return odd_laplacian(f, ctx); });
      return detail::table_from_basis(dim_algebra_name(alg) + "(" + std::to_string(n) + ")", basis, 2, Parity::Odd,
                                      dmin, dmax);
    }
    default: break;
  }
  throw AlgebraError("unsupported algebra");
}

// ---------------------------------------------------------------------------
// Center and ideals

/// Elements z of weight <= wmax with [z, e] = 0 for every basis element e.
/// The bracket preserves all gradings of the basis, so the center is computed
/// one multidegree at a time.
inline std::vector<SPoly> center_elements(const Bracket& br, const GradedBasis& basis, int wmax) {
  std::map<std::vector<int>, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis.degree(i)[0] <= wmax) comps[basis.degree(i)].push_back(i);
  Bracket cb = cached(br);
  std::vector<SPoly> out;
  for (const auto& [d, idxs] : comps) {
    Indexer<std::pair<std::size_t, Monomial>> rows;
    std::vector<SparseVec> cols;
    for (auto i : idxs) {
      std::map<std::uint32_t, Rational> col;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        SPoly v = cb(basis[i], basis[j]);
        for (const auto& [m, c] : v.terms()) col[rows({j, m})] = c;
      }
      cols.push_back(to_sparse(col));
    }
    for (const auto& v : kernel_of_columns(cols)) {
      SPoly z(basis.spec());
      for (const auto& [k, c] : v) z += basis[idxs[k]] * c;
      out.push_back(z);
    }
  }
  return out;
}

struct IdealDefect {
  std::vector<int> multidegree;
  SPoly missing;  ///< a basis element outside [g, g]
};

/// Components of weight <= wmax not reached by brackets of basis elements.
/// The basis must contain every element whose bracket can land in weight <= wmax.
inline std::vector<IdealDefect> derived_algebra_defects(const Bracket& br, const GradedBasis& basis, int wmax) {
  Bracket cb = cached(br);
  std::map<std::vector<int>, std::vector<SPoly>> spans;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      SPoly v = cb(basis[i], basis[j]);
      if (v.is_zero()) continue;
      int w = deg(v, basis.gradings()[0]);
      if (w > wmax) continue;
      spans[basis.multidegree(v.terms().begin()->first)].push_back(v);
    }
  std::vector<IdealDefect> out;
  std::map<std::vector<int>, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis.degree(i)[0] <= wmax) comps[basis.degree(i)].push_back(i);
  for (const auto& [d, idxs] : comps) {
    auto span = echelon_span(spans[d]);
    if (span.size() == idxs.size()) continue;
    GradedBasis sb(basis.spec(), basis.gradings(), basis.grading_names());
    sb.add_component(span);
    for (auto i : idxs)
      if (!sb.contains(basis[i])) {
        out.push_back({d, basis[i]});
        break;
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// sb(n)

struct PreservationReport {
  std::string bracket;
  std::size_t pairs = 0;
  std::size_t closed = 0;
  std::optional<std::pair<SPoly, SPoly>> witness;  ///< a pair whose bracket is not harmonic
};

/// Checks whether a bracket keeps tau-free harmonic functions of weight <= wmax harmonic.
inline PreservationReport harmonic_preservation(const Bracket& br, const PericontactContext& ctx, int wmax) {
  auto basis = detail::buttin_kernel(ctx, 0, wmax, [&](const SPoly& f) { return odd_laplacian(f, ctx); });
  PreservationReport r;
  r.bracket = br.name;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      ++r.pairs;
      if (odd_laplacian(br(basis[i], basis[j]), ctx).is_zero())
        ++r.closed;
      else if (!r.witness)
        r.witness = std::make_pair(basis[i], basis[j]);
    }
  return r;
}

}  // namespace superlie

#endif  // SUPERLIE_DEFORM_HPP
