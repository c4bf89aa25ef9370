#ifndef SUPERLIE_GENFUN_HPP
#define SUPERLIE_GENFUN_HPP

#include <string>
#include <vector>

#include "superlie/fields.hpp"

namespace superlie {

/// Odd coordinates of the contact space: theta_1..theta_m, or
/// xi_1..xi_k, eta_1..eta_k (+ theta when m = 2k+1).
enum class ContactVariant { Theta, XiEta };

/// Coordinates t, p_1..p_n, q_1..q_n and the odd block on a (2n+1|m) space.
class ContactContext {
 public:
  ContactContext(int n, int m, ContactVariant variant, const std::vector<VarEntry>& params = {},
                 bool with_t = true)
      : n_(n), m_(m), variant_(variant), with_t_(with_t) {
    if (n < 0 || m < 0) throw AlgebraError("negative dimension");
    VarSpecBuilder b;
    if (with_t) b.even("t");
    for (int i = 1; i <= n; ++i) b.even("p" + std::to_string(i));
    for (int i = 1; i <= n; ++i) b.even("q" + std::to_string(i));
    if (variant == ContactVariant::Theta) {
      for (int j = 1; j <= m; ++j) b.odd("theta" + std::to_string(j));
    } else {
      int k = m / 2;
      for (int j = 1; j <= k; ++j) b.odd("xi" + std::to_string(j));
      for (int j = 1; j <= k; ++j) b.odd("eta" + std::to_string(j));
      if (m % 2) b.odd("theta");
    }
    for (const auto& e : params) b.entry(e);
    spec_ = b.build();
    std::size_t o = with_t ? 1 : 0;
    t_ = with_t ? 0 : kNoVar;
    for (int i = 0; i < n; ++i) p_.push_back(o + i), q_.push_back(o + n + i);
    std::size_t base = o + 2 * n;
    if (variant == ContactVariant::Theta) {
      for (int j = 0; j < m; ++j) theta_.push_back(base + j);
    } else {
      int k = m / 2;
      for (int j = 0; j < k; ++j) xi_.push_back(base + j);
      for (int j = 0; j < k; ++j) eta_.push_back(base + k + j);
      if (m % 2) theta_.push_back(base + 2 * k);
    }
  }

  /// The symplectic (2n|m) space without t, home of the Poisson bracket.
  static ContactContext symplectic(int n, int m, ContactVariant variant, const std::vector<VarEntry>& params = {}) {
    return ContactContext(n, m, variant, params, false);
  }

  static constexpr std::size_t kNoVar = static_cast<std::size_t>(-1);

  int n() const { return n_; }
  int m() const { return m_; }
  ContactVariant variant() const { return variant_; }
  const VarSpecPtr& spec() const { return spec_; }
  bool has_t() const { return with_t_; }
  std::size_t t() const {
    if (!with_t_) throw AlgebraError("symplectic context has no t");
    return t_;
  }
  const std::vector<std::size_t>& p() const { return p_; }
  const std::vector<std::size_t>& q() const { return q_; }
  const std::vector<std::size_t>& theta() const { return theta_; }
  const std::vector<std::size_t>& xi() const { return xi_; }
  const std::vector<std::size_t>& eta() const { return eta_; }

  /// All indeterminates except t.
  std::vector<std::size_t> euler_vars() const {
    std::vector<std::size_t> v;
    for (auto i : spec_->indeterminates())
      if (i != t_) v.push_back(i);
    return v;
  }
  /// Weights: t has 2, the rest 1.
  Weights weights() const {
    Weights w = standard_weights(*spec_);
    if (with_t_) w[t_] = 2;
    return w;
  }
  SPoly var(std::size_t i) const { return SPoly::variable(spec_, i); }
  SPoly one() const { return SPoly::constant(spec_, 1); }

 private:
  int n_, m_;
  ContactVariant variant_;
  bool with_t_ = true;
  VarSpecPtr spec_;
  std::size_t t_ = 0;
  std::vector<std::size_t> p_, q_, theta_, xi_, eta_;
};

/// Coordinates q_1..q_n (even), xi_1..xi_n (odd), tau (odd) on an (n|n+1) space.
class PericontactContext {
 public:
  explicit PericontactContext(int n, const std::vector<VarEntry>& params = {}) : n_(n) {
    if (n < 0) throw AlgebraError("negative dimension");
    VarSpecBuilder b;
    for (int i = 1; i <= n; ++i) b.even("q" + std::to_string(i));
    for (int i = 1; i <= n; ++i) b.odd("xi" + std::to_string(i));
    b.odd("tau");
    for (const auto& e : params) b.entry(e);
    spec_ = b.build();
    for (int i = 0; i < n; ++i) q_.push_back(i), xi_.push_back(n + i);
    tau_ = 2 * n;
  }

  int n() const { return n_; }
  const VarSpecPtr& spec() const { return spec_; }
  const std::vector<std::size_t>& q() const { return q_; }
  const std::vector<std::size_t>& xi() const { return xi_; }
  std::size_t tau() const { return tau_; }
  std::vector<std::size_t> qxi() const {
    std::vector<std::size_t> v = q_;
    v.insert(v.end(), xi_.begin(), xi_.end());
    return v;
  }
  /// All indeterminates except tau.
  std::vector<std::size_t> euler_vars() const { return qxi(); }
  /// Standard weights: tau has 2, q and xi have 1.
  Weights weights() const {
    Weights w = standard_weights(*spec_);
    w[tau_] = 2;
    return w;
  }
  SPoly var(std::size_t i) const { return SPoly::variable(spec_, i); }
  SPoly one() const { return SPoly::constant(spec_, 1); }

 private:
  int n_;
  VarSpecPtr spec_;
  std::vector<std::size_t> q_, xi_;
  std::size_t tau_ = 0;
};

namespace detail {

/// Applies `op(component, parity)` to each parity component of f and sums.
template <class R, class Op>
R by_parity(const SPoly& f, R zero, Op op) {
  auto pc = f.parity_components();
  R r = zero;
  for (int k = 0; k < 2; ++k)
    if (!pc[k].is_zero()) r += op(pc[k], parity_of(k));
  return r;
}

/// (2 - E) f
inline SPoly two_minus_euler(const SPoly& f, const std::vector<std::size_t>& vars) {
  return SPoly(f) * Rational(2) - euler(f, vars);
}

}  // namespace detail

/// Hamiltonian field H_f.
inline VectorField H_field(const SPoly& f, const ContactContext& ctx) {
  return detail::by_parity(f, VectorField(ctx.spec()), [&](const SPoly& g, Parity p) {
    VectorField h(ctx.spec());
    for (int i = 0; i < ctx.n(); ++i) {
      h.add(ctx.q()[i], pder(g, ctx.p()[i]));
      h.add(ctx.p()[i], -pder(g, ctx.q()[i]));
    }
    Rational s = -sign_of(p);
    if (ctx.variant() == ContactVariant::Theta) {
      for (auto th : ctx.theta()) h.add(th, pder(g, th) * s);
    } else {
      for (std::size_t j = 0; j < ctx.xi().size(); ++j) {
        h.add(ctx.eta()[j], pder(g, ctx.xi()[j]) * s);
        h.add(ctx.xi()[j], pder(g, ctx.eta()[j]) * s);
      }
      for (auto th : ctx.theta()) h.add(th, pder(g, th) * s);
    }
    return h;
  });
}

/// Contact field K_f = (2 - E) f d/dt - H_f + (d f / d t) E.
inline VectorField K_field(const SPoly& f, const ContactContext& ctx) {
  VectorField k(ctx.spec());
  auto ev = ctx.euler_vars();
  k.add(ctx.t(), detail::two_minus_euler(f, ev));
  k -= H_field(f, ctx);
  SPoly ft = pder(f, ctx.t());
  if (!ft.is_zero())
    for (auto y : ev) k.add(y, ft * ctx.var(y));
  return k;
}

/// Poisson bracket {f, g} = H_f(g) written out in coordinates.
inline SPoly poisson(const SPoly& f, const SPoly& g, const ContactContext& ctx) {
  return detail::by_parity(f, SPoly(ctx.spec()), [&](const SPoly& a, Parity p) {
    SPoly r(ctx.spec());
    for (int i = 0; i < ctx.n(); ++i) {
      r += pder(a, ctx.p()[i]) * pder(g, ctx.q()[i]);
      r -= pder(a, ctx.q()[i]) * pder(g, ctx.p()[i]);
    }
    Rational s = -sign_of(p);
    if (ctx.variant() == ContactVariant::Theta) {
      for (auto th : ctx.theta()) r += (pder(a, th) * pder(g, th)) * s;
    } else {
      for (std::size_t j = 0; j < ctx.xi().size(); ++j) {
        r += (pder(a, ctx.xi()[j]) * pder(g, ctx.eta()[j])) * s;
        r += (pder(a, ctx.eta()[j]) * pder(g, ctx.xi()[j])) * s;
      }
      for (auto th : ctx.theta()) r += (pder(a, th) * pder(g, th)) * s;
    }
    return r;
  });
}

/// Contact bracket {f, g}_{k.b.} = (2 - E) f dg/dt - df/dt (2 - E) g - {f, g}_{P.b.}.
inline SPoly contact_bracket(const SPoly& f, const SPoly& g, const ContactContext& ctx) {
  auto ev = ctx.euler_vars();
  return detail::two_minus_euler(f, ev) * pder(g, ctx.t()) - pder(f, ctx.t()) * detail::two_minus_euler(g, ev) -
         poisson(f, g, ctx);
}

/// Le_f = sum (df/dq_i d/dxi_i + (-1)^{p(f)} df/dxi_i d/dq_i).
inline VectorField Le_field(const SPoly& f, const PericontactContext& ctx) {
  return detail::by_parity(f, VectorField(ctx.spec()), [&](const SPoly& g, Parity p) {
    VectorField h(ctx.spec());
    Rational s = sign_of(p);
    for (int i = 0; i < ctx.n(); ++i) {
      h.add(ctx.xi()[i], pder(g, ctx.q()[i]));
      h.add(ctx.q()[i], pder(g, ctx.xi()[i]) * s);
    }
    return h;
  });
}

/// M_f = (2 - E) f d/dtau - Le_f - (-1)^{p(f)} (df/dtau) E.
inline VectorField M_field(const SPoly& f, const PericontactContext& ctx) {
  VectorField k(ctx.spec());
  auto ev = ctx.euler_vars();
  k.add(ctx.tau(), detail::two_minus_euler(f, ev));
  k -= Le_field(f, ctx);
  k += detail::by_parity(f, VectorField(ctx.spec()), [&](const SPoly& g, Parity p) {
    VectorField e(ctx.spec());
    SPoly gt = pder(g, ctx.tau()) * Rational(-sign_of(p));
    if (!gt.is_zero())
      for (auto y : ev) e.add(y, gt * ctx.var(y));
    return e;
  });
  return k;
}

/// Buttin bracket {f, g}_{B.b.} = sum (df/dq_i dg/dxi_i + (-1)^{p(f)} df/dxi_i dg/dq_i).
inline SPoly buttin(const SPoly& f, const SPoly& g, const PericontactContext& ctx) {
  return detail::by_parity(f, SPoly(ctx.spec()), [&](const SPoly& a, Parity p) {
    SPoly r(ctx.spec());
    Rational s = sign_of(p);
    for (int i = 0; i < ctx.n(); ++i) {
      r += pder(a, ctx.q()[i]) * pder(g, ctx.xi()[i]);
      r += (pder(a, ctx.xi()[i]) * pder(g, ctx.q()[i])) * s;
    }
    return r;
  });
}

/// Pericontact bracket {f, g}_{m.b.} = (2 - E) f dg/dtau + (-1)^{p(f)} df/dtau (2 - E) g - {f, g}_{B.b.}.
inline SPoly pericontact_bracket(const SPoly& f, const SPoly& g, const PericontactContext& ctx) {
  auto ev = ctx.euler_vars();
  SPoly r = detail::two_minus_euler(f, ev) * pder(g, ctx.tau());
  r += detail::by_parity(f, SPoly(ctx.spec()), [&](const SPoly& a, Parity p) {
    return (pder(a, ctx.tau()) * detail::two_minus_euler(g, ev)) * Rational(sign_of(p));
  });
  return r - buttin(f, g, ctx);
}

/// Odd Laplacian sum d^2 / dq_i dxi_i.
inline SPoly odd_laplacian(const SPoly& f, const PericontactContext& ctx) {
  SPoly r(f.spec());
  for (int i = 0; i < ctx.n(); ++i) r += pder(pder(f, ctx.xi()[i]), ctx.q()[i]);
  return r;
}

/// Contact form dt + sigma (sum (p dq - q dp) + sum theta dtheta) (or the xi/eta version).
inline OneForm contact_form(const ContactContext& ctx, const FormConvention& conv = kCalibratedConvention) {
  OneForm a(ctx.spec());
  Rational s = conv.sigma;
  a.add(ctx.t(), ctx.one());
  for (int i = 0; i < ctx.n(); ++i) {
    a.add(ctx.q()[i], ctx.var(ctx.p()[i]) * s);
    a.add(ctx.p()[i], ctx.var(ctx.q()[i]) * Rational(-s));
  }
  if (ctx.variant() == ContactVariant::Theta) {
    for (auto th : ctx.theta()) a.add(th, ctx.var(th) * s);
  } else {
    for (std::size_t j = 0; j < ctx.xi().size(); ++j) {
      a.add(ctx.eta()[j], ctx.var(ctx.xi()[j]) * s);
      a.add(ctx.xi()[j], ctx.var(ctx.eta()[j]) * s);
    }
    for (auto th : ctx.theta()) a.add(th, ctx.var(th) * s);
  }
  return a;
}

/// Pericontact form dtau + sigma sum (xi dq + q dxi).
inline OneForm pericontact_form(const PericontactContext& ctx, const FormConvention& conv = kCalibratedConvention) {
  OneForm a(ctx.spec());
  Rational s = conv.sigma;
  a.add(ctx.tau(), ctx.one());
  for (int i = 0; i < ctx.n(); ++i) {
    a.add(ctx.q()[i], ctx.var(ctx.xi()[i]) * s);
    a.add(ctx.xi()[i], ctx.var(ctx.q()[i]) * s);
  }
  return a;
}

/// Conformal factor of L_D on the contact form when D is a contact field.
inline std::optional<SPoly> contact_factor(const VectorField& d, const ContactContext& ctx,
                                           const FormConvention& conv = kCalibratedConvention) {
  return conformal_factor(d, contact_form(ctx, conv), ctx.t(), conv);
}
inline std::optional<SPoly> pericontact_factor(const VectorField& d, const PericontactContext& ctx,
                                               const FormConvention& conv = kCalibratedConvention) {
  return conformal_factor(d, pericontact_form(ctx, conv), ctx.tau(), conv);
}

/// Expected factor: L_{K_f} alpha = 2 df/dt alpha.
inline SPoly expected_contact_factor(const SPoly& f, const ContactContext& ctx) {
  return pder(f, ctx.t()) * Rational(2);
}
/// Expected factor: L_{M_f} alpha = -(-1)^{p(f)} 2 df/dtau alpha.
inline SPoly expected_pericontact_factor(const SPoly& f, const PericontactContext& ctx) {
  return detail::by_parity(f, SPoly(ctx.spec()), [&](const SPoly& g, Parity p) {
    return pder(g, ctx.tau()) * Rational(-2 * sign_of(p));
  });
}

/// Candidate sign conventions for the Lie-derivative identities
/// L_{K_f} alpha = 2 df/dt alpha and L_{M_f} alpha = -(-1)^{p(f)} 2 df/dtau alpha.
inline std::vector<FormConvention> form_convention_candidates() {
  return {{false, 1}, {false, -1}, {true, 1}, {true, -1}};
}

/// Returns the candidates for which both identities hold on every monomial of
/// degree <= maxdeg in a fixed set of small contexts.
inline std::vector<FormConvention> calibrate_form_convention(int maxdeg = 3) {
  std::vector<ContactContext> contact = {
      ContactContext(1, 0, ContactVariant::Theta), ContactContext(1, 1, ContactVariant::Theta),
      ContactContext(0, 2, ContactVariant::Theta), ContactContext(0, 2, ContactVariant::XiEta),
      ContactContext(1, 3, ContactVariant::XiEta)};
  std::vector<PericontactContext> peri = {PericontactContext(1), PericontactContext(2)};
  std::vector<FormConvention> out;
  for (const auto& conv : form_convention_candidates()) {
    bool ok = true;
    for (const auto& ctx : contact) {
      for (const auto& m : monomials_up_to(*ctx.spec(), ctx.spec()->indeterminates(), maxdeg)) {
        SPoly f = SPoly::monomial(ctx.spec(), m);
        auto fac = contact_factor(K_field(f, ctx), ctx, conv);
        if (!fac || !(*fac == expected_contact_factor(f, ctx))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    for (std::size_t i = 0; ok && i < peri.size(); ++i) {
      const auto& ctx = peri[i];
      for (const auto& m : monomials_up_to(*ctx.spec(), ctx.spec()->indeterminates(), maxdeg)) {
        SPoly f = SPoly::monomial(ctx.spec(), m);
        auto fac = pericontact_factor(M_field(f, ctx), ctx, conv);
        if (!fac || !(*fac == expected_pericontact_factor(f, ctx))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(conv);
  }
  return out;
}

}  // namespace superlie

#endif  // SUPERLIE_GENFUN_HPP
