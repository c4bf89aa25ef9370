#ifndef SUPERLIE_FIELDS_HPP
#define SUPERLIE_FIELDS_HPP

#include <array>
#include <optional>
#include <vector>

#include "superlie/superpoly.hpp"

namespace superlie {

/// Polynomial vector field sum_x D_x d/dx, coefficients written on the left.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(VarSpecPtr spec) : spec_(std::move(spec)), coeffs_(spec_->size(), SPoly(spec_)) {}

  static VectorField partial(VarSpecPtr spec, std::size_t var) {
    VectorField d(spec);
    d.set(var, SPoly::constant(spec, 1));
    return d;
  }
  static VectorField partial(VarSpecPtr spec, std::string_view name) {
    std::size_t i = spec->index(name);
    return partial(std::move(spec), i);
  }
  /// f * d/dx
  static VectorField term(const SPoly& f, std::size_t var) {
    VectorField d(f.spec());
    d.set(var, f);
    return d;
  }

  const VarSpecPtr& spec() const { return spec_; }
  const SPoly& coeff(std::size_t var) const { return coeffs_[var]; }
  const std::vector<SPoly>& coeffs() const { return coeffs_; }
  void set(std::size_t var, SPoly f) {
    if (spec_->is_param(var)) throw AlgebraError("vector field component along a parameter");
    coeffs_[var] = std::move(f);
  }
  void add(std::size_t var, const SPoly& f) {
    if (spec_->is_param(var) && !f.is_zero()) throw AlgebraError("vector field component along a parameter");
    coeffs_[var] += f;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  VectorField& operator+=(const VectorField& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  VectorField& operator-=(const VectorField& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  VectorField& operator*=(const Rational& r) {
    for (auto& c : coeffs_) c *= r;
    return *this;
  }
  VectorField operator-() const {
    VectorField r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const Rational& r) { return a *= r; }
  friend VectorField operator*(const Rational& r, VectorField a) { return a *= r; }
  /// f * D: left multiplication of every coefficient.
  friend VectorField operator*(const SPoly& f, const VectorField& d) {
    VectorField r(d.spec_);
    for (std::size_t i = 0; i < d.coeffs_.size(); ++i) r.coeffs_[i] = f * d.coeffs_[i];
    return r;
  }
  friend bool operator==(const VectorField& a, const VectorField& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.is_zero() && b.is_zero();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
  }

  /// Parity of the term f d/dx is p(f) + p(x).
  std::array<VectorField, 2> parity_components() const {
    std::array<VectorField, 2> out{VectorField(spec_), VectorField(spec_)};
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      auto pc = coeffs_[i].parity_components();
      for (int k = 0; k < 2; ++k) out[bit(parity_of(k) + spec_->parity(i))].coeffs_[i] = pc[k];
    }
    return out;
  }
  std::optional<Parity> parity_if_homogeneous() const {
    auto pc = parity_components();
    if (pc[1].is_zero()) return Parity::Even;
    if (pc[0].is_zero()) return Parity::Odd;
    return std::nullopt;
  }
  Parity parity() const {
    auto p = parity_if_homogeneous();
    if (!p) throw AlgebraError("parity requested for an inhomogeneous field");
    return *p;
  }

  /// Degree with respect to weights: deg(f d/dx) = deg f - w(x).
  std::map<int, VectorField> weight_split(const Weights& w) const {
    std::map<int, VectorField> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (const auto& [m, c] : coeffs_[i].terms()) {
        auto [it, ins] = out.try_emplace(monomial_weight(m, w) - w[i], spec_);
        it->second.coeffs_[i].add_term(m, c);
      }
    return out;
  }

 private:
  void check(const VectorField& o) {
    if (!spec_) {
      *this = VectorField(o.spec_);
    } else if (o.spec_ && !same_spec(spec_, o.spec_)) {
      throw AlgebraError("VarSpec mismatch in field sum");
    }
  }

  VarSpecPtr spec_;
  std::vector<SPoly> coeffs_;
};

inline SPoly apply(const VectorField& d, const SPoly& f) {
  SPoly r(f.spec());
  for (std::size_t i = 0; i < d.coeffs().size(); ++i) {
    if (d.coeff(i).is_zero()) continue;
    SPoly df = pder(f, i);
    if (!df.is_zero()) r += d.coeff(i) * df;
  }
  return r;
}

/// Supercommutator, extended bilinearly to inhomogeneous arguments.
inline VectorField bracket(const VectorField& a, const VectorField& b) {
  VectorField r(a.spec());
  auto pa = a.parity_components();
  auto pb = b.parity_components();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (pa[i].is_zero() || pb[j].is_zero()) continue;
      int s = (i & j) ? -1 : 1;
      for (std::size_t y = 0; y < r.coeffs().size(); ++y) {
        SPoly c = apply(pa[i], pb[j].coeff(y));
        SPoly d = apply(pb[j], pa[i].coeff(y));
        if (s < 0) c += d;
        else c -= d;
        r.add(y, c);
      }
    }
  return r;
}

/// sum_even d f_i / d u_i + sum_odd (-1)^{p(g_j)} d g_j / d theta_j
inline SPoly divergence(const VectorField& d) {
  SPoly r(d.spec());
  const VarSpec& spec = *d.spec();
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (d.coeff(i).is_zero()) continue;
    if (!spec.is_odd(i)) {
      r += pder(d.coeff(i), i);
    } else {
      auto pc = d.coeff(i).parity_components();
      r += pder(pc[0], i);
      r -= pder(pc[1], i);
    }
  }
  return r;
}

inline bool svect_member(const VectorField& d) { return divergence(d).is_zero(); }

/// Div((1 + lambda theta_1...theta_m) D) = 0, theta the odd indeterminates in
/// declaration order. lambda must make the factor even: odd for m odd.
inline bool svect_deformed_member(const VectorField& d, const SPoly& lambda) {
  const VarSpec& spec = *d.spec();
  SPoly vol = SPoly::constant(d.spec(), 1);
  int m = 0;
  for (auto i : spec.indeterminates())
    if (spec.is_odd(i)) vol *= SPoly::variable(d.spec(), i), ++m;
  if (!lambda.is_zero()) {
    auto p = lambda.parity_if_homogeneous();
    if (!p) throw AlgebraError("deformation parameter must be parity-homogeneous");
    if (*p != parity_of(m)) throw AlgebraError(m % 2 ? "for m odd the deformation parameter must be odd"
                                                     : "for m even the deformation parameter must be even");
  }
  return divergence((SPoly::constant(d.spec(), 1) + lambda * vol) * d).is_zero();
}

/// Differential 1-form sum_x a_x dx with coefficients on the left.
class OneForm {
 public:
  OneForm() = default;
  explicit OneForm(VarSpecPtr spec) : spec_(std::move(spec)), coeffs_(spec_->size(), SPoly(spec_)) {}

  const VarSpecPtr& spec() const { return spec_; }
  const SPoly& coeff(std::size_t var) const { return coeffs_[var]; }
  void add(std::size_t var, const SPoly& f) { coeffs_[var] += f; }
  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }
  friend OneForm operator-(OneForm a, const OneForm& b) {
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
  }
  friend OneForm operator*(const SPoly& f, const OneForm& a) {
    OneForm r(a.spec_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = f * a.coeffs_[i];
    return r;
  }
  friend bool operator==(const OneForm& a, const OneForm& b) { return (a - b).is_zero(); }

 private:
  VarSpecPtr spec_;
  std::vector<SPoly> coeffs_;
};

/// Sign conventions for differential forms.
/// exterior: p(dx) = p(x) + 1 and d is odd; otherwise p(dx) = p(x) and d is even.
/// sigma: sign in front of the sum part of the contact and pericontact forms.
struct FormConvention {
  bool exterior = true;
  int sigma = -1;
  bool operator==(const FormConvention&) const = default;
};

/// Convention selected by the Lie-derivative calibration (see tests).
inline constexpr FormConvention kCalibratedConvention{true, -1};

inline Parity differential_parity(const VarSpec& spec, std::size_t var, const FormConvention& conv) {
  return spec.parity(var) + (conv.exterior ? Parity::Odd : Parity::Even);
}

/// dg = sum_j dx_j (d g / d x_j), rewritten with coefficients on the left.
inline OneForm differential(const SPoly& g, const FormConvention& conv) {
  OneForm r(g.spec());
  const VarSpec& spec = *g.spec();
  for (std::size_t j = 0; j < spec.size(); ++j) {
    if (spec.is_param(j)) continue;
    SPoly dg = pder(g, j);
    if (dg.is_zero()) continue;
    Parity pdx = differential_parity(spec, j, conv);
    auto pc = dg.parity_components();
    r.add(j, pc[0]);
    if (pdx == Parity::Odd) r.add(j, -pc[1]);
    else r.add(j, pc[1]);
  }
  return r;
}

/// L_D(a dx) = D(a) dx + (-1)^{p(D)p(a)} a L_D(dx),  L_D(dx) = (-1)^{p(D) p(d)} d(D x).
inline OneForm lie_derivative(const VectorField& d, const OneForm& alpha, const FormConvention& conv) {
  OneForm r(alpha.spec());
  auto dc = d.parity_components();
  const VarSpec& spec = *alpha.spec();
  for (int pd = 0; pd < 2; ++pd) {
    const VectorField& D = dc[pd];
    if (D.is_zero()) continue;
    for (std::size_t k = 0; k < spec.size(); ++k) {
      const SPoly& a = alpha.coeff(k);
      if (a.is_zero()) continue;
      r.add(k, apply(D, a));
      OneForm ldx = differential(D.coeff(k), conv);
      if (conv.exterior && pd) ldx = SPoly::constant(alpha.spec(), -1) * ldx;
      auto pa = a.parity_components();
      for (int q = 0; q < 2; ++q) {
        if (pa[q].is_zero()) continue;
        int s = (pd & q) ? -1 : 1;
        OneForm t = pa[q] * ldx;
        for (std::size_t j = 0; j < spec.size(); ++j)
          if (!t.coeff(j).is_zero()) r.add(j, s < 0 ? -t.coeff(j) : t.coeff(j));
      }
    }
  }
  return r;
}

/// Returns f with L_D alpha = f alpha when it exists; `lead` must be a variable
/// whose coefficient in alpha is 1.
inline std::optional<SPoly> conformal_factor(const VectorField& d, const OneForm& alpha, std::size_t lead,
                                             const FormConvention& conv) {
  OneForm l = lie_derivative(d, alpha, conv);
  if (!(alpha.coeff(lead) == SPoly::constant(alpha.spec(), 1)))
    throw AlgebraError("lead coefficient of the form must be 1");
  SPoly f = l.coeff(lead);
  if (l == f * alpha) return f;
  return std::nullopt;
}

}  // namespace superlie

#endif  // SUPERLIE_FIELDS_HPP
