#ifndef SUPERLIE_SUPERPOLY_HPP
#define SUPERLIE_SUPERPOLY_HPP

#include <functional>
#include <map>
#include <vector>

#include "superlie/spoly.hpp"

namespace superlie {

/// Left partial derivative: the variable is moved to the front before removal.
inline SPoly pder(const SPoly& f, std::size_t var) {
  SPoly r(f.spec());
  if (f.is_zero()) return r;
  const VarSpec& spec = *f.spec();
  bool odd = spec.is_odd(var);
  std::uint32_t below = (1u << var) - 1;
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial mm = m;
    mm[var] -= 1;
    if (odd) {
      int s = sign_pow(std::popcount(m.odd_bits(spec) & below));
      r.add_term(mm, s < 0 ? Rational(-c) : c);
    } else {
      r.add_term(mm, c * m[var]);
    }
  }
  return r;
}
inline SPoly pder(const SPoly& f, std::string_view name) { return pder(f, f.spec()->index(name)); }

/// Right partial derivative f <- d/dx.
inline SPoly pder_right(const SPoly& f, std::size_t var) {
  SPoly r(f.spec());
  if (f.is_zero()) return r;
  const VarSpec& spec = *f.spec();
  bool odd = spec.is_odd(var);
  std::uint32_t above = ~((2u << var) - 1);
  if (var == 31) above = 0;
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial mm = m;
    mm[var] -= 1;
    if (odd) {
      int s = sign_pow(std::popcount(m.odd_bits(spec) & above));
      r.add_term(mm, s < 0 ? Rational(-c) : c);
    } else {
      r.add_term(mm, c * m[var]);
    }
  }
  return r;
}

using Weights = std::vector<int>;

/// Weight 1 on every indeterminate and 0 on parameters.
inline Weights standard_weights(const VarSpec& spec) {
  Weights w(spec.size(), 0);
  for (std::size_t i = 0; i < spec.size(); ++i) w[i] = spec.is_param(i) ? 0 : 1;
  return w;
}

inline int monomial_weight(const Monomial& m, const Weights& w) {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += w[i] * m[i];
  return d;
}

/// Sum over the listed variables of y d/dy.
inline SPoly euler(const SPoly& f, const std::vector<std::size_t>& vars) {
  Weights w(f.spec() ? f.spec()->size() : 0, 0);
  for (auto v : vars) {
    if (f.spec()->is_param(v)) throw AlgebraError("Euler operator over a parameter");
    w[v] = 1;
  }
  return f.map_coefficients([&](const Monomial& m, const Rational& c) {
    return Rational(c * monomial_weight(m, w));
  });
}

/// Multiplies each term by (a*weight + b).
inline SPoly weight_affine(const SPoly& f, const Weights& w, const Rational& a, const Rational& b) {
  return f.map_coefficients([&](const Monomial& m, const Rational& c) {
    return Rational(c * (a * monomial_weight(m, w) + b));
  });
}

inline std::map<int, SPoly> weight_split(const SPoly& f, const Weights& w) {
  std::map<int, SPoly> out;
  for (const auto& [m, c] : f.terms()) {
    auto [it, ins] = out.try_emplace(monomial_weight(m, w), f.spec());
    it->second.add_term(m, c);
  }
  return out;
}

/// Weighted degree of a homogeneous element; throws otherwise. Zero has degree 0.
inline int deg(const SPoly& f, const Weights& w) {
  std::optional<int> d;
  for (const auto& [m, c] : f.terms()) {
    int e = monomial_weight(m, w);
    if (d && *d != e) throw AlgebraError("degree requested for an inhomogeneous element");
    d = e;
  }
  return d.value_or(0);
}

/// Weights counting odd indeterminates only.
inline Weights odd_indeterminate_weights(const VarSpec& spec) {
  Weights w(spec.size(), 0);
  for (std::size_t i = 0; i < spec.size(); ++i) w[i] = (spec.is_odd(i) && !spec.is_param(i)) ? 1 : 0;
  return w;
}

inline std::map<int, SPoly> odd_degree_split(const SPoly& f) {
  return weight_split(f, odd_indeterminate_weights(*f.spec()));
}
inline int d_od(const SPoly& f) { return deg(f, odd_indeterminate_weights(*f.spec())); }

/// Berezin integral: coefficient of the top monomial odd_vars[0]*...*odd_vars[k-1],
/// placed on the left, in the remaining factors.
inline SPoly berezin_integral(const SPoly& f, const std::vector<std::size_t>& odd_vars) {
  SPoly r(f.spec());
  const VarSpec& spec = *f.spec();
  std::uint32_t top = 0;
  for (auto v : odd_vars) {
    if (!spec.is_odd(v)) throw AlgebraError("Berezin integral over an even variable");
    if (top & (1u << v)) throw AlgebraError("repeated variable in Berezin integral");
    top |= (1u << v);
  }
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t ob = m.odd_bits(spec);
    if ((ob & top) != top) continue;
    // sequence: top vars in given order, then rest in canonical order; count inversions
    std::vector<int> seq;
    for (auto v : odd_vars) seq.push_back(static_cast<int>(v));
    for (std::uint32_t x = ob & ~top; x; x &= x - 1) seq.push_back(std::countr_zero(x));
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
      for (std::size_t j = i + 1; j < seq.size(); ++j)
        if (seq[i] > seq[j]) ++inv;
    Monomial rest = m;
    for (auto v : odd_vars) rest[v] = 0;
    r.add_term(rest, inv & 1 ? Rational(-c) : c);
  }
  return r;
}

/// Antiderivative in an even variable vanishing at var = 0.
inline SPoly formal_integral(const SPoly& f, std::size_t var) {
  const VarSpec& spec = *f.spec();
  if (spec.is_odd(var)) throw AlgebraError("formal integral over an odd variable");
  SPoly r(f.spec());
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    if (spec[var].nilpotent && m[var] + 1 >= spec[var].nilpotent) continue;
    mm[var] += 1;
    r.add_term(mm, c / Rational(mm[var]));
  }
  return r;
}

/// Sets a variable to zero.
inline SPoly at_zero(const SPoly& f, std::size_t var) {
  return f.filter([&](const Monomial& m) { return m[var] == 0; });
}

/// Substitutes var := g (g even if var is even). Odd var requires g odd.
inline SPoly substitute(const SPoly& f, std::size_t var, const SPoly& g) {
  const VarSpec& spec = *f.spec();
  if (!g.is_zero() && g.parity() != spec.parity(var)) throw AlgebraError("substitution changes parity");
  SPoly r(f.spec());
  std::uint32_t below = (1u << var) - 1;
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    int e = m[var];
    rest[var] = 0;
    SPoly term = SPoly::monomial(f.spec(), rest, c);
    if (e == 0) {
      r += term;
      continue;
    }
    SPoly power = SPoly::constant(f.spec(), 1);
    for (int k = 0; k < e; ++k) power = power * g;
    // x^e sits after the odd factors with smaller index: move it to the front first
    int s = 1;
    if (spec.is_odd(var)) s = sign_pow(std::popcount(m.odd_bits(spec) & below));
    r += (power * term) * Rational(s);
  }
  return r;
}

/// All monomials in `vars` (indeterminates) of weighted degree exactly `w`.
/// Even variables of weight <= 0 are rejected since the space would be infinite.
inline std::vector<Monomial> monomials_of_weight(const VarSpec& spec, const std::vector<std::size_t>& vars,
                                                 const Weights& weights, int w) {
  for (auto v : vars)
    if (!spec.is_odd(v) && weights[v] <= 0 && !spec[v].nilpotent)
      throw AlgebraError("non-positive weight on an even variable");
  std::vector<Monomial> out;
  // smallest contribution the remaining variables can still add
  std::vector<int> min_tail(vars.size() + 1, 0);
  for (std::size_t k = vars.size(); k-- > 0;) {
    int wv = weights[vars[k]];
    int maxe = spec.is_odd(vars[k]) ? 1 : (spec[vars[k]].nilpotent ? spec[vars[k]].nilpotent - 1 : 0);
    min_tail[k] = min_tail[k + 1] + (wv < 0 ? wv * maxe : 0);
  }
  Monomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int rem) {
    if (k == vars.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    std::size_t v = vars[k];
    int maxe = spec.is_odd(v) ? 1 : (spec[v].nilpotent ? spec[v].nilpotent - 1 : 255);
    int wv = weights[v];
    for (int e = 0; e <= maxe; ++e) {
      if (wv > 0 && e * wv + min_tail[k + 1] > rem) break;
      cur[v] = static_cast<std::uint8_t>(e);
      rec(k + 1, rem - e * wv);
    }
    cur[v] = 0;
  };
  rec(0, w);
  return out;
}

/// Monomials of total degree <= d in `vars`.
inline std::vector<Monomial> monomials_up_to(const VarSpec& spec, const std::vector<std::size_t>& vars, int d) {
  Weights w(spec.size(), 0);
  for (auto v : vars) w[v] = 1;
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) {
    auto part = monomials_of_weight(spec, vars, w, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Re-expresses f over another VarSpec, matching variables by name.
inline SPoly transfer(const SPoly& f, const VarSpecPtr& target) {
  const VarSpec& src = *f.spec();
  SPoly r(target);
  for (const auto& [m, c] : f.terms()) {
    SPoly t = SPoly::constant(target, c);
    for (std::size_t i = 0; i < src.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t = t * SPoly::variable(target, target->index(src[i].name));
    r += t;
  }
  return r;
}

}  // namespace superlie

#endif  // SUPERLIE_SUPERPOLY_HPP
