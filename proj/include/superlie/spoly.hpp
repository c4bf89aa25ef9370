#ifndef SUPERLIE_SPOLY_HPP
#define SUPERLIE_SPOLY_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "superlie/rational.hpp"
#include "superlie/varspec.hpp"

namespace superlie {

/// Exponent vector. Odd factors are implicitly ordered by declaration index.
struct Monomial {
  std::array<std::uint8_t, VarSpec::kMaxVars> exp{};

  std::uint8_t operator[](std::size_t i) const { return exp[i]; }
  std::uint8_t& operator[](std::size_t i) { return exp[i]; }
  auto operator<=>(const Monomial&) const = default;

  std::uint32_t odd_bits(const VarSpec& spec) const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < spec.size(); ++i)
      if (exp[i] && spec.is_odd(i)) mask |= (1u << i);
    return mask;
  }
  Parity parity(const VarSpec& spec) const { return parity_of(std::popcount(odd_bits(spec))); }
  int total_degree(const VarSpec& spec, bool include_params = false) const {
    int d = 0;
    for (std::size_t i = 0; i < spec.size(); ++i)
      if (include_params || !spec.is_param(i)) d += exp[i];
    return d;
  }
  bool is_one() const { return *this == Monomial{}; }
};

/// Product of monomials with the super sign rule. Returns 0 when the result vanishes.
inline int monomial_mul(const VarSpec& spec, const Monomial& a, const Monomial& b, Monomial& out) {
  std::uint32_t oa = a.odd_bits(spec);
  std::uint32_t ob = b.odd_bits(spec);
  if (oa & ob) return 0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    int e = a.exp[i] + b.exp[i];
    int nil = spec[i].nilpotent;
    if (nil && e >= nil) return 0;
    if (e > 255) throw AlgebraError("exponent overflow");
    out.exp[i] = static_cast<std::uint8_t>(e);
  }
  // each odd factor of b passes over the odd factors of a with larger index
  int swaps = 0;
  for (std::uint32_t m = ob; m; m &= m - 1) {
    int j = std::countr_zero(m);
    swaps += std::popcount(oa >> (j + 1));
  }
  return sign_pow(swaps);
}

/// Sparse polynomial in supercommuting generators with exact rational coefficients.
class SPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  SPoly() = default;
  explicit SPoly(VarSpecPtr spec) : spec_(std::move(spec)) {}

  static SPoly constant(VarSpecPtr spec, const Rational& c) {
    SPoly p(std::move(spec));
    p.add_term(Monomial{}, c);
    return p;
  }
  static SPoly monomial(VarSpecPtr spec, const Monomial& m, const Rational& c = 1) {
    SPoly p(std::move(spec));
    p.add_term(m, c);
    return p;
  }
  static SPoly variable(VarSpecPtr spec, std::size_t i) {
    if (i >= spec->size()) throw AlgebraError("variable index out of range");
    Monomial m;
    m[i] = 1;
    return monomial(std::move(spec), m);
  }
  static SPoly variable(VarSpecPtr spec, std::string_view name) {
    std::size_t i = spec->index(name);
    return variable(std::move(spec), i);
  }

  const VarSpecPtr& spec() const { return spec_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coeff(Monomial{}); }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SPoly& operator+=(const SPoly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SPoly& operator-=(const SPoly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  SPoly& operator*=(const Rational& r) {
    if (r == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= r;
    return *this;
  }
  SPoly operator-() const {
    SPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  friend SPoly operator*(SPoly a, const Rational& r) { return a *= r; }
  friend SPoly operator*(const Rational& r, SPoly a) { return a *= r; }

  friend SPoly operator*(const SPoly& a, const SPoly& b) {
    SPoly r(a.spec_ ? a.spec_ : b.spec_);
    if (a.is_zero() || b.is_zero()) return r;
    if (!same_spec(a.spec_, b.spec_)) throw AlgebraError("VarSpec mismatch in product");
    const VarSpec& spec = *r.spec_;
    Monomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        int s = monomial_mul(spec, ma, mb, out);
        if (s == 0) continue;
        Rational c = ca * cb;
        if (s < 0) c = -c;
        r.add_term(out, c);
      }
    return r;
  }
  SPoly& operator*=(const SPoly& o) { return *this = *this * o; }

  friend bool operator==(const SPoly& a, const SPoly& b) {
    if (!a.is_zero() && !b.is_zero() && !same_spec(a.spec_, b.spec_)) return false;
    return a.terms_ == b.terms_;
  }

  std::optional<Parity> parity_if_homogeneous() const {
    std::optional<Parity> p;
    for (const auto& [m, c] : terms_) {
      Parity q = m.parity(*spec_);
      if (p && *p != q) return std::nullopt;
      p = q;
    }
    return p ? p : std::optional<Parity>(Parity::Even);
  }
  /// Parity of a homogeneous element; zero counts as even.
  Parity parity() const {
    auto p = parity_if_homogeneous();
    if (!p) throw AlgebraError("parity requested for an inhomogeneous element");
    return *p;
  }
  /// {even part, odd part}
  std::array<SPoly, 2> parity_components() const {
    std::array<SPoly, 2> out{SPoly(spec_), SPoly(spec_)};
    for (const auto& [m, c] : terms_) out[bit(m.parity(*spec_))].terms_.emplace(m, c);
    return out;
  }

  /// Drops terms whose monomial fails the predicate.
  template <class Pred>
  SPoly filter(Pred keep) const {
    SPoly r(spec_);
    for (const auto& [m, c] : terms_)
      if (keep(m)) r.terms_.emplace(m, c);
    return r;
  }
  template <class F>
  SPoly map_coefficients(F f) const {
    SPoly r(spec_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(m, c));
    return r;
  }

 private:
  void adopt(const SPoly& o) {
    if (!spec_) {
      spec_ = o.spec_;
    } else if (o.spec_ && !o.is_zero() && !same_spec(spec_, o.spec_)) {
      throw AlgebraError("VarSpec mismatch in sum");
    }
  }

  VarSpecPtr spec_;
  Terms terms_;
};

}  // namespace superlie

#endif  // SUPERLIE_SPOLY_HPP
