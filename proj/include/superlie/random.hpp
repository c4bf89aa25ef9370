#ifndef SUPERLIE_RANDOM_HPP
#define SUPERLIE_RANDOM_HPP

#include <optional>
#include <random>
#include <vector>

#include "superlie/superpoly.hpp"

namespace superlie {

/// Seeded generator for random sparse polynomials.
class RandomPolys {
 public:
  explicit RandomPolys(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational coefficient() {
    int num = 0;
    while (num == 0) num = uniform(-5, 5);
    int den = uniform(1, 3);
    return frac(num, den);
  }

  /// Random monomial of total degree <= maxdeg in `vars`.
  Monomial monomial(const VarSpec& spec, const std::vector<std::size_t>& vars, int maxdeg) {
    Monomial m;
    int d = uniform(0, maxdeg);
    for (int k = 0; k < d && !vars.empty(); ++k) {
      std::size_t v = vars[static_cast<std::size_t>(uniform(0, static_cast<int>(vars.size()) - 1))];
      int cap = spec.is_odd(v) ? 2 : spec[v].nilpotent;
      if (cap && m[v] + 1 >= cap) continue;
      m[v] += 1;
    }
    return m;
  }

  /// Random polynomial with up to `terms` terms; restricted to one parity when given.
  SPoly poly(const VarSpecPtr& spec, const std::vector<std::size_t>& vars, int maxdeg, int terms,
             std::optional<Parity> parity = std::nullopt) {
    SPoly f(spec);
    int want = uniform(1, terms);
    int guard = 0;
    while (static_cast<int>(f.size()) < want && guard++ < 50 * terms) {
      Monomial m = monomial(*spec, vars, maxdeg);
      if (parity && m.parity(*spec) != *parity) continue;
      f.add_term(m, coefficient());
    }
    return f;
  }

  Parity parity() { return uniform(0, 1) ? Parity::Odd : Parity::Even; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace superlie

#endif  // SUPERLIE_RANDOM_HPP
