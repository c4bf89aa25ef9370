#ifndef SUPERLIE_LIE_HPP
#define SUPERLIE_LIE_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "superlie/linalg.hpp"
#include "superlie/superpoly.hpp"

namespace superlie {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exp) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

struct MonomialPairHash {
  std::size_t operator()(const std::pair<Monomial, Monomial>& p) const noexcept {
    MonomialHash h;
    return h(p.first) * 31 + h(p.second);
  }
};

using BilinearFn = std::function<SPoly(const SPoly&, const SPoly&)>;

/// A bracket on generating functions. Element parity is polynomial parity plus
/// `shift`, so odd brackets such as the Buttin one use shift = odd.
struct Bracket {
  std::string name;
  Parity shift = Parity::Even;
  BilinearFn fn;

  SPoly operator()(const SPoly& a, const SPoly& b) const { return fn(a, b); }
  Parity element_parity(const SPoly& f) const { return f.parity() + shift; }
};

/// A bilinear map with a declared parity relative to element parity.
struct Cocycle2 {
  std::string name;
  Parity parity = Parity::Even;
  BilinearFn fn;

  SPoly operator()(const SPoly& a, const SPoly& b) const { return fn(a, b); }
};

namespace detail {

inline Rational rsign(Parity a, Parity b) { return Rational(sign_of(a, b)); }

/// Sums op(x_i, y_j) over the parity components of x and y.
template <class Op>
SPoly bilinear_by_parity(const SPoly& x, const SPoly& y, Op op) {
  SPoly r(x.spec() ? x.spec() : y.spec());
  if (x.is_zero() || y.is_zero()) return r;
  auto px = x.parity_components();
  auto py = y.parity_components();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!px[i].is_zero() && !py[j].is_zero()) r += op(px[i], py[j]);
  return r;
}

}  // namespace detail

/// (-1)^{pi(f)pi(h)} [f,[g,h]] + cyclic, for parity-homogeneous f, g, h.
inline SPoly jacobi_defect(const Bracket& b, const SPoly& f, const SPoly& g, const SPoly& h) {
  Parity pf = b.element_parity(f), pg = b.element_parity(g), ph = b.element_parity(h);
  SPoly r = b(f, b(g, h)) * detail::rsign(pf, ph);
  r += b(g, b(h, f)) * detail::rsign(pg, pf);
  r += b(h, b(f, g)) * detail::rsign(ph, pg);
  return r;
}

/// [f,g] + (-1)^{pi(f)pi(g)} [g,f]
inline SPoly antisymmetry_defect(const Bracket& b, const SPoly& f, const SPoly& g) {
  return b(f, g) + b(g, f) * detail::rsign(b.element_parity(f), b.element_parity(g));
}

/// Linear part in the deformation parameter of the Jacobi defect of [,] + hbar C,
/// with hbar of parity `hbar_parity` placed on the left:
/// sum_cyc (-1)^{pi(f)pi(h)} (C(f,[g,h]) + (-1)^{p(hbar)pi(f)} [f,C(g,h)]).
inline SPoly first_order_cocycle_defect(const Cocycle2& c, const Bracket& b, const SPoly& f, const SPoly& g,
                                        const SPoly& h, Parity hbar_parity) {
  auto term = [&](const SPoly& x, const SPoly& y, const SPoly& z) {
    SPoly r = c(x, b(y, z));
    r += b(x, c(y, z)) * detail::rsign(hbar_parity, b.element_parity(x));
    return r;
  };
  Parity pf = b.element_parity(f), pg = b.element_parity(g), ph = b.element_parity(h);
  SPoly r = term(f, g, h) * detail::rsign(pf, ph);
  r += term(g, h, f) * detail::rsign(pg, pf);
  r += term(h, f, g) * detail::rsign(ph, pg);
  return r;
}

/// dB(f,g) = [Bf,g] + (-1)^{p(B)pi(f)} [f,Bg] - B([f,g]).
inline Cocycle2 coboundary(const std::function<SPoly(const SPoly&)>& op, Parity op_parity, const Bracket& b) {
  Cocycle2 c;
  c.name = "coboundary";
  c.parity = op_parity;
  c.fn = [op, op_parity, b](const SPoly& x, const SPoly& y) {
    return detail::bilinear_by_parity(x, y, [&](const SPoly& f, const SPoly& g) {
      SPoly r = b(op(f), g);
      r += b(f, op(g)) * detail::rsign(op_parity, b.element_parity(f));
      r -= op(b(f, g));
      return r;
    });
  };
  return c;
}

/// F = sum_k h^k F_k with h on the left and every F_k free of h.
inline std::vector<SPoly> param_split(const SPoly& f, std::size_t h) {
  const VarSpec& spec = *f.spec();
  std::vector<SPoly> out;
  for (const auto& [m, c] : f.terms()) {
    int k = m[h];
    Monomial rest = m;
    rest[h] = 0;
    Monomial hk;
    hk[h] = static_cast<std::uint8_t>(k);
    Monomial prod;
    int s = monomial_mul(spec, hk, rest, prod);
    while (static_cast<int>(out.size()) <= k) out.emplace_back(f.spec());
    out[k].add_term(rest, s < 0 ? Rational(-c) : c);
  }
  return out;
}

inline SPoly param_power(const VarSpecPtr& spec, std::size_t h, int k) {
  Monomial m;
  m[h] = static_cast<std::uint8_t>(k);
  SPoly r(spec);
  if ((*spec)[h].nilpotent && k >= (*spec)[h].nilpotent) return r;
  if (spec->is_odd(h) && k > 1) return r;
  r.add_term(m, 1);
  return r;
}

/// The bracket [x,y] + hbar C(x,y), extended to arguments involving hbar by
/// hbar-linearity: [h^i X, h^j Y] = (-1)^{j p(h) pi(X)} h^{i+j} [X, Y].
inline Bracket deformed_bracket(const Bracket& base, const Cocycle2& c, std::size_t hbar) {
  Bracket r;
  r.name = base.name + "+hbar*" + c.name;
  r.shift = base.shift;
  r.fn = [base, c, hbar](const SPoly& x, const SPoly& y) {
    const VarSpecPtr& spec = x.spec() ? x.spec() : y.spec();
    Parity ph = spec->parity(hbar);
    SPoly h1 = param_power(spec, hbar, 1);
    auto xs = param_split(x, hbar);
    auto ys = param_split(y, hbar);
    SPoly out(spec);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < ys.size(); ++j) {
        if (xs[i].is_zero() || ys[j].is_zero()) continue;
        SPoly hij = param_power(spec, hbar, static_cast<int>(i + j));
        if (hij.is_zero()) continue;
        out += detail::bilinear_by_parity(xs[i], ys[j], [&](const SPoly& a, const SPoly& b) {
          SPoly v = base(a, b) + h1 * c(a, b);
          Rational s = (j % 2 && ph == Parity::Odd) ? Rational(sign_of(base.element_parity(a))) : Rational(1);
          return (hij * v) * s;
        });
      }
    return out;
  };
  return r;
}

/// Memoizes a bilinear map on monomial pairs. Not thread-safe: use one per thread.
class CachedBilinear {
 public:
  explicit CachedBilinear(BilinearFn fn) : fn_(std::move(fn)) {}

  SPoly operator()(const SPoly& x, const SPoly& y) {
    SPoly r(x.spec() ? x.spec() : y.spec());
    for (const auto& [mx, cx] : x.terms())
      for (const auto& [my, cy] : y.terms()) {
        const SPoly& v = lookup(x.spec(), mx, my);
        if (v.is_zero()) continue;
        Rational s = cx * cy;
        for (const auto& [m, c] : v.terms()) r.add_term(m, s * c);
      }
    return r;
  }

  std::size_t size() const { return cache_.size(); }

 private:
  const SPoly& lookup(const VarSpecPtr& spec, const Monomial& a, const Monomial& b) {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    SPoly v = fn_(SPoly::monomial(spec, a), SPoly::monomial(spec, b));
    return cache_.emplace(key, std::move(v)).first->second;
  }

  BilinearFn fn_;
  std::unordered_map<std::pair<Monomial, Monomial>, SPoly, MonomialPairHash> cache_;
};

/// Returns a bracket with the same parity data whose evaluations are cached.
inline Bracket cached(const Bracket& b) {
  auto cache = std::make_shared<CachedBilinear>(b.fn);
  Bracket r = b;
  r.fn = [cache](const SPoly& x, const SPoly& y) { return (*cache)(x, y); };
  return r;
}

inline Cocycle2 cached(const Cocycle2& c) {
  auto cache = std::make_shared<CachedBilinear>(c.fn);
  Cocycle2 r = c;
  r.fn = [cache](const SPoly& x, const SPoly& y) { return (*cache)(x, y); };
  return r;
}

/// First nonzero value found by a sweep, with the indices of its arguments.
struct SweepWitness {
  std::vector<std::size_t> args;
  SPoly value;
};

struct SweepResult {
  std::size_t checked = 0;
  std::optional<SweepWitness> witness;
  bool ok() const { return !witness.has_value(); }
};

inline unsigned sweep_threads() {
  unsigned t = std::thread::hardware_concurrency();
  return t == 0 ? 1 : std::min(t, 16u);
}

/// Evaluates `defect(i, j, k)` on all multisets i <= j <= k < n and reports the
/// witness that comes first in lexicographic order. `make_defect` is called once
/// per worker so each worker may hold its own caches.
template <class MakeDefect>
SweepResult sweep_triples(std::size_t n, MakeDefect make_defect, unsigned threads = 0) {
  if (threads == 0) threads = sweep_threads();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};  // smallest i with a witness so far
  std::atomic<std::size_t> checked{0};
  std::mutex mu;
  std::optional<SweepWitness> found;
  auto worker = [&] {
    auto defect = make_defect();
    std::size_t local = 0;
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n || i > best.load()) break;
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t k = j; k < n; ++k) {
          SPoly v = defect(i, j, k);
          ++local;
          if (v.is_zero()) continue;
          std::lock_guard<std::mutex> lock(mu);
          std::vector<std::size_t> args{i, j, k};
          if (!found || args < found->args) found = SweepWitness{args, v};
          if (i < best.load()) best.store(i);
          j = n;
          break;
        }
    }
    checked += local;
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  SweepResult r;
  r.checked = checked.load();
  r.witness = std::move(found);
  return r;
}

/// Evaluates `defect(i, j)` on all ordered pairs.
template <class MakeDefect>
SweepResult sweep_pairs(std::size_t n, MakeDefect make_defect) {
  auto defect = make_defect();
  SweepResult r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SPoly v = defect(i, j);
      ++r.checked;
      if (!v.is_zero()) {
        r.witness = SweepWitness{{i, j}, v};
        return r;
      }
    }
  return r;
}

/// Basis of a graded subspace of polynomials, kept in reduced echelon form over
/// monomials so that coordinates are read off at pivot monomials.
class GradedBasis {
 public:
  GradedBasis() = default;
  GradedBasis(VarSpecPtr spec, std::vector<Weights> gradings, std::vector<std::string> names)
      : spec_(std::move(spec)), gradings_(std::move(gradings)), names_(std::move(names)) {}

  const VarSpecPtr& spec() const { return spec_; }
  const std::vector<Weights>& gradings() const { return gradings_; }
  const std::vector<std::string>& grading_names() const { return names_; }
  std::size_t size() const { return elems_.size(); }
  const SPoly& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<SPoly>& elements() const { return elems_; }
  const std::vector<int>& degree(std::size_t i) const { return degs_[i]; }

  std::vector<int> multidegree(const Monomial& m) const {
    std::vector<int> d;
    for (const auto& w : gradings_) d.push_back(monomial_weight(m, w));
    return d;
  }

  /// Adds reduced-echelon elements that all share one multidegree.
  void add_component(const std::vector<SPoly>& elems) {
    for (const auto& e : elems) {
      if (e.is_zero()) continue;
      const Monomial& pivot = e.terms().rbegin()->first;
      Rational lead = e.terms().rbegin()->second;
      SPoly n = e * Rational(1 / lead);
      if (pivot_index_.count(pivot)) throw AlgebraError("duplicate pivot in graded basis");
      pivot_index_.emplace(pivot, elems_.size());
      pivots_.push_back(pivot);
      degs_.push_back(multidegree(pivot));
      elems_.push_back(std::move(n));
    }
  }

  /// Coordinates of x, assumed to lie in the span.
  std::vector<std::pair<std::size_t, Rational>> coordinates(const SPoly& x) const {
    std::vector<std::pair<std::size_t, Rational>> out;
    for (const auto& [m, c] : x.terms()) {
      auto it = pivot_index_.find(m);
      if (it != pivot_index_.end()) out.emplace_back(it->second, c);
    }
    return out;
  }

  /// True when x lies in the span.
  bool contains(const SPoly& x) const {
    SPoly r = x;
    for (const auto& [i, c] : coordinates(x)) r -= elems_[i] * c;
    return r.is_zero();
  }

  /// Indices of elements of a given multidegree.
  std::vector<std::size_t> of_degree(const std::vector<int>& d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (degs_[i] == d) out.push_back(i);
    return out;
  }

  /// Dimension (even|odd) of the elements whose first grading equals w,
  /// with parities counted by the element parity p + shift.
  std::pair<int, int> dims(int w, Parity shift) const {
    std::pair<int, int> d{0, 0};
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (degs_[i][0] != w) continue;
      Parity p = elems_[i].parity() + shift;
      (p == Parity::Even ? d.first : d.second) += 1;
    }
    return d;
  }

 private:
  VarSpecPtr spec_;
  std::vector<Weights> gradings_;
  std::vector<std::string> names_;
  std::vector<SPoly> elems_;
  std::vector<Monomial> pivots_;
  std::vector<std::vector<int>> degs_;
  std::map<Monomial, std::size_t> pivot_index_;
};

/// Reduced echelon basis (pivot = largest monomial) of the span of `vecs`.
inline std::vector<SPoly> echelon_span(const std::vector<SPoly>& vecs) {
  if (vecs.empty()) return {};
  Indexer<Monomial> idx;
  // larger monomials get smaller column indices so pivots are the largest monomial
  std::vector<Monomial> all;
  for (const auto& v : vecs)
    for (const auto& [m, c] : v.terms()) all.push_back(m);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (auto it = all.rbegin(); it != all.rend(); ++it) idx(*it);
  EchelonBasis eb;
  for (const auto& v : vecs) {
    std::map<std::uint32_t, Rational> row;
    for (const auto& [m, c] : v.terms()) row[idx(m)] = c;
    SparseVec red = eb.reduce(to_sparse(row));
    if (!red.empty()) eb.insert(red);
  }
  std::vector<SPoly> out;
  for (const auto& row : eb.reduced_rows()) {
    SPoly p(vecs.front().spec());
    for (const auto& [i, c] : row) p.add_term(idx.key(i), c);
    out.push_back(std::move(p));
  }
  return out;
}

/// Degree shift of a bilinear map with respect to grading w: the constant s with
/// deg(out) = deg(x) + deg(y) + s on all sampled basis pairs; nullopt when the map
/// is not homogeneous for w or vanishes on all samples.
inline std::optional<int> bilinear_shift(const BilinearFn& fn, const std::vector<SPoly>& sample, const Weights& w) {
  std::optional<int> s;
  for (const auto& x : sample)
    for (const auto& y : sample) {
      SPoly v = fn(x, y);
      if (v.is_zero()) continue;
      int dx = deg(x, w), dy = deg(y, w);
      for (const auto& [m, c] : v.terms()) {
        int k = monomial_weight(m, w) - dx - dy;
        if (s && *s != k) return std::nullopt;
        s = k;
      }
    }
  return s;
}

struct CoboundaryResult {
  bool feasible = false;
  /// Images B(e_i) for each domain basis element when feasible.
  std::vector<std::pair<std::size_t, SPoly>> cochain;
  /// Rows of the system (as pair index and monomial) paired with multipliers
  /// y so that y A = 0 and y b = 1.
  struct CertificateEntry {
    std::size_t i, j;
    Monomial monomial;
    Rational multiplier;
  };
  std::vector<CertificateEntry> certificate;
  std::size_t unknowns = 0, equations = 0;
  std::vector<std::string> gradings_used;
  /// Checks the certificate against the system it came from.
  bool certificate_valid = false;
};

/// Looks for a 1-cochain B with dB = C on pairs of basis elements whose bracket
/// stays within weight `bound` (first grading). B is restricted to maps that are
/// homogeneous for every grading for which both the bracket and C are.
inline CoboundaryResult coboundary_obstruction(const Cocycle2& c, const Bracket& b, const GradedBasis& basis, int bound) {
  CoboundaryResult res;
  const auto& gr = basis.gradings();
  std::vector<std::size_t> dom;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis.degree(i)[0] <= bound) dom.push_back(i);
  std::vector<SPoly> sample;
  for (auto i : dom) sample.push_back(basis[i]);

  // shift required of B for each grading
  std::vector<std::optional<int>> delta(gr.size());
  for (std::size_t g = 0; g < gr.size(); ++g) {
    auto sb = bilinear_shift(b.fn, sample, gr[g]);
    auto sc = bilinear_shift(c.fn, sample, gr[g]);
    if (sb && sc) {
      delta[g] = *sc - *sb;
      res.gradings_used.push_back(basis.grading_names()[g]);
    }
  }
  if (!delta[0]) throw AlgebraError("cocycle is not homogeneous for the bounding grading");

  // unknown x_{i,k}: coefficient of e_k in B(e_i)
  Indexer<std::pair<std::size_t, std::size_t>> unk;
  std::map<std::size_t, std::vector<std::size_t>> targets;
  for (auto i : dom) {
    auto& tg = targets[i];
    for (std::size_t k = 0; k < basis.size(); ++k) {
      bool ok = true;
      for (std::size_t g = 0; g < gr.size() && ok; ++g)
        if (delta[g] && basis.degree(k)[g] != basis.degree(i)[g] + *delta[g]) ok = false;
      if (ok) {
        tg.push_back(k);
        unk({i, k});
      }
    }
  }
  res.unknowns = unk.size();

  auto sb = bilinear_shift(b.fn, sample, gr[0]);
  int bshift = sb ? *sb : 0;
  Bracket cb = cached(b);
  std::vector<SparseVec> rows;
  std::vector<Rational> rhs;
  std::vector<CoboundaryResult::CertificateEntry> tags;
  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t bb = a; bb < dom.size(); ++bb) {
      std::size_t i = dom[a], j = dom[bb];
      if (basis.degree(i)[0] + basis.degree(j)[0] + bshift > bound) continue;
      const SPoly& ei = basis[i];
      const SPoly& ej = basis[j];
      Rational si = sign_of(c.parity, b.element_parity(ei));
      // monomial -> (unknown -> coefficient)
      std::map<Monomial, std::map<std::uint32_t, Rational>> eq;
      auto add = [&](const SPoly& v, std::uint32_t u, const Rational& s) {
        for (const auto& [m, cf] : v.terms()) eq[m][u] += s * cf;
      };
      for (auto k : targets[i]) add(cb(basis[k], ej), *unk.find({i, k}), Rational(1));
      for (auto k : targets[j]) add(cb(ei, basis[k]), *unk.find({j, k}), si);
      SPoly br = cb(ei, ej);
      for (const auto& [l, cl] : basis.coordinates(br)) {
        if (!targets.count(l)) throw AlgebraError("bracket leaves the cochain domain");
        for (auto k : targets[l]) add(basis[k], *unk.find({l, k}), Rational(-cl));
      }
      SPoly cv = c(ei, ej);
      for (const auto& [m, cf] : cv.terms()) eq[m];
      for (auto& [m, row] : eq) {
        rows.push_back(to_sparse(row));
        rhs.push_back(cv.coeff(m));
        tags.push_back({i, j, m, Rational(0)});
      }
    }
  res.equations = rows.size();
  SolveResult sr = solve_with_certificate(rows, rhs, unk.size());
  res.feasible = sr.feasible;
  if (sr.feasible) {
    std::map<std::size_t, SPoly> img;
    for (const auto& [u, v] : sr.solution) {
      auto [i, k] = unk.key(u);
      auto it = img.try_emplace(i, basis.spec()).first;
      it->second += basis[k] * v;
    }
    for (auto& [i, p] : img) res.cochain.emplace_back(i, std::move(p));
  } else {
    std::map<std::uint32_t, Rational> ya;
    Rational yb = 0;
    for (const auto& [r, y] : sr.certificate) {
      auto e = tags[r];
      e.multiplier = y;
      res.certificate.push_back(e);
      yb += y * rhs[r];
      for (const auto& [u, v] : rows[r]) ya[u] += y * v;
    }
    bool zero = std::all_of(ya.begin(), ya.end(), [](const auto& kv) { return kv.second == 0; });
    res.certificate_valid = zero && yb == 1;
  }
  return res;
}

}  // namespace superlie

#endif  // SUPERLIE_LIE_HPP
