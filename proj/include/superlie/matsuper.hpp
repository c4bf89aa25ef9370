#ifndef SUPERLIE_MATSUPER_HPP
#define SUPERLIE_MATSUPER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "superlie/fields.hpp"
#include "superlie/linalg.hpp"

namespace superlie {

/// Parities of the basis vectors, in order.
using Format = std::vector<Parity>;

/// Standard format (m|n): m even vectors, then n odd ones.
inline Format standard_format(int m, int n) {
  Format f(static_cast<std::size_t>(m), Parity::Even);
  f.insert(f.end(), static_cast<std::size_t>(n), Parity::Odd);
  return f;
}

/// Square matrix over the rationals acting on a superspace of a given format.
class SuperMatrix {
 public:
  SuperMatrix() = default;
  explicit SuperMatrix(Format fmt) : fmt_(std::move(fmt)), a_(fmt_.size() * fmt_.size()) {}

  static SuperMatrix identity(const Format& fmt) {
    SuperMatrix m(fmt);
    for (std::size_t i = 0; i < m.size(); ++i) m(i, i) = 1;
    return m;
  }
  /// Matrix unit E_ij.
  static SuperMatrix unit(const Format& fmt, std::size_t i, std::size_t j) {
    SuperMatrix m(fmt);
    m(i, j) = 1;
    return m;
  }
  /// Row-major entries; the row count must match the format.
  static SuperMatrix from_rows(const Format& fmt, const std::vector<std::vector<Rational>>& rows) {
    SuperMatrix m(fmt);
    if (rows.size() != m.size()) throw AlgebraError("row count does not match format");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.size()) throw AlgebraError("column count does not match format");
      for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t size() const { return fmt_.size(); }
  const Format& format() const { return fmt_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * size() + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * size() + j]; }

  /// Parity of the entry (i, j) as a map: p_i + p_j.
  Parity entry_parity(std::size_t i, std::size_t j) const { return fmt_[i] + fmt_[j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }
  /// The even or odd part.
  SuperMatrix part(Parity p) const {
    SuperMatrix r(fmt_);
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (entry_parity(i, j) == p) r(i, j) = (*this)(i, j);
    return r;
  }
  /// Parity when homogeneous; the zero matrix counts as even.
  std::optional<Parity> parity_if_homogeneous() const {
    bool ev = !part(Parity::Even).is_zero(), od = !part(Parity::Odd).is_zero();
    if (ev && od) return std::nullopt;
    return od ? Parity::Odd : Parity::Even;
  }
  Parity parity() const {
    auto p = parity_if_homogeneous();
    if (!p) throw AlgebraError("matrix is not homogeneous");
    return *p;
  }

  SuperMatrix transpose() const {
    SuperMatrix r(fmt_);
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  SuperMatrix& operator+=(const SuperMatrix& o) {
    check(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  SuperMatrix& operator-=(const SuperMatrix& o) {
    check(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  SuperMatrix& operator*=(const Rational& c) {
    for (auto& x : a_) x *= c;
    return *this;
  }
  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
  friend SuperMatrix operator-(SuperMatrix a) { return a *= Rational(-1); }
  friend SuperMatrix operator*(SuperMatrix a, const Rational& c) { return a *= c; }
  friend SuperMatrix operator*(const Rational& c, SuperMatrix a) { return a *= c; }
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    a.check(b);
    SuperMatrix r(a.fmt_);
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) { return a.fmt_ == b.fmt_ && a.a_ == b.a_; }

  /// Entries as a flat vector, row-major.
  const std::vector<Rational>& entries() const { return a_; }

 private:
  void check(const SuperMatrix& o) const {
    if (fmt_ != o.fmt_) throw AlgebraError("matrix formats differ");
  }
  Format fmt_;
  std::vector<Rational> a_;
};

/// Matrix in standard format (m|n) with entries entry(i, j).
inline SuperMatrix block_matrix(int m, int n, const std::function<Rational(std::size_t, std::size_t)>& entry) {
  SuperMatrix r(standard_format(m, n));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) r(i, j) = entry(i, j);
  return r;
}

/// (A^st)_ij = (-1)^{(p_i + p_j)(p_i + p(A))} A_ji, applied to each parity component.
inline SuperMatrix supertranspose(const SuperMatrix& A) {
  SuperMatrix r(A.format());
  const Format& f = A.format();
  for (Parity pa : {Parity::Even, Parity::Odd})
    for (std::size_t i = 0; i < A.size(); ++i)
      for (std::size_t j = 0; j < A.size(); ++j) {
        if (A.entry_parity(j, i) != pa) continue;
        r(i, j) += A(j, i) * Rational(sign_of(f[i] + f[j], f[i] + pa));
      }
  return r;
}

/// sum (-1)^{p_i} A_ii
inline Rational supertrace(const SuperMatrix& A) {
  Rational s = 0;
  for (std::size_t i = 0; i < A.size(); ++i) s += A(i, i) * Rational(sign_of(A.format()[i]));
  return s;
}

/// tr B for a matrix (A B; B A) in standard format (n|n).
inline Rational queertrace(const SuperMatrix& X) {
  const std::size_t n = X.size() / 2;
  if (X.format() != standard_format(static_cast<int>(n), static_cast<int>(n)))
    throw AlgebraError("queertrace needs standard format (n|n)");
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i) s += X(i, n + i);
  return s;
}

/// [X, Y] = XY - (-1)^{p(X)p(Y)} YX, extended bilinearly over parity components.
inline SuperMatrix supercommutator(const SuperMatrix& X, const SuperMatrix& Y) {
  SuperMatrix r(X.format());
  for (Parity px : {Parity::Even, Parity::Odd})
    for (Parity py : {Parity::Even, Parity::Odd}) {
      SuperMatrix a = X.part(px), b = Y.part(py);
      if (a.is_zero() || b.is_zero()) continue;
      r += a * b - b * a * Rational(sign_of(px, py));
    }
  return r;
}

/// X^st B + (-1)^{p(X)p(B)} B X for homogeneous B, summed over the parity components of X.
inline SuperMatrix aut_defect(const SuperMatrix& X, const SuperMatrix& B) {
  Parity pb = B.parity();
  SuperMatrix r(X.format());
  for (Parity px : {Parity::Even, Parity::Odd}) {
    SuperMatrix x = X.part(px);
    if (x.is_zero()) continue;
    // the parity components land in different parity components of the result
    r += supertranspose(x) * B + B * x * Rational(sign_of(px, pb));
  }
  return r;
}

/// True when X preserves the form with matrix B: every parity component of X
/// satisfies X^st B + (-1)^{p(X)p(B)} B X = 0.
inline bool aut_member(const SuperMatrix& X, const SuperMatrix& B) {
  for (Parity px : {Parity::Even, Parity::Odd}) {
    SuperMatrix x = X.part(px);
    if (!x.is_zero() && !aut_defect(x, B).is_zero()) return false;
  }
  return true;
}

/// Upsetting of a homogeneous form: (B^u)_ij = s_ij B_ji with s = 1 on even-even
/// entries, -1 on odd-odd entries and (-1)^{p(B)} on mixed ones.
inline SuperMatrix upsetting(const SuperMatrix& B) {
  Parity pb = B.parity();
  const Format& f = B.format();
  SuperMatrix r(f);
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j) {
      int s = 1;
      if (f[i] == Parity::Odd && f[j] == Parity::Odd)
        s = -1;
      else if (f[i] != f[j])
        s = sign_of(pb);
      r(i, j) = B(j, i) * Rational(s);
    }
  return r;
}

inline bool is_supersymmetric(const SuperMatrix& B) { return upsetting(B) == B; }
inline bool is_superskew(const SuperMatrix& B) { return upsetting(B) == -B; }

enum class FormKind {
  Even,        ///< diag(1_m, J_2n) on (m|2n)
  EvenAnti,    ///< diag(antidiag(1..1), J_2n) on (m|2n)
  EvenSkew,    ///< diag(J_2n, 1_m) on (2n|m), the form on the parity-changed space
  Odd,         ///< J_2n on (n|n), supersymmetric odd form
  OddSkew,     ///< Pi_2n on (n|n), superskew odd form
};

inline std::string form_kind_name(FormKind k) {
  switch (k) {
    case FormKind::Even: return "B_ev";
    case FormKind::EvenAnti: return "B'_ev";
    case FormKind::EvenSkew: return "B_ev^sk";
    case FormKind::Odd: return "B_odd";
    case FormKind::OddSkew: return "Pi";
  }
  return "?";
}

namespace detail {

/// J_2n = (0 1_n; -1_n 0) written into r at offset o.
inline void put_J(SuperMatrix& r, std::size_t o, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    r(o + i, o + n + i) = 1;
    r(o + n + i, o + i) = -1;
  }
}

}  // namespace detail

/// Canonical form matrices in standard format. For the even kinds (m, n) give
/// the dimension (m|2n) (or (2n|m) for EvenSkew); for the odd kinds m is ignored
/// and the format is (n|n).
inline SuperMatrix canonical_form(FormKind kind, int m, int n) {
  if (m < 0 || n < 0) throw AlgebraError("negative dimension");
  const std::size_t M = static_cast<std::size_t>(m), N = static_cast<std::size_t>(n);
  switch (kind) {
    case FormKind::Even:
    case FormKind::EvenAnti: {
      SuperMatrix r(standard_format(m, 2 * n));
      for (std::size_t i = 0; i < M; ++i) {
        if (kind == FormKind::Even)
          r(i, i) = 1;
        else
          r(i, M - 1 - i) = 1;
      }
      detail::put_J(r, M, N);
      return r;
    }
    case FormKind::EvenSkew: {
      SuperMatrix r(standard_format(2 * n, m));
      detail::put_J(r, 0, N);
      for (std::size_t i = 0; i < M; ++i) r(2 * N + i, 2 * N + i) = 1;
      return r;
    }
    case FormKind::Odd: {
      SuperMatrix r(standard_format(n, n));
      detail::put_J(r, 0, N);
      return r;
    }
    case FormKind::OddSkew: {
      SuperMatrix r(standard_format(n, n));
      for (std::size_t i = 0; i < N; ++i) r(i, N + i) = r(N + i, i) = 1;
      return r;
    }
  }
  throw AlgebraError("unknown form kind");
}

/// J_2n as an odd operator on (n|n).
inline SuperMatrix J_matrix(int n) { return canonical_form(FormKind::Odd, 0, n); }

/// Membership in q(n) = C(J) = {X : [X, J] = 0} (supercommutator).
inline bool q_member(const SuperMatrix& X, int n) {
  if (X.format() != standard_format(n, n)) throw AlgebraError("q(n) lives on (n|n)");
  return supercommutator(X, J_matrix(n)).is_zero();
}

// ---------------------------------------------------------------------------
// Bases of matrix Lie superalgebras

/// Homogeneous basis of the subspace of gl(fmt) cut out by a linear condition.
/// `condition` maps a matrix to a matrix that must vanish; it must be linear and
/// must send each parity component to a matrix vanishing independently.
inline std::vector<SuperMatrix> matrix_kernel_basis(const Format& fmt,
                                                    const std::function<SuperMatrix(const SuperMatrix&)>& condition,
                                                    const std::vector<std::function<Rational(const SuperMatrix&)>>&
                                                        scalar_conditions = {}) {
  const std::size_t n = fmt.size();
  std::vector<SuperMatrix> out;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((fmt[i] + fmt[j]) == p) units.emplace_back(i, j);
    std::vector<SparseVec> cols;
    for (auto [i, j] : units) {
      SuperMatrix e = SuperMatrix::unit(fmt, i, j);
      SuperMatrix c = condition(e);
      std::map<std::uint32_t, Rational> col;
      for (std::size_t k = 0; k < c.entries().size(); ++k)
        if (c.entries()[k] != 0) col[static_cast<std::uint32_t>(k)] = c.entries()[k];
      for (std::size_t s = 0; s < scalar_conditions.size(); ++s) {
        Rational v = scalar_conditions[s](e);
        if (v != 0) col[static_cast<std::uint32_t>(n * n + s)] = v;
      }
      cols.push_back(to_sparse(col));
    }
    for (const auto& v : kernel_of_columns(cols)) {
      SuperMatrix x(fmt);
      for (const auto& [k, c] : v) x(units[k].first, units[k].second) = c;
      out.push_back(std::move(x));
    }
  }
  return out;
}

inline std::vector<SuperMatrix> gl_basis(const Format& fmt) {
  return matrix_kernel_basis(fmt, [&](const SuperMatrix&) { return SuperMatrix(fmt); });
}

inline std::vector<SuperMatrix> sl_basis(const Format& fmt) {
  return matrix_kernel_basis(fmt, [&](const SuperMatrix&) { return SuperMatrix(fmt); },
                             {[](const SuperMatrix& x) { return supertrace(x); }});
}

inline std::vector<SuperMatrix> aut_basis(const SuperMatrix& B) {
  return matrix_kernel_basis(B.format(), [&](const SuperMatrix& x) { return aut_defect(x, B); });
}

/// osp(m|2n) = aut(B_ev(m|2n)).
inline std::vector<SuperMatrix> osp_basis(int m, int n) { return aut_basis(canonical_form(FormKind::Even, m, n)); }
/// osp^sk(m|2n) = aut of the superskew form on (2n|m).
inline std::vector<SuperMatrix> osp_skew_basis(int m, int n) {
  return aut_basis(canonical_form(FormKind::EvenSkew, m, n));
}
/// pe^sy(n) = aut(J_2n), pe^sk(n) = aut(Pi_2n).
inline std::vector<SuperMatrix> pe_basis(int n, bool skew = false) {
  return aut_basis(canonical_form(skew ? FormKind::OddSkew : FormKind::Odd, 0, n));
}
/// spe(n): supertraceless elements of pe^sy(n).
inline std::vector<SuperMatrix> spe_basis(int n) {
  SuperMatrix B = canonical_form(FormKind::Odd, 0, n);
  return matrix_kernel_basis(B.format(), [&](const SuperMatrix& x) { return aut_defect(x, B); },
                             {[](const SuperMatrix& x) { return supertrace(x); }});
}
/// spe(n) plus a z + b d with z = 1_2n, d = diag(1_n, -1_n).
inline std::vector<SuperMatrix> spe_ab_basis(int n, const Rational& a, const Rational& b) {
  if (a == 0 && b == 0) throw AlgebraError("(a, b) = (0, 0) adds nothing");
  auto out = spe_basis(n);
  Format f = standard_format(n, n);
  SuperMatrix e(f);
  for (int i = 0; i < 2 * n; ++i) e(i, i) = a + (i < n ? b : Rational(-b));
  out.push_back(e);
  return out;
}
inline std::vector<SuperMatrix> q_basis(int n) {
  SuperMatrix J = J_matrix(n);
  return matrix_kernel_basis(standard_format(n, n), [&](const SuperMatrix& x) { return supercommutator(x, J); });
}
inline std::vector<SuperMatrix> sq_basis(int n) {
  SuperMatrix J = J_matrix(n);
  return matrix_kernel_basis(standard_format(n, n), [&](const SuperMatrix& x) { return supercommutator(x, J); },
                             {[](const SuperMatrix& x) { return queertrace(x); }});
}

/// Dimension (even|odd) of a homogeneous basis.
inline std::pair<int, int> superdimension(const std::vector<SuperMatrix>& basis) {
  std::pair<int, int> d{0, 0};
  for (const auto& x : basis) (x.parity() == Parity::Even ? d.first : d.second) += 1;
  return d;
}

/// True when x lies in the span of `basis`.
inline bool in_span(const std::vector<SuperMatrix>& basis, const SuperMatrix& x) {
  EchelonBasis eb;
  auto vec = [](const SuperMatrix& m) {
    std::map<std::uint32_t, Rational> v;
    for (std::size_t k = 0; k < m.entries().size(); ++k)
      if (m.entries()[k] != 0) v[static_cast<std::uint32_t>(k)] = m.entries()[k];
    return to_sparse(v);
  };
  for (const auto& b : basis) eb.insert(vec(b));
  return eb.contains(vec(x));
}

/// First pair of basis elements whose supercommutator leaves the span, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> bracket_closure_witness(
    const std::vector<SuperMatrix>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (!in_span(basis, supercommutator(basis[i], basis[j]))) return std::make_pair(i, j);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Linear vector fields

/// Sign s_ij = -(-1)^{(p_i + p_j) p_j} of the entry X_ij in its linear field.
inline Rational linear_field_sign(const Format& f, std::size_t i, std::size_t j) {
  return Rational(-sign_of(f[i] + f[j], f[j]));
}

/// The linear field D_X = sum_ij s_ij X_ij x_j d/dx_i on variables `vars`, whose
/// parities must match the format. It satisfies [D_X, d/dx_j] = sum_i X_ij d/dx_i,
/// so X acts on the span of the d/dx_j by the matrix itself, and X -> D_X is a
/// homomorphism of Lie superalgebras.
inline VectorField linear_field(const SuperMatrix& X, const VarSpecPtr& spec, const std::vector<std::size_t>& vars) {
  if (vars.size() != X.size()) throw AlgebraError("variable count does not match matrix size");
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (spec->parity(vars[i]) != X.format()[i]) throw AlgebraError("variable parities do not match format");
  VectorField d(spec);
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = 0; j < X.size(); ++j)
      if (X(i, j) != 0)
        d.add(vars[i], SPoly::variable(spec, vars[j]) * Rational(X(i, j) * linear_field_sign(X.format(), i, j)));
  return d;
}

/// Inverse of linear_field; throws when the field is not linear in `vars`.
inline SuperMatrix matrix_of_linear_field(const VectorField& d, const Format& fmt, const std::vector<std::size_t>& vars) {
  SuperMatrix X(fmt);
  const VarSpecPtr& spec = d.spec();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    SPoly c = d.coeff(vars[i]);
    for (std::size_t j = 0; j < vars.size(); ++j) {
      Monomial m;
      m[vars[j]] = 1;
      Rational v = c.coeff(m);
      X(i, j) = v / linear_field_sign(fmt, i, j);
      c -= SPoly::variable(spec, vars[j]) * v;
    }
    if (!c.is_zero()) throw AlgebraError("field is not linear");
  }
  for (std::size_t k = 0; k < spec->size(); ++k) {
    bool listed = false;
    for (auto v : vars) listed = listed || v == k;
    if (!listed && !d.coeff(k).is_zero()) throw AlgebraError("field moves a variable outside the list");
  }
  return X;
}

}  // namespace superlie

#endif  // SUPERLIE_MATSUPER_HPP
