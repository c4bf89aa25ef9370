#ifndef SUPERLIE_LINALG_HPP
#define SUPERLIE_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "superlie/rational.hpp"

namespace superlie {

/// Sparse vector stored as (index, value) pairs sorted by index, no zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

inline SparseVec to_sparse(const std::map<std::uint32_t, Rational>& m) {
  SparseVec v;
  v.reserve(m.size());
  for (const auto& [i, c] : m)
    if (c != 0) v.emplace_back(i, c);
  return v;
}

/// a - c*b
inline SparseVec axpy_sub(const SparseVec& a, const Rational& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, Rational(-c * b[j].second));
      ++j;
    } else {
      Rational v = a[i].second - c * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline const Rational* sparse_find(const SparseVec& v, std::uint32_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx, [](const auto& e, std::uint32_t k) { return e.first < k; });
  if (it != v.end() && it->first == idx) return &it->second;
  return nullptr;
}

/// Incrementally maintained row echelon basis of a subspace.
/// Every stored row has a leading entry 1 at its pivot column.
class EchelonBasis {
 public:
  /// Reduces v against the basis; the result has no pivot columns.
  SparseVec reduce(SparseVec v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = pivots_.find(v[pos].first);
      if (it == pivots_.end()) {
        ++pos;
        continue;
      }
      Rational c = v[pos].second;
      const SparseVec& row = rows_[it->second];
      SparseVec nv = axpy_sub(v, c, row);
      // entries before pos are untouched since the row starts at this column
      v.swap(nv);
    }
    return v;
  }
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Adds v; returns true when it enlarged the span.
  bool insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    Rational lead = r.front().second;
    if (lead != 1) {
      Rational inv = 1 / lead;
      for (auto& e : r) e.second *= inv;
    }
    pivots_.emplace(r.front().first, rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::map<std::uint32_t, std::size_t>& pivots() const { return pivots_; }

  /// Fully reduced rows (each pivot column appears in exactly one row).
  std::vector<SparseVec> reduced_rows() const {
    std::vector<SparseVec> rows = rows_;
    // process pivots from the largest column down
    std::vector<std::pair<std::uint32_t, std::size_t>> order(pivots_.begin(), pivots_.end());
    std::sort(order.begin(), order.end(), [](auto& a, auto& b) { return a.first > b.first; });
    for (auto [col, idx] : order) {
      for (auto& row : rows) {
        if (&row == &rows[idx]) continue;
        const Rational* c = sparse_find(row, col);
        if (!c) continue;
        if (row.front().first > col) continue;
        Rational cc = *c;
        row = axpy_sub(row, cc, rows[idx]);
      }
    }
    return rows;
  }

 private:
  std::vector<SparseVec> rows_;
  std::map<std::uint32_t, std::size_t> pivots_;
};

/// Kernel of the linear system whose constraint rows are given over `ncols` unknowns.
inline std::vector<SparseVec> kernel_of_rows(const std::vector<SparseVec>& rows, std::uint32_t ncols) {
  EchelonBasis eb;
  for (const auto& r : rows) eb.insert(r);
  auto rr = eb.reduced_rows();
  std::map<std::uint32_t, std::size_t> piv;
  for (std::size_t i = 0; i < rr.size(); ++i) piv.emplace(rr[i].front().first, i);
  // column -> list of (pivot row, coefficient) for free columns
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, Rational>>> free_cols;
  for (std::size_t i = 0; i < rr.size(); ++i) {
    std::uint32_t p = rr[i].front().first;
    for (std::size_t k = 1; k < rr[i].size(); ++k) free_cols[rr[i][k].first].emplace_back(p, rr[i][k].second);
  }
  std::vector<SparseVec> out;
  for (std::uint32_t c = 0; c < ncols; ++c) {
    if (piv.count(c)) continue;
    std::map<std::uint32_t, Rational> v;
    v[c] = 1;
    auto it = free_cols.find(c);
    if (it != free_cols.end())
      for (auto& [p, coef] : it->second) v[p] = -coef;
    out.push_back(to_sparse(v));
  }
  return out;
}

/// Kernel of the map sending unknown j to columns[j].
inline std::vector<SparseVec> kernel_of_columns(const std::vector<SparseVec>& columns) {
  std::map<std::uint32_t, std::map<std::uint32_t, Rational>> rows;
  for (std::uint32_t j = 0; j < columns.size(); ++j)
    for (const auto& [i, c] : columns[j]) rows[i][j] = c;
  std::vector<SparseVec> r;
  r.reserve(rows.size());
  for (auto& [i, m] : rows) r.push_back(to_sparse(m));
  return kernel_of_rows(r, static_cast<std::uint32_t>(columns.size()));
}

struct SolveResult {
  bool feasible = false;
  SparseVec solution;     ///< one solution when feasible
  SparseVec certificate;  ///< y with y^T A = 0 and y^T b != 0 when infeasible
};

/// Solves A x = b with A given by rows over `ncols` unknowns.
/// Row combinations are tracked so infeasibility comes with a certificate.
inline SolveResult solve_with_certificate(const std::vector<SparseVec>& rows, const std::vector<Rational>& rhs,
                                          std::uint32_t ncols) {
  // augmented column ncols carries b; columns ncols+1+i track the row combination
  const std::uint32_t bcol = ncols;
  const std::uint32_t tag0 = ncols + 1;
  EchelonBasis eb;
  SolveResult res;
  for (std::uint32_t i = 0; i < rows.size(); ++i) {
    SparseVec r = rows[i];
    if (rhs[i] != 0) r.emplace_back(bcol, rhs[i]);
    r.emplace_back(tag0 + i, Rational(1));
    SparseVec red = eb.reduce(r);
    if (red.empty()) continue;
    if (red.front().first == bcol) {
      // 0 = nonzero: the tag part is the certificate
      Rational lead = red.front().second;
      res.feasible = false;
      for (std::size_t k = 1; k < red.size(); ++k)
        res.certificate.emplace_back(red[k].first - tag0, Rational(red[k].second / lead));
      return res;
    }
    if (red.front().first > bcol) continue;  // pure dependency among rows
    eb.insert(red);
  }
  res.feasible = true;
  auto rr = eb.reduced_rows();
  for (const auto& row : rr) {
    std::uint32_t p = row.front().first;
    if (p >= ncols) continue;
    const Rational* bv = sparse_find(row, bcol);
    // free variables are set to zero
    if (bv) res.solution.emplace_back(p, *bv);
  }
  std::sort(res.solution.begin(), res.solution.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return res;
}

/// Generic key -> column index map.
template <class Key>
class Indexer {
 public:
  std::uint32_t operator()(const Key& k) {
    auto [it, ins] = index_.try_emplace(k, static_cast<std::uint32_t>(keys_.size()));
    if (ins) keys_.push_back(k);
    return it->second;
  }
  std::optional<std::uint32_t> find(const Key& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  const Key& key(std::uint32_t i) const { return keys_[i]; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(keys_.size()); }

 private:
  std::map<Key, std::uint32_t> index_;
  std::vector<Key> keys_;
};

}  // namespace superlie

#endif  // SUPERLIE_LINALG_HPP
