#ifndef SUPERLIE_TESTS_NAIVE_SUPER_HPP
#define SUPERLIE_TESTS_NAIVE_SUPER_HPP

// Word-based supercommutative polynomials used as an independent oracle.
// A term is the product of its letters in the stored order; normalization
// bubble-sorts the letters and flips the sign on every swap of two odd letters.

#include <map>
#include <vector>

#include "superlie/spoly.hpp"

namespace oracle {

using superlie::Rational;

struct NaivePoly {
  std::vector<bool> odd;  // per letter
  std::map<std::vector<int>, Rational> terms;

  void add(std::vector<int> word, Rational c) {
    // bubble sort with sign tracking
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] > word[i + 1]) {
          if (odd[word[i]] && odd[word[i + 1]]) c = -c;
          std::swap(word[i], word[i + 1]);
          swapped = true;
        }
      }
    }
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      if (word[i] == word[i + 1] && odd[word[i]]) return;
    if (c == 0) return;
    auto& slot = terms[word];
    slot += c;
    if (slot == 0) terms.erase(word);
  }
};

inline NaivePoly from_spoly(const superlie::SPoly& f) {
  NaivePoly r;
  const auto& spec = *f.spec();
  for (std::size_t i = 0; i < spec.size(); ++i) r.odd.push_back(spec.is_odd(i));
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> w;
    for (std::size_t i = 0; i < spec.size(); ++i)
      for (int k = 0; k < m[i]; ++k) w.push_back(static_cast<int>(i));
    r.add(w, c);
  }
  return r;
}

inline superlie::SPoly to_spoly(const NaivePoly& p, const superlie::VarSpecPtr& spec) {
  superlie::SPoly r(spec);
  for (const auto& [w, c] : p.terms) {
    superlie::Monomial m;
    for (int i : w) m[i] += 1;
    r.add_term(m, c);
  }
  return r;
}

inline NaivePoly mul(const NaivePoly& a, const NaivePoly& b) {
  NaivePoly r;
  r.odd = a.odd;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add(w, ca * cb);
    }
  return r;
}

/// Left derivative: remove each occurrence, counting odd letters passed on the way.
inline NaivePoly left_derivative(const NaivePoly& a, int x) {
  NaivePoly r;
  r.odd = a.odd;
  for (const auto& [w, c] : a.terms) {
    int passed = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] == x) {
        std::vector<int> rest = w;
        rest.erase(rest.begin() + static_cast<long>(k));
        Rational cc = c;
        if (a.odd[x] && (passed & 1)) cc = -cc;
        r.add(rest, cc);
      }
      if (a.odd[w[k]]) ++passed;
    }
  }
  return r;
}

/// Right derivative: remove each occurrence, counting odd letters after it.
inline NaivePoly right_derivative(const NaivePoly& a, int x) {
  NaivePoly r;
  r.odd = a.odd;
  for (const auto& [w, c] : a.terms) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] != x) continue;
      int after = 0;
      for (std::size_t j = k + 1; j < w.size(); ++j)
        if (a.odd[w[j]]) ++after;
      std::vector<int> rest = w;
      rest.erase(rest.begin() + static_cast<long>(k));
      Rational cc = c;
      if (a.odd[x] && (after & 1)) cc = -cc;
      r.add(rest, cc);
    }
  }
  return r;
}

}  // namespace oracle

#endif
