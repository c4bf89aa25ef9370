#include <gtest/gtest.h>

#include <set>

#include "superlie/fock.hpp"
#include "superlie/parse.hpp"

using namespace superlie;

namespace {

SPoly P(const VarSpecPtr& s, const char* text) { return parse_poly(s, text); }

long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Relations, FormsAreValid) {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 3; ++m) EXPECT_NO_THROW(hei_spec(n, m));
  for (int n = 1; n <= 4; ++n) EXPECT_NO_THROW(ab_spec(n));
  CCRSpec bad = hei_spec(1, 0);
  bad.B[1][0] = 1;  // symmetric on even generators
  EXPECT_THROW(validate(bad), AlgebraError);
  CCRSpec degenerate = ab_spec(1);
  degenerate.B[0][1] = 0;
  degenerate.B[1][0] = 0;
  EXPECT_THROW(validate(degenerate), AlgebraError);
}

TEST(HeiFock, CanonicalCommutator) {
  auto rep = hei_fock(1, 0, frac(3, 2), 4);
  const auto& p = rep.generator("p1");
  const auto& q = rep.generator("q1");
  for (const auto& f : rep.basis()) EXPECT_EQ(supercommutator(p, q, f), f * frac(3, 2));
}

TEST(HeiFock, OddGeneratorSquares) {
  Rational hbar = frac(-2, 5);
  auto rep = hei_fock(0, 1, hbar, 1);
  const auto& th = rep.generator("theta");
  for (const auto& f : rep.basis()) EXPECT_EQ(supercommutator(th, th, f), f * hbar);
}

TEST(HeiFock, CentralElementActsByHbar) {
  auto rep = hei_fock(2, 2, Rational(7), 2);
  for (const auto& f : rep.basis()) EXPECT_EQ(rep.central.op(f), f * Rational(7));
}

TEST(HeiFock, RelationSweep) {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 3; ++m) {
      if (n + m == 0) continue;
      auto r = rep_check(hei_fock(n, m, frac(3, 2), 4), hei_spec(n, m));
      EXPECT_TRUE(r.ok) << n << "|" << m;
      EXPECT_TRUE(r.witnesses.empty());
      EXPECT_GT(r.relations_checked, 0);
    }
}

TEST(HeiFock, QTypeStructure) {
  EXPECT_FALSE(hei_fock(1, 2, Rational(1), 2).structure);
  auto rep = hei_fock(1, 3, Rational(1), 3);
  ASSERT_TRUE(rep.structure);
  // J supercommutes with the image and squares to a nonzero scalar
  for (const auto& f : rep.basis()) {
    for (const auto& g : rep.generators) EXPECT_TRUE(supercommutator(*rep.structure, g, f).is_zero());
    EXPECT_EQ(rep.structure->op(rep.structure->op(f)), f * frac(-1, 2));
  }
}

TEST(HeiFock, VacuumIsCyclic) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 2}})
    EXPECT_TRUE(vacuum_is_cyclic(hei_fock(n, m, Rational(1), 3)));
}

TEST(AbFock, RelationSweep) {
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) {
      auto r = rep_check(ab_fock(n, i, 3), ab_spec(n));
      EXPECT_TRUE(r.ok) << n << " " << i;
    }
}

TEST(AbFock, TopModuleIsFinite) {
  for (int n = 1; n <= 4; ++n) {
    auto small = ab_fock(n, n, n).module_dims();
    auto big = ab_fock(n, n, n + 3).module_dims();
    EXPECT_EQ(small.first + small.second, 1 << n);
    EXPECT_EQ(small, big);
    EXPECT_EQ(small.first, small.second);
  }
}

TEST(AbFock, LowerModulesGrow) {
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i < n; ++i) {
      auto a = ab_fock(n, i, 2).module_dims(), b = ab_fock(n, i, 3).module_dims();
      EXPECT_GT(b.first + b.second, a.first + a.second);
    }
}

TEST(AbFock, BottomModuleOperators) {
  auto rep = ab_fock(2, 0, 3);
  const auto& spec = rep.spec;
  SPoly f = P(spec, "x1^2*x2 + 3*x2");
  SPoly xi = SPoly::variable(spec, "xi");
  EXPECT_EQ(rep.generator("q1").op(f), P(spec, "x1") * f);
  EXPECT_EQ(rep.generator("theta1").op(f), -(xi * pder(f, spec->index("x1"))));
  EXPECT_EQ(rep.generator("theta2").op(f), -(xi * pder(f, spec->index("x2"))));
}

TEST(AbFock, VacuumConditions) {
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) {
      auto rep = ab_fock(n, i, 2);
      std::vector<std::string> expect;
      for (int j = 1; j <= i; ++j) expect.push_back("q" + std::to_string(j));
      for (int j = i + 1; j <= n; ++j) expect.push_back("theta" + std::to_string(j));
      EXPECT_EQ(vacuum_annihilators(rep), expect) << n << " " << i;
      EXPECT_EQ(rep.central.op(rep.vacuum()), SPoly::variable(rep.spec, "xi"));
      EXPECT_TRUE(vacuum_is_cyclic(rep));
    }
}

TEST(AbFock, ModulesHaveDistinctAnnihilators) {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<std::string>> seen;
    for (int i = 0; i <= n; ++i) seen.insert(vacuum_annihilators(ab_fock(n, i, 1)));
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(n + 1));
  }
}

TEST(AbFock, RangeErrors) {
  EXPECT_THROW(ab_fock(2, 3, 1), AlgebraError);
  EXPECT_THROW(ab_fock(2, -1, 1), AlgebraError);
}

TEST(NegativeControl, PerturbedOperatorsFail) {
  auto h = rep_check(perturbed(hei_fock(1, 1, Rational(1), 3), "p1", Rational(2)), hei_spec(1, 1));
  EXPECT_FALSE(h.ok);
  EXPECT_NE(std::find(h.witnesses.begin(), h.witnesses.end(), "[p1,q1]"), h.witnesses.end());
  auto a = rep_check(perturbed(ab_fock(3, 1, 2), "theta2", Rational(-1)), ab_spec(3));
  EXPECT_FALSE(a.ok);
  EXPECT_NE(std::find(a.witnesses.begin(), a.witnesses.end(), "[q2,theta2]"), a.witnesses.end());
  EXPECT_THROW(perturbed(ab_fock(1, 0, 1), "nope", Rational(2)), AlgebraError);
}

TEST(NegativeControl, WrongParityFails) {
  auto rep = hei_fock(1, 0, Rational(1), 2);
  CCRSpec spec = hei_spec(1, 0);
  spec.parities[0] = Parity::Odd;
  EXPECT_THROW(rep_check(rep, spec), AlgebraError);
}

TEST(Isomorphisms, WeylSide) {
  auto iso = po_weyl_iso(1, 1, 3);
  EXPECT_TRUE(iso.table.agree());
  for (const auto& r : iso.table.rows) EXPECT_EQ(iso.operator_ranks[r.degree], r.rhs) << r.degree;
  // degree d of po(2|2), counted by the number of odd factors
  EXPECT_EQ(iso.table.rows[0].lhs, std::make_pair(1, 0));
  for (int d = 1; d <= 3; ++d) {
    long total = 0;
    for (int j = 0; j <= 2; ++j) total += binom(2, j) * binom(d - j + 1, 1);
    EXPECT_EQ(iso.table.rows[d].lhs.first + iso.table.rows[d].lhs.second, total);
  }
  EXPECT_EQ(po_weyl_iso(1, 1, 0).table.rows.at(0).rhs, std::make_pair(1, 0));
}

TEST(Isomorphisms, AntibracketSide) {
  for (int n = 1; n <= 3; ++n) {
    auto t = antibracket_iso(n, 3);
    EXPECT_TRUE(t.agree()) << n;
    for (const auto& r : t.rows) EXPECT_EQ(r.lhs.first, r.lhs.second);
  }
}

TEST(Isomorphisms, PbwCount) {
  EXPECT_EQ(pbw_count(1, 1, 2), std::make_pair(1, 1));
  EXPECT_EQ(pbw_count(0, 3, 2), std::make_pair(3, 0));
  EXPECT_EQ(pbw_count(2, 0, 3), std::make_pair(4, 0));
}
