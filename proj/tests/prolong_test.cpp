#include <gtest/gtest.h>

#include "superlie/parse.hpp"
#include "superlie/prolong.hpp"

using namespace superlie;

namespace {

using Dims = std::pair<int, int>;

Dims dims_of(const GradedSubspace& c) { return {c.even, c.odd}; }

long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Monomials of degree d in e even and o odd unit-weight variables, split by parity.
Dims monomial_count(int e, int o, int d) {
  Dims r{0, 0};
  if (d < 0) return r;
  for (int j = 0; j <= std::min(o, d); ++j) {
    long c = binom(o, j) * (e == 0 ? (d - j == 0) : binom(d - j + e - 1, e - 1));
    (j % 2 ? r.second : r.first) += static_cast<int>(c);
  }
  return r;
}

/// Fields of degree i on (e|o): coefficients of degree i+1 times a target.
Dims vect_count(int e, int o, int i) {
  Dims c = monomial_count(e, o, i + 1);
  return {c.first * e + c.second * o, c.second * e + c.first * o};
}

/// Functions of weight w in t (weight 2), 2n even and m odd unit-weight variables.
Dims contact_function_count(int n, int m, int w) {
  Dims r{0, 0};
  for (int a = 0; 2 * a <= w; ++a) {
    Dims c = monomial_count(2 * n, m, w - 2 * a);
    r.first += c.first;
    r.second += c.second;
  }
  return r;
}

/// Dims of the divergence-free fields of degree i, by rank of the divergence.
Dims svect_count(const Format& fmt, int i) {
  auto [spec, vars] = format_coordinates(fmt);
  Dims full = vect_count(static_cast<int>(std::count(fmt.begin(), fmt.end(), Parity::Even)),
                         static_cast<int>(std::count(fmt.begin(), fmt.end(), Parity::Odd)), i);
  Dims rank{0, 0};
  for (Parity par : {Parity::Even, Parity::Odd}) {
    EchelonBasis eb;
    Indexer<Monomial> idx;
    std::vector<SparseVec> images;
    for (auto j : vars)
      for (const auto& m : monomials_of_weight(*spec, vars, standard_weights(*spec), i + 1)) {
        if (m.parity(*spec) + spec->parity(j) != par) continue;
        SPoly div = divergence(VectorField::term(SPoly::monomial(spec, m), j));
        std::map<std::uint32_t, Rational> v;
        for (const auto& [mm, c] : div.terms()) v[idx(mm)] = c;
        if (eb.insert(to_sparse(v))) (par == Parity::Even ? rank.first : rank.second) += 1;
      }
  }
  return {full.first - rank.first, full.second - rank.second};
}

void expect_dims_match(const ProlongResult& a, const ProlongResult& b) {
  ASSERT_EQ(a.components.size(), b.components.size());
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    EXPECT_EQ(a.components[k].degree, b.components[k].degree);
    EXPECT_EQ(dims_of(a.components[k]), dims_of(b.components[k])) << "degree " << a.components[k].degree;
  }
}

Dims table_dims(const DimTable& t, int d) {
  for (const auto& r : t.rows)
    if (r.degree == d) return {r.even, r.odd};
  throw AlgebraError("degree not in table");
}

}  // namespace

TEST(FieldProlong, GlProlongIsAllFields) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    auto fmt = standard_format(m, n);
    auto r = field_prolong(gl_basis(fmt), fmt, 2);
    for (int i = -1; i <= 2; ++i) EXPECT_EQ(dims_of(r.at(i)), vect_count(m, n, i)) << m << "|" << n << " deg " << i;
  }
  auto r = field_prolong(gl_basis(standard_format(1, 1)), standard_format(1, 1), 1);
  EXPECT_EQ(dims_of(r.at(1)), Dims(2, 2));
}

TEST(FieldProlong, Sp2GivesHamiltonianFields) {
  auto r = field_prolong(osp_skew_basis(0, 1), standard_format(2, 0), 4);
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(dims_of(r.at(i)), Dims(i + 3, 0));
  EXPECT_FALSE(r.vanishing_degree);
}

TEST(FieldProlong, SlGivesDivergenceFreeFields) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {0, 2}}) {
    auto fmt = standard_format(m, n);
    auto r = field_prolong(sl_basis(fmt), fmt, 3);
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(dims_of(r.at(i)), svect_count(fmt, i)) << m << "|" << n << " deg " << i;
  }
}

TEST(FieldProlong, SkewOrthosymplecticGivesPoissonFields) {
  // osp^sk(1|2) on (2|1): degree i holds the functions of degree i + 2 in (2|1)
  auto r = field_prolong(osp_skew_basis(1, 1), standard_format(2, 1), 3);
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(dims_of(r.at(i)), monomial_count(2, 1, i + 2)) << i;
}

TEST(FieldProlong, FiniteProlongsTerminate) {
  for (auto side : {ActionSide::Vectors, ActionSide::Coordinates}) {
    auto o = field_prolong(osp_basis(1, 1), standard_format(1, 2), 3, side);
    ASSERT_TRUE(o.vanishing_degree);
    EXPECT_EQ(*o.vanishing_degree, 1);
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(dims_of(o.at(i)), Dims(0, 0));
  }
  for (int n = 1; n <= 2; ++n) {
    auto sy = field_prolong(pe_basis(n, false), standard_format(n, n), 3, ActionSide::Coordinates);
    EXPECT_TRUE(sy.vanishing_degree) << n;
    auto sk = field_prolong(pe_basis(n, true), standard_format(n, n), 3, ActionSide::Vectors);
    EXPECT_TRUE(sk.vanishing_degree) << n;
  }
}

TEST(FieldProlong, PeriplecticGivesLe) {
  for (int n = 1; n <= 2; ++n) {
    auto fmt = standard_format(n, n);
    auto le = graded_dim_table(DimAlgebra::Le, n, DeformParams::from_lambda(0), PericontactGrading::Standard, -1, 3);
    auto coord = field_prolong(pe_basis(n, true), fmt, 3, ActionSide::Coordinates);
    auto vec = field_prolong(pe_basis(n, false), fmt, 3, ActionSide::Vectors);
    for (int i = -1; i <= 3; ++i) {
      EXPECT_EQ(dims_of(coord.at(i)), table_dims(le, i)) << n << " deg " << i;
      EXPECT_EQ(dims_of(vec.at(i)), table_dims(le, i)) << n << " deg " << i;
    }
  }
}

TEST(FieldProlong, SpecialPeriplecticGivesSle) {
  for (int n = 1; n <= 2; ++n) {
    auto fmt = standard_format(n, n);
    auto sle = graded_dim_table(DimAlgebra::Sle, n, DeformParams::from_lambda(0), PericontactGrading::Standard, -1, 3);
    auto spe_sk = contragredient(spe_basis(n));
    for (const auto& X : spe_sk) {
      EXPECT_TRUE(in_span(pe_basis(n, true), X));
      EXPECT_EQ(supertrace(X), 0);
    }
    auto r = field_prolong(spe_sk, fmt, 3, ActionSide::Coordinates);
    for (int i = -1; i <= 3; ++i) EXPECT_EQ(dims_of(r.at(i)), table_dims(sle, i)) << n << " deg " << i;
  }
}

TEST(FieldProlong, LinearPartOfLeIsPeriplectic) {
  PericontactContext ctx(2);
  auto fmt = standard_format(2, 2);
  std::vector<std::size_t> vars = ctx.qxi();
  for (const auto& m : monomials_of_weight(*ctx.spec(), vars, standard_weights(*ctx.spec()), 2)) {
    VectorField d = Le_field(SPoly::monomial(ctx.spec(), m), ctx);
    EXPECT_TRUE(in_span(pe_basis(2, false), matrix_of_linear_field(d, fmt, vars)));
  }
}

TEST(FieldProlong, ZeroG0HasZeroProlong) {
  auto fmt = standard_format(2, 1);
  auto f = field_prolong(std::vector<SuperMatrix>{}, fmt, 2);
  auto a = abstract_prolong({fmt, {}}, 2);
  for (const auto* r : {&f, &a}) {
    ASSERT_TRUE(r->vanishing_degree);
    EXPECT_EQ(*r->vanishing_degree, 1);
    EXPECT_EQ(dims_of(r->at(2)), Dims(0, 0));
  }
}

TEST(FieldProlong, RejectsNonClosedG0) {
  auto fmt = standard_format(2, 0);
  SuperMatrix e12 = SuperMatrix::unit(fmt, 0, 1), e21 = SuperMatrix::unit(fmt, 1, 0);
  EXPECT_THROW(field_prolong(std::vector<SuperMatrix>{e12, e21}, fmt, 1), AlgebraError);
  EXPECT_NO_THROW(field_prolong(std::vector<SuperMatrix>{e12}, fmt, 1));
}

TEST(FieldProlong, ComponentsCloseUnderBracket) {
  auto f11 = standard_format(1, 1), f21 = standard_format(2, 1);
  std::vector<ProlongResult> rs;
  rs.push_back(field_prolong(gl_basis(f11), f11, 3));
  rs.push_back(field_prolong(sl_basis(f21), f21, 2));
  rs.push_back(field_prolong(osp_basis(1, 1), standard_format(1, 2), 3));
  rs.push_back(field_prolong(pe_basis(2, false), standard_format(2, 2), 2));
  rs.push_back(depth_prolong(DepthKind::Hei, 1, 1, std::nullopt, 2));
  rs.push_back(depth_prolong(DepthKind::Ab, 1, 0, std::nullopt, 2));
  for (const auto& r : rs) EXPECT_TRUE(prolong_closure_defects(r).empty());
}

TEST(AbstractProlong, AgreesWithFieldProlong) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {0, 2}, {2, 2}}) {
    auto fmt = standard_format(m, n);
    expect_dims_match(abstract_prolong({fmt, gl_basis(fmt)}, 2), field_prolong(gl_basis(fmt), fmt, 2));
    expect_dims_match(abstract_prolong({fmt, sl_basis(fmt)}, 2), field_prolong(sl_basis(fmt), fmt, 2));
  }
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
    expect_dims_match(abstract_prolong({standard_format(m, 2 * n), osp_basis(m, n)}, 2),
                      field_prolong(osp_basis(m, n), standard_format(m, 2 * n), 2));
    expect_dims_match(abstract_prolong({standard_format(2 * n, m), osp_skew_basis(m, n)}, 2),
                      field_prolong(osp_skew_basis(m, n), standard_format(2 * n, m), 2));
  }
  for (int n = 1; n <= 2; ++n)
    for (bool skew : {false, true}) {
      auto fmt = standard_format(n, n);
      expect_dims_match(abstract_prolong({fmt, pe_basis(n, skew)}, 2), field_prolong(pe_basis(n, skew), fmt, 2));
    }
}

TEST(AbstractProlong, ComponentsAreClosed) {
  auto fmt = standard_format(2, 2);
  EXPECT_TRUE(prolong_closure_defects(abstract_prolong({fmt, sl_basis(fmt)}, 2)).empty());
  EXPECT_TRUE(prolong_closure_defects(abstract_prolong(lambda_density_action(2, frac(1, 3)).action, 2)).empty());
}

TEST(Densities, ZeroWeightIsFunctionModule) {
  auto da = lambda_density_action(2, 0);
  for (std::size_t k = 0; k < da.fields.size(); ++k) {
    const auto& A = da.action.g0[k];
    for (std::size_t c = 0; c < da.module_basis.size(); ++c) {
      SPoly img = apply(da.fields[k], SPoly::monomial(da.xi_spec, da.module_basis[c]));
      for (std::size_t r = 0; r < da.module_basis.size(); ++r) EXPECT_EQ(A(r, c), img.coeff(da.module_basis[r]));
    }
  }
  // basis vector xi^S vol has parity |S| + 1
  EXPECT_EQ(da.action.format[0], Parity::Odd);
  EXPECT_EQ(da.action.format[1], Parity::Even);
  EXPECT_EQ(da.action.format[3], Parity::Odd);
}

TEST(Densities, EulerFieldEigenvalue) {
  for (auto lambda : {frac(1, 3), frac(-2, 5), Rational(2)}) {
    auto da = lambda_density_action(2, lambda);
    VectorField d = VectorField::term(SPoly::variable(da.xi_spec, "xi1"), da.xi_spec->index("xi1"));
    SuperMatrix A = density_matrix(d, lambda, da.xi_spec, da.module_basis, da.action.format);
    // Div(xi1 d/dxi1) = -1, so vol^lambda has eigenvalue -lambda
    EXPECT_EQ(A(0, 0), -lambda);
    for (std::size_t r = 1; r < A.size(); ++r) EXPECT_EQ(A(r, 0), 0);
  }
}

TEST(Densities, ActionIsRepresentation) {
  for (auto lambda : {frac(1, 3), frac(1, 2), Rational(-3)}) {
    auto da = lambda_density_action(2, lambda);
    for (std::size_t a = 0; a < da.fields.size(); ++a)
      for (std::size_t b = 0; b < da.fields.size(); ++b) {
        SuperMatrix lhs = density_matrix(bracket(da.fields[a], da.fields[b]), lambda, da.xi_spec, da.module_basis,
                                         da.action.format);
        EXPECT_EQ(lhs, supercommutator(da.action.g0[a], da.action.g0[b])) << a << "," << b;
      }
  }
}

TEST(Densities, ProlongMatchesDeformedBracket) {
  for (auto lambda : {frac(1, 3), frac(2, 3)}) {
    auto r = abstract_prolong(lambda_density_action(2, lambda).action, 2);
    auto t = graded_dim_table(DimAlgebra::BLambda, 2, DeformParams::from_lambda(lambda), PericontactGrading::Regraded,
                              -1, 2);
    for (int i = -1; i <= 2; ++i) EXPECT_EQ(dims_of(r.at(i)), table_dims(t, i)) << lambda << " deg " << i;
  }
}

TEST(Densities, HalfDensitiesGivePoissonDims) {
  auto r = abstract_prolong(lambda_density_action(2, frac(1, 2)).action, 3);
  for (int i = -1; i <= 3; ++i) EXPECT_EQ(dims_of(r.at(i)), monomial_count(2, 2, i + 2)) << i;
}

TEST(DepthProlong, MatchesContactGeneratingFunctions) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 0}, {0, 2}, {1, 1}}) {
    auto r = depth_prolong(DepthKind::Hei, n, m, std::nullopt, 3);
    for (int d = -2; d <= 3; ++d) {
      EXPECT_EQ(dims_of(r.at(d)), contact_function_count(n, m, d + 2)) << n << "|" << m << " deg " << d;
      EXPECT_EQ(dims_of(r.at(d)), generating_dims(DepthKind::Hei, n, m, d));
    }
  }
  EXPECT_EQ(dims_of(depth_prolong(DepthKind::Hei, 1, 0, std::nullopt, 0).at(0)), Dims(4, 0));
}

TEST(DepthProlong, MatchesPericontactGeneratingFunctions) {
  for (int n = 1; n <= 2; ++n) {
    auto r = depth_prolong(DepthKind::Ab, n, 0, std::nullopt, 2);
    EXPECT_EQ(dims_of(r.at(-2)), Dims(0, 1));
    EXPECT_EQ(dims_of(r.at(-1)), Dims(n, n));
    for (int d = -2; d <= 2; ++d) {
      // odd tau has weight 2; the field parity is that of the function plus one
      Dims f{0, 0};
      for (int a = 0; a <= 1; ++a) {
        Dims c = monomial_count(n, n, d + 2 - 2 * a);
        f.first += a ? c.first : c.second;
        f.second += a ? c.second : c.first;
      }
      EXPECT_EQ(dims_of(r.at(d)), f) << n << " deg " << d;
      EXPECT_EQ(dims_of(r.at(d)), generating_dims(DepthKind::Ab, n, 0, d));
    }
  }
}

TEST(DepthProlong, SubalgebraOfConformalPart) {
  ContactContext ctx(1, 0, ContactVariant::Theta);
  std::vector<VectorField> g0{K_field(ctx.var(ctx.t()), ctx)};
  auto r = depth_prolong(DepthKind::Hei, 1, 0, g0, 2);
  EXPECT_EQ(dims_of(r.at(0)), Dims(1, 0));
  EXPECT_TRUE(r.vanishing_degree);
}

TEST(DepthProlong, RejectsG0OutsideConformalPart) {
  ContactContext ctx(1, 0, ContactVariant::Theta);
  VectorField bad = VectorField::term(ctx.var(ctx.p()[0]), ctx.p()[0]);
  EXPECT_THROW(depth_prolong(DepthKind::Hei, 1, 0, std::vector<VectorField>{bad}, 1), AlgebraError);
  PericontactContext pctx(1);
  VectorField bad2 = VectorField::term(pctx.var(pctx.q()[0]), pctx.q()[0]);
  EXPECT_THROW(depth_prolong(DepthKind::Ab, 1, 0, std::vector<VectorField>{bad2}, 1), AlgebraError);
}

TEST(Weights, Examples) {
  auto v = weight_assignment(Series::Vect, 1, 1, 1);
  EXPECT_EQ(v.weights[v.spec->index("u1")], 1);
  EXPECT_EQ(v.weights[v.spec->index("xi1")], 0);

  auto k = weight_assignment(Series::K, 0, 4, 2);
  EXPECT_EQ(k.weights[k.spec->index("t")], 1);
  for (auto name : {"xi1", "xi2"}) EXPECT_EQ(k.weights[k.spec->index(name)], 1);
  for (auto name : {"eta1", "eta2"}) EXPECT_EQ(k.weights[k.spec->index(name)], 0);

  auto k2 = weight_assignment(Series::K, 1, 3, 1);
  EXPECT_EQ(k2.weights[k2.spec->index("t")], 2);
  EXPECT_EQ(k2.weights[k2.spec->index("xi1")], 2);
  EXPECT_EQ(k2.weights[k2.spec->index("eta1")], 0);
  EXPECT_EQ(k2.weights[k2.spec->index("theta")], 1);
  EXPECT_EQ(k2.weights[k2.spec->index("p1")], 1);

  auto po = weight_assignment(Series::Po, 1, 4, 1);
  EXPECT_EQ(po.weights[po.spec->index("xi1")], 0);
  EXPECT_EQ(po.weights[po.spec->index("eta1")], 2);
  EXPECT_EQ(po.weights[po.spec->index("xi2")], 1);
  EXPECT_EQ(po.weights[po.spec->index("q1")], 1);

  auto mn = weight_assignment(Series::M, 2, 0, 2);
  EXPECT_EQ(mn.weights[mn.spec->index("tau")], 1);
  EXPECT_EQ(mn.weights[mn.spec->index("q2")], 1);
  EXPECT_EQ(mn.weights[mn.spec->index("xi2")], 0);
  auto m3 = weight_assignment(Series::M, 4, 0, 1);
  EXPECT_EQ(m3.weights[m3.spec->index("q1")], 2);
  EXPECT_EQ(m3.weights[m3.spec->index("xi1")], 0);
  EXPECT_EQ(m3.weights[m3.spec->index("q2")], 1);
  EXPECT_EQ(m3.weights[m3.spec->index("tau")], 2);
}

TEST(Weights, RejectedValues) {
  EXPECT_THROW(weight_assignment(Series::M, 3, 0, 2), AlgebraError);
  EXPECT_THROW(weight_assignment(Series::K, 0, 4, 1), AlgebraError);
  EXPECT_THROW(weight_assignment(Series::Vect, 1, 1, 2), AlgebraError);
  EXPECT_NO_THROW(weight_assignment(Series::M, 1, 0, 0));
  EXPECT_NO_THROW(weight_assignment(Series::K, 0, 2, 0));
}

TEST(Weights, BracketsAreHomogeneous) {
  auto check = [](const WeightedRealization& wr, const std::function<SPoly(const SPoly&, const SPoly&)>& br) {
    auto mons = monomials_up_to(*wr.spec, wr.spec->indeterminates(), 3);
    int bad = 0;
    for (const auto& a : mons)
      for (const auto& b : mons) {
        SPoly f = SPoly::monomial(wr.spec, a), g = SPoly::monomial(wr.spec, b);
        SPoly h = br(f, g);
        if (h.is_zero()) continue;
        auto parts = weight_split(h, wr.weights);
        if (parts.size() != 1 || parts.begin()->first != deg(f, wr.weights) + deg(g, wr.weights) - wr.shift) ++bad;
      }
    return bad;
  };
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 0}, {2, 2}, {3, 1}, {3, 3}}) {
    PericontactContext ctx(n);
    auto wr = weight_assignment(Series::M, n, 0, r);
    EXPECT_EQ(check(wr, [&](const SPoly& f, const SPoly& g) { return pericontact_bracket(f, g, ctx); }), 0) << n << r;
  }
  for (auto [n, m, r] : std::vector<std::tuple<int, int, int>>{{1, 2, 1}, {0, 4, 2}, {1, 3, 1}, {0, 2, 1}}) {
    ContactContext ctx(n, m, ContactVariant::XiEta);
    auto wr = weight_assignment(Series::K, n, m, r);
    EXPECT_EQ(check(wr, [&](const SPoly& f, const SPoly& g) { return contact_bracket(f, g, ctx); }), 0) << n << m << r;
  }
  for (auto [n, m, r] : std::vector<std::tuple<int, int, int>>{{1, 2, 1}, {1, 4, 2}}) {
    auto ctx = ContactContext::symplectic(n, m, ContactVariant::XiEta);
    auto wr = weight_assignment(Series::Po, n, m, r);
    EXPECT_EQ(check(wr, [&](const SPoly& f, const SPoly& g) { return poisson(f, g, ctx); }), 0) << n << m << r;
  }
}

TEST(Weights, WrongWeightsAreDetected) {
  PericontactContext ctx(2);
  auto wr = weight_assignment(Series::M, 2, 0, 2);
  wr.weights[ctx.xi()[0]] = 1;  // breaks the pairing with q1
  int bad = 0;
  for (const auto& a : monomials_up_to(*wr.spec, wr.spec->indeterminates(), 2))
    for (const auto& b : monomials_up_to(*wr.spec, wr.spec->indeterminates(), 2)) {
      SPoly f = SPoly::monomial(wr.spec, a), g = SPoly::monomial(wr.spec, b);
      SPoly h = pericontact_bracket(f, g, ctx);
      if (h.is_zero()) continue;
      auto parts = weight_split(h, wr.weights);
      if (parts.size() != 1 || parts.begin()->first != deg(f, wr.weights) + deg(g, wr.weights) - wr.shift) ++bad;
    }
  EXPECT_GT(bad, 0);
}

TEST(Bbar, GradingByOddDegree) {
  for (int n = 2; n <= 3; ++n) {
    auto c = bbar_check(n, frac(1, 3), 2);
    EXPECT_TRUE(c.graded) << n;
    ASSERT_EQ(c.dims.size(), static_cast<std::size_t>(n + 1));
    long qcount = binom(2 + n, n);
    for (const auto& [i, d] : c.dims) {
      long total = binom(n, i + 1) * qcount;
      // field parity i
      EXPECT_EQ(i % 2 == 0 ? d.first : d.second, total) << n << " " << i;
      EXPECT_EQ(i % 2 == 0 ? d.second : d.first, 0);
    }
  }
}
