#include <gtest/gtest.h>

#include "superlie/matsuper.hpp"
#include "superlie/parse.hpp"
#include "superlie/random.hpp"

using namespace superlie;

namespace {

SuperMatrix random_matrix(RandomPolys& rp, const Format& f, Parity p) {
  SuperMatrix x(f);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if ((f[i] + f[j]) == p && rp.uniform(0, 2)) x(i, j) = rp.coefficient();
  return x;
}

/// Random element of a span, homogeneous when the basis is.
SuperMatrix random_combination(RandomPolys& rp, const std::vector<SuperMatrix>& basis, Parity p) {
  SuperMatrix x(basis.front().format());
  for (const auto& b : basis)
    if (b.parity() == p && rp.uniform(0, 1)) x += b * rp.coefficient();
  return x;
}

/// Supertranspose entry by entry, written out per block of a standard format.
SuperMatrix supertranspose_blocks(const SuperMatrix& A, int m) {
  Parity pa = A.parity();
  SuperMatrix r(A.format());
  const std::size_t M = static_cast<std::size_t>(m);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j) {
      bool ie = i < M, je = j < M;
      int s = 1;
      if (ie != je) {
        // off-diagonal blocks: sign (-1)^{p_i + p(A)}
        bool pi_odd = !ie;
        if (pi_odd != (pa == Parity::Odd)) s = -1;
      }
      r(i, j) = A(j, i) * Rational(s);
    }
  return r;
}

Rational R(long n, long d = 1) { return frac(n, d); }

TEST(SuperMatrix, PartsAndParity) {
  Format f = standard_format(1, 1);
  auto x = SuperMatrix::from_rows(f, {{R(1), R(2)}, {R(3), R(4)}});
  EXPECT_EQ(x.part(Parity::Even) + x.part(Parity::Odd), x);
  EXPECT_FALSE(x.parity_if_homogeneous());
  EXPECT_EQ(x.part(Parity::Odd).parity(), Parity::Odd);
  EXPECT_THROW(x.parity(), AlgebraError);
  EXPECT_THROW(SuperMatrix::from_rows(f, {{R(1)}}), AlgebraError);
}

TEST(Supertranspose, EvenDiagonalIsPlainTranspose) {
  Format f = standard_format(2, 2);
  SuperMatrix d(f);
  for (std::size_t i = 0; i < 4; ++i) d(i, i) = R(static_cast<long>(i) + 1);
  EXPECT_EQ(supertranspose(d), d);
  SuperMatrix e = SuperMatrix::unit(f, 0, 1) + SuperMatrix::unit(f, 3, 2) * R(5);
  EXPECT_EQ(supertranspose(e), e.transpose());
}

TEST(Supertranspose, MatchesBlockSigns) {
  RandomPolys rp(1);
  for (int m : {1, 2, 3})
    for (int n : {1, 2}) {
      Format f = standard_format(m, n);
      for (int it = 0; it < 10; ++it)
        for (Parity p : {Parity::Even, Parity::Odd}) {
          SuperMatrix x = random_matrix(rp, f, p);
          if (x.is_zero()) continue;
          EXPECT_EQ(supertranspose(x), supertranspose_blocks(x, m));
        }
    }
}

TEST(Supertranspose, TwiceNegatesOffDiagonalBlocks) {
  // for either parity, applying the rule twice negates both off-diagonal blocks
  RandomPolys rp(2);
  Format f = standard_format(2, 2);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    SuperMatrix x = random_matrix(rp, f, p);
    SuperMatrix twice = supertranspose_blocks(supertranspose_blocks(x, 2), 2);
    EXPECT_EQ(supertranspose(supertranspose(x)), twice);
    SuperMatrix expect(f);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) expect(i, j) = ((i < 2) == (j < 2)) ? x(i, j) : Rational(-x(i, j));
    EXPECT_EQ(twice, expect);
  }
}

TEST(Supertranspose, AntiAutomorphismSign) {
  // ([X, Y])^st = -[X^st, Y^st]
  RandomPolys rp(3);
  for (int m : {1, 2, 3})
    for (int n : {1, 2, 4}) {
      Format f = standard_format(m, n);
      for (int it = 0; it < 8; ++it) {
        SuperMatrix X = random_matrix(rp, f, rp.parity()), Y = random_matrix(rp, f, rp.parity());
        EXPECT_EQ(supertranspose(supercommutator(X, Y)),
                  -supercommutator(supertranspose(X), supertranspose(Y)));
      }
    }
}

TEST(Supertrace, Examples) {
  EXPECT_EQ(supertrace(SuperMatrix::identity(standard_format(3, 2))), R(1));
  EXPECT_EQ(supertrace(SuperMatrix::identity(standard_format(1, 4))), R(-3));
  Format mixed{Parity::Odd, Parity::Even, Parity::Odd};
  EXPECT_EQ(supertrace(SuperMatrix::identity(mixed)), R(-1));
}

TEST(Supertrace, VanishesOnCommutators) {
  RandomPolys rp(4);
  for (const Format& f : {standard_format(2, 2), standard_format(3, 1), Format{Parity::Odd, Parity::Even, Parity::Odd}})
    for (int it = 0; it < 30; ++it) {
      SuperMatrix X = random_matrix(rp, f, rp.parity()), Y = random_matrix(rp, f, rp.parity());
      EXPECT_EQ(supertrace(supercommutator(X, Y)), R(0));
    }
}

TEST(Queertrace, Examples) {
  SuperMatrix x(standard_format(2, 2));
  x(0, 2) = x(1, 3) = x(2, 0) = x(3, 1) = 1;
  EXPECT_TRUE(q_member(x, 2));
  EXPECT_EQ(queertrace(x), R(2));
  EXPECT_THROW(queertrace(SuperMatrix(standard_format(2, 1))), AlgebraError);
}

TEST(Queer, BlockPattern) {
  RandomPolys rp(5);
  for (int n : {1, 2, 3}) {
    for (int it = 0; it < 10; ++it) {
      std::vector<Rational> A(static_cast<std::size_t>(n * n)), B(A.size());
      for (auto& a : A) a = rp.coefficient();
      for (auto& b : B) b = rp.coefficient();
      const std::size_t N = static_cast<std::size_t>(n);
      SuperMatrix x = block_matrix(n, n, [&](std::size_t i, std::size_t j) {
        const auto& blk = ((i < N) == (j < N)) ? A : B;
        return blk[(i % N) * N + (j % N)];
      });
      EXPECT_TRUE(q_member(x, n));
    }
    EXPECT_TRUE(q_member(SuperMatrix::identity(standard_format(n, n)), n));
    // J is odd and J^2 = -1, so [J, J] = 2 J^2 != 0
    EXPECT_FALSE(q_member(J_matrix(n), n));
    SuperMatrix g = random_matrix(rp, standard_format(n, n), Parity::Even) + SuperMatrix::unit(standard_format(n, n), 0, 0);
    EXPECT_FALSE(q_member(g, n));
    EXPECT_EQ(superdimension(q_basis(n)), std::make_pair(n * n, n * n));
    EXPECT_EQ(superdimension(sq_basis(n)), std::make_pair(n * n, n * n - 1));
  }
}

TEST(Forms, Symmetry) {
  for (int m : {1, 2, 3})
    for (int n : {1, 2}) {
      EXPECT_TRUE(is_supersymmetric(canonical_form(FormKind::Even, m, n)));
      EXPECT_TRUE(is_supersymmetric(canonical_form(FormKind::EvenAnti, m, n)));
      EXPECT_TRUE(is_superskew(canonical_form(FormKind::EvenSkew, m, n)));
    }
  for (int n : {1, 2, 3}) {
    EXPECT_TRUE(is_supersymmetric(canonical_form(FormKind::Odd, 0, n)));
    EXPECT_TRUE(is_superskew(canonical_form(FormKind::OddSkew, 0, n)));
    EXPECT_FALSE(is_supersymmetric(canonical_form(FormKind::OddSkew, 0, n)));
  }
}

TEST(Forms, UpsettingIsAnInvolutionOnEvenForms) {
  RandomPolys rp(6);
  Format f = standard_format(2, 3);
  for (int it = 0; it < 20; ++it) {
    SuperMatrix b = random_matrix(rp, f, Parity::Even);
    EXPECT_EQ(upsetting(upsetting(b)), b);
  }
}

TEST(Aut, OrthosymplecticPattern) {
  // (E Y X^t; X A B; -Y^t C -A^t) with E in o(m) and B, C symmetric
  RandomPolys rp(7);
  for (int m : {1, 2, 3})
    for (int n : {1, 2}) {
      const std::size_t M = static_cast<std::size_t>(m), N = static_cast<std::size_t>(n);
      std::vector<std::vector<Rational>> E(M, std::vector<Rational>(M)), Xb(N, std::vector<Rational>(M)),
          Yb(M, std::vector<Rational>(N)), A(N, std::vector<Rational>(N)), B = A, C = A;
      for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = i + 1; j < M; ++j) {
          E[i][j] = rp.coefficient();
          E[j][i] = -E[i][j];
        }
      for (auto& row : Xb)
        for (auto& v : row) v = rp.coefficient();
      for (auto& row : Yb)
        for (auto& v : row) v = rp.coefficient();
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
          A[i][j] = rp.coefficient();
          if (j >= i) {
            B[i][j] = B[j][i] = rp.coefficient();
            C[i][j] = C[j][i] = rp.coefficient();
          }
        }
      SuperMatrix x = block_matrix(m, 2 * n, [&](std::size_t i, std::size_t j) -> Rational {
        int bi = i < M ? 0 : (i < M + N ? 1 : 2), bj = j < M ? 0 : (j < M + N ? 1 : 2);
        std::size_t a = bi == 0 ? i : (bi == 1 ? i - M : i - M - N);
        std::size_t b = bj == 0 ? j : (bj == 1 ? j - M : j - M - N);
        if (bi == 0 && bj == 0) return E[a][b];
        if (bi == 0 && bj == 1) return Yb[a][b];
        if (bi == 0 && bj == 2) return Xb[b][a];
        if (bi == 1 && bj == 0) return Xb[a][b];
        if (bi == 1 && bj == 1) return A[a][b];
        if (bi == 1 && bj == 2) return B[a][b];
        if (bi == 2 && bj == 0) return -Yb[b][a];
        if (bi == 2 && bj == 1) return C[a][b];
        return -A[b][a];
      });
      EXPECT_TRUE(aut_member(x, canonical_form(FormKind::Even, m, n)));
      auto d = superdimension(osp_basis(m, n));
      EXPECT_EQ(d.first, m * (m - 1) / 2 + n * (2 * n + 1));
      EXPECT_EQ(d.second, 2 * m * n);
      EXPECT_EQ(superdimension(osp_skew_basis(m, n)), d);
    }
}

TEST(Aut, SkewOrthosymplecticPattern) {
  // (A B X; C -A^t Y^t; Y -X^t E) on (2n|m) with (A B; C -A^t) in sp(2n), E in o(m)
  RandomPolys rp(8);
  const int m = 2, n = 2;
  const std::size_t M = 2, N = 2;
  std::vector<std::vector<Rational>> A(N, std::vector<Rational>(N)), B = A, C = A, X(N, std::vector<Rational>(M)),
      Y(M, std::vector<Rational>(N)), E(M, std::vector<Rational>(M));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      A[i][j] = rp.coefficient();
      if (j >= i) {
        B[i][j] = B[j][i] = rp.coefficient();
        C[i][j] = C[j][i] = rp.coefficient();
      }
    }
  for (auto& r : X)
    for (auto& v : r) v = rp.coefficient();
  for (auto& r : Y)
    for (auto& v : r) v = rp.coefficient();
  E[0][1] = rp.coefficient();
  E[1][0] = -E[0][1];
  SuperMatrix x = block_matrix(2 * n, m, [&](std::size_t i, std::size_t j) -> Rational {
    int bi = i < N ? 0 : (i < 2 * N ? 1 : 2), bj = j < N ? 0 : (j < 2 * N ? 1 : 2);
    std::size_t a = bi == 0 ? i : (bi == 1 ? i - N : i - 2 * N);
    std::size_t b = bj == 0 ? j : (bj == 1 ? j - N : j - 2 * N);
    if (bi == 0 && bj == 0) return A[a][b];
    if (bi == 0 && bj == 1) return B[a][b];
    if (bi == 0 && bj == 2) return X[a][b];
    if (bi == 1 && bj == 0) return C[a][b];
    if (bi == 1 && bj == 1) return -A[b][a];
    if (bi == 1 && bj == 2) return Y[b][a];
    if (bi == 2 && bj == 0) return Y[a][b];
    if (bi == 2 && bj == 1) return -X[b][a];
    return E[a][b];
  });
  EXPECT_TRUE(aut_member(x, canonical_form(FormKind::EvenSkew, m, n)));
}

TEST(Aut, PeriplecticPatterns) {
  // (A B; C -A^t): B = -B^t, C = C^t for J_2n; B = B^t, C = -C^t for Pi_2n
  RandomPolys rp(9);
  for (int n : {1, 2, 3}) {
    const std::size_t N = static_cast<std::size_t>(n);
    for (bool skew : {false, true}) {
      std::vector<std::vector<Rational>> A(N, std::vector<Rational>(N)), B = A, C = A;
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
          A[i][j] = rp.coefficient();
          if (j > i || (j == i && skew)) {
            B[i][j] = rp.coefficient();
            B[j][i] = skew ? B[i][j] : Rational(-B[i][j]);
          }
          if (j > i || (j == i && !skew)) {
            C[i][j] = rp.coefficient();
            C[j][i] = skew ? Rational(-C[i][j]) : C[i][j];
          }
        }
      SuperMatrix x = block_matrix(n, n, [&](std::size_t i, std::size_t j) -> Rational {
        bool ti = i < N, tj = j < N;
        std::size_t a = i % N, b = j % N;
        if (ti && tj) return A[a][b];
        if (ti) return B[a][b];
        if (tj) return C[a][b];
        return -A[b][a];
      });
      SuperMatrix form = canonical_form(skew ? FormKind::OddSkew : FormKind::Odd, 0, n);
      EXPECT_TRUE(aut_member(x, form)) << "n=" << n << " skew=" << skew;
      EXPECT_EQ(superdimension(pe_basis(n, skew)), std::make_pair(n * n, n * n));
    }
  }
}

TEST(Aut, GenericMatrixFails) {
  RandomPolys rp(10);
  SuperMatrix B = canonical_form(FormKind::Even, 2, 1);
  for (int it = 0; it < 10; ++it) {
    SuperMatrix x = random_matrix(rp, B.format(), Parity::Even) + SuperMatrix::identity(B.format());
    EXPECT_FALSE(aut_member(x, B));
  }
}

TEST(Aut, ClosureUnderBracket) {
  RandomPolys rp(11);
  std::vector<SuperMatrix> forms{canonical_form(FormKind::Even, 3, 2), canonical_form(FormKind::EvenAnti, 3, 2),
                                 canonical_form(FormKind::EvenSkew, 1, 1), canonical_form(FormKind::Odd, 0, 3),
                                 canonical_form(FormKind::OddSkew, 0, 3), canonical_form(FormKind::Even, 2, 1)};
  for (const auto& B : forms) {
    auto basis = aut_basis(B);
    for (int it = 0; it < 20; ++it) {
      SuperMatrix x = random_combination(rp, basis, rp.parity()), y = random_combination(rp, basis, rp.parity());
      ASSERT_TRUE(aut_member(x, B));
      EXPECT_TRUE(aut_member(supercommutator(x, y), B));
    }
    EXPECT_FALSE(bracket_closure_witness(basis));
  }
}

TEST(Spe, Subalgebras) {
  for (int n : {1, 2, 3}) {
    auto spe = spe_basis(n);
    EXPECT_EQ(superdimension(spe), std::make_pair(n * n - 1, n * n));
    EXPECT_FALSE(bracket_closure_witness(spe));
    auto ab = spe_ab_basis(n, R(2), R(-1));
    EXPECT_EQ(ab.size(), spe.size() + 1);
    EXPECT_FALSE(bracket_closure_witness(ab));
    // a z + b d with z = 1, d = diag(1_n, -1_n)
    Format f = standard_format(n, n);
    SuperMatrix d(f);
    for (int i = 0; i < 2 * n; ++i) d(i, i) = i < n ? 1 : -1;
    EXPECT_TRUE(in_span(ab, SuperMatrix::identity(f) * R(2) + d * R(-1)));
    EXPECT_FALSE(in_span(spe, SuperMatrix::identity(f) * R(2) + d * R(-1)));
    // d lies in pe(n), z does not
    EXPECT_TRUE(aut_member(d, canonical_form(FormKind::Odd, 0, n)));
  }
  EXPECT_THROW(spe_ab_basis(2, 0, 0), AlgebraError);
}

TEST(Gl, Dimensions) {
  EXPECT_EQ(superdimension(gl_basis(standard_format(2, 3))), std::make_pair(13, 12));
  EXPECT_EQ(superdimension(sl_basis(standard_format(2, 3))), std::make_pair(12, 12));
  EXPECT_FALSE(bracket_closure_witness(sl_basis(standard_format(2, 1))));
}

TEST(LinearField, Homomorphism) {
  auto spec = parse_varspec("vars: q1,q2 even; x1,x2,x3 odd");
  std::vector<std::size_t> vars{0, 1, 2, 3, 4};
  Format f = standard_format(2, 3);
  RandomPolys rp(12);
  for (int it = 0; it < 60; ++it) {
    SuperMatrix X = random_matrix(rp, f, rp.parity()), Y = random_matrix(rp, f, rp.parity());
    EXPECT_EQ(bracket(linear_field(X, spec, vars), linear_field(Y, spec, vars)),
              linear_field(supercommutator(X, Y), spec, vars));
    EXPECT_EQ(matrix_of_linear_field(linear_field(X, spec, vars), f, vars), X);
    // X acts on the span of the partial derivatives by the matrix itself
    for (std::size_t j = 0; j < vars.size(); ++j) {
      VectorField col(spec);
      for (std::size_t i = 0; i < vars.size(); ++i)
        col += VectorField::partial(spec, vars[i]) * X(i, j);
      EXPECT_EQ(bracket(linear_field(X, spec, vars), VectorField::partial(spec, vars[j])), col);
    }
  }
  EXPECT_THROW(linear_field(SuperMatrix(standard_format(3, 2)), spec, vars), AlgebraError);
  EXPECT_THROW(matrix_of_linear_field(parse_field(spec, "q1^2*d/dq1"), f, vars), AlgebraError);
}

}  // namespace
