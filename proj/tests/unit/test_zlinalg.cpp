#include <gtest/gtest.h>

#include <random>

#include "dense_oracles.hpp"
#include "ihsig/zlinalg.hpp"

using namespace ihsig;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                        int density_percent, int range) {
  std::uniform_int_distribution<int> pct(0, 99), val(-range, range);
  std::vector<std::vector<long>> d(r, std::vector<long>(c, 0));
  for (auto& row : d)
    for (auto& x : row)
      if (pct(rng) < density_percent) x = val(rng);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (d[i][j]) m.set(i, j, d[i][j]);
  return m;
}

oracle::Dense dense(const IntMatrix& m) { return m.to_dense(); }

void expect_valid_snf(const IntMatrix& a) {
  SNFResult r = smith_normal_form(a);
  EXPECT_EQ(r.U * a * r.V, r.S);
  EXPECT_EQ(r.U * r.U_inverse, IntMatrix::identity(a.rows()));
  EXPECT_EQ(r.V * r.V_inverse, IntMatrix::identity(a.cols()));
  EXPECT_EQ(abs(oracle::determinant(dense(r.U))), 1);
  EXPECT_EQ(abs(oracle::determinant(dense(r.V))), 1);
  for (std::size_t k = 0; k + 1 < r.diagonal.size(); ++k)
    EXPECT_TRUE(mpz_divisible_p(r.diagonal[k + 1].get_mpz_t(),
                                r.diagonal[k].get_mpz_t()));
  EXPECT_EQ(r.rank, oracle::rank(dense(a)));
}

}  // namespace

TEST(Smith, EmptyMatrix) {
  SNFResult r = smith_normal_form(IntMatrix(0, 0));
  EXPECT_EQ(r.rank, 0u);
  EXPECT_EQ(r.S.rows(), 0u);
}

TEST(Smith, Identity) {
  SNFResult r = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(r.S, IntMatrix::identity(3));
}

TEST(Smith, TwoByTwo) {
  IntMatrix a = IntMatrix::from_dense<int>({{2, 4}, {6, 8}});
  SNFResult r = smith_normal_form(a);
  EXPECT_EQ(r.S, IntMatrix::from_dense<int>({{2, 0}, {0, 4}}));
  EXPECT_EQ(r.diagonal[0] * r.diagonal[1], abs(oracle::determinant(dense(a))));
  expect_valid_snf(a);
}

TEST(Smith, RandomAgainstDeterminantalDivisors) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix a = random_matrix(rng, r, c, 60, 6);
    expect_valid_snf(a);
    auto ours = invariant_factors(a);
    auto want = oracle::invariant_factors_by_minors(dense(a));
    ASSERT_EQ(ours.size(), want.size());
    for (std::size_t k = 0; k < ours.size(); ++k) EXPECT_EQ(ours[k], want[k]);
  }
}

TEST(Smith, LargerSparseReconstruction) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    IntMatrix a = random_matrix(rng, 30, 25, 12, 4);
    expect_valid_snf(a);
  }
}

TEST(Homology, Circle) {
  // vertices 0,1,2; edges 01,02,12
  IntMatrix d1 = IntMatrix::from_dense<int>({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
  IntMatrix d2(3, 0);
  EXPECT_EQ(homology_z(d1, d2), (HomologyGroup{1, {}}));
  IntMatrix d0(0, 3);
  EXPECT_EQ(homology_z(d0, d1), (HomologyGroup{1, {}}));
}

TEST(Homology, Point) {
  EXPECT_EQ(homology_z(IntMatrix(0, 1), IntMatrix(1, 0)), (HomologyGroup{1, {}}));
}

TEST(Homology, CompositionNonzero) {
  IntMatrix d1 = IntMatrix::from_dense<int>({{1}});
  IntMatrix d2 = IntMatrix::from_dense<int>({{1}});
  EXPECT_THROW(homology_z(d1, d2), CompositionNonzero);
}

TEST(Homology, TorsionFromMultiplication) {
  // 0 -> Z --2--> Z -> 0 has H_0 = Z/2 at the bottom.
  IntMatrix d0(0, 1);
  IntMatrix d1 = IntMatrix::from_dense<int>({{2}});
  EXPECT_EQ(homology_z(d0, d1), (HomologyGroup{0, {Integer(2)}}));
}

TEST(Solve, TrivialCases) {
  IntMatrix b(3, 0);
  std::vector<IntVector> gens{IntVector::unit(0), IntVector::unit(2)};
  auto zero = solve_modulo_image(IntVector{}, gens, b, Field::Z);
  ASSERT_TRUE(zero);
  EXPECT_EQ(*zero, (std::vector<Rational>{0, 0}));
  auto e0 = solve_modulo_image(gens[0], gens, b, Field::Q);
  ASSERT_TRUE(e0);
  EXPECT_EQ(*e0, (std::vector<Rational>{1, 0}));
}

TEST(Solve, GeneratorPlusBoundaryOverZ) {
  IntMatrix b(3, 0);
  b.append_column(IntVector::unit(0, Integer(2)));
  std::vector<IntVector> gens{IntVector::from_pairs({{1, Integer(1)}, {2, Integer(1)}})};
  IntVector target = gens[0] + b.column(0);
  auto c = solve_modulo_image(target, gens, b, Field::Z);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (std::vector<Rational>{1}));
  // e0 is not in the lattice spanned by generators and B over Z...
  IntVector half = IntVector::unit(0, Integer(1));
  EXPECT_FALSE(solve_modulo_image(half, gens, b, Field::Z));
  // ...but e0 is reachable over Q.
  EXPECT_TRUE(solve_modulo_image(half, gens, b, Field::Q));
}

TEST(Solve, DimensionMismatch) {
  IntMatrix b(2, 0);
  EXPECT_THROW(solve_modulo_image(IntVector::unit(5), {}, b, Field::Q),
               DimensionMismatch);
}

TEST(Solve, RationalSolvabilityMatchesDenseRank) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 2 + rng() % 6;
    IntMatrix b = random_matrix(rng, n, rng() % 4, 50, 3);
    IntMatrix g = random_matrix(rng, n, rng() % 3, 50, 3);
    IntMatrix t = random_matrix(rng, n, 1, 50, 3);
    std::vector<IntVector> gens(g.columns().begin(), g.columns().end());
    auto sol = solve_modulo_image(t.column(0), gens, b, Field::Q);
    IntMatrix stacked(n, 0), augmented(n, 0);
    for (const auto& c : b.columns()) stacked.append_column(c);
    for (const auto& c : gens) stacked.append_column(c);
    augmented = stacked;
    augmented.append_column(t.column(0));
    bool solvable = oracle::rank(dense(stacked)) == oracle::rank(dense(augmented));
    EXPECT_EQ(sol.has_value(), solvable);
    if (sol) {
      RatVector lhs = t.column(0).cast<Rational>();
      for (std::size_t j = 0; j < gens.size(); ++j)
        lhs.add_scaled(-(*sol)[j], gens[j].cast<Rational>());
      IntMatrix bz = b;
      EXPECT_TRUE(solve_modulo_image(IntVector{}, {}, bz, Field::Q));
      EchelonBasis<Rational> span;
      for (const auto& c : b.columns()) span.insert(c.cast<Rational>());
      EXPECT_TRUE(span.contains(lhs));
    }
  }
}

TEST(Solve, Saturation) {
  IntMatrix b(2, 0);
  b.append_column(IntVector::unit(0, Integer(2)));
  std::vector<IntVector> gens{IntVector::unit(1)};
  IntVector target = IntVector::from_pairs({{0, Integer(1)}, {1, Integer(3)}});
  EXPECT_FALSE(solve_modulo_image(target, gens, b, Field::Z));
  auto c = solve_modulo_saturation(target, gens, b);
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[0], 3);
}

TEST(Kernel, LatticeBasis) {
  IntMatrix a = IntMatrix::from_dense<int>({{2, 4, 6}});
  auto k = kernel_basis(a);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_TRUE(a.apply(v).empty());
  // The kernel basis spans the full kernel lattice: (1,1,-1) is reachable.
  EchelonBasis<Integer> lat;
  for (const auto& v : k) lat.insert(v);
  EXPECT_TRUE(lat.contains(IntVector::from_pairs({{0, Integer(1)}, {1, Integer(1)}, {2, Integer(-1)}})));
}
