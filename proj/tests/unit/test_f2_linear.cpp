#include <gtest/gtest.h>

#include "brute.hpp"
#include "generators.hpp"
#include "realspin/error.hpp"
#include "realspin/f2_linear.hpp"

using namespace realspin;

namespace {

bool solves(const F2Matrix& a, const F2Vector& x, const F2Vector& b) { return a * x == b; }

}  // namespace

TEST(F2Vector, BasicOps) {
  F2Vector v{1, 0, 1, 1};
  EXPECT_EQ(v.size(), 4U);
  EXPECT_EQ(v.popcount(), 3U);
  EXPECT_TRUE(v.parity());
  v.flip(0);
  EXPECT_EQ(v, (F2Vector{0, 0, 1, 1}));
  EXPECT_TRUE((v + v).is_zero());
  EXPECT_EQ(v.to_bits(), (std::vector<int>{0, 0, 1, 1}));
}

TEST(F2Vector, WideVectorsCrossWordBoundary) {
  F2Vector v(130);
  v.set(63, true);
  v.set(64, true);
  v.set(129, true);
  EXPECT_EQ(v.popcount(), 3U);
  EXPECT_EQ(v.leading_index(), 63U);
  EXPECT_TRUE(v.dot(F2Vector::unit(130, 129)));
}

TEST(F2Vector, RejectsBadInput) {
  EXPECT_THROW((void)F2Vector::from_bits({0, 2}), Error);
  F2Vector v(3);
  EXPECT_THROW((void)v.get(3), Error);
  try {
    v += F2Vector(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(F2Vector, LexicographicOrderPutsIndexZeroFirst) {
  EXPECT_LT((F2Vector{0, 1, 1}), (F2Vector{1, 0, 0}));
  EXPECT_LT((F2Vector{1, 0, 0}), (F2Vector{1, 0, 1}));
}

TEST(SolveAffine, IdentityHasUniqueSolution) {
  auto s = gf2_solve_affine(F2Matrix::identity(2), F2Vector{1, 0});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, (F2Vector{1, 0}));
  EXPECT_TRUE(s->kernel_basis.empty());
}

TEST(SolveAffine, ZeroMapHasFullKernel) {
  auto s = gf2_solve_affine(F2Matrix::zero(1, 2), F2Vector{0});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, (F2Vector{0, 0}));
  EXPECT_EQ(s->kernel_basis.size(), 2U);
}

TEST(SolveAffine, SingleEquation) {
  const F2Matrix a(std::vector<F2Vector>{F2Vector{1, 1}});
  auto s = gf2_solve_affine(a, F2Vector{1});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, (F2Vector{1, 0}));
  ASSERT_EQ(s->kernel_basis.size(), 1U);
  EXPECT_EQ(s->kernel_basis[0], (F2Vector{1, 1}));
}

TEST(SolveAffine, InconsistentSystemHasNoSolution) {
  const F2Matrix a(std::vector<F2Vector>{F2Vector{1, 1}, F2Vector{1, 1}});
  EXPECT_FALSE(gf2_solve_affine(a, F2Vector{1, 0}));
  EXPECT_THROW((void)gf2_solve_affine(a, F2Vector{1}), Error);
}

// Solution set checked against exhaustive search over all 2^cols vectors.
TEST(SolveAffine, RandomSystemsMatchExhaustiveSearch) {
  testgen::Gen gen(11);
  for (int t = 0; t < 300; ++t) {
    const auto rows = static_cast<std::size_t>(gen.integer(0, 7));
    const auto cols = static_cast<std::size_t>(gen.integer(0, 8));
    const F2Matrix a = gen.matrix(rows, cols);
    const F2Vector b = gen.vector(rows);
    std::vector<F2Vector> expected;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << cols); ++code) {
      F2Vector x(cols);
      for (std::size_t i = 0; i < cols; ++i) x.set(i, ((code >> i) & 1U) != 0);
      if (solves(a, x, b)) expected.push_back(x);
    }
    std::sort(expected.begin(), expected.end());
    const auto s = gf2_solve_affine(a, b);
    if (expected.empty()) {
      EXPECT_FALSE(s);
      continue;
    }
    ASSERT_TRUE(s);
    EXPECT_TRUE(solves(a, s->particular, b));
    for (const auto& k : s->kernel_basis) EXPECT_TRUE((a * k).is_zero());
    EXPECT_EQ(s->kernel_basis.size(), cols - gf2_rank(a));
    EXPECT_EQ(s->enumerate(), expected);
    EXPECT_EQ(s->lex_min(), expected.front());
  }
}

TEST(SolveAffine, DeterministicAcrossCalls) {
  testgen::Gen gen(5);
  const F2Matrix a = gen.matrix(4, 9);
  const F2Vector b = a * gen.vector(9);
  const auto s1 = gf2_solve_affine(a, b);
  const auto s2 = gf2_solve_affine(a, b);
  ASSERT_TRUE(s1 && s2);
  EXPECT_EQ(s1->particular, s2->particular);
  EXPECT_EQ(s1->kernel_basis, s2->kernel_basis);
}

TEST(Rank, SmallCases) {
  EXPECT_EQ(gf2_rank(F2Matrix::identity(3)), 3U);
  EXPECT_EQ(gf2_rank(F2Matrix::zero(2, 2)), 0U);
  EXPECT_EQ(gf2_rank(F2Matrix(std::vector<F2Vector>{F2Vector{1, 1}, F2Vector{1, 1}})), 1U);
}

TEST(Rank, TransposeInvariant) {
  testgen::Gen gen(3);
  for (int t = 0; t < 100; ++t) {
    const F2Matrix a = gen.matrix(static_cast<std::size_t>(gen.integer(1, 9)), static_cast<std::size_t>(gen.integer(1, 9)));
    EXPECT_EQ(gf2_rank(a), gf2_rank(a.transposed()));
  }
}

TEST(Matrix, ProductIsAssociativeAndMatchesColumns) {
  testgen::Gen gen(8);
  const F2Matrix a = gen.matrix(3, 4);
  const F2Matrix b = gen.matrix(4, 5);
  const F2Matrix c = gen.matrix(5, 2);
  EXPECT_EQ((a * b) * c, a * (b * c));
  const F2Matrix ab = a * b;
  for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(ab.column(j), a * b.column(j));
  const F2Matrix two = F2Matrix::from_columns({b.column(0), b.column(3)}, 4);
  EXPECT_EQ(two.cols(), 2U);
  EXPECT_EQ(two.column(1), b.column(3));
}

TEST(SymplecticPairing, BasisPairs) {
  EXPECT_TRUE(symplectic_pairing(1, F2Vector{1, 0}, F2Vector{0, 1}));
  EXPECT_FALSE(symplectic_pairing(1, F2Vector{1, 0}, F2Vector{1, 0}));
  // g = 2: (a1 + b2) . (b1 + a2) = a1.b1 + b2.a2 = 0.
  EXPECT_FALSE(symplectic_pairing(2, F2Vector{1, 0, 0, 1}, F2Vector{0, 1, 1, 0}));
  EXPECT_THROW((void)symplectic_pairing(2, F2Vector{1, 0}, F2Vector{0, 1, 1, 0}), Error);
}

TEST(SymplecticPairing, SymmetricNondegenerateAndMatchesOracle) {
  for (int g = 1; g <= 3; ++g) {
    const std::size_t n = static_cast<std::size_t>(2 * g);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const auto bx = brute::bits_of(x, n);
      const F2Vector vx = F2Vector::from_bits(bx);
      bool some = false;
      for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
        const auto by = brute::bits_of(y, n);
        const F2Vector vy = F2Vector::from_bits(by);
        EXPECT_EQ(symplectic_pairing(g, vx, vy), symplectic_pairing(g, vy, vx));
        EXPECT_EQ(symplectic_pairing(g, vx, vy), brute::pairing(g, bx, by) == 1);
      }
      for (std::size_t i = 0; i < n; ++i) some |= symplectic_pairing(g, vx, F2Vector::unit(n, i));
      EXPECT_EQ(some, x != 0);
    }
  }
}
