#include <gtest/gtest.h>

#include "qrep/linalg.hpp"
#include "support.hpp"

using namespace qrep;
using qrep::testing::Gen;

namespace {

const FieldSpec& gf(std::uint32_t q) {
  static const FieldSpec f2 = FieldSpec::make(2, 1), f3 = FieldSpec::make(3, 1), f5 = FieldSpec::make(5, 1),
                         f4 = FieldSpec::make(2, 2);
  switch (q) {
    case 2: return f2;
    case 3: return f3;
    case 4: return f4;
    default: return f5;
  }
}

MatrixGF M(std::size_t r, std::size_t c, std::initializer_list<std::uint32_t> e) { return MatrixGF::from_indices(r, c, e); }

VectorGF V(std::initializer_list<std::uint32_t> e) {
  VectorGF v;
  for (auto x : e) v.push_back(FieldElement(x));
  return v;
}

PolyGF P(std::initializer_list<std::uint32_t> e) { return PolyGF::from(V(e)); }

}  // namespace

TEST(Rref, AllOnesGf2) {
  auto r = rref(gf(2), M(2, 2, {1, 1, 1, 1}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, IdentityGf3) {
  auto r = rref(gf(3), MatrixGF::identity(3));
  EXPECT_EQ(r.reduced, MatrixGF::identity(3));
  EXPECT_EQ(r.rank, 3u);
}

TEST(Rref, SwapGf2) {
  auto r = rref(gf(2), M(2, 2, {0, 1, 1, 0}));
  EXPECT_EQ(r.reduced, MatrixGF::identity(2));
  EXPECT_EQ(r.rank, 2u);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(gf(2), M(1, 2, {1, 1})), (std::vector<VectorGF>{V({1, 1})}));
  EXPECT_EQ(kernel_basis(gf(3), MatrixGF(1, 2)), (std::vector<VectorGF>{V({1, 0}), V({0, 1})}));
  EXPECT_TRUE(kernel_basis(gf(2), MatrixGF::identity(2)).empty());
}

TEST(Span, Examples) {
  EXPECT_EQ(span_basis(gf(2), {V({1, 0}), V({1, 0})}).dim, 1u);
  // det [[1,2],[2,1]] = -3 = 0 mod 3
  EXPECT_EQ(span_basis(gf(3), {V({1, 2}), V({2, 1})}).dim, 1u);
  EXPECT_EQ(span_basis(gf(2), {}).dim, 0u);
  EXPECT_THROW(span_basis(gf(2), {V({1}), V({1, 0})}), Error);
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(gf(2), MatrixGF::identity(2)), P({1, 0, 1}));
  EXPECT_EQ(char_poly(gf(3), M(2, 2, {1, 0, 0, 2})), P({2, 0, 1}));
  EXPECT_EQ(char_poly(gf(2), M(2, 2, {0, 1, 0, 0})), P({0, 0, 1}));
  EXPECT_EQ(char_poly(gf(2), MatrixGF(0, 0)), P({1}));
  EXPECT_THROW(char_poly(gf(2), MatrixGF(2, 3)), Error);
}

TEST(Nilpotent, Examples) {
  EXPECT_TRUE(is_nilpotent(gf(2), M(2, 2, {0, 1, 0, 0})));
  EXPECT_FALSE(is_nilpotent(gf(2), MatrixGF::identity(2)));
  EXPECT_TRUE(is_nilpotent(gf(3), MatrixGF(3, 3)));
}

TEST(MatrixOps, ShapesAndInverse) {
  EXPECT_THROW(multiply(gf(2), MatrixGF(2, 3), MatrixGF(2, 3)), Error);
  EXPECT_THROW(add(gf(2), MatrixGF(2, 3), MatrixGF(3, 2)), Error);
  EXPECT_FALSE(inverse(gf(2), M(2, 2, {1, 1, 1, 1})).has_value());
  auto inv = inverse(gf(5), M(2, 2, {1, 2, 3, 4}));
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(multiply(gf(5), *inv, M(2, 2, {1, 2, 3, 4})), MatrixGF::identity(2));
}

TEST(MatrixOps, Commutator) {
  // [E11, E12] = E12 and [E12, E21] = E11 - E22
  auto& f = gf(3);
  EXPECT_EQ(commutator(f, M(2, 2, {1, 0, 0, 0}), M(2, 2, {0, 1, 0, 0})), M(2, 2, {0, 1, 0, 0}));
  EXPECT_EQ(commutator(f, M(2, 2, {0, 1, 0, 0}), M(2, 2, {0, 0, 1, 0})), M(2, 2, {1, 0, 0, 2}));
}

TEST(MatrixOps, BlockDiagonal) {
  const MatrixGF blocks[] = {M(1, 1, {1}), M(2, 1, {1, 0}), MatrixGF(0, 0)};
  auto b = block_diagonal(blocks);
  EXPECT_EQ(b, M(3, 2, {1, 0, 0, 1, 0, 0}));
}

TEST(LinalgProperty, RankNullityAgainstEnumeration) {
  Gen gen(21);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto& f = gf(q);
    for (int trial = 0; trial < 60; ++trial) {
      const auto rows = 1 + gen.below(5), cols = 1 + gen.below(q == 2 ? 7 : 5);
      auto m = trial % 2 ? gen.sparse_matrix(f, rows, cols) : gen.matrix(f, rows, cols);
      auto r = rref(f, m);
      auto ker = kernel_basis(f, m);
      EXPECT_EQ(r.rank + ker.size(), cols);
      EXPECT_EQ(saturating_pow(q, ker.size()), qrep::testing::brute_kernel_size(f, m));
      for (const auto& x : ker) {
        auto y = qrep::testing::mat_vec(f, m, x);
        for (auto e : y) EXPECT_TRUE(e.is_zero());
      }
      EXPECT_EQ(span_basis(f, ker).dim, ker.size());
    }
  }
}

TEST(LinalgProperty, RrefIdempotentAndCanonical) {
  Gen gen(22);
  for (std::uint32_t q : {2u, 3u, 5u, 4u}) {
    const auto& f = gf(q);
    for (int trial = 0; trial < 80; ++trial) {
      auto m = gen.sparse_matrix(f, 1 + gen.below(8), 1 + gen.below(8));
      auto once = rref(f, m);
      auto twice = rref(f, once.reduced);
      EXPECT_EQ(once.reduced, twice.reduced);
      EXPECT_EQ(once.pivots, twice.pivots);
      // row operations by an invertible matrix leave the RREF unchanged
      MatrixGF g;
      do g = gen.matrix(f, m.rows(), m.rows());
      while (!inverse(f, g));
      EXPECT_EQ(rref(f, multiply(f, g, m)).reduced, once.reduced);
      for (std::size_t i = 0; i < once.rank; ++i) EXPECT_EQ(once.reduced(i, once.pivots[i]), FieldSpec::one());
    }
  }
}

TEST(LinalgProperty, LargeSparseMatchesDense) {
  // exercise the sparse row-update path on a structured system
  Gen gen(23);
  const auto& f = gf(3);
  for (int trial = 0; trial < 5; ++trial) {
    MatrixGF m(120, 150);
    for (std::size_t i = 0; i < 120; ++i) {
      for (int t = 0; t < 3; ++t) m(i, gen.below(150)) = gen.nonzero(f);
    }
    auto r = rref(f, m);
    auto ker = kernel_basis(f, m);
    EXPECT_EQ(r.rank + ker.size(), 150u);
    for (const auto& x : ker) {
      auto y = qrep::testing::mat_vec(f, m, x);
      for (auto e : y) ASSERT_TRUE(e.is_zero());
    }
    EXPECT_EQ(rref(f, r.reduced).reduced, r.reduced);
  }
}

TEST(LinalgProperty, CharPolyMatchesPermutationExpansion) {
  Gen gen(24);
  for (std::uint32_t q : {2u, 3u, 5u, 4u}) {
    const auto& f = gf(q);
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = 1 + gen.below(6);
      auto m = trial % 3 ? gen.matrix(f, n, n) : gen.sparse_matrix(f, n, n);
      EXPECT_EQ(char_poly(f, m), qrep::testing::permutation_char_poly(f, m));
    }
  }
}

TEST(LinalgProperty, CharPolyVanishesAtEigenvalues) {
  Gen gen(25);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const auto& f = gf(q);
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = 1 + gen.below(5);
      auto m = gen.matrix(f, n, n);
      auto cp = char_poly(f, m);
      for (auto g : f.enumerate()) {
        // g is an eigenvalue iff m - g I is singular
        auto shifted = subtract(f, m, scale(f, g, MatrixGF::identity(n)));
        const bool eigen = !inverse(f, shifted).has_value();
        EXPECT_EQ(poly_eval(f, cp, g).is_zero(), eigen);
      }
    }
  }
}

TEST(LinalgProperty, BlockCharPolyIsProduct) {
  Gen gen(26);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto& f = gf(q);
    for (int trial = 0; trial < 30; ++trial) {
      auto n1 = 1 + gen.below(4), n2 = 1 + gen.below(4);
      const MatrixGF bs[] = {gen.matrix(f, n1, n1), gen.matrix(f, n2, n2)};
      EXPECT_EQ(char_poly(f, block_diagonal(bs)), poly_mul(f, char_poly(f, bs[0]), char_poly(f, bs[1])));
    }
  }
}

TEST(LinalgProperty, NilpotentIffCharPolyIsMonomial) {
  Gen gen(27);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const auto& f = gf(q);
    int nilpotent_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto n = 1 + gen.below(6);
      MatrixGF m;
      if (trial % 2) {
        // strictly upper triangular conjugated by a random invertible matrix
        MatrixGF u(n, n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) u(i, j) = gen.element(f);
        }
        MatrixGF g;
        do g = gen.matrix(f, n, n);
        while (!inverse(f, g));
        m = multiply(f, multiply(f, g, u), *inverse(f, g));
      } else {
        m = gen.sparse_matrix(f, n, n);
      }
      const bool nil = is_nilpotent(f, m);
      nilpotent_seen += nil;
      EXPECT_EQ(nil, char_poly(f, m) == PolyGF::monomial(n));
    }
    EXPECT_GT(nilpotent_seen, 50);
  }
}

TEST(LinalgProperty, MultiplyMatchesNaive) {
  Gen gen(28);
  for (std::uint32_t q : {2u, 3u, 5u, 4u}) {
    const auto& f = gf(q);
    for (int trial = 0; trial < 30; ++trial) {
      auto a = gen.matrix(f, 1 + gen.below(6), 1 + gen.below(6));
      auto b = gen.matrix(f, a.cols(), 1 + gen.below(6));
      EXPECT_EQ(multiply(f, a, b), qrep::testing::naive_mul(f, a, b));
      EXPECT_EQ(transpose(transpose(a)), a);
    }
  }
}

TEST(Poly, Arithmetic) {
  auto& f = gf(3);
  // (x + 1)(x + 2) = x^2 + 2 over GF(3)
  EXPECT_EQ(poly_mul(f, P({1, 1}), P({2, 1})), P({2, 0, 1}));
  EXPECT_EQ(poly_sub(f, P({1, 1}), P({1, 1})), PolyGF{});
  EXPECT_EQ(poly_add(f, P({1}), P({0, 1})), P({1, 1}));
  EXPECT_EQ(poly_eval(f, P({2, 0, 1}), FieldElement(1)), FieldElement(0));
  EXPECT_EQ(PolyGF::monomial(2), P({0, 0, 1}));
}
