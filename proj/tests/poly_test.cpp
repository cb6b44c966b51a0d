#include <gtest/gtest.h>

#include <random>

#include "invred/error.hpp"
#include "invred/poly.hpp"
#include "oracle/naive.hpp"
#include "test_support.hpp"

namespace invred {
namespace {

using testing::mono;

const Prime kTwo(2);

TEST(Monomial, GradedLexOrder) {
  const Monomial a({2, 0}), b({1, 1}), c({0, 2}), d({3, 0});
  EXPECT_GT(a, b);
  EXPECT_GT(b, c);
  EXPECT_GT(d, a);  // degree first
  EXPECT_EQ(Monomial({1, 2, 3}).degree(), 6u);
}

TEST(Polynomial, AddZeroIsIdentity) {
  const Polynomial f = mono(kTwo, {2, 0}) + mono(kTwo, {1, 1});
  EXPECT_EQ(f + Polynomial(kTwo, 2), f);
}

TEST(Polynomial, CubeOverGF2) {
  const Polynomial f = mono(kTwo, {2, 0}) + mono(kTwo, {1, 1});
  const Polynomial expected = mono(kTwo, {6, 0}) + mono(kTwo, {5, 1}) + mono(kTwo, {4, 2}) + mono(kTwo, {3, 3});
  EXPECT_EQ(poly_pow(f, 3), expected);
  EXPECT_EQ(poly_mul(poly_mul(f, f), f), expected);
}

TEST(Polynomial, ScaleByZeroIsZero) {
  const Polynomial f = mono(Prime(5), {1, 2}, 3);
  EXPECT_TRUE(poly_scale(f, FieldElement(0, Prime(5))).is_zero());
  EXPECT_EQ(poly_scale(f, FieldElement(2, Prime(5))), mono(Prime(5), {1, 2}, 1));
}

TEST(Polynomial, CancellationPurgesTerms) {
  const Prime p(3);
  const Polynomial f = mono(p, {1, 0}, 1) + mono(p, {1, 0}, 2);
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.size(), 0u);
}

TEST(Polynomial, FormalNotFunctional) {
  // x^2 and x agree on GF(2) but are different polynomials
  EXPECT_NE(mono(kTwo, {2}), mono(kTwo, {1}));
}

TEST(Polynomial, ShapeErrors) {
  EXPECT_THROW(mono(kTwo, {1, 0}) + mono(kTwo, {1, 0, 0}), Error);
  EXPECT_THROW(mono(kTwo, {1, 0}) * mono(Prime(3), {1, 0}), Error);
  const Vector v{FieldElement(1, kTwo)};
  EXPECT_THROW(evaluate(mono(kTwo, {1, 0}), v), Error);
}

TEST(Polynomial, ToString) {
  const Prime p(5);
  EXPECT_EQ((mono(p, {2, 0}) + mono(p, {0, 1}, 3)).to_string(), "x0^2 + 3*x1");
  EXPECT_EQ(Polynomial(p, 2).to_string(), "0");
  EXPECT_EQ(Polynomial::constant(p, 2, 4).to_string(), "4");
}

TEST(Evaluate, Examples) {
  const Vector v{FieldElement(1, kTwo), FieldElement(0, kTwo)};
  EXPECT_EQ(evaluate(mono(kTwo, {2, 0}), v).residue(), 1u);
  EXPECT_EQ(evaluate(mono(kTwo, {2, 0}) + mono(kTwo, {1, 1}), v).residue(), 1u);
  EXPECT_EQ(evaluate(Polynomial::constant(kTwo, 2, 1), v).residue(), 1u);
}

TEST(HomogeneousComponent, Examples) {
  const Polynomial f = mono(kTwo, {2, 0}) + mono(kTwo, {0, 1});
  EXPECT_EQ(homogeneous_component(f, 2), mono(kTwo, {2, 0}));
  EXPECT_EQ(homogeneous_component(mono(kTwo, {2, 0}), 2), mono(kTwo, {2, 0}));
  EXPECT_TRUE(homogeneous_component(f, 5).is_zero());
}

TEST(LinearSubstitute, Examples) {
  const Polynomial f = mono(kTwo, {2, 0}) + mono(kTwo, {1, 1});
  EXPECT_EQ(linear_substitute(f, Matrix::identity(kTwo, 2)), f);

  const Matrix m = Matrix::from_rows(kTwo, {{1, 1}, {0, 1}});  // x0 -> x0 + x1, x1 -> x1
  EXPECT_EQ(linear_substitute(mono(kTwo, {1, 0}), m), mono(kTwo, {1, 0}) + mono(kTwo, {0, 1}));
  EXPECT_EQ(linear_substitute(f, m), f);
}

TEST(LinearSubstitute, ShapeErrors) {
  const Polynomial f = mono(kTwo, {1, 0});
  EXPECT_THROW(linear_substitute(f, Matrix::identity(kTwo, 3)), Error);
  EXPECT_THROW(linear_substitute(f, Matrix(kTwo, 2, 3)), Error);
}

TEST(MonomialBasis, Examples) {
  const auto one_var = monomial_basis(1, 5);
  ASSERT_EQ(one_var.size(), 1u);
  EXPECT_EQ(one_var[0], Monomial({5}));

  const auto two = monomial_basis(2, 2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0], Monomial({2, 0}));
  EXPECT_EQ(two[1], Monomial({1, 1}));
  EXPECT_EQ(two[2], Monomial({0, 2}));

  const auto constant = monomial_basis(4, 0);
  ASSERT_EQ(constant.size(), 1u);
  EXPECT_EQ(constant[0].degree(), 0u);
}

TEST(MonomialBasis, CountAndOrder) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t d = 0; d <= 8; ++d) {
      const auto basis = monomial_basis(n, d);
      EXPECT_EQ(basis.size(), oracle::monomials(n, static_cast<int>(d)).size());
      EXPECT_EQ(basis.size(), slice_dimension(n, d));
      for (std::size_t i = 1; i < basis.size(); ++i) EXPECT_GT(basis[i - 1], basis[i]);
    }
  }
}

TEST(PolynomialProperties, RingAxioms) {
  std::mt19937_64 rng(2024);
  for (unsigned q : {2u, 3u, 5u}) {
    const Prime p(q);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      const auto f = testing::random_polynomial(rng, p, n, 4, 6);
      const auto g = testing::random_polynomial(rng, p, n, 4, 6);
      const auto h = testing::random_polynomial(rng, p, n, 4, 6);
      EXPECT_EQ(f + g, g + f);
      EXPECT_EQ(f * g, g * f);
      EXPECT_EQ((f + g) + h, f + (g + h));
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_TRUE((f - f).is_zero());
      EXPECT_EQ(testing::to_oracle(f * g), oracle::mul(testing::to_oracle(f), testing::to_oracle(g), q));
    }
  }
}

TEST(PolynomialProperties, SubstitutionRoundTripAndOracle) {
  std::mt19937_64 rng(99);
  for (unsigned q : {2u, 3u, 5u}) {
    const Prime p(q);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      const auto f = testing::random_polynomial(rng, p, n, 4, 6);
      const Matrix m = testing::random_invertible(rng, p, n);
      const Polynomial g = linear_substitute(f, m);
      EXPECT_EQ(linear_substitute(g, mat_inv(m)), f);
      EXPECT_EQ(testing::to_oracle(g), oracle::substitute(testing::to_oracle(f), testing::to_oracle(m), q));
    }
  }
}

TEST(PolynomialProperties, SubstitutionEvaluationIdentity) {
  // evaluate(linear_substitute(f, M), v) == evaluate(f, M v)
  std::mt19937_64 rng(5);
  for (unsigned q : {2u, 3u, 5u}) {
    const Prime p(q);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      const auto f = testing::random_polynomial(rng, p, n, 5, 8);
      Matrix m(p, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.raw(i, j) = static_cast<std::uint32_t>(rng() % q);
      const Vector v = testing::random_vector(rng, p, n);
      EXPECT_EQ(evaluate(linear_substitute(f, m), v), evaluate(f, mat_vec(m, v)));
    }
  }
}

TEST(PolynomialProperties, SubstitutionPreservesHomogeneity) {
  std::mt19937_64 rng(17);
  const Prime p(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = testing::random_homogeneous(rng, p, 3, 4);
    if (f.is_zero()) continue;
    const Polynomial g = linear_substitute(f, testing::random_invertible(rng, p, 3));
    EXPECT_TRUE(g.is_homogeneous());
    EXPECT_EQ(g.total_degree(), 4u);
  }
}

}  // namespace
}  // namespace invred
