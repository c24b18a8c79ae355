#include <gtest/gtest.h>

#include <random>

#include "bimodulus/linalg.hpp"
#include "oracles.hpp"

using namespace bimodulus;

namespace {

Matrix random_matrix(const Field& f, int r, int c, std::mt19937_64& rng, int sparsity = 0) {
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = (sparsity && rng() % sparsity == 0) ? f.zero() : f.random(rng);
  return m;
}

std::vector<Field> fields() { return {Field::rational(), Field::prime(101), Field::quadratic(101), Field::prime(7)}; }

}  // namespace

TEST(Scalar, ParsePrintRoundTrip) {
  for (std::string s : {"3/4", "-7/2", "0", "5 mod 101", "[3,4] mod 101 adjoin sqrt(2)"}) {
    Scalar x = Scalar::parse(s);
    EXPECT_EQ(Scalar::parse(x.to_string()), x) << s;
  }
  EXPECT_EQ(Scalar::parse("6/8"), Scalar::rational(3, 4));
  EXPECT_EQ(Scalar::parse("-1 mod 101"), Scalar::mod(100, 101));
}

TEST(Scalar, InverseProperty) {
  std::mt19937_64 rng(1);
  for (const Field& f : fields())
    for (int i = 0; i < 200; ++i) {
      Scalar x = f.random_nonzero(rng);
      EXPECT_TRUE((x * x.inv()).is_one()) << x.to_string();
    }
}

TEST(Scalar, FieldAxiomsOnSamples) {
  std::mt19937_64 rng(2);
  for (const Field& f : fields())
    for (int i = 0; i < 100; ++i) {
      Scalar a = f.random(rng), b = f.random(rng), c = f.random(rng);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a + b) - b, a);
      EXPECT_EQ(a * b, b * a);
    }
}

TEST(Scalar, MixedFieldsAreRejected) {
  EXPECT_THROW(Scalar::mod(1, 101) + Scalar::mod(1, 103), FieldMismatch);
  EXPECT_THROW(Scalar::mod(1, 101) * Scalar::rational(1, 2), FieldMismatch);
  EXPECT_THROW(Scalar::mod(0, 101).inv(), DivisionByZero);
  EXPECT_THROW(Scalar::rational(0).inv(), DivisionByZero);
}

TEST(Scalar, PrimeFieldPromotesIntoExtension) {
  const Field q = Field::quadratic(101);
  Scalar r = q.root_of_nonresidue();
  EXPECT_EQ(r * r, Scalar::mod(static_cast<long long>(q.nonresidue()), 101).in(q));
  EXPECT_EQ(Scalar::mod(3, 101) + r, (Scalar::mod(3, 101).in(q) + r));
}

TEST(Scalar, SquareRootsAgreeWithEuler) {
  const Field f = Field::prime(101);
  for (int v = 1; v < 101; ++v) {
    const bool euler = oracle::powmod(v, 50, 101) == 1;
    EXPECT_EQ(is_square(f.from_int(v)), euler) << v;
    if (auto s = sqrt_in_field(f.from_int(v))) EXPECT_EQ(*s * *s, f.from_int(v));
  }
}

TEST(Scalar, FieldEnumeration) {
  EXPECT_EQ(Field::prime(7).size(), 7u);
  EXPECT_EQ(Field::quadratic(7).size(), 49u);
  EXPECT_TRUE(is_prime(101));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(Field::prime(101).describe(), "F_101");
  EXPECT_EQ(Field::rational().describe(), "Q");
}

TEST(LinAlg, RankNullity) {
  std::mt19937_64 rng(3);
  for (const Field& f : fields())
    for (int t = 0; t < 30; ++t) {
      const int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 7);
      Matrix m = random_matrix(f, r, c, rng, 2);
      Matrix k = kernel_basis(m);
      EXPECT_EQ(rank(m) + k.cols(), c);
      EXPECT_EQ(rank(k), k.cols());
      if (k.cols() > 0) {
        Matrix z = m * k;
        for (Eigen::Index i = 0; i < z.size(); ++i) EXPECT_TRUE(z(i).is_zero());
      }
    }
}

TEST(LinAlg, RankMatchesIntegerElimination) {
  std::mt19937_64 rng(4);
  const Field f = Field::prime(7);
  for (int t = 0; t < 100; ++t) {
    Matrix m = random_matrix(f, 5, 6, rng, 2);
    std::vector<std::vector<oracle::i64>> o(5, std::vector<oracle::i64>(6));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 6; ++j) o[i][j] = oracle::to_int(m(i, j));
    EXPECT_EQ(rank(m), oracle::rank_mod(o, 7));
  }
}

TEST(LinAlg, SubspaceEqualIsEquivalence) {
  std::mt19937_64 rng(5);
  const Field f = Field::prime(101);
  for (int t = 0; t < 30; ++t) {
    Matrix a = random_matrix(f, 6, 3, rng);
    Matrix g = random_matrix(f, 3, 3, rng);
    if (rank(g) < 3) continue;
    Matrix b = a * g;
    Matrix h = random_matrix(f, 3, 3, rng);
    if (rank(h) < 3) continue;
    Matrix c = b * h;
    EXPECT_TRUE(subspace_equal(a, a));
    EXPECT_TRUE(subspace_equal(a, b));
    EXPECT_TRUE(subspace_equal(b, a));
    EXPECT_TRUE(subspace_equal(b, c) && subspace_equal(a, c));
  }
  Matrix e1 = Matrix::Zero(3, 1), e2 = Matrix::Zero(3, 1);
  e1(0) = Scalar(1);
  e2(1) = Scalar(1);
  EXPECT_FALSE(subspace_equal(in_field(e1, Field::rational()), in_field(e2, Field::rational())));
}

TEST(LinAlg, SolveAndSpan) {
  std::mt19937_64 rng(6);
  const Field f = Field::rational();
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_matrix(f, 4, 3, rng);
    Vector x = random_matrix(f, 3, 1, rng);
    Vector b = a * x;
    auto s = solve(a, b);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(Vector(a * *s), b);
    EXPECT_TRUE(in_span(a, b));
  }
}

TEST(LinAlg, RrefIsDeterministic) {
  Matrix m(2, 3);
  m << Scalar(2), Scalar(4), Scalar(6), Scalar(1), Scalar(1), Scalar(1);
  m = in_field(m, Field::rational());
  auto e = rref(m);
  ASSERT_EQ(e.pivots.size(), 2u);
  EXPECT_EQ(e.reduced(0, 0), Scalar::rational(1));
  EXPECT_EQ(e.reduced(0, 2), Scalar::rational(-1));
  EXPECT_EQ(e.reduced(1, 2), Scalar::rational(2));
}
