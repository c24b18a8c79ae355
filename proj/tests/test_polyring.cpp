#include <gtest/gtest.h>

#include <random>

#include "bimodulus/instances.hpp"
#include "bimodulus/quartic.hpp"
#include "bimodulus/upoly.hpp"
#include "oracles.hpp"

using namespace bimodulus;

namespace {

MultiPoly random_poly(const std::vector<int>& deg, const Field& f, std::mt19937_64& rng) {
  MultiPoly g = MultiPoly::zero(deg);
  for (Eigen::Index i = 0; i < g.size(); ++i) g.coeffs()(i) = f.random(rng);
  return g;
}

std::vector<Scalar> random_point(int blocks, const Field& f, std::mt19937_64& rng) {
  std::vector<Scalar> p;
  for (int i = 0; i < 2 * blocks; ++i) p.push_back(f.random(rng));
  return p;
}

BinaryQuartic quartic(const std::vector<long long>& c, const Field& f) {
  std::vector<Scalar> s;
  for (auto v : c) s.push_back(f.from_int(v));
  return BinaryForm(4, s);
}

}  // namespace

TEST(MultiPoly, EvaluationIsMultiplicative) {
  std::mt19937_64 rng(1);
  for (const Field& f : {Field::prime(101), Field::rational()})
    for (int t = 0; t < 30; ++t) {
      MultiPoly a = random_poly({1, 2}, f, rng), b = random_poly({2, 0}, f, rng);
      auto P = random_point(2, f, rng);
      EXPECT_EQ((a * b)(P), a(P) * b(P));
      EXPECT_EQ((a + a)(P), Scalar(2) * a(P));
    }
}

TEST(MultiPoly, EulerRelationPerBlock) {
  std::mt19937_64 rng(2);
  const Field f = Field::prime(101);
  for (int t = 0; t < 30; ++t) {
    const std::vector<int> deg{2, 1, 3};
    MultiPoly g = random_poly(deg, f, rng);
    auto P = random_point(3, f, rng);
    for (int b = 0; b < 3; ++b) {
      Scalar lhs = P[2 * b] * g.partial(b, 0)(P) + P[2 * b + 1] * g.partial(b, 1)(P);
      EXPECT_EQ(lhs, f.from_int(deg[b]) * g(P));
    }
  }
}

TEST(MultiPoly, IndexAndTupleAreInverse) {
  MultiPoly g = MultiPoly::zero({2, 2});
  EXPECT_EQ(g.size(), 9);
  EXPECT_EQ(component_dim({1, 1, 1}), 8);
  for (Eigen::Index i = 0; i < g.size(); ++i) EXPECT_EQ(g.index_of(g.tuple_of(i)), i);
}

TEST(MultiPoly, SubstitutionComposes) {
  std::mt19937_64 rng(3);
  const Field f = Field::prime(101);
  for (int t = 0; t < 10; ++t) {
    MultiPoly g = random_poly({2, 2}, f, rng);
    Mat2 a{{{f.random(rng), f.random(rng)}, {f.random(rng), f.random(rng)}}};
    auto P = random_point(2, f, rng);
    std::vector<Scalar> Q = P;
    Q[0] = a[0][0] * P[0] + a[0][1] * P[1];
    Q[1] = a[1][0] * P[0] + a[1][1] * P[1];
    EXPECT_EQ(g.substitute(0, a)(P), g(Q));
  }
}

TEST(MultiPoly, ResultantDetectsCommonZero) {
  std::mt19937_64 rng(4);
  const Field f = Field::prime(13);
  auto line = projective_line(f);
  for (int t = 0; t < 5; ++t) {
    MultiPoly f1 = random_poly({1, 1, 1}, f, rng), f2 = random_poly({1, 1, 1}, f, rng);
    MultiPoly r = linear_resultant(f1, f2, 2);
    ASSERT_EQ(r.degree(), (std::vector<int>{2, 2}));
    for (const auto& x : line)
      for (const auto& y : line) {
        bool common = false;
        for (const auto& z : line) {
          std::vector<Scalar> P{x[0], x[1], y[0], y[1], z[0], z[1]};
          common = common || (f1(P).is_zero() && f2(P).is_zero());
        }
        EXPECT_EQ(r({x[0], x[1], y[0], y[1]}).is_zero(), common);
      }
  }
}

TEST(UPoly, DivisionAndGcd) {
  const Field f = Field::rational();
  UPoly a({f.from_int(-1), f.zero(), f.one()});  // t^2 - 1
  UPoly b({f.from_int(1), f.one()});             // t + 1
  auto [q, r] = divmod(a, b);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q, UPoly({f.from_int(-1), f.one()}));
  EXPECT_EQ(gcd(a, b * b).monic(), b);
  auto rs = roots(a);
  EXPECT_EQ(rs.size(), 2u);
}

TEST(Quartic, JAgreesWithCrossRatioOracle) {
  const oracle::i64 p = 101;
  std::mt19937_64 rng(5);
  const Field f = Field::prime(101);
  for (int t = 0; t < 50; ++t) {
    auto roots = random_distinct_roots(f, rng);
    BinaryForm q = BinaryForm::vanishing_at(Scalar(1), roots[0]);
    for (int k = 1; k < 4; ++k) q = q * BinaryForm::vanishing_at(Scalar(1), roots[k]);
    std::array<oracle::i64, 4> r{};
    for (int k = 0; k < 4; ++k) r[k] = oracle::to_int(roots[k]);
    EXPECT_EQ(oracle::to_int(j_from_quartic(q)), oracle::j_from_cross_ratio(oracle::cross_ratio(r, p), p));
    auto jc = j_by_cross_ratio(q);
    ASSERT_TRUE(jc.has_value());
    EXPECT_EQ(*jc, j_from_quartic(q));
  }
}

TEST(Quartic, JIsInvariantUnderGL2AndScaling) {
  std::mt19937_64 rng(6);
  const Field f = Field::prime(101);
  int tested = 0;
  for (int t = 0; t < 60; ++t) {
    std::vector<long long> c;
    for (int k = 0; k < 5; ++k) c.push_back(static_cast<long long>(rng() % 101));
    BinaryQuartic q = quartic(c, f);
    if (quartic_discriminant(q).is_zero() || q.coeff(0).is_zero()) continue;
    std::array<std::array<Scalar, 2>, 2> g{{{f.random(rng), f.random(rng)}, {f.random(rng), f.random(rng)}}};
    if ((g[0][0] * g[1][1] - g[0][1] * g[1][0]).is_zero()) continue;
    const Scalar j = j_from_quartic(q);
    EXPECT_EQ(j_from_quartic(form_substitute(q, g)), j);
    EXPECT_EQ(j_from_quartic(f.from_int(7) * q), j);
    ++tested;
  }
  EXPECT_GT(tested, 30);
}

TEST(Quartic, HarmonicAndEquianharmonic) {
  const Field f = Field::prime(101);
  EXPECT_EQ(j_from_quartic(quartic({0, -1, 0, 1, 0}, f)), f.from_int(1728));
  EXPECT_EQ(j_from_lambda(f.from_int(-1)), f.from_int(1728));
  // x1 (x1^3 - x0^3): zero and the cube roots of unity
  EXPECT_TRUE(j_from_quartic(quartic({0, -1, 0, 0, 1}, f)).is_zero());
  EXPECT_EQ(calibrate_j_constant(f), f.from_int(6912));
  EXPECT_EQ(calibrate_j_constant(Field::rational()), Scalar::rational(6912));
}

TEST(Quartic, RepeatedRootIsRejected) {
  const Field f = Field::prime(101);
  BinaryQuartic q = BinaryForm::vanishing_at(Scalar(1), f.one());
  q = q * q * BinaryForm::vanishing_at(Scalar(1), f.zero()) * BinaryForm::vanishing_at(Scalar(0), f.one());
  EXPECT_TRUE(quartic_discriminant(q).is_zero());
  EXPECT_THROW(j_from_quartic(q), DomainError);
}
