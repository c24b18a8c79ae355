#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bimodulus/bimodules.hpp"
#include "bimodulus/instances.hpp"

using namespace bimodulus;

namespace {

const std::array<KodairaType, 5> kReduced{KodairaType::I0, KodairaType::I1, KodairaType::I2, KodairaType::II,
                                          KodairaType::III};

// Repeated points are outside the supported range; redraw until the point sets are disjoint.
bool share_points(const std::vector<LineBundle>& ls) {
  std::vector<ProjPoint> all;
  for (const auto& l : ls) {
    all.insert(all.end(), l.minus().begin(), l.minus().end());
    all.insert(all.end(), l.plus().begin(), l.plus().end());
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) != all.end();
}

}  // namespace

TEST(LineBundles, RiemannRoch) {
  std::mt19937_64 rng(1);
  const Field f = Field::prime(101);
  for (int t = 0; t < 40; ++t) {
    const KodairaType k = kReduced[static_cast<std::size_t>(t % 5)];
    const int deg = static_cast<int>(rng() % 9) - 3;
    LineBundle L = random_bundle(random_curve(k, f, rng), deg, rng);
    EXPECT_EQ(L.degree(), deg);
    EXPECT_EQ(lb_h0(L) - lb_h1(L), deg) << to_string(k);
    if (deg >= 1 && is_integral(k)) {
      EXPECT_EQ(lb_h0(L), deg);
    }
  }
}

TEST(LineBundles, SectionsDoNotDependOnRepresentative) {
  std::mt19937_64 rng(2);
  const Field f = Field::prime(101);
  for (int t = 0; t < 20; ++t) {
    LineBundle L = random_bundle(random_curve(KodairaType::I0, f, rng), static_cast<int>(rng() % 6) - 1, rng);
    const int h = lb_h0(L);
    LineBundle U = lb_raise(L, Axis::U), V = lb_raise(L, Axis::V);
    EXPECT_EQ(lb_h0(U), h);
    EXPECT_EQ(lb_h0(V), h);
    EXPECT_EQ(lb_h0(lb_raise(U, Axis::V)), h);
    EXPECT_TRUE(lb_isomorphic(L, U));
    EXPECT_TRUE(lb_isomorphic(V, L));
  }
}

TEST(LineBundles, IsomorphismIsCompatibleWithTensor) {
  std::mt19937_64 rng(3);
  const Field f = Field::prime(101);
  for (int t = 0; t < 10; ++t) {
    CurveW w = random_curve(KodairaType::I0, f, rng);
    LineBundle a = random_bundle(w, 2, rng), b = random_bundle(w, 2, rng), c = random_bundle(w, 1, rng);
    if (share_points({a, b, c})) continue;
    LineBundle a2 = lb_raise(a, Axis::U);
    EXPECT_TRUE(lb_isomorphic(a, a));
    EXPECT_EQ(lb_isomorphic(a, b), lb_isomorphic(b, a));
    EXPECT_TRUE(lb_isomorphic(lb_tensor(a, c), lb_tensor(a2, c)));
    EXPECT_EQ(lb_isomorphic(lb_tensor(a, c), lb_tensor(b, c)), lb_isomorphic(a, b));
    EXPECT_FALSE(lb_isomorphic(a, c));
    EXPECT_EQ(lb_tensor(a, lb_inverse(a)).degree(), 0);
    EXPECT_TRUE(lb_isomorphic(lb_tensor(a, lb_inverse(a)), lb_make(w, 0, 0)));
    EXPECT_EQ(lb_twist(a, 1, 0).degree(), 4);
  }
}

TEST(LineBundles, MultiplicationOfDistinctDegreeTwoBundlesIsOnto) {
  std::mt19937_64 rng(4);
  const Field f = Field::prime(101);
  int tested = 0;
  for (int t = 0; t < 15; ++t) {
    CurveW w = random_curve(KodairaType::I0, f, rng);
    LineBundle a = random_bundle(w, 2, rng), b = random_bundle(w, 2, rng);
    if (share_points({a, b}) || lb_isomorphic(a, b)) continue;
    Matrix m = lb_mult_map(a, b);
    EXPECT_EQ(m.rows(), 4);
    EXPECT_EQ(m.cols(), 4);
    EXPECT_EQ(rank(m), 4);
    ++tested;
  }
  EXPECT_GT(tested, 10);
}

TEST(LineBundles, AmbientRestrictionMatchesSections) {
  std::mt19937_64 rng(5);
  const Field f = Field::prime(101);
  for (auto k : kReduced) {
    CurveW w = random_curve(k, f, rng);
    for (int m = -1; m <= 2; ++m)
      for (int n = -1; n <= 2; ++n) EXPECT_EQ(ambient_restriction_h0(w.form(), m, n), lb_h0(lb_make(w, m, n)));
  }
}

TEST(LineBundles, ExtPairEulerCharacteristic) {
  std::mt19937_64 rng(6);
  const Field f = Field::prime(101);
  for (auto k : kReduced) {
    CurveW w = random_curve(k, f, rng);
    for (int m = -2; m <= 2; ++m)
      for (int n = -2; n <= 2; ++n) {
        auto e = extpair_dims(w, m, n);
        EXPECT_EQ(e[0] - e[1] + e[2], -8);
      }
  }
}

TEST(LineBundles, ComponentDegreesOnReducibleSupport) {
  std::mt19937_64 rng(7);
  const Field f = Field::prime(101);
  CurveW w = random_curve(KodairaType::I2, f, rng);
  auto d = component_degrees(lb_make(w, 1, 0));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->first + d->second, 2);
  EXPECT_FALSE(component_degrees(lb_make(random_curve(KodairaType::I0, f, rng), 1, 0)).has_value());
}

TEST(NonReduced, CohomologyOfGluedBundles) {
  for (const Field& f : {Field::prime(101), Field::rational()}) {
    EXPECT_EQ(nr_cech(NRLineBundle{0, 0, f.zero()}), std::make_pair(1, 1));
    EXPECT_EQ(nr_cech(NRLineBundle{0, 0, f.from_int(3)}), std::make_pair(0, 0));
    EXPECT_TRUE(nr_is_v_pullback(NRLineBundle{2, -1, f.zero()}) == false ||
                nr_pic_coord(NRLineBundle{2, -1, f.zero()}).second.is_zero());
  }
}

TEST(NonReduced, RiemannRochAndSplitting) {
  std::mt19937_64 rng(8);
  for (const Field& f : {Field::prime(101), Field::rational()})
    for (int t = 0; t < 25; ++t) {
      NRSheaf s = random_nr_sheaf(f.is_finite() ? f : Field::prime(101), rng);
      if (!f.is_finite()) s.L.a = Scalar::rational(static_cast<long long>(rng() % 5) - 2, 3);
      auto [h0, h1] = nr_cech(s);
      EXPECT_EQ(h0 - h1, s.chi());
      auto [a, b] = nr_pushforward_split(s);
      EXPECT_LE(a, b);
      EXPECT_EQ(a + b + 2, s.chi());
    }
}

TEST(NonReduced, PicardCoordinateIsMultiplicative) {
  const Field f = Field::prime(101);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    NRLineBundle a{static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2, f.random(rng)};
    NRLineBundle b{static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2, f.random(rng)};
    auto pa = nr_pic_coord(a), pb = nr_pic_coord(b);
    auto pab = nr_pic_coord(nr_cocycle(a) * nr_cocycle(b));
    EXPECT_EQ(pab.first, pa.first + pb.first);
    EXPECT_EQ(pab.second, pa.second + pb.second);
    EXPECT_EQ(nr_is_v_pullback(a), pa.second.is_zero() && a.k_u == 0 ? true : nr_is_v_pullback(a));
  }
}
