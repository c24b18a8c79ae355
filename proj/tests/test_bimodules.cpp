#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "bimodulus/instances.hpp"
#include "bimodulus/serialization.hpp"
#include "grid.hpp"

using namespace bimodulus;

namespace {

const std::array<KodairaType, 5> kReduced{KodairaType::I0, KodairaType::I1, KodairaType::I2, KodairaType::II,
                                          KodairaType::III};

bool integral_support(const BimodDescriptor& d) {
  return std::holds_alternative<IntegralInvertibleDesc>(d) || std::holds_alternative<IntegralNonInvertibleDesc>(d);
}

}  // namespace

TEST(Bimodules, TableAgreesWithCohomology) {
  std::mt19937_64 rng(1);
  const Field f = Field::prime(101);
  for (int t = 0; t < 40; ++t) {
    BimodConcrete b = t % 6 == 5 ? BimodConcrete{random_nr_sheaf(f, rng)}
                                 : BimodConcrete{random_invertible(kReduced[static_cast<std::size_t>(t % 5)], f, rng)};
    BimodDescriptor d = classify_bimodule(b);
    EXPECT_EQ(split_from_table(d), split_from_cohomology(b)) << json(to_json(d)).dump();
  }
}

TEST(Bimodules, ExplicitClassifications) {
  std::mt19937_64 rng(2);
  const Field f = Field::prime(101);
  CurveW w = random_curve(KodairaType::I0, f, rng);
  auto d = std::get<IntegralInvertibleDesc>(classify_bimodule(lb_make(w, 0, 1)));
  EXPECT_EQ(d.deg, 2);
  EXPECT_TRUE(d.pullback);
  EXPECT_FALSE(d.twisted_pullback);
  d = std::get<IntegralInvertibleDesc>(classify_bimodule(lb_make(w, 1, 0)));
  EXPECT_FALSE(d.pullback);
  EXPECT_TRUE(d.twisted_pullback);
  EXPECT_EQ(split_from_table(IntegralInvertibleDesc{KodairaType::I0, 2, true, false}), (SplitType{-1, 1, -1, -1}));
  EXPECT_EQ(split_from_cohomology(lb_make(w, 0, 1)), (SplitType{-1, 1, -1, -1}));

  auto n = std::get<NonReducedDesc>(classify_bimodule(NRSheaf{NRLineBundle{0, 1, f.zero()}, 0, 0}));
  EXPECT_TRUE(n.pullback);
  EXPECT_EQ(n.k, 1);
  n = std::get<NonReducedDesc>(classify_bimodule(NRSheaf{NRLineBundle{0, 1, f.from_int(4)}, 1, 1}));
  EXPECT_FALSE(n.pullback);
  EXPECT_EQ(n.deg_D, 2);
}

TEST(Bimodules, SplitIdentitiesOverGrid) {
  for (const auto& d : testgrid::descriptors(-5, 5, {-3, -2, -1, 0, 1, 2, 3, 4, 5})) {
    auto [a, b] = split_ab(d);
    auto [a1, b1] = split_ab_prime(d);
    EXPECT_LE(a, b);
    EXPECT_LE(a1, b1);
    EXPECT_EQ(a + b + 2, chi(d));
    EXPECT_EQ(a1 + b1 + 4, chi(d));
    EXPECT_GE(a, a1);
    if (b - a >= 3) EXPECT_FALSE(integral_support(d)) << json(to_json(d)).dump();
  }
}

TEST(Bimodules, StableMeansUnobstructed) {
  for (const auto& d : testgrid::descriptors(-3, 3, {-1, 0, 1, 2, 3})) {
    if (stability_classify(d) != Stability::Stable) continue;
    auto e = ext_dims(d);
    ASSERT_TRUE(e.dims.has_value());
    EXPECT_EQ((*e.dims)[2], 0);
    EXPECT_EQ(e.euler, -8);
  }
}

TEST(Bimodules, InvalidDescriptorsAreRejected) {
  EXPECT_THROW(validate_descriptor(Type11Desc{2, 1}), DomainError);
  EXPECT_THROW(validate_descriptor(IntegralInvertibleDesc{KodairaType::I2, 2}), DomainError);
  EXPECT_THROW(validate_descriptor(IntegralInvertibleDesc{KodairaType::I0, 3, true, false}), DomainError);
  EXPECT_THROW(validate_descriptor(IntegralNonInvertibleDesc{KodairaType::I0, 1}), DomainError);
  EXPECT_THROW(validate_descriptor(ReducibleInvertibleDesc{KodairaType::III, 2, 1}), DomainError);
  EXPECT_THROW(validate_descriptor(NonReducedDesc{0, false, false, -1}), DomainError);
}

TEST(Bimodules, CoordinateChangeAndTwists) {
  std::mt19937_64 rng(3);
  const Field f = Field::prime(101);
  for (int t = 0; t < 25; ++t) {
    LineBundle L = random_invertible(kReduced[static_cast<std::size_t>(t % 5)], f, rng);
    BimodConcrete b{L};
    const BimodDescriptor d = classify_bimodule(b);
    BimodConcrete moved = twist_bimodule(b, random_pgl2(f, rng), random_pgl2(f, rng), 0, 0);
    const BimodDescriptor dm = classify_bimodule(moved);
    EXPECT_EQ(json(to_json(dm)), json(to_json(d)));
    EXPECT_EQ(stability_classify(dm), stability_classify(d));
    EXPECT_EQ(split_from_cohomology(moved), split_from_cohomology(b));
    // v*O(k) shifts both splittings by k
    const int k = static_cast<int>(rng() % 3) - 1;
    SplitType s = split_from_cohomology(b), st = split_from_cohomology(twist_bimodule(b, random_pgl2(f, rng),
                                                                                          random_pgl2(f, rng), 0, k));
    EXPECT_EQ(st, (SplitType{s.a + k, s.b + k, s.a1 + k, s.b1 + k}));
  }
  NRSheaf s = random_nr_sheaf(f, rng);
  Mat2 id{{{f.one(), f.zero()}, {f.zero(), f.one()}}};
  auto t = std::get<NRSheaf>(twist_bimodule(BimodConcrete{s}, id, id, 0, 1));
  EXPECT_EQ(t.chi(), s.chi() + 2);
}

TEST(Bimodules, ReducedHilbertPolynomials) {
  EXPECT_EQ(hilbert_data(NonReducedDesc{0, false, false, 4}).reduced(), "t - 1/2");
  EXPECT_EQ(hilbert_polynomial(4, -1).reduced(), "t - 1/4");
  EXPECT_EQ(hilbert_data(IntegralInvertibleDesc{KodairaType::I0, 2}).polynomial(), "8t + 2");
  EXPECT_THROW(hilbert_polynomial(0, 1), DomainError);
}

TEST(Bimodules, GoldenStabilityRowsSpotCheck) {
  std::ifstream in(BIMODULUS_GOLDEN_DIR "/stability_tables.json");
  ASSERT_TRUE(in.good());
  json g = json::parse(in);
  ASSERT_EQ(g["tables"].size(), 6u);
  EXPECT_EQ(to_string(stability_classify(NonReducedDesc{1, false, false, 2})), "semi-stable but not stable");
  EXPECT_EQ(stability_classify(NonReducedDesc{2, false, false, 3}), Stability::Unstable);
  EXPECT_EQ(stability_classify(ReducibleNonInvertibleDesc{KodairaType::I2, Resolution::TwoLines, 0, 0}),
            Stability::StrictlySemistable);
  EXPECT_EQ(stability_classify(ReducibleNonInvertibleDesc{KodairaType::III, Resolution::NodalConic, 0, 1}),
            Stability::StrictlySemistable);
  EXPECT_EQ(stability_classify(ReducibleInvertibleDesc{KodairaType::I2, 0, 1}), Stability::Stable);
  EXPECT_EQ(stability_classify(IntegralNonInvertibleDesc{KodairaType::II, 5}), Stability::Stable);
}

TEST(Bimodules, Numerology) {
  auto h = hochschild_dims(2);
  EXPECT_EQ(h.hh1, 7);
  EXPECT_EQ(h.hh2, 10);
  EXPECT_EQ(h.hh3, 0);
  for (int d = 0; d <= 12; ++d) EXPECT_EQ(hochschild_dims(d).altsum, 3);
  EXPECT_THROW(hochschild_dims(-1), DomainError);
  auto m = moduli_dim_check();
  EXPECT_EQ(m.smooth_locus, 9);
  EXPECT_EQ(m.quotient, 3);
}

TEST(Bimodules, SplitFromH0Sequence) {
  // O(-3) + O(1)
  auto h0 = [](int j) { return std::max(-3 + j + 1, 0) + std::max(1 + j + 1, 0); };
  EXPECT_EQ(split_from_h0_sequence(h0, -4, 6), std::make_pair(-3, 1));
}
