#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bent/bent_check.hpp"
#include "bent/error.hpp"

using namespace bent;

namespace {

using TablePtr = std::shared_ptr<const CharacterTable>;

TablePtr table(const std::string& label) {
  return std::make_shared<const CharacterTable>(character_table(group_from_label(label)));
}

Complex omega(int k, int n) { return std::polar(1.0, 2.0 * M_PI * k / n); }

// Zadoff-Chu coefficients written out here rather than taken from the
// constructions module.
ComplexVector zc_coeffs(int n, int u) {
  ComplexVector a(n);
  for (int k = 0; k < n; ++k) {
    const double e = n % 2 ? double(k) * (k + 1) : double(k) * k;
    a[k] = std::polar(1.0 / std::sqrt(double(n)), -M_PI * u * e / n);
  }
  return a;
}

// Unimodular class function with random values on an abelian group.
ClassFunction random_unimodular(const TablePtr& ct, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  ComplexVector v(ct->order());
  for (auto& z : v) z = std::polar(1.0, angle(rng));
  return ClassFunction::FromValues(ct, v);
}

}  // namespace

TEST(DerivativeSum, ConstantFunction) {
  for (int n : {1, 4, 9}) {
    const TablePtr ct = table("Z" + std::to_string(n));
    ComplexVector a(n, 0.0);
    a[0] = 1.0;
    const ClassFunction f = ClassFunction::FromCoefficients(ct, a);
    for (int s = 0; s < n; ++s) EXPECT_LT(std::abs(derivative_sum(f, s) - double(n)), 1e-12);
  }
}

TEST(DerivativeSum, SingleCharacterOfZ3) {
  const ClassFunction f = ClassFunction::FromCoefficients(table("Z3"), {0.0, 1.0, 0.0});
  EXPECT_LT(std::abs(derivative_sum(f, 1) - 3.0 * omega(1, 3)), 1e-12);
}

TEST(DerivativeSum, ZadoffChuOnZ5VanishesOffIdentity) {
  const ClassFunction f = ClassFunction::FromCoefficients(table("Z5"), zc_coeffs(5, 1));
  for (int s = 1; s < 5; ++s) EXPECT_LT(std::abs(derivative_sum(f, s)), 1e-9);
}

TEST(DerivativeSum, OutOfRangeDirection) {
  const ClassFunction f = ClassFunction::FromCoefficients(table("Z3"), {1.0, 0.0, 0.0});
  EXPECT_THROW(derivative_sum(f, 3), IndexError);
  EXPECT_THROW(derivative_sum(f, -1), IndexError);
}

TEST(IsBent, SingleCharacterIsNotBent) {
  const ClassFunction f = ClassFunction::FromCoefficients(table("Z3"), {0.0, 1.0, 0.0});
  const BentReport r = is_bent(f);
  EXPECT_EQ(r.verdict, Verdict::kNotBent);
  EXPECT_NEAR(r.max_residual, 3.0, 1e-12);
  EXPECT_EQ(r.residuals.size(), 2u);
}

TEST(IsBent, Z2EqualCoefficientsNotUnimodular) {
  const double h = 1.0 / std::sqrt(2.0);
  const BentReport r = is_bent(ClassFunction::FromCoefficients(table("Z2"), {h, h}));
  EXPECT_EQ(r.verdict, Verdict::kNotUnimodular);
  EXPECT_STREQ(to_string(r.verdict), "NOT_UNIMODULAR");
}

TEST(IsBent, Z3Witness) {
  const Complex w = omega(1, 3);
  const double s = 1.0 / std::sqrt(3.0);
  const ClassFunction f = ClassFunction::FromCoefficients(table("Z3"), {s, s * w, s * w});
  // Direct sums, written out.
  for (int sigma = 1; sigma < 3; ++sigma) {
    Complex d = 0.0;
    for (int x = 0; x < 3; ++x) d += std::conj(f(x)) * f((x + sigma) % 3);
    EXPECT_LT(std::abs(d), 1e-12);
  }
  EXPECT_EQ(is_bent(f).verdict, Verdict::kBent);
}

TEST(IsBent, Z2HasABentFunction) {
  const double h = 1.0 / std::sqrt(2.0);
  const BentReport r =
      is_bent(ClassFunction::FromCoefficients(table("Z2"), {Complex(h, 0.0), Complex(0.0, h)}));
  EXPECT_TRUE(r.bent());
}

TEST(IsBent, ResidualCountAndTolerance) {
  const ClassFunction f = ClassFunction::FromCoefficients(table("Z7"), zc_coeffs(7, 3));
  const BentReport r = is_bent(f, 1e-8);
  EXPECT_EQ(r.residuals.size(), 6u);
  EXPECT_TRUE(r.bent());
  EXPECT_DOUBLE_EQ(r.tol, 1e-8);
}

TEST(IsBent, LeftAndRightResidualsAgreeOnNonabelianGroups) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  for (const char* label : {"S3", "Q8", "D4"}) {
    const TablePtr ct = table(label);
    for (int t = 0; t < 20; ++t) {
      ComplexVector a(ct->size());
      for (auto& z : a) z = {gauss(rng), gauss(rng)};
      const BentReport r = is_bent(ClassFunction::FromCoefficients(ct, a));
      ASSERT_EQ(r.residuals.size(), r.right_residuals.size());
      for (size_t k = 0; k < r.residuals.size(); ++k)
        EXPECT_LT(std::abs(r.residuals[k] - r.right_residuals[k]), 1e-10) << label;
      EXPECT_EQ(r.verdict, r.right_verdict);
    }
  }
}

TEST(Spectrum, ConstantOnZ4) {
  const std::vector<double> s =
      spectrum(ClassFunction::FromCoefficients(table("Z4"), {1.0, 0.0, 0.0, 0.0}));
  const std::vector<double> expected = {16, 0, 0, 0};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(s[i], expected[i], 1e-12);
}

TEST(Spectrum, SecondCharacterOnZ4) {
  const ClassFunction f = ClassFunction::FromCoefficients(table("Z4"), {0.0, 1.0, 0.0, 0.0});
  const std::vector<double> s = spectrum(f);
  const std::vector<double> expected = {0, 16, 0, 0};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(s[i], expected[i], 1e-12);
  EXPECT_FALSE(is_bent_spectral(f));
}

TEST(Spectrum, FlatForZ3Witness) {
  for (double v : spectrum(ClassFunction::FromCoefficients(table("Z3"), zc_coeffs(3, 1))))
    EXPECT_NEAR(v, 3.0, 1e-12);
}

TEST(Spectrum, NonabelianRejected) {
  const ClassFunction f = ClassFunction::FromCoefficients(table("S3"), {1.0, 0.0, 0.0});
  EXPECT_THROW(spectrum(f), CapabilityError);
  EXPECT_THROW(is_bent_spectral(f), CapabilityError);
}

TEST(IsBentSpectral, Z5WitnessAndTrivialGroup) {
  EXPECT_TRUE(is_bent_spectral(ClassFunction::FromCoefficients(table("Z5"), zc_coeffs(5, 2))));
  EXPECT_TRUE(is_bent_spectral(ClassFunction::FromCoefficients(table("Z1"), {1.0})));
  EXPECT_TRUE(is_bent(ClassFunction::FromCoefficients(table("Z1"), {1.0})).bent());
}

TEST(BentProperty, DerivativeAndSpectralTestsAgree) {
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 16; ++n) {
    const TablePtr ct = table("Z" + std::to_string(n));
    for (int t = 0; t < 1000; ++t) {
      const ClassFunction f = random_unimodular(ct, rng);
      ASSERT_EQ(is_bent(f).bent(), is_bent_spectral(f)) << "n=" << n << " trial " << t;
    }
    for (int u = 1; u < n; ++u) {
      if (std::gcd(u, n) != 1) continue;
      const ClassFunction f = ClassFunction::FromCoefficients(ct, zc_coeffs(n, u));
      EXPECT_TRUE(is_bent(f).bent());
      EXPECT_TRUE(is_bent_spectral(f));
    }
  }
}

TEST(BentProperty, HermitianSymmetryAndIdentitySum) {
  std::mt19937_64 rng(3);
  for (const char* label : {"Z6", "Z9", "V4", "Z2xZ4"}) {
    const TablePtr ct = table(label);
    const Group& g = ct->group();
    for (int t = 0; t < 20; ++t) {
      const ClassFunction f = random_unimodular(ct, rng);
      EXPECT_NEAR(derivative_sum(f, g.identity()).real(), g.order(), g.order() * 1e-10);
      for (int s = 0; s < g.order(); ++s)
        EXPECT_LT(std::abs(derivative_sum(f, g.inverse(s)) - std::conj(derivative_sum(f, s))), 1e-10);
    }
  }
}
