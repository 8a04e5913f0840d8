#include "iqpred/spectrum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "iqpred/error.hpp"
#include "iqpred/generator.hpp"
#include "oracles.hpp"

namespace iqpred {
namespace {

TEST(DftTest, ImpulseIsFlat) {
  const auto out = dft(ComplexSequence{1.0, 0.0, 0.0, 0.0});
  for (const Complex& z : out) EXPECT_EQ(z, Complex(1.0, 0.0));
}

TEST(DftTest, ConstantConcentratesAtDc) {
  const auto out = dft(ComplexSequence{1.0, 1.0, 1.0, 1.0});
  EXPECT_EQ(out[0], Complex(4.0, 0.0));
  for (std::size_t k = 1; k < 4; ++k) EXPECT_EQ(out[k], Complex(0.0, 0.0));
}

TEST(DftTest, MatchesNaiveDft) {
  for (std::size_t n = 1; n <= 256; n *= 2) {
    const auto x = testing::random_complex(n, 100 + n);
    const auto fast = dft(std::span<const Complex>(x));
    const auto slow = testing::naive_dft(x);
    for (std::size_t k = 0; k < n; ++k) EXPECT_LE(std::abs(fast[k] - slow[k]), 1e-9) << n;
  }
}

TEST(DftTest, RejectsNonPowerOfTwo) {
  try {
    dft(ComplexSequence{1.0, 2.0, 3.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedLength);
  }
}

TEST(DftTest, InverseRoundTrip) {
  const auto x = testing::random_complex(4096, 9);
  const auto back = inverse_dft(dft(std::span<const Complex>(x)));
  double scale = 0.0;
  for (const auto& z : x) scale = std::max(scale, std::abs(z));
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_LE(std::abs(back[i] - x[i]), 1e-9 * scale);
}

TEST(MagnitudeSpectrumTest, FrequencyAxis) {
  const Spectrum s = magnitude_spectrum(ComplexSequence::zeros(8));
  ASSERT_EQ(s.freqs.size(), 8u);
  for (std::size_t k = 0; k < 8; ++k) EXPECT_DOUBLE_EQ(s.freqs[k], k / 8.0 - 0.5);
  for (double m : s.mags) EXPECT_EQ(m, 0.0);
}

TEST(MagnitudeSpectrumTest, GeneratedComponentsReadOne) {
  for (double ratio : {0.0, 0.3, 0.5, 0.9}) {
    const GeneratorSpec spec{ratio / 2, 1024, NormalizationMode::RmsPower, 42};
    const auto bins = generate_bins(spec);
    const Normalized g = generate(spec);
    const Spectrum s = magnitude_spectrum(g.sequence, g.normalization);
    const auto expected = fft_shift<Complex>(bins);
    for (std::size_t k = 0; k < s.mags.size(); ++k) {
      EXPECT_NEAR(s.mags[k], std::abs(expected[k]), 1e-9) << ratio << " bin " << k;
    }
  }
}

TEST(MagnitudeSpectrumTest, DcLandsAtCenter) {
  const Spectrum s = magnitude_spectrum(ComplexSequence{1.0, 1.0, 1.0, 1.0});
  EXPECT_EQ(s.freqs[2], 0.0);
  EXPECT_EQ(s.mags[2], 4.0);
}

TEST(MagnitudeSpectrumTest, InvariantUnderGlobalPhase) {
  const ComplexSequence seq(testing::random_complex(512, 3));
  const Spectrum a = magnitude_spectrum(seq);
  for (double phase : {0.3, 1.7, -2.9}) {
    const Spectrum b = magnitude_spectrum(seq.scaled(std::polar(1.0, phase)));
    for (std::size_t k = 0; k < a.mags.size(); ++k) {
      EXPECT_NEAR(a.mags[k], b.mags[k], 1e-12 * std::max(1.0, a.mags[k]));
    }
  }
}

TEST(MovingMeanTest, Examples) {
  const std::vector<double> v{3.0, -1.0, 2.5};
  EXPECT_EQ(moving_mean(v, 1), v);
  EXPECT_EQ(moving_mean(std::vector<double>{1, 1, 1, 1}, 10), (std::vector<double>{1, 1, 1, 1}));
  const auto out = moving_mean(std::vector<double>{0, 0, 4, 0, 0}, 3);
  const std::vector<double> expected{0.0, 4.0 / 3, 4.0 / 3, 4.0 / 3, 0.0};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(out[i], expected[i], 1e-15);
  EXPECT_THROW(moving_mean(v, 0), Error);
}

TEST(MovingMeanTest, MatchesDirectWindows) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (std::size_t window : {1u, 2u, 3u, 4u, 9u, 10u, 31u}) {
    std::vector<double> v(57);
    for (auto& x : v) x = dist(rng);
    const auto fast = moving_mean(v, window);
    const auto slow = testing::naive_moving_mean(v, window);
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(fast[i], slow[i], 1e-12);
  }
}

TEST(TransferTest, Examples) {
  EXPECT_NEAR(rap_transfer_magnitude(0.0, 1e-12), 0.5, 1e-12);
  EXPECT_NEAR(rap_transfer_magnitude(0.5, 0.01), 100.0, 1e-9);
  for (double f : {-0.5, -0.2, 0.0, 0.1, 0.37, 0.5}) {
    EXPECT_DOUBLE_EQ(rap_transfer_magnitude(f, 1.0), 1.0);
  }
}

TEST(TransferTest, MatchesImpulseResponseSum) {
  for (double eps : {0.007, 0.03, 0.3}) {
    for (double f : {0.0, 0.05, 0.2, 0.33, 0.45}) {
      const double expected = testing::rap_response_from_impulse(f, eps);
      EXPECT_NEAR(rap_transfer_magnitude(f, eps), expected, 1e-9 * expected);
    }
  }
}

TEST(TransferTest, EvenAndIncreasing) {
  for (double eps : {0.001, 0.01, 0.2, 0.9}) {
    double previous = 0.0;
    for (int i = 0; i <= 500; ++i) {
      const double f = 0.5 * i / 500.0;
      const double h = rap_transfer_magnitude(f, eps);
      EXPECT_NEAR(h, rap_transfer_magnitude(-f, eps), 1e-12 * h);
      EXPECT_GT(h, previous);
      previous = h;
    }
  }
}

}  // namespace
}  // namespace iqpred
