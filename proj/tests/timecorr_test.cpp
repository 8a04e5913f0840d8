#include "iqpred/timecorr.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "iqpred/error.hpp"
#include "iqpred/generator.hpp"
#include "oracles.hpp"

namespace iqpred {
namespace {

ComplexSequence tone(std::size_t n, double omega, double amplitude = 1.0) {
  std::vector<Complex> out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = std::polar(amplitude, omega * static_cast<double>(t));
  return ComplexSequence(std::move(out));
}

double relative_roundtrip_error(const ComplexSequence& seq, const TimeCorrMode& mode) {
  return max_component_error(tc_decode(tc_encode(seq, mode)), seq) / mean_abs(seq);
}

TEST(FullTimeCorrelationTest, ToneGivesRotationPerSample) {
  for (double omega : {0.01, 0.5, -1.3, 3.0}) {
    const Complex tc = full_time_correlation(tone(1000, omega));
    EXPECT_NEAR(tc.real(), std::cos(omega), 1e-12);
    EXPECT_NEAR(tc.imag(), std::sin(omega), 1e-12);
    EXPECT_NEAR(std::arg(tc), omega, 1e-9);
  }
}

TEST(FullTimeCorrelationTest, ConstantIsExactlyOne) {
  EXPECT_EQ(full_time_correlation(ComplexSequence{{2.0, -3.0}, {2.0, -3.0}, {2.0, -3.0}}),
            Complex(1.0, 0.0));
}

TEST(FullTimeCorrelationTest, WideBandIsSmall) {
  // Flat unit bins make the correlation ~ sin(πr)/(πr) for occupied fraction r.
  const auto g = generate_for_ratio(0.9, 65536, NormalizationMode::MeanMagnitude, 21);
  const double mag = std::abs(full_time_correlation(g.sequence));
  EXPECT_NEAR(mag, 0.10927, 0.002);
  EXPECT_LT(mag, 0.12);
}

TEST(FullTimeCorrelationTest, DecreasesWithBandwidth) {
  double previous = 2.0;
  for (int i = 0; i <= 18; ++i) {
    const double ratio = 0.05 * i;
    double total = 0.0;
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
      const auto g = generate_for_ratio(ratio, 8192, NormalizationMode::MeanMagnitude, trial);
      total += std::abs(full_time_correlation(g.sequence));
    }
    const double mean = total / 10;
    EXPECT_LE(mean, previous + 0.03) << "ratio " << ratio;
    previous = mean;
  }
}

TEST(FullTimeCorrelationTest, DegenerateInput) {
  EXPECT_THROW(full_time_correlation(ComplexSequence{1.0}), Error);
  try {
    full_time_correlation(ComplexSequence{0.0, 0.0, 5.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
  }
}

TEST(TimeCorrEncodeTest, ToneResidualIsZero) {
  const auto seq = tone(4096, 0.37, 2.0);
  const TimeCorrStream s = tc_encode(seq, FullSequence{});
  EXPECT_EQ(s.residuals[0], seq[0]);
  for (std::size_t t = 1; t < seq.size(); ++t) EXPECT_LE(std::abs(s.residuals[t]), 1e-12);
}

TEST(TimeCorrEncodeTest, FirstResidualIsStarter) {
  const auto g = generate_for_ratio(0.4, 256, NormalizationMode::MeanMagnitude, 2);
  for (const TimeCorrMode& mode : {TimeCorrMode{FullSequence{}}, TimeCorrMode{Adaptive{0.01}}}) {
    EXPECT_EQ(tc_encode(g.sequence, mode).residuals[0], g.sequence[0]);
  }
}

TEST(TimeCorrEncodeTest, ConstantSequence) {
  const TimeCorrStream s = tc_encode(ComplexSequence{7.0, 7.0, 7.0, 7.0}, FullSequence{});
  EXPECT_EQ(s.timecorr, Complex(1.0, 0.0));
  EXPECT_EQ(s.residuals, (ComplexSequence{7.0, 0.0, 0.0, 0.0}));
}

TEST(TimeCorrEncodeTest, DegenerateCorrelationFallsBackToNoPrediction) {
  const ComplexSequence seq{0.0, 0.0, 5.0};
  const TimeCorrStream s = tc_encode(seq, FullSequence{});
  EXPECT_EQ(s.timecorr, Complex(0.0, 0.0));
  EXPECT_EQ(s.residuals, seq);
  EXPECT_EQ(tc_encode(ComplexSequence{{1.0, 2.0}}, FullSequence{}).residuals,
            (ComplexSequence{{1.0, 2.0}}));
}

TEST(TimeCorrEncodeTest, MatchesReferenceTranscription) {
  // Closed-loop residuals agree with the open-loop reference to rounding.
  for (double eps : {0.0, 0.01, 0.2}) {
    const auto g = generate_for_ratio(0.3, 1024, NormalizationMode::MeanMagnitude, 17);
    const TimeCorrMode mode = eps == 0.0 ? TimeCorrMode{FullSequence{}} : TimeCorrMode{Adaptive{eps}};
    const auto expected = testing::reference_correlation_pred(g.sequence.vector(), eps);
    const auto actual = tc_encode(g.sequence, mode).residuals;
    for (std::size_t t = 0; t < expected.size(); ++t) {
      EXPECT_NEAR(std::abs(actual[t] - expected[t]), 0.0, 1e-12) << eps << " " << t;
    }
  }
}

TEST(TimeCorrEncodeTest, RejectsBadAdaptiveEpsilon) {
  EXPECT_THROW(tc_encode(ComplexSequence{1.0, 2.0}, Adaptive{0.0}), Error);
  EXPECT_THROW(tc_encode(ComplexSequence{1.0, 2.0}, Adaptive{1.0}), Error);
}

TEST(TimeCorrDecodeTest, InvertsConstantCase) {
  const TimeCorrStream s{ComplexSequence{7.0, 0.0, 0.0}, FullSequence{}, {1.0, 0.0}};
  EXPECT_EQ(tc_decode(s), (ComplexSequence{7.0, 7.0, 7.0}));
}

TEST(TimeCorrDecodeTest, SingleSample) {
  const ComplexSequence one{{0.25, -4.0}};
  EXPECT_EQ(tc_decode({one, FullSequence{}, {0.9, 0.1}}), one);
  EXPECT_EQ(tc_decode({one, Adaptive{0.05}, {}}), one);
}

TEST(TimeCorrDecodeTest, MalformedAdaptiveEpsilon) {
  for (double eps : {0.0, -0.5, 1.0, std::nan("")}) {
    try {
      tc_decode({ComplexSequence{1.0, 2.0}, Adaptive{eps}, {}});
      FAIL() << eps;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedStream);
    }
  }
}

TEST(TimeCorrRoundTripTest, GeneratedSequences) {
  const double ratios[] = {0.0, 0.05, 0.1, 0.3, 0.5, 0.7, 0.85, 0.9, 1.0};
  const std::size_t lengths[] = {2, 16, 256, 4096};
  int cases = 0;
  for (std::uint64_t seed = 0; cases < 1000; ++seed) {
    const double ratio = ratios[seed % 9];
    const std::size_t len = lengths[(seed / 9) % 4];
    const BinLayout layout = bin_layout({ratio / 2.0, len});
    if (layout.positive + layout.negative == 0) continue;  // too short to hold any bin
    const auto g = generate_for_ratio(ratio, len, NormalizationMode::MeanMagnitude, seed);
    EXPECT_LE(relative_roundtrip_error(g.sequence, FullSequence{}), 1e-9);
    EXPECT_LE(relative_roundtrip_error(g.sequence, Adaptive{0.01}), 1e-9);
    cases += 2;
  }
}

TEST(TimeCorrRoundTripTest, ArbitraryComplexData) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ComplexSequence seq(testing::random_complex(3 + seed * 13, seed, 1e3));
    EXPECT_LE(relative_roundtrip_error(seq, FullSequence{}), 1e-9);
    EXPECT_LE(relative_roundtrip_error(seq, Adaptive{0.3}), 1e-9);
  }
}

TEST(TimeCorrDecoderTest, PredictionBeforeFirstSampleIsZero) {
  TimeCorrDecoder d(FullSequence{}, {0.5, 0.5});
  EXPECT_EQ(d.prediction(), Complex(0.0, 0.0));
  EXPECT_EQ(d.next({2.0, 0.0}), Complex(2.0, 0.0));
  EXPECT_EQ(d.prediction(), Complex(1.0, 1.0));
}

}  // namespace
}  // namespace iqpred
