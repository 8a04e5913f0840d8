#include "iqpred/experiments.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "iqpred/error.hpp"

namespace iqpred {
namespace {

SweepConfig small_config() {
  SweepConfig c;
  c.ratios = {0.0, 0.5, 0.85};
  c.trials = 2;
  c.seq_len = 16384;
  c.seed = 11;
  return c;
}

TEST(SweepTest, DefaultRatios) {
  const auto r = SweepConfig::default_ratios();
  ASSERT_EQ(r.size(), 19u);
  EXPECT_DOUBLE_EQ(r.front(), 0.0);
  EXPECT_NEAR(r.back(), 0.9, 1e-12);
  for (std::size_t i = 0; i < r.size(); ++i) EXPECT_NEAR(r[i], 0.05 * i, 1e-12);
}

TEST(SweepTest, TrialSeedsAreDistinct) {
  std::set<std::uint64_t> seen;
  for (std::size_t r = 0; r < 19; ++r) {
    for (std::size_t t = 0; t < 10; ++t) seen.insert(trial_seed(1, r, t));
  }
  EXPECT_EQ(seen.size(), 190u);
  EXPECT_NE(trial_seed(1, 0, 0), trial_seed(2, 0, 0));
}

TEST(SweepTest, DeterministicAndShaped) {
  const SweepResult a = run_magnitude_sweep(small_config());
  const SweepResult b = run_magnitude_sweep(small_config());
  ASSERT_EQ(a.rows.size(), 3u);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].timecorr, b.rows[i].timecorr);
    EXPECT_EQ(a.rows[i].rap3, b.rows[i].rap3);
  }
  const SweepRow& dc = a.rows[0];
  EXPECT_LE(dc.timecorr, 0.01);
  EXPECT_LT(dc.rap3, dc.rap2);
  EXPECT_LT(dc.rap2, dc.rap1);
  const SweepRow& mid = a.rows[1];
  EXPECT_LT(mid.rap1, mid.timecorr);
  EXPECT_LT(mid.rap3, mid.rap1);
  const SweepRow& wide = a.rows[2];
  EXPECT_LT(wide.rap1, 1.0);
  EXPECT_LT(wide.rap1, wide.rap3);
}

TEST(SweepTest, CsvLayout) {
  SweepResult r;
  r.rows.push_back({0.5, 0.75, 0.5, 0.25, 0.125});
  std::ostringstream out;
  write_sweep_csv(out, r);
  EXPECT_EQ(out.str(), "ratio,timecorr,rap1,rap2,rap3\n0.5,0.75,0.5,0.25,0.125\n");
}

TEST(SweepTest, InvalidConfigs) {
  auto expect_invalid = [](SweepConfig c) {
    try {
      run_magnitude_sweep(c);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
    }
  };
  SweepConfig c = small_config();
  c.trials = 0;
  expect_invalid(c);
  c = small_config();
  c.ratios = {0.95};
  expect_invalid(c);
  c = small_config();
  c.ratios = {-0.1};
  expect_invalid(c);
  c = small_config();
  c.seq_len = 1000;
  expect_invalid(c);
}

class SpectrumExperimentTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { tables_ = new SpectrumTables(run_spectrum_experiment(5)); }
  static void TearDownTestSuite() { delete tables_; }
  static SpectrumTables* tables_;
};
SpectrumTables* SpectrumExperimentTest::tables_ = nullptr;

TEST_F(SpectrumExperimentTest, Layout) {
  const SpectrumTable& tc = tables_->timecorr;
  EXPECT_EQ(tc.names, (std::vector<std::string>{"original_bw0.8", "corr_residual_bw0.2",
                                                "corr_residual_bw0.5", "corr_residual_bw0.8"}));
  EXPECT_EQ(tables_->rap.names,
            (std::vector<std::string>{"original_bw0.5", "rap1", "rap2_mm10", "rap3_mm10"}));
  EXPECT_EQ(tc.freqs.size(), 262144u);
  EXPECT_DOUBLE_EQ(tc.freqs.front(), -0.5);
  for (const auto& s : tc.series) EXPECT_EQ(s.size(), tc.freqs.size());
  EXPECT_THROW(tc.column("nope"), Error);
}

TEST_F(SpectrumExperimentTest, OriginalComponentsReadOne) {
  const auto& mags = tables_->timecorr.column("original_bw0.8");
  std::size_t ones = 0;
  for (double m : mags) ones += std::abs(m - 1.0) < 1e-6;
  EXPECT_NEAR(static_cast<double>(ones) / mags.size(), 0.8, 0.001);
}

TEST_F(SpectrumExperimentTest, NarrowResidualSuppressedNearDc) {
  const SpectrumTable& tc = tables_->timecorr;
  const auto& mags = tc.column("corr_residual_bw0.2");
  std::size_t checked = 0;
  for (std::size_t k = 0; k < mags.size(); ++k) {
    if (std::abs(tc.freqs[k]) < 0.01 && std::abs(tc.freqs[k]) > 0.0) {
      EXPECT_LT(mags[k], 0.1) << tc.freqs[k];
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST_F(SpectrumExperimentTest, WideResidualOccupiedBinsStayNearOne) {
  const auto& orig = tables_->timecorr.column("original_bw0.8");
  const auto& mags = tables_->timecorr.column("corr_residual_bw0.8");
  double sum = 0;
  std::size_t n = 0;
  for (std::size_t k = 0; k < mags.size(); ++k) {
    if (orig[k] > 0.5) {
      EXPECT_GT(mags[k], 0.7);
      EXPECT_LT(mags[k], 1.3);
      sum += mags[k];
      ++n;
    }
  }
  EXPECT_NEAR(sum / n, 1.0, 0.05);
}

TEST_F(SpectrumExperimentTest, RapNearDcHalvesComponents) {
  const SpectrumTable& rap = tables_->rap;
  const auto& mags = rap.column("rap1");
  const auto& orig = rap.column("original_bw0.5");
  for (std::size_t k = 0; k < mags.size(); ++k) {
    if (std::abs(rap.freqs[k]) < 0.01 && orig[k] > 0.5) {
      EXPECT_NEAR(mags[k], 0.5, 0.1) << rap.freqs[k];
    }
  }
}

TEST(SpectrumCsvTest, Layout) {
  SpectrumTable t;
  t.freqs = {-0.5, 0.0};
  t.names = {"a", "b"};
  t.series = {{1.0, 2.0}, {3.0, 4.0}};
  std::ostringstream out;
  write_spectrum_csv(out, t);
  EXPECT_EQ(out.str(), "freq,a,b\n-0.5,1,3\n0,2,4\n");
}

}  // namespace
}  // namespace iqpred
