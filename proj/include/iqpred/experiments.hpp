#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace iqpred {

/// Mean-residual sweep over occupied bandwidth.
struct SweepConfig {
  /// Total occupied bandwidth fractions, each in [0, 0.9].
  std::vector<double> ratios = default_ratios();
  std::size_t trials = 10;
  std::size_t seq_len = 65536;
  std::uint64_t seed = 1;
  /// Time correlation runs in adaptive mode below the cutoff and full-sequence
  /// mode at or above it.
  double adaptive_eps = 0.01;
  double adaptive_cutoff = 0.2;

  /// 0.00, 0.05, ..., 0.90.
  static std::vector<double> default_ratios();
};

struct SweepRow {
  double ratio;
  double timecorr;
  double rap1;
  double rap2;
  double rap3;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

/// Seed of trial `trial` at ratio index `ratio_index`:
/// mix(seed ^ mix((ratio_index << 32) | trial)), mix = one SplitMix64 step.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t ratio_index, std::size_t trial);

/// Generates each trial sequence at MeanMagnitude normalization and averages
/// mean |residual| per method over trials. Throws ErrorCode::InvalidArgument
/// for an invalid config.
SweepResult run_magnitude_sweep(const SweepConfig& config);

/// Header `ratio,timecorr,rap1,rap2,rap3`.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

/// Named magnitude-spectrum series on a shared DC-centered frequency axis.
struct SpectrumTable {
  std::vector<double> freqs;
  std::vector<std::string> names;
  std::vector<std::vector<double>> series;

  const std::vector<double>& column(const std::string& name) const;
};

struct SpectrumTables {
  /// original_bw0.8, corr_residual_bw0.2, corr_residual_bw0.5,
  /// corr_residual_bw0.8 (full-sequence time correlation).
  SpectrumTable timecorr;
  /// original_bw0.5, rap1, rap2_mm10, rap3_mm10 (2/3-pass smoothed with a
  /// width-10 moving mean).
  SpectrumTable rap;
};

/// Residual spectra of RmsPower-normalized sequences, each scaled back by its
/// normalization so that original components read 1.0.
SpectrumTables run_spectrum_experiment(std::uint64_t seed, std::size_t seq_len = 262144);

/// Header `freq,<series names>`.
void write_spectrum_csv(std::ostream& out, const SpectrumTable& table);

}  // namespace iqpred
