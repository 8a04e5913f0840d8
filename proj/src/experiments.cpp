#include "iqpred/experiments.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

#include "iqpred/error.hpp"
#include "iqpred/generator.hpp"
#include "iqpred/rap.hpp"
#include "iqpred/spectrum.hpp"
#include "iqpred/timecorr.hpp"

namespace iqpred {

namespace {

constexpr std::size_t kSmoothingWindow = 10;

void put_number(std::ostream& out, double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.write(buf.data(), res.ptr - buf.data());
}

void validate(const SweepConfig& config) {
  if (config.ratios.empty()) throw Error(ErrorCode::InvalidArgument, "sweep needs at least one ratio");
  for (double r : config.ratios) {
    if (!(r >= 0.0 && r <= 0.9 + 1e-12)) {
      throw Error(ErrorCode::InvalidArgument, "sweep ratios must lie in [0, 0.9]");
    }
  }
  if (config.trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
  if (!is_power_of_two(config.seq_len) || config.seq_len < 2) {
    throw Error(ErrorCode::InvalidArgument, "sequence length must be a power of two >= 2");
  }
  if (!(config.adaptive_eps > 0.0 && config.adaptive_eps < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "adaptive epsilon must lie in (0, 1)");
  }
}

}  // namespace

std::vector<double> SweepConfig::default_ratios() {
  std::vector<double> ratios;
  for (int i = 0; i <= 18; ++i) ratios.push_back(0.05 * i);
  return ratios;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t ratio_index, std::size_t trial) {
  const std::uint64_t key = (static_cast<std::uint64_t>(ratio_index) << 32) |
                            static_cast<std::uint64_t>(trial & 0xFFFFFFFFu);
  return mix_seed(seed ^ mix_seed(key));
}

SweepResult run_magnitude_sweep(const SweepConfig& config) {
  validate(config);
  const std::array<RapConfig, 3> rap_configs = {
      published_rap_config(1), published_rap_config(2), published_rap_config(3)};

  SweepResult result;
  for (std::size_t ri = 0; ri < config.ratios.size(); ++ri) {
    const double ratio = config.ratios[ri];
    const TimeCorrMode tc_mode = ratio < config.adaptive_cutoff
                                     ? TimeCorrMode{Adaptive{config.adaptive_eps}}
                                     : TimeCorrMode{FullSequence{}};
    SweepRow row{ratio, 0.0, 0.0, 0.0, 0.0};
    for (std::size_t t = 0; t < config.trials; ++t) {
      const ComplexSequence seq =
          generate_for_ratio(ratio, config.seq_len, NormalizationMode::MeanMagnitude,
                             trial_seed(config.seed, ri, t))
              .sequence;
      row.timecorr += mean_abs(tc_encode(seq, tc_mode).residuals);
      row.rap1 += mean_abs(rap_encode(seq, rap_configs[0]).residuals);
      row.rap2 += mean_abs(rap_encode(seq, rap_configs[1]).residuals);
      row.rap3 += mean_abs(rap_encode(seq, rap_configs[2]).residuals);
    }
    const double n = static_cast<double>(config.trials);
    row.timecorr /= n;
    row.rap1 /= n;
    row.rap2 /= n;
    row.rap3 /= n;
    result.rows.push_back(row);
  }
  return result;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "ratio,timecorr,rap1,rap2,rap3\n";
  for (const SweepRow& row : result.rows) {
    for (double v : {row.ratio, row.timecorr, row.rap1, row.rap2}) {
      put_number(out, v);
      out << ',';
    }
    put_number(out, row.rap3);
    out << '\n';
  }
}

const std::vector<double>& SpectrumTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return series[i];
  }
  throw Error(ErrorCode::InvalidArgument, "no spectrum series named '" + name + "'");
}

SpectrumTables run_spectrum_experiment(std::uint64_t seed, std::size_t seq_len) {
  auto make = [&](double ratio, std::uint64_t stream) {
    return generate_for_ratio(ratio, seq_len, NormalizationMode::RmsPower,
                              mix_seed(seed ^ mix_seed(stream)));
  };
  const Normalized bw2 = make(0.2, 2);
  const Normalized bw5 = make(0.5, 5);
  const Normalized bw8 = make(0.8, 8);

  auto spectrum_of = [](const ComplexSequence& seq, double normalization) {
    return magnitude_spectrum(seq, normalization);
  };

  SpectrumTables out;
  const Spectrum orig8 = spectrum_of(bw8.sequence, bw8.normalization);
  out.timecorr.freqs = orig8.freqs;
  out.timecorr.names = {"original_bw0.8", "corr_residual_bw0.2", "corr_residual_bw0.5",
                        "corr_residual_bw0.8"};
  out.timecorr.series = {
      orig8.mags,
      spectrum_of(tc_encode(bw2.sequence, FullSequence{}).residuals, bw2.normalization).mags,
      spectrum_of(tc_encode(bw5.sequence, FullSequence{}).residuals, bw5.normalization).mags,
      spectrum_of(tc_encode(bw8.sequence, FullSequence{}).residuals, bw8.normalization).mags,
  };

  const Spectrum orig5 = spectrum_of(bw5.sequence, bw5.normalization);
  auto rap_mags = [&](std::size_t passes) {
    return spectrum_of(rap_encode(bw5.sequence, published_rap_config(passes)).residuals,
                       bw5.normalization)
        .mags;
  };
  out.rap.freqs = orig5.freqs;
  out.rap.names = {"original_bw0.5", "rap1", "rap2_mm10", "rap3_mm10"};
  out.rap.series = {
      orig5.mags,
      rap_mags(1),
      moving_mean(rap_mags(2), kSmoothingWindow),
      moving_mean(rap_mags(3), kSmoothingWindow),
  };
  return out;
}

void write_spectrum_csv(std::ostream& out, const SpectrumTable& table) {
  out << "freq";
  for (const std::string& name : table.names) out << ',' << name;
  out << '\n';
  for (std::size_t k = 0; k < table.freqs.size(); ++k) {
    put_number(out, table.freqs[k]);
    for (const auto& column : table.series) {
      out << ',';
      put_number(out, column[k]);
    }
    out << '\n';
  }
}

}  // namespace iqpred
