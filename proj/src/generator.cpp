#include "iqpred/generator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "iqpred/error.hpp"
#include "iqpred/spectrum.hpp"

namespace iqpred {

std::uint64_t mix_seed(std::uint64_t value) noexcept {
  return SplitMix64(value).next();
}

BinLayout bin_layout(const GeneratorSpec& spec) {
  if (!(spec.frac_pos_buckets >= 0.0) || !std::isfinite(spec.frac_pos_buckets)) {
    throw Error(ErrorCode::InvalidArgument, "frac_pos_buckets must be finite and >= 0");
  }
  if (spec.frac_pos_buckets == 0.0) return {1, 0};
  const auto count = static_cast<std::size_t>(
      std::floor(spec.frac_pos_buckets * static_cast<double>(spec.seq_len)));
  return {count, count};
}

std::vector<Complex> generate_bins(const GeneratorSpec& spec) {
  if (!is_power_of_two(spec.seq_len)) {
    throw Error(ErrorCode::UnsupportedLength,
                "sequence length " + std::to_string(spec.seq_len) + " is not a power of two");
  }
  const BinLayout layout = bin_layout(spec);
  if (2 * layout.positive > spec.seq_len) {
    throw Error(ErrorCode::TooManySlots, "too many positive frequency slots specified");
  }

  SplitMix64 rng(spec.seed);
  auto random_phasor = [&rng] {
    return std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
  };

  std::vector<Complex> bins(spec.seq_len);
  for (std::size_t k = 1; k <= layout.positive; ++k) bins[k] = random_phasor();
  for (std::size_t k = spec.seq_len - layout.negative; k < spec.seq_len; ++k) {
    bins[k] = random_phasor();
  }
  return bins;
}

Normalized generate(const GeneratorSpec& spec) {
  const std::vector<Complex> bins = generate_bins(spec);
  return normalize(ComplexSequence(inverse_dft(bins)), spec.norm_mode);
}

Normalized generate_for_ratio(double ratio, std::size_t seq_len, NormalizationMode mode,
                              std::uint64_t seed) {
  return generate({ratio / 2.0, seq_len, mode, seed});
}

}  // namespace iqpred
