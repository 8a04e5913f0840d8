#pragma once

#include <cstddef>
#include <cstdint>

#include "iqpred/sequence.hpp"

namespace iqpred {

/// SplitMix64 (Steele, Lea & Flood 2014). Chosen for a fixed, published
/// output sequence so generated data is reproducible from a seed on any
/// platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// One SplitMix64 output step applied to `value`; used to derive
/// independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t value) noexcept;

struct GeneratorSpec {
  /// Positive-side occupied fraction of the bins, in [0, 0.5]. Zero selects
  /// a single positive-frequency tone.
  double frac_pos_buckets = 0.0;
  /// Power of two.
  std::size_t seq_len = 65536;
  NormalizationMode norm_mode = NormalizationMode::MeanMagnitude;
  std::uint64_t seed = 0;
};

/// Occupied bin counts implied by a spec.
struct BinLayout {
  std::size_t positive;
  std::size_t negative;
};

BinLayout bin_layout(const GeneratorSpec& spec);

/// Frequency-domain bins before the inverse transform: unit-magnitude,
/// uniformly random phase on bins 1..P and the top N bins, zero elsewhere.
std::vector<Complex> generate_bins(const GeneratorSpec& spec);

/// Band-limited test sequence centered on DC with flat unit-magnitude
/// components, normalized per `spec.norm_mode`. Returns the normalized
/// sequence and the divisor that was applied.
///
/// Throws ErrorCode::TooManySlots when floor(frac * len) > len/2 and
/// ErrorCode::UnsupportedLength when len is not a power of two.
Normalized generate(const GeneratorSpec& spec);

/// Convenience wrapper taking the total occupied bandwidth fraction; the
/// positive-side fraction is `ratio / 2`.
Normalized generate_for_ratio(double ratio, std::size_t seq_len, NormalizationMode mode,
                              std::uint64_t seed);

}  // namespace iqpred
