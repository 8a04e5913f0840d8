#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "iqpred/sequence.hpp"

namespace iqpred {

/// DC-centered magnitude spectrum. freqs[k] = k/len - 0.5, as a fraction of
/// the sampling rate.
struct Spectrum {
  std::vector<double> freqs;
  std::vector<double> mags;
};

bool is_power_of_two(std::size_t n) noexcept;

/// Forward DFT, sign e^(-i2πkn/N), unnormalized. Radix-2; throws
/// ErrorCode::UnsupportedLength unless the length is a power of two.
std::vector<Complex> dft(std::span<const Complex> samples);
ComplexSequence dft(const ComplexSequence& seq);

/// Inverse DFT with the 1/N factor.
std::vector<Complex> inverse_dft(std::span<const Complex> bins);
ComplexSequence inverse_dft(const ComplexSequence& bins);

/// Swap halves so that bin 0 (DC) lands at index len/2.
template <typename T>
std::vector<T> fft_shift(std::span<const T> values) {
  const std::size_t n = values.size();
  const std::size_t half = n / 2;
  std::vector<T> out(n);
  for (std::size_t k = 0; k < n; ++k) out[(k + half) % n] = values[k];
  return out;
}

/// |DFT(seq)|, fftshifted, multiplied by `normalization` (pass the divisor a
/// generated sequence was normalized by so unit components read 1.0).
Spectrum magnitude_spectrum(const ComplexSequence& seq, double normalization = 1.0);

/// Centered moving average whose window shrinks at the ends: index k averages
/// [k - (w-1)/2, k + w/2] clipped to the valid range.
std::vector<double> moving_mean(std::span<const double> values, std::size_t window);

/// Magnitude response 1/|1 + (1-ε)e^(-i2πf)| of the single-pass
/// residual-as-prediction filter (no clamping, no rotation).
double rap_transfer_magnitude(double freq, double epsilon);

}  // namespace iqpred
