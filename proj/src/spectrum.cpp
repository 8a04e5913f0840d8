#include "iqpred/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "iqpred/error.hpp"

namespace iqpred {

namespace {

void require_power_of_two(std::size_t n) {
  if (!is_power_of_two(n)) {
    throw Error(ErrorCode::UnsupportedLength,
                "transform length " + std::to_string(n) + " is not a power of two");
  }
}

// In-place iterative radix-2 Cooley-Tukey. sign = -1 forward, +1 inverse.
void fft_in_place(std::vector<Complex>& a, int sign) {
  const std::size_t n = a.size();
  require_power_of_two(n);

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    // Twiddles computed directly rather than by repeated multiplication so
    // rounding error does not grow along the stage.
    std::vector<Complex> twiddle(half);
    for (std::size_t k = 0; k < half; ++k) {
      const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                           static_cast<double>(len);
      twiddle[k] = {std::cos(angle), std::sin(angle)};
    }
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex u = a[start + k];
        const Complex v = a[start + k + half] * twiddle[k];
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return std::has_single_bit(n); }

std::vector<Complex> dft(std::span<const Complex> samples) {
  std::vector<Complex> out(samples.begin(), samples.end());
  fft_in_place(out, -1);
  return out;
}

ComplexSequence dft(const ComplexSequence& seq) {
  return ComplexSequence(dft(seq.samples()));
}

std::vector<Complex> inverse_dft(std::span<const Complex> bins) {
  std::vector<Complex> out(bins.begin(), bins.end());
  fft_in_place(out, +1);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (Complex& z : out) z *= scale;
  return out;
}

ComplexSequence inverse_dft(const ComplexSequence& bins) {
  return ComplexSequence(inverse_dft(bins.samples()));
}

Spectrum magnitude_spectrum(const ComplexSequence& seq, double normalization) {
  const std::vector<Complex> bins = dft(seq.samples());
  const std::size_t n = bins.size();

  std::vector<double> mags(n);
  std::transform(bins.begin(), bins.end(), mags.begin(),
                 [normalization](Complex z) { return std::abs(z) * normalization; });

  Spectrum out;
  out.mags = fft_shift<double>(mags);
  out.freqs.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.freqs[k] = static_cast<double>(k) / static_cast<double>(n) - 0.5;
  }
  return out;
}

std::vector<double> moving_mean(std::span<const double> values, std::size_t window) {
  if (window == 0) {
    throw Error(ErrorCode::InvalidArgument, "moving_mean window must be >= 1");
  }
  const std::size_t n = values.size();
  const std::size_t behind = (window - 1) / 2;
  const std::size_t ahead = window / 2;

  // Prefix sums keep this O(n) for any window.
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + values[i];

  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t lo = k >= behind ? k - behind : 0;
    const std::size_t hi = std::min(n - 1, k + ahead);
    out[k] = (prefix[hi + 1] - prefix[lo]) / static_cast<double>(hi - lo + 1);
  }
  return out;
}

double rap_transfer_magnitude(double freq, double epsilon) {
  const double angle = -2.0 * std::numbers::pi * freq;
  const Complex denom = 1.0 + (1.0 - epsilon) * std::polar(1.0, angle);
  return 1.0 / std::abs(denom);
}

}  // namespace iqpred
