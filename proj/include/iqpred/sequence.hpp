#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace iqpred {

using Complex = std::complex<double>;

/// Ordered list of finite complex samples with at least one element.
///
/// The first sample always exists: every predictor uses it as the starter
/// value. Construction rejects empty input and any NaN/Inf component.
class ComplexSequence {
 public:
  explicit ComplexSequence(std::vector<Complex> samples);
  ComplexSequence(std::initializer_list<Complex> samples);

  /// Length-n sequence of zeros (n >= 1).
  static ComplexSequence zeros(std::size_t n);

  std::size_t size() const noexcept { return samples_.size(); }
  const Complex& operator[](std::size_t i) const { return samples_[i]; }
  std::span<const Complex> samples() const noexcept { return samples_; }
  const std::vector<Complex>& vector() const noexcept { return samples_; }

  auto begin() const noexcept { return samples_.begin(); }
  auto end() const noexcept { return samples_.end(); }

  /// Multiply every sample by a complex factor.
  ComplexSequence scaled(Complex factor) const;

  friend bool operator==(const ComplexSequence&, const ComplexSequence&) = default;

 private:
  std::vector<Complex> samples_;
};

enum class NormalizationMode { MeanMagnitude, RmsPower };

struct Normalized {
  ComplexSequence sequence;
  /// Divisor applied to the input; multiply back to recover original scale.
  double normalization;
};

/// Arithmetic mean of |sample|.
double mean_abs(const ComplexSequence& seq);

/// Root-mean-square magnitude.
double rms(const ComplexSequence& seq);

/// Largest componentwise (re or im) absolute difference between equal-length
/// sequences.
double max_component_error(const ComplexSequence& a, const ComplexSequence& b);

/// Divide by the mean magnitude or the RMS magnitude. Throws
/// ErrorCode::DegenerateInput for an all-zero sequence.
Normalized normalize(const ComplexSequence& seq, NormalizationMode mode);

bool is_finite(Complex z) noexcept;

}  // namespace iqpred
