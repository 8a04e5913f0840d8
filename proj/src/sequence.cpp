#include "iqpred/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "iqpred/error.hpp"

namespace iqpred {

namespace {

void validate(const std::vector<Complex>& samples) {
  if (samples.empty()) {
    throw Error(ErrorCode::InvalidArgument, "sequence must contain at least one sample");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!is_finite(samples[i])) {
      throw Error(ErrorCode::InvalidArgument,
                  "non-finite sample at index " + std::to_string(i));
    }
  }
}

}  // namespace

bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

ComplexSequence::ComplexSequence(std::vector<Complex> samples)
    : samples_(std::move(samples)) {
  validate(samples_);
}

ComplexSequence::ComplexSequence(std::initializer_list<Complex> samples)
    : samples_(samples) {
  validate(samples_);
}

ComplexSequence ComplexSequence::zeros(std::size_t n) {
  return ComplexSequence(std::vector<Complex>(n));
}

ComplexSequence ComplexSequence::scaled(Complex factor) const {
  std::vector<Complex> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(),
                 [factor](Complex z) { return z * factor; });
  return ComplexSequence(std::move(out));
}

double mean_abs(const ComplexSequence& seq) {
  double total = 0.0;
  for (const Complex& z : seq) total += std::abs(z);
  return total / static_cast<double>(seq.size());
}

double rms(const ComplexSequence& seq) {
  double total = 0.0;
  for (const Complex& z : seq) total += std::norm(z);
  return std::sqrt(total / static_cast<double>(seq.size()));
}

double max_component_error(const ComplexSequence& a, const ComplexSequence& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::InvalidArgument, "sequence lengths differ");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max({worst, std::abs(a[i].real() - b[i].real()),
                      std::abs(a[i].imag() - b[i].imag())});
  }
  return worst;
}

Normalized normalize(const ComplexSequence& seq, NormalizationMode mode) {
  const double divisor =
      mode == NormalizationMode::MeanMagnitude ? mean_abs(seq) : rms(seq);
  if (!(divisor > 0.0)) {
    throw Error(ErrorCode::DegenerateInput, "cannot normalize an all-zero sequence");
  }
  std::vector<Complex> out(seq.size());
  std::transform(seq.begin(), seq.end(), out.begin(),
                 [divisor](Complex z) { return z / divisor; });
  return {ComplexSequence(std::move(out)), divisor};
}

}  // namespace iqpred
