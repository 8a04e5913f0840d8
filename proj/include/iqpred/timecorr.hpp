#pragma once

#include <variant>

#include "iqpred/sequence.hpp"

namespace iqpred {

/// One correlation coefficient estimated over the whole sequence (two passes
/// over the data).
struct FullSequence {
  friend bool operator==(const FullSequence&, const FullSequence&) = default;
};

/// Per-sample one-pole IIR tracking of the unit-delay correlation.
struct Adaptive {
  double epsilon;  // (0, 1)
  friend bool operator==(const Adaptive&, const Adaptive&) = default;
};

using TimeCorrMode = std::variant<FullSequence, Adaptive>;

/// Residuals plus the side information needed to reconstruct the input.
struct TimeCorrStream {
  ComplexSequence residuals;
  TimeCorrMode mode;
  /// Fixed predictor coefficient; meaningful only for FullSequence.
  Complex timecorr{0.0, 0.0};
};

/// Σ s[t]·conj(s[t-1]) / Σ |s[t-1]|² over t = 1..len-1.
///
/// Throws ErrorCode::DegenerateInput for length < 2 or when every sample but
/// the last is zero.
Complex full_time_correlation(const ComplexSequence& seq);

/// residuals[0] = seq[0]; residuals[t] = seq[t] - c·x[t-1] with c fixed
/// (FullSequence) or updated after each residual (Adaptive). x is the
/// decoder-side reconstruction, which equals seq to within an ulp per sample.
/// A sequence whose correlation is undefined (length 1, or zero power before
/// the last sample) is encoded with c = 0.
TimeCorrStream tc_encode(const ComplexSequence& seq, const TimeCorrMode& mode);

/// Inverse of tc_encode. Throws ErrorCode::MalformedStream for an Adaptive
/// stream whose epsilon is outside (0, 1).
ComplexSequence tc_decode(const TimeCorrStream& stream);

/// Decoder state machine, one sample at a time. `prediction()` is the value
/// that will be added to the next residual; `next()` consumes a residual and
/// returns the reconstructed sample.
class TimeCorrDecoder {
 public:
  TimeCorrDecoder(const TimeCorrMode& mode, Complex timecorr);

  Complex prediction() const noexcept;
  Complex next(Complex residual) noexcept;

 private:
  double epsilon_ = 0.0;  // 0 means fixed coefficient
  Complex coeff_;
  Complex previous_{0.0, 0.0};
  bool started_ = false;
};

}  // namespace iqpred
