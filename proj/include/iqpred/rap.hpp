#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "iqpred/sequence.hpp"

namespace iqpred {

/// Parameters of an N-pass residual-as-prediction coder. Encoder and decoder
/// must use identical values.
///
/// Thresholds are absolute amplitudes. The published defaults assume the
/// input has been normalized to a mean magnitude of 1.
struct RapConfig {
  /// Damping per pass; the number of entries is the pass count.
  std::vector<double> epsilons;
  /// Prediction magnitude cap per pass, same length as `epsilons`.
  std::vector<double> thresholds;
  /// Unit phasor multiplied into every prediction (energy not centered on DC).
  std::optional<Complex> rotation;
  /// Round predictions to this grid.
  std::optional<double> quant_step;
  /// Replaces seq[0] as the first pass-1 prediction.
  std::optional<Complex> init_prediction_override;

  std::size_t passes() const noexcept { return epsilons.size(); }

  /// Empty when valid, otherwise a description of the first violation.
  std::optional<std::string> check() const;

  friend bool operator==(const RapConfig&, const RapConfig&) = default;
};

/// Published parameter sets for 1, 2 and 3 passes.
RapConfig published_rap_config(std::size_t passes);

struct RapStream {
  /// Residuals of the last pass; residuals[0] is the original first sample.
  ComplexSequence residuals;
  RapConfig config;
};

/// z unchanged when |z| <= threshold, otherwise rescaled to |z| = threshold
/// with its phase kept.
Complex clamp_magnitude(Complex z, double threshold);

/// Round re and im to the nearest multiple of `step`, ties away from zero.
Complex quantize(Complex z, double step);

/// Residual-as-prediction encoder. Each pass predicts its next input from its
/// own last residual: pred = clamp((1-ε)·residual), then optional rotation
/// and quantization. Pass p's residual sequence is pass p+1's input.
///
/// Throws ErrorCode::InvalidArgument for an invalid config.
RapStream rap_encode(const ComplexSequence& seq, const RapConfig& config);

/// Exact inverse of rap_encode given the same config. Throws
/// ErrorCode::MalformedStream for an invalid config.
ComplexSequence rap_decode(const RapStream& stream);

/// Stepwise decoder. `prediction()` is the total amount the next call to
/// `next()` will add to its residual.
class RapDecoder {
 public:
  explicit RapDecoder(RapConfig config);

  Complex prediction() const noexcept;
  Complex next(Complex residual) noexcept;

 private:
  RapConfig config_;
  std::vector<Complex> predictions_;
  bool started_ = false;
};

}  // namespace iqpred
