#include "iqpred/rap.hpp"

#include <cmath>
#include <utility>

#include "iqpred/error.hpp"

namespace iqpred {

namespace {

constexpr double kRotationTolerance = 1e-12;

// damp -> clamp -> rotate -> quantize; the same order on both sides.
Complex shape_prediction(Complex residual, std::size_t pass, const RapConfig& config) {
  Complex pred = residual * (1.0 - config.epsilons[pass]);
  pred = clamp_magnitude(pred, config.thresholds[pass]);
  if (config.rotation) pred *= *config.rotation;
  if (config.quant_step) pred = quantize(pred, *config.quant_step);
  return pred;
}

}  // namespace

std::optional<std::string> RapConfig::check() const {
  if (epsilons.empty()) return "at least one pass is required";
  if (epsilons.size() != thresholds.size()) {
    return "epsilon count (" + std::to_string(epsilons.size()) +
           ") differs from threshold count (" + std::to_string(thresholds.size()) + ")";
  }
  for (double eps : epsilons) {
    if (!(eps >= 0.0 && eps <= 1.0)) return "epsilon must lie in [0, 1]";
  }
  for (double thr : thresholds) {
    if (!(thr > 0.0)) return "thresholds must be positive";
  }
  if (rotation) {
    if (!is_finite(*rotation) || std::abs(std::abs(*rotation) - 1.0) > kRotationTolerance) {
      return "rotation must be a unit phasor";
    }
  }
  if (quant_step && !(*quant_step > 0.0 && std::isfinite(*quant_step))) {
    return "quantization step must be positive";
  }
  if (init_prediction_override && !is_finite(*init_prediction_override)) {
    return "initial prediction must be finite";
  }
  return std::nullopt;
}

RapConfig published_rap_config(std::size_t passes) {
  switch (passes) {
    case 1: return {{0.007}, {2.75}, {}, {}, {}};
    case 2: return {{0.012, 0.01}, {2.5, 2.2}, {}, {}, {}};
    case 3: return {{0.015, 0.03, 0.01}, {2.4, 1.4, 0.8}, {}, {}, {}};
    default:
      throw Error(ErrorCode::InvalidArgument,
                  "published configs exist for 1-3 passes, not " + std::to_string(passes));
  }
}

Complex clamp_magnitude(Complex z, double threshold) {
  const double mag = std::abs(z);
  if (mag > threshold) return z * threshold / mag;
  return z;
}

Complex quantize(Complex z, double step) {
  return {std::round(z.real() / step) * step, std::round(z.imag() / step) * step};
}

RapStream rap_encode(const ComplexSequence& seq, const RapConfig& config) {
  if (auto problem = config.check()) {
    throw Error(ErrorCode::InvalidArgument, "invalid rap config: " + *problem);
  }
  const std::size_t passes = config.passes();

  std::vector<Complex> predictions(passes, Complex{0.0, 0.0});
  predictions[0] = config.init_prediction_override.value_or(seq[0]);

  std::vector<Complex> out(seq.size());
  out[0] = seq[0];
  for (std::size_t i = 1; i < seq.size(); ++i) {
    Complex value = seq[i];
    for (std::size_t p = 0; p < passes; ++p) {
      const Complex residual = value - predictions[p];
      predictions[p] = shape_prediction(residual, p, config);
      value = residual;
    }
    out[i] = value;
  }
  return {ComplexSequence(std::move(out)), config};
}

RapDecoder::RapDecoder(RapConfig config) : config_(std::move(config)) {
  if (auto problem = config_.check()) {
    throw Error(ErrorCode::MalformedStream, "invalid rap config: " + *problem);
  }
  predictions_.assign(config_.passes(), Complex{0.0, 0.0});
}

Complex RapDecoder::prediction() const noexcept {
  Complex total{0.0, 0.0};
  if (!started_) return total;
  for (std::size_t p = predictions_.size(); p-- > 0;) total += predictions_[p];
  return total;
}

Complex RapDecoder::next(Complex residual) noexcept {
  if (!started_) {
    started_ = true;
    predictions_[0] = config_.init_prediction_override.value_or(residual);
    return residual;
  }
  // value holds the residual of pass p+1; adding pass p's prediction
  // recovers pass p's input.
  Complex value = residual;
  for (std::size_t p = predictions_.size(); p-- > 0;) {
    const Complex input = value + predictions_[p];
    predictions_[p] = shape_prediction(value, p, config_);
    value = input;
  }
  return value;
}

ComplexSequence rap_decode(const RapStream& stream) {
  RapDecoder decoder(stream.config);
  std::vector<Complex> out;
  out.reserve(stream.residuals.size());
  for (const Complex& r : stream.residuals) out.push_back(decoder.next(r));
  return ComplexSequence(std::move(out));
}

}  // namespace iqpred
