#pragma once

#include <functional>
#include <span>
#include <vector>

#include "iqpred/sequence.hpp"

namespace iqpred {

/// Residuals computed against the decoder's own reconstruction.
///
/// `decoder` must expose `prediction()` and `next(residual)` (TimeCorrDecoder,
/// RapDecoder). Each residual is `round(sample - prediction)` and is fed back
/// through the decoder, so a decoder starting from the same state reproduces
/// the encoder's reconstruction bit for bit. Reconstruction error is then the
/// rounding of the current residual only and never accumulates. `round`
/// models the storage precision of the residuals (identity for 64-bit).
template <typename Decoder, typename Round = std::identity>
std::vector<Complex> closed_loop_residuals(std::span<const Complex> samples, Decoder& decoder,
                                           Round round = {}) {
  std::vector<Complex> residuals;
  residuals.reserve(samples.size());
  for (const Complex& sample : samples) {
    const Complex residual = round(sample - decoder.prediction());
    decoder.next(residual);
    residuals.push_back(residual);
  }
  return residuals;
}

}  // namespace iqpred
