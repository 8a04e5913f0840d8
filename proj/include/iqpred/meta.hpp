#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "iqpred/rap.hpp"
#include "iqpred/selector.hpp"
#include "iqpred/timecorr.hpp"

namespace iqpred {

/// Everything a decoder needs besides the residuals themselves.
struct BypassParams {
  friend bool operator==(const BypassParams&, const BypassParams&) = default;
};

struct TimeCorrParams {
  TimeCorrMode mode;
  Complex timecorr{0.0, 0.0};
  friend bool operator==(const TimeCorrParams&, const TimeCorrParams&) = default;
};

struct RapParams {
  RapConfig config;
  /// Rotation as a phase in radians; the phasor in `config` is derived from
  /// it with std::polar so encoder and decoder build the identical value.
  std::optional<double> rotate_phase;
  friend bool operator==(const RapParams&, const RapParams&) = default;
};

using CodecParams = std::variant<BypassParams, TimeCorrParams, RapParams>;

/// Build RapParams with `config.rotation` set from `phase`.
RapParams make_rap_params(RapConfig config, std::optional<double> rotate_phase);

/// Codec parameters embedded in an EncodedStream. Rap rotation is written
/// back as arg(phasor).
CodecParams params_of(const EncodedStream& stream);

/// Reassemble a stream from stored residuals and parameters.
EncodedStream make_stream(ComplexSequence residuals, const CodecParams& params);

/// Sidecar text: UTF-8 `key=value` lines. Keys: method (bypass | timecorr |
/// rap), passes, eps.N, sat.N (N from 1), rotate, quant, timecorr_re,
/// timecorr_im, tc_mode (full | adaptive), tc_eps. Numbers are written in
/// shortest round-trip form.
std::string format_meta(const CodecParams& params);

/// Throws ErrorCode::MalformedStream on unknown, duplicate, missing or
/// inconsistent keys, or bad values.
CodecParams parse_meta(std::string_view text);

CodecParams read_meta(const std::filesystem::path& path);
void write_meta(const std::filesystem::path& path, const CodecParams& params);

}  // namespace iqpred
