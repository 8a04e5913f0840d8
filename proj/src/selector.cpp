#include "iqpred/selector.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "iqpred/error.hpp"
#include "iqpred/spectrum.hpp"

namespace iqpred {

MethodKind MethodKind::rap(std::size_t passes) {
  if (passes < 1 || passes > 3) {
    throw Error(ErrorCode::InvalidArgument, "rap method supports 1-3 passes");
  }
  return {Kind::Rap, passes};
}

std::string MethodKind::name() const {
  switch (kind) {
    case Kind::Bypass: return "bypass";
    case Kind::TimeCorr: return "timecorr";
    case Kind::Rap: return "rap" + std::to_string(passes);
  }
  return "unknown";
}

MethodKind MethodKind::parse(std::string_view name) {
  if (name == "bypass") return bypass();
  if (name == "timecorr") return timecorr();
  if (name == "rap1") return rap(1);
  if (name == "rap2") return rap(2);
  if (name == "rap3") return rap(3);
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + std::string(name) + "'");
}

std::vector<MethodKind> all_methods() {
  return {MethodKind::bypass(), MethodKind::timecorr(), MethodKind::rap(1),
          MethodKind::rap(2), MethodKind::rap(3)};
}

const ComplexSequence& residuals_of(const EncodedStream& stream) {
  return std::visit(
      [](const auto& s) -> const ComplexSequence& {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, ComplexSequence>) {
          return s;
        } else {
          return s.residuals;
        }
      },
      stream);
}

ComplexSequence decode(const EncodedStream& stream) {
  if (const auto* tc = std::get_if<TimeCorrStream>(&stream)) return tc_decode(*tc);
  if (const auto* rap = std::get_if<RapStream>(&stream)) return rap_decode(*rap);
  return std::get<ComplexSequence>(stream);
}

EncodedStream encode_with(const ComplexSequence& seq, MethodKind method,
                          const TimeCorrMode& timecorr_mode) {
  switch (method.kind) {
    case MethodKind::Kind::Bypass: return seq;
    case MethodKind::Kind::TimeCorr: return tc_encode(seq, timecorr_mode);
    case MethodKind::Kind::Rap: return rap_encode(seq, published_rap_config(method.passes));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method kind");
}

double estimate_compression_factor(double amplitude_ratio, int bits_per_component) {
  if (!(amplitude_ratio > 0.0 && amplitude_ratio <= 1.0)) {
    throw Error(ErrorCode::DomainError, "amplitude ratio must lie in (0, 1]");
  }
  if (bits_per_component < 2) {
    throw Error(ErrorCode::DomainError, "bits per component must be >= 2");
  }
  const double bits = static_cast<double>(bits_per_component);
  const double factor = (bits + std::log2(amplitude_ratio)) / bits;
  return std::clamp(factor, 1.0 / bits, 1.0);
}

double estimate_bandwidth(const ComplexSequence& seq) {
  const std::vector<Complex> bins = dft(seq.samples());
  std::vector<double> mags(bins.size());
  std::transform(bins.begin(), bins.end(), mags.begin(),
                 [](Complex z) { return std::abs(z); });
  const double peak = *std::max_element(mags.begin(), mags.end());
  if (!(peak > 0.0)) {
    throw Error(ErrorCode::DegenerateInput, "cannot estimate bandwidth of an all-zero sequence");
  }
  const double floor = 0.1 * peak;
  const auto occupied = std::count_if(mags.begin(), mags.end(),
                                      [floor](double m) { return m > floor; });
  return static_cast<double>(occupied) / static_cast<double>(mags.size());
}

MethodKind select_by_bandwidth(double bw_fraction) {
  if (bw_fraction < 0.08) return MethodKind::timecorr();
  if (bw_fraction <= 0.74) return MethodKind::rap(3);
  if (bw_fraction <= 0.85) return MethodKind::rap(1);
  return MethodKind::bypass();
}

Selection pick_best(const ComplexSequence& seq, std::span<const MethodKind> candidates,
                    const TimeCorrMode& timecorr_mode) {
  if (candidates.empty()) {
    throw Error(ErrorCode::InvalidArgument, "pick_best needs at least one candidate");
  }
  std::optional<Selection> best;
  for (const MethodKind& method : candidates) {
    EncodedStream stream = encode_with(seq, method, timecorr_mode);
    const double score = mean_abs(residuals_of(stream));
    if (!best || score < best->mean_abs) {
      best = Selection{method, std::move(stream), score};
    }
  }
  return std::move(*best);
}

}  // namespace iqpred
