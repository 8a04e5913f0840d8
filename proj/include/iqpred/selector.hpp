#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "iqpred/rap.hpp"
#include "iqpred/sequence.hpp"
#include "iqpred/timecorr.hpp"

namespace iqpred {

/// Prediction method choice: none, time correlation, or 1-3 pass
/// residual-as-prediction with the published parameters.
struct MethodKind {
  enum class Kind { Bypass, TimeCorr, Rap };

  Kind kind = Kind::Bypass;
  std::size_t passes = 0;  // Rap only

  static MethodKind bypass() { return {Kind::Bypass, 0}; }
  static MethodKind timecorr() { return {Kind::TimeCorr, 0}; }
  static MethodKind rap(std::size_t passes);

  /// "bypass", "timecorr", "rap1", "rap2" or "rap3".
  std::string name() const;
  static MethodKind parse(std::string_view name);

  friend bool operator==(const MethodKind&, const MethodKind&) = default;
};

/// Bypass, TimeCorr, Rap(1), Rap(2), Rap(3).
std::vector<MethodKind> all_methods();

/// Bypass carries the input sequence unchanged as its "residual".
using EncodedStream = std::variant<ComplexSequence, TimeCorrStream, RapStream>;

const ComplexSequence& residuals_of(const EncodedStream& stream);
ComplexSequence decode(const EncodedStream& stream);

/// Encode with `method`. Rap methods use the published configs.
EncodedStream encode_with(const ComplexSequence& seq, MethodKind method,
                          const TimeCorrMode& timecorr_mode = FullSequence{});

/// Size model for residuals whose magnitude is `amplitude_ratio` times the
/// original at `bits_per_component` bits: (bits + log2 ratio) / bits, floored
/// at one bit per component. Throws ErrorCode::DomainError outside
/// ratio in (0, 1], bits >= 2.
double estimate_compression_factor(double amplitude_ratio, int bits_per_component);

/// Fraction of DFT bins whose magnitude exceeds 10% of the peak bin. Tuned to
/// flat-spectrum signals. Throws ErrorCode::DegenerateInput for all zeros and
/// ErrorCode::UnsupportedLength for non power-of-two lengths.
double estimate_bandwidth(const ComplexSequence& seq);

/// bw < 0.08 -> TimeCorr; [0.08, 0.74] -> Rap(3); (0.74, 0.85] -> Rap(1);
/// above 0.85 -> Bypass.
MethodKind select_by_bandwidth(double bw_fraction);

struct Selection {
  MethodKind method;
  EncodedStream stream;
  double mean_abs;
};

/// Encode with every candidate and keep the smallest residual mean
/// magnitude; ties go to the earlier candidate.
Selection pick_best(const ComplexSequence& seq, std::span<const MethodKind> candidates,
                    const TimeCorrMode& timecorr_mode = FullSequence{});

}  // namespace iqpred
