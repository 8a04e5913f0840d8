#include "iqpred/timecorr.hpp"

#include <string>
#include <vector>

#include "iqpred/closed_loop.hpp"
#include "iqpred/error.hpp"

namespace iqpred {

namespace {

// Kept from the reference implementation for arithmetic parity.
constexpr double kDenominatorGuard = 1e-40;

bool valid_epsilon(double eps) { return eps > 0.0 && eps < 1.0; }

// Adaptive coefficient update shared by encoder and decoder.
Complex update_coefficient(Complex coeff, double eps, Complex current, Complex previous) {
  return (1.0 - eps) * coeff +
         eps * (current * std::conj(previous)) / (std::norm(previous) + kDenominatorGuard);
}

}  // namespace

Complex full_time_correlation(const ComplexSequence& seq) {
  if (seq.size() < 2) {
    throw Error(ErrorCode::DegenerateInput, "time correlation needs at least two samples");
  }
  Complex numerator{0.0, 0.0};
  double denominator = 0.0;
  for (std::size_t t = 1; t < seq.size(); ++t) {
    numerator += seq[t] * std::conj(seq[t - 1]);
    denominator += std::norm(seq[t - 1]);
  }
  if (!(denominator > 0.0)) {
    throw Error(ErrorCode::DegenerateInput, "time correlation denominator is zero");
  }
  return numerator / denominator;
}

TimeCorrStream tc_encode(const ComplexSequence& seq, const TimeCorrMode& mode) {
  Complex coeff{0.0, 0.0};
  if (const auto* adaptive = std::get_if<Adaptive>(&mode)) {
    if (!valid_epsilon(adaptive->epsilon)) {
      throw Error(ErrorCode::InvalidArgument, "adaptive epsilon must lie in (0, 1)");
    }
  } else if (seq.size() >= 2) {
    try {
      coeff = full_time_correlation(seq);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateInput) throw;
    }
  }

  // The predictor runs on reconstructed samples. The adaptive recursion
  // amplifies any encoder/decoder mismatch, so open-loop residuals would not
  // decode stably.
  TimeCorrDecoder state(mode, coeff);
  return {ComplexSequence(closed_loop_residuals(seq.samples(), state)), mode, coeff};
}

TimeCorrDecoder::TimeCorrDecoder(const TimeCorrMode& mode, Complex timecorr) {
  if (const auto* adaptive = std::get_if<Adaptive>(&mode)) {
    if (!valid_epsilon(adaptive->epsilon)) {
      throw Error(ErrorCode::MalformedStream,
                  "adaptive stream epsilon must lie in (0, 1), got " +
                      std::to_string(adaptive->epsilon));
    }
    epsilon_ = adaptive->epsilon;
    coeff_ = {0.0, 0.0};
  } else {
    if (!is_finite(timecorr)) {
      throw Error(ErrorCode::MalformedStream, "time correlation is not finite");
    }
    coeff_ = timecorr;
  }
}

Complex TimeCorrDecoder::prediction() const noexcept {
  return started_ ? coeff_ * previous_ : Complex{0.0, 0.0};
}

Complex TimeCorrDecoder::next(Complex residual) noexcept {
  if (!started_) {
    started_ = true;
    previous_ = residual;
    return residual;
  }
  const Complex sample = residual + coeff_ * previous_;
  if (epsilon_ > 0.0) coeff_ = update_coefficient(coeff_, epsilon_, sample, previous_);
  previous_ = sample;
  return sample;
}

ComplexSequence tc_decode(const TimeCorrStream& stream) {
  TimeCorrDecoder decoder(stream.mode, stream.timecorr);
  std::vector<Complex> out;
  out.reserve(stream.residuals.size());
  for (const Complex& r : stream.residuals) out.push_back(decoder.next(r));
  return ComplexSequence(std::move(out));
}

}  // namespace iqpred
