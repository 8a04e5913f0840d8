#include "iqpred/meta.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "iqpred/error.hpp"

namespace iqpred {

namespace {

std::string number(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedStream, "meta: " + what);
}

double parse_number(const std::string& key, std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    malformed("bad number for " + key + ": '" + std::string(text) + "'");
  }
  return value;
}

const std::set<std::string, std::less<>> kKnownStatic = {
    "method", "passes", "rotate", "quant", "timecorr_re", "timecorr_im", "tc_mode", "tc_eps"};

bool is_indexed_key(std::string_view key) {
  for (std::string_view prefix : {"eps.", "sat."}) {
    if (key.starts_with(prefix)) {
      const auto digits = key.substr(prefix.size());
      return !digits.empty() &&
             digits.find_first_not_of("0123456789") == std::string_view::npos &&
             digits.front() != '0';
    }
  }
  return false;
}

class KeyValues {
 public:
  explicit KeyValues(std::string_view text) {
    std::size_t line_no = 0;
    while (!text.empty()) {
      const auto eol = text.find('\n');
      std::string_view line = text.substr(0, eol);
      text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        malformed("line " + std::to_string(line_no) + " is not key=value");
      }
      std::string key(line.substr(0, eq));
      if (!kKnownStatic.contains(key) && !is_indexed_key(key)) malformed("unknown key '" + key + "'");
      if (!values_.emplace(key, std::string(line.substr(eq + 1))).second) {
        malformed("duplicate key '" + key + "'");
      }
    }
  }

  const std::string& required(const std::string& key) {
    const auto it = values_.find(key);
    if (it == values_.end()) malformed("missing key '" + key + "'");
    used_.insert(key);
    return it->second;
  }

  std::optional<std::string> optional(const std::string& key) {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    used_.insert(key);
    return it->second;
  }

  double number(const std::string& key) { return parse_number(key, required(key)); }

  std::optional<double> optional_number(const std::string& key) {
    auto text = optional(key);
    if (!text) return std::nullopt;
    return parse_number(key, *text);
  }

  /// Every key present must have been consumed by the method's reader.
  void check_all_used(const std::string& method) const {
    for (const auto& [key, value] : values_) {
      if (!used_.contains(key)) malformed("key '" + key + "' does not apply to method " + method);
    }
  }

 private:
  std::map<std::string, std::string, std::less<>> values_;
  std::set<std::string, std::less<>> used_;
};

}  // namespace

RapParams make_rap_params(RapConfig config, std::optional<double> rotate_phase) {
  config.rotation.reset();
  if (rotate_phase) config.rotation = std::polar(1.0, *rotate_phase);
  return {std::move(config), rotate_phase};
}

CodecParams params_of(const EncodedStream& stream) {
  if (const auto* tc = std::get_if<TimeCorrStream>(&stream)) {
    return TimeCorrParams{tc->mode, tc->timecorr};
  }
  if (const auto* rap = std::get_if<RapStream>(&stream)) {
    std::optional<double> phase;
    if (rap->config.rotation) phase = std::arg(*rap->config.rotation);
    return RapParams{rap->config, phase};
  }
  return BypassParams{};
}

EncodedStream make_stream(ComplexSequence residuals, const CodecParams& params) {
  if (const auto* tc = std::get_if<TimeCorrParams>(&params)) {
    return TimeCorrStream{std::move(residuals), tc->mode, tc->timecorr};
  }
  if (const auto* rap = std::get_if<RapParams>(&params)) {
    return RapStream{std::move(residuals), rap->config};
  }
  return residuals;
}

std::string format_meta(const CodecParams& params) {
  std::ostringstream out;
  if (std::holds_alternative<BypassParams>(params)) {
    out << "method=bypass\n";
  } else if (const auto* tc = std::get_if<TimeCorrParams>(&params)) {
    out << "method=timecorr\n";
    if (const auto* adaptive = std::get_if<Adaptive>(&tc->mode)) {
      out << "tc_mode=adaptive\n"
          << "tc_eps=" << number(adaptive->epsilon) << '\n';
    } else {
      out << "tc_mode=full\n"
          << "timecorr_re=" << number(tc->timecorr.real()) << '\n'
          << "timecorr_im=" << number(tc->timecorr.imag()) << '\n';
    }
  } else {
    const auto& rap = std::get<RapParams>(params);
    const RapConfig& config = rap.config;
    out << "method=rap\n"
        << "passes=" << config.passes() << '\n';
    for (std::size_t p = 0; p < config.epsilons.size(); ++p) {
      out << "eps." << p + 1 << '=' << number(config.epsilons[p]) << '\n';
    }
    for (std::size_t p = 0; p < config.thresholds.size(); ++p) {
      out << "sat." << p + 1 << '=' << number(config.thresholds[p]) << '\n';
    }
    if (rap.rotate_phase) out << "rotate=" << number(*rap.rotate_phase) << '\n';
    if (config.quant_step) out << "quant=" << number(*config.quant_step) << '\n';
  }
  return out.str();
}

CodecParams parse_meta(std::string_view text) {
  KeyValues kv(text);
  const std::string method = kv.required("method");

  CodecParams result;
  if (method == "bypass") {
    result = BypassParams{};
  } else if (method == "timecorr") {
    const std::string mode = kv.required("tc_mode");
    if (mode == "adaptive") {
      const auto eps = kv.optional_number("tc_eps");
      if (!eps) malformed("adaptive time-correlation stream is missing tc_eps");
      if (!(*eps > 0.0 && *eps < 1.0)) malformed("tc_eps must lie in (0, 1)");
      result = TimeCorrParams{Adaptive{*eps}, {}};
    } else if (mode == "full") {
      result = TimeCorrParams{FullSequence{}, {kv.number("timecorr_re"), kv.number("timecorr_im")}};
    } else {
      malformed("tc_mode must be 'full' or 'adaptive', got '" + mode + "'");
    }
  } else if (method == "rap") {
    const std::string passes_text = kv.required("passes");
    std::size_t passes = 0;
    const auto [ptr, ec] =
        std::from_chars(passes_text.data(), passes_text.data() + passes_text.size(), passes);
    if (ec != std::errc() || ptr != passes_text.data() + passes_text.size() || passes == 0) {
      malformed("passes must be a positive integer");
    }
    RapConfig config;
    for (std::size_t p = 1; p <= passes; ++p) {
      config.epsilons.push_back(kv.number("eps." + std::to_string(p)));
      config.thresholds.push_back(kv.number("sat." + std::to_string(p)));
    }
    config.quant_step = kv.optional_number("quant");
    RapParams rap = make_rap_params(std::move(config), kv.optional_number("rotate"));
    if (auto problem = rap.config.check()) malformed(*problem);
    result = std::move(rap);
  } else {
    malformed("unknown method '" + method + "'");
  }
  // Leftover keys (e.g. eps.4 with passes=3) mean the sidecar and the
  // declared configuration disagree.
  kv.check_all_used(method);
  return result;
}

CodecParams read_meta(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_meta(text.str());
}

void write_meta(const std::filesystem::path& path, const CodecParams& params) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot create '" + path.string() + "'");
  out << format_meta(params);
  if (!out) throw Error(ErrorCode::Io, "write failed for '" + path.string() + "'");
}

}  // namespace iqpred
