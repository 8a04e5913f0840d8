#include "iqpred/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "iqpred/closed_loop.hpp"
#include "iqpred/error.hpp"
#include "iqpred/experiments.hpp"
#include "iqpred/generator.hpp"
#include "iqpred/iq_file.hpp"
#include "iqpred/meta.hpp"
#include "iqpred/selector.hpp"
#include "iqpred/spectrum.hpp"

namespace iqpred {

namespace {

namespace fs = std::filesystem;

// Time-correlation epsilon used whenever an automatic choice lands on
// time correlation.
constexpr double kAutoTimeCorrEps = 0.01;

IqFormat resolve_format(const std::string& flag, const fs::path& path) {
  return flag.empty() ? format_from_extension(path) : parse_iq_format(flag);
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot create '" + path.string() + "'");
  return out;
}

// Residuals against the decoder's reconstruction from residuals stored at
// the output file's precision, so 32-bit storage error does not accumulate
// through the predictor recursions.
ComplexSequence storage_residuals(const ComplexSequence& seq, const CodecParams& params,
                                  IqFormat format) {
  auto encode = [&](auto& decoder) {
    if (format == IqFormat::Cf32) {
      return closed_loop_residuals(seq.samples(), decoder, round_to_float);
    }
    return closed_loop_residuals(seq.samples(), decoder);
  };
  if (const auto* tc = std::get_if<TimeCorrParams>(&params)) {
    TimeCorrDecoder decoder(tc->mode, tc->timecorr);
    return ComplexSequence(encode(decoder));
  }
  if (const auto* rap = std::get_if<RapParams>(&params)) {
    RapDecoder decoder(rap->config);
    return ComplexSequence(encode(decoder));
  }
  return seq;
}

ComplexSequence reconstruct(const ComplexSequence& residuals, const CodecParams& params) {
  return decode(make_stream(residuals, params));
}

CodecParams timecorr_params(const ComplexSequence& seq, const TimeCorrMode& mode) {
  // Only the coefficient is needed; tc_encode applies the same fallback for
  // degenerate input.
  return TimeCorrParams{mode, tc_encode(seq, mode).timecorr};
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("bad value in ") + what + ": '" + item + "'");
    }
  }
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is empty");
  return values;
}

struct GenerateArgs {
  double ratio = 0.5;
  std::size_t len = 65536;
  std::uint64_t seed = 1;
  std::string norm = "mag";
  std::string out;
  std::string format;
};

struct EncodeArgs {
  std::string method;
  std::string in, out, meta, format;
  std::string eps, sat;
  std::optional<double> rotate;
  std::optional<double> quant;
};

struct DecodeArgs {
  std::string in, out, meta, format;
};

struct AnalyzeArgs {
  std::string in, out, format;
  double scale = 1.0;
};

struct SweepArgs {
  std::string out;
  std::size_t trials = 10;
  std::size_t len = 65536;
  std::uint64_t seed = 1;
};

struct SpectraArgs {
  std::string out_dir;
  std::uint64_t seed = 1;
  std::size_t len = 262144;
};

struct SelectArgs {
  std::string in, format;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  if (!(a.ratio >= 0.0 && a.ratio <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "--ratio must lie in [0, 1]");
  }
  const NormalizationMode mode =
      a.norm == "power" ? NormalizationMode::RmsPower : NormalizationMode::MeanMagnitude;
  const Normalized g = generate_for_ratio(a.ratio, a.len, mode, a.seed);
  write_iq(a.out, g.sequence, resolve_format(a.format, a.out));
  out << "normalization=" << g.normalization << '\n';
  return 0;
}

int cmd_encode(const EncodeArgs& a, std::ostream& out) {
  const ComplexSequence seq = read_iq(a.in, resolve_format(a.format, a.in));
  const IqFormat out_format = resolve_format(a.format, a.out);
  const bool automatic = a.method == "auto-best" || a.method == "auto-bw";
  if (automatic && (!a.eps.empty() || !a.sat.empty() || a.rotate || a.quant)) {
    throw Error(ErrorCode::InvalidArgument,
                "--eps/--sat/--rotate/--quant only apply to an explicit method");
  }

  const TimeCorrMode auto_tc = Adaptive{kAutoTimeCorrEps};
  MethodKind method;
  if (a.method == "auto-best") {
    method = pick_best(seq, all_methods(), auto_tc).method;
  } else if (a.method == "auto-bw") {
    method = select_by_bandwidth(estimate_bandwidth(seq));
  } else {
    method = MethodKind::parse(a.method);
  }

  CodecParams params = BypassParams{};
  if (method.kind == MethodKind::Kind::TimeCorr) {
    TimeCorrMode mode = FullSequence{};
    if (automatic) {
      mode = auto_tc;
    } else if (!a.eps.empty()) {
      const auto eps = parse_list(a.eps, "--eps");
      if (eps.size() != 1) throw Error(ErrorCode::InvalidArgument, "timecorr takes one --eps");
      mode = Adaptive{eps[0]};
    }
    if (!a.sat.empty() || a.rotate || a.quant) {
      throw Error(ErrorCode::InvalidArgument, "--sat/--rotate/--quant apply to rap methods only");
    }
    params = timecorr_params(seq, mode);
  } else if (method.kind == MethodKind::Kind::Rap) {
    RapConfig config = published_rap_config(method.passes);
    if (!a.eps.empty()) config.epsilons = parse_list(a.eps, "--eps");
    if (!a.sat.empty()) config.thresholds = parse_list(a.sat, "--sat");
    config.quant_step = a.quant;
    RapParams rap = make_rap_params(std::move(config), a.rotate);
    if (auto problem = rap.config.check()) {
      throw Error(ErrorCode::InvalidArgument, "invalid rap config: " + *problem);
    }
    params = std::move(rap);
  } else if (!a.eps.empty() || !a.sat.empty() || a.rotate || a.quant) {
    throw Error(ErrorCode::InvalidArgument, "bypass takes no codec parameters");
  }

  const ComplexSequence residuals = storage_residuals(seq, params, out_format);
  write_iq(a.out, residuals, out_format);
  write_meta(a.meta, params);
  out << "method=" << method.name() << " samples=" << residuals.size()
      << " mean_abs_in=" << mean_abs(seq) << " mean_abs_residual=" << mean_abs(residuals)
      << '\n';
  return 0;
}

int cmd_decode(const DecodeArgs& a, std::ostream& out) {
  const CodecParams params = read_meta(a.meta);
  const ComplexSequence residuals = read_iq(a.in, resolve_format(a.format, a.in));
  const ComplexSequence seq = reconstruct(residuals, params);
  write_iq(a.out, seq, resolve_format(a.format, a.out));
  out << "samples=" << seq.size() << '\n';
  return 0;
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const ComplexSequence seq = read_iq(a.in, resolve_format(a.format, a.in));
  const Spectrum spectrum = magnitude_spectrum(seq, a.scale);
  SpectrumTable table{spectrum.freqs, {"mag"}, {spectrum.mags}};
  std::ofstream file = open_output(a.out);
  write_spectrum_csv(file, table);
  out << "bins=" << spectrum.freqs.size() << '\n';
  return 0;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  SweepConfig config;
  config.trials = a.trials;
  config.seq_len = a.len;
  config.seed = a.seed;
  const SweepResult result = run_magnitude_sweep(config);
  std::ofstream file = open_output(a.out);
  write_sweep_csv(file, result);
  out << "rows=" << result.rows.size() << '\n';
  return 0;
}

int cmd_spectra(const SpectraArgs& a, std::ostream& out) {
  const fs::path dir(a.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create directory '" + dir.string() + "'");
  const SpectrumTables tables = run_spectrum_experiment(a.seed, a.len);
  {
    std::ofstream file = open_output(dir / "timecorr_spectra.csv");
    write_spectrum_csv(file, tables.timecorr);
  }
  {
    std::ofstream file = open_output(dir / "rap_spectra.csv");
    write_spectrum_csv(file, tables.rap);
  }
  out << "wrote " << (dir / "timecorr_spectra.csv").string() << " and "
      << (dir / "rap_spectra.csv").string() << '\n';
  return 0;
}

int cmd_select(const SelectArgs& a, std::ostream& out) {
  const ComplexSequence seq = read_iq(a.in, resolve_format(a.format, a.in));
  const std::vector<MethodKind> methods = all_methods();
  const TimeCorrMode tc_mode = Adaptive{kAutoTimeCorrEps};

  out << "mean_abs_input=" << mean_abs(seq) << '\n';
  for (const MethodKind& m : methods) {
    out << "candidate " << m.name() << " mean_abs=" << mean_abs(residuals_of(encode_with(seq, m, tc_mode)))
        << '\n';
  }
  const Selection best = pick_best(seq, methods, tc_mode);
  out << "pick_best=" << best.method.name() << " mean_abs=" << best.mean_abs << '\n';

  if (is_power_of_two(seq.size())) {
    const double bw = estimate_bandwidth(seq);
    const MethodKind by_bw = select_by_bandwidth(bw);
    out << "bandwidth_estimate=" << bw << '\n'
        << "by_bandwidth=" << by_bw.name()
        << " mean_abs=" << mean_abs(residuals_of(encode_with(seq, by_bw, tc_mode))) << '\n';
  } else {
    out << "by_bandwidth=unavailable (length is not a power of two)\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Low-complexity prediction of complex I/Q sequences"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a band-limited test sequence");
  generate->add_option("--ratio", gen.ratio, "Occupied fraction of the sampling bandwidth");
  generate->add_option("--len", gen.len, "Sequence length (power of two)");
  generate->add_option("--seed", gen.seed, "Generator seed");
  generate->add_option("--norm", gen.norm, "Normalization")->check(CLI::IsMember({"mag", "power"}));
  generate->add_option("--out", gen.out, "Output file")->required();
  generate->add_option("--format", gen.format, "cf32 or csv (default: by extension)")
      ->check(CLI::IsMember({"cf32", "csv"}));

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "Write residuals and a meta sidecar");
  encode->add_option("--method", enc.method, "Prediction method")
      ->required()
      ->check(CLI::IsMember({"bypass", "timecorr", "rap1", "rap2", "rap3", "auto-best", "auto-bw"}));
  encode->add_option("--in", enc.in, "Input samples")->required();
  encode->add_option("--out", enc.out, "Output residuals")->required();
  encode->add_option("--meta", enc.meta, "Output meta sidecar")->required();
  encode->add_option("--format", enc.format, "cf32 or csv for both files (default: by extension)")
      ->check(CLI::IsMember({"cf32", "csv"}));
  encode->add_option("--eps", enc.eps, "Comma-separated epsilons (timecorr: one adaptive epsilon)");
  encode->add_option("--sat", enc.sat, "Comma-separated saturation thresholds");
  encode->add_option("--rotate", enc.rotate, "Prediction rotation phase in radians");
  encode->add_option("--quant", enc.quant, "Prediction quantization step");

  DecodeArgs dec;
  auto* decode_cmd = app.add_subcommand("decode", "Reconstruct samples from residuals");
  decode_cmd->add_option("--in", dec.in, "Residual file")->required();
  decode_cmd->add_option("--meta", dec.meta, "Meta sidecar")->required();
  decode_cmd->add_option("--out", dec.out, "Output samples")->required();
  decode_cmd->add_option("--format", dec.format, "cf32 or csv (default: by extension)")
      ->check(CLI::IsMember({"cf32", "csv"}));

  AnalyzeArgs ana;
  auto* analyze = app.add_subcommand("analyze", "Write the magnitude spectrum as CSV");
  analyze->add_option("--in", ana.in, "Input samples")->required();
  analyze->add_option("--out", ana.out, "Output CSV")->required();
  analyze->add_option("--format", ana.format, "Input format (default: by extension)")
      ->check(CLI::IsMember({"cf32", "csv"}));
  analyze->add_option("--scale", ana.scale, "Multiply magnitudes by this factor");

  SweepArgs swp;
  auto* sweep = app.add_subcommand("sweep", "Mean residual magnitude versus bandwidth");
  sweep->add_option("--out", swp.out, "Output CSV")->required();
  sweep->add_option("--trials", swp.trials, "Trials per ratio");
  sweep->add_option("--len", swp.len, "Sequence length (power of two)");
  sweep->add_option("--seed", swp.seed, "Base seed");

  SpectraArgs spc;
  auto* spectra = app.add_subcommand("spectra", "Residual spectra tables");
  spectra->add_option("--out-dir", spc.out_dir, "Output directory")->required();
  spectra->add_option("--seed", spc.seed, "Base seed");
  spectra->add_option("--len", spc.len, "Sequence length (power of two)");

  SelectArgs sel;
  auto* select = app.add_subcommand("select", "Report the method each selection policy picks");
  select->add_option("--in", sel.in, "Input samples")->required();
  select->add_option("--format", sel.format, "Input format (default: by extension)")
      ->check(CLI::IsMember({"cf32", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*encode) return cmd_encode(enc, out);
    if (*decode_cmd) return cmd_decode(dec, out);
    if (*analyze) return cmd_analyze(ana, out);
    if (*sweep) return cmd_sweep(swp, out);
    if (*spectra) return cmd_spectra(spc, out);
    if (*select) return cmd_select(sel, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace iqpred
