#include "iqpred/iq_file.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "iqpred/error.hpp"

namespace iqpred {

namespace {

static_assert(std::numeric_limits<float>::is_iec559);

std::uint32_t to_little_endian(std::uint32_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    return ((v & 0xFFu) << 24) | ((v & 0xFF00u) << 8) | ((v >> 8) & 0xFF00u) | (v >> 24);
  }
  return v;
}

double parse_double(std::string_view text, std::size_t line) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::MalformedStream,
                "line " + std::to_string(line) + ": bad number '" + std::string(text) + "'");
  }
  return value;
}

ComplexSequence checked_sequence(std::vector<Complex> samples) {
  if (samples.empty()) throw Error(ErrorCode::MalformedStream, "file contains no samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!is_finite(samples[i])) {
      throw Error(ErrorCode::MalformedStream, "non-finite sample at index " + std::to_string(i));
    }
  }
  return ComplexSequence(std::move(samples));
}

}  // namespace

IqFormat parse_iq_format(std::string_view name) {
  if (name == "cf32") return IqFormat::Cf32;
  if (name == "csv") return IqFormat::Csv;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

IqFormat format_from_extension(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? IqFormat::Csv : IqFormat::Cf32;
}

ComplexSequence read_cf32(std::istream& in) {
  std::vector<Complex> samples;
  std::array<char, 8> record{};
  while (true) {
    in.read(record.data(), record.size());
    const auto got = in.gcount();
    if (got == 0) break;
    if (got != static_cast<std::streamsize>(record.size())) {
      throw Error(ErrorCode::MalformedStream,
                  "cf32 data ends with a partial sample (" + std::to_string(got) + " bytes)");
    }
    std::uint32_t i_bits = 0;
    std::uint32_t q_bits = 0;
    std::memcpy(&i_bits, record.data(), 4);
    std::memcpy(&q_bits, record.data() + 4, 4);
    samples.emplace_back(std::bit_cast<float>(to_little_endian(i_bits)),
                         std::bit_cast<float>(to_little_endian(q_bits)));
  }
  if (in.bad()) throw Error(ErrorCode::Io, "read failed");
  return checked_sequence(std::move(samples));
}

void write_cf32(std::ostream& out, const ComplexSequence& seq) {
  std::vector<char> buffer(seq.size() * 8);
  char* cursor = buffer.data();
  for (const Complex& z : seq) {
    const std::uint32_t i_bits =
        to_little_endian(std::bit_cast<std::uint32_t>(static_cast<float>(z.real())));
    const std::uint32_t q_bits =
        to_little_endian(std::bit_cast<std::uint32_t>(static_cast<float>(z.imag())));
    std::memcpy(cursor, &i_bits, 4);
    std::memcpy(cursor + 4, &q_bits, 4);
    cursor += 8;
  }
  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed");
}

ComplexSequence read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::MalformedStream, "csv file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "re,im") {
    throw Error(ErrorCode::MalformedStream, "csv header must be 're,im', got '" + line + "'");
  }

  std::vector<Complex> samples;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw Error(ErrorCode::MalformedStream,
                  "line " + std::to_string(line_no) + ": expected two columns");
    }
    const std::string_view view(line);
    samples.emplace_back(parse_double(view.substr(0, comma), line_no),
                         parse_double(view.substr(comma + 1), line_no));
  }
  if (in.bad()) throw Error(ErrorCode::Io, "read failed");
  return checked_sequence(std::move(samples));
}

void write_csv(std::ostream& out, const ComplexSequence& seq) {
  out << "re,im\n";
  std::array<char, 64> buf{};
  for (const Complex& z : seq) {
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), z.real());
    *res.ptr++ = ',';
    res = std::to_chars(res.ptr, buf.data() + buf.size(), z.imag());
    *res.ptr++ = '\n';
    out.write(buf.data(), res.ptr - buf.data());
  }
  if (!out) throw Error(ErrorCode::Io, "write failed");
}

ComplexSequence read_iq(const std::filesystem::path& path, IqFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  try {
    return format == IqFormat::Cf32 ? read_cf32(in) : read_csv(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_iq(const std::filesystem::path& path, const ComplexSequence& seq, IqFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot create '" + path.string() + "'");
  if (format == IqFormat::Cf32) {
    write_cf32(out, seq);
  } else {
    write_csv(out, seq);
  }
}

}  // namespace iqpred
