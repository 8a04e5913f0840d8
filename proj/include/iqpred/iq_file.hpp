#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "iqpred/sequence.hpp"

namespace iqpred {

/// On-disk sample formats.
///
/// Cf32: headerless pairs of IEEE-754 binary32 little-endian values, I then Q.
/// Csv: a `re,im` header line followed by one `re,im` row per sample.
enum class IqFormat { Cf32, Csv };

IqFormat parse_iq_format(std::string_view name);

/// `.csv` selects Csv; anything else is treated as Cf32.
IqFormat format_from_extension(const std::filesystem::path& path);

/// Readers throw ErrorCode::Io on unreadable input and
/// ErrorCode::MalformedStream on bad content (truncated record, empty file,
/// bad number, non-finite value).
ComplexSequence read_cf32(std::istream& in);
ComplexSequence read_csv(std::istream& in);
void write_cf32(std::ostream& out, const ComplexSequence& seq);
void write_csv(std::ostream& out, const ComplexSequence& seq);

ComplexSequence read_iq(const std::filesystem::path& path, IqFormat format);
void write_iq(const std::filesystem::path& path, const ComplexSequence& seq, IqFormat format);

/// Round each component to binary32, the precision Cf32 stores.
inline Complex round_to_float(Complex z) noexcept {
  return {static_cast<double>(static_cast<float>(z.real())),
          static_cast<double>(static_cast<float>(z.imag()))};
}

}  // namespace iqpred
