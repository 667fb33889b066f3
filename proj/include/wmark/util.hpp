#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

namespace wmark {

/// Lowercase hex SHA-256 of `bytes`, prefixed with the algorithm name,
/// e.g. "sha256:9f86d0...". The prefix travels with the digest so artifact
/// files record which algorithm produced them.
std::string sha256_fingerprint(std::string_view bytes);

/// Shortest decimal that still round-trips an IEEE-754 double exactly:
/// printf "%.17g". Used by every artifact writer so output is byte-stable.
std::string format_double(double v);

/// Current time as an ISO-8601 UTC string ("2024-05-01T12:00:00Z").
/// Honors the SOURCE_DATE_EPOCH convention: when that environment variable
/// is set, its value is used instead of the wall clock, which makes artifact
/// files reproducible byte-for-byte.
std::string timestamp_utc();

/// Read a whole file into memory. Throws IoError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Write `contents` to `path`, replacing any existing file. Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view contents);

namespace warnings {

using Sink = std::function<void(const std::string&)>;

/// Replace the warning sink (default: "[warn] ..." on stderr). Returns the
/// previous sink. Pass nullptr to silence warnings.
Sink set_sink(Sink sink);

/// Emit a warning through the current sink.
void warn(const std::string& message);

} // namespace warnings

} // namespace wmark
