#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace subvis::csv {

using Row = std::vector<std::string>;

/// RFC 4180 style reader: quoted fields may hold commas, doubled quotes and
/// line breaks. Accepts LF or CRLF, drops a leading UTF-8 BOM and blank lines.
/// Throws SchemaError on an unterminated quote.
std::vector<Row> parse(std::string_view text);

/// Quotes a field if it contains a comma, quote, or line break.
std::string escape(std::string_view field);

/// Joins escaped fields with commas, no trailing newline.
std::string join(const Row& fields);

/// Reads a whole file. Gzip input (magic 1f 8b) is inflated transparently.
/// Throws IoError.
std::string read_file(const std::filesystem::path& path);

/// Inflates a gzip buffer (concatenated members allowed). Throws IoError.
std::string gunzip(std::string_view compressed);

} // namespace subvis::csv
