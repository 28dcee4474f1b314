#ifndef AXBSOLVE_MATRIX_IO_HPP
#define AXBSOLVE_MATRIX_IO_HPP

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "axbsolve/matrix.hpp"

namespace axbsolve {

// Matrix text format: one row per non-blank line, entries are integers or
// p/q rationals separated by whitespace, '#' starts a comment. All rows must
// have the same length. No rows at all parses as the 0x0 matrix.

/// Throws ParseError with 1-based line/column on malformed input.
Matrix parse_matrix(std::string_view text);

/// Same as parse_matrix but ';' also ends a row, for one-line command-line input.
Matrix parse_inline_matrix(std::string_view text);

/// Single-space separators, lowest-terms rationals, one row per line.
std::string format_matrix(const Matrix& m);

/// Splits text into sections introduced by header lines of the form "NAME:"
/// and parses each section as a matrix. Line numbers in errors refer to the
/// whole text. Text before the first header must be blank or comments.
std::map<std::string, Matrix> parse_sections(std::string_view text);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace axbsolve

#endif  // AXBSOLVE_MATRIX_IO_HPP
