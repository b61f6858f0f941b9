#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace softround {

/// Doubles rendered with 17 significant digits (printf %g style), enough for
/// the printed text to reparse to the bit-identical double. Locale-independent.
std::string format_double(double v);

/// Shortest representation that round-trips (for labels and human output).
std::string format_double_short(double v);

/// Strict parse of a complete token as a double (optional leading '+'
/// tolerated). Returns false if anything besides a real number is present.
bool parse_real(std::string_view token, double& out);

/// Reads one real per line. Blank lines are skipped and '#' starts a comment
/// (whole-line or trailing). Throws std::runtime_error naming the 1-based
/// line number for an unparseable line, or the offending value if a line
/// parses to a non-finite number.
std::vector<double> read_input_values(std::istream& in);

}  // namespace softround
