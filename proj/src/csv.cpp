#include "softround/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <stdexcept>

namespace softround {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 40> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

std::string format_double_short(double v) {
  std::array<char, 40> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

bool parse_real(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') {
    token.remove_prefix(1);
    if (token.empty() || token.front() == '-' || token.front() == '+') {
      return false;
    }
  }
  if (token.empty()) {
    return false;
  }
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last;
}

std::vector<double> read_input_values(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view body{line};
    if (const auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    body = trim(body);
    if (body.empty()) {
      continue;
    }
    double value = 0.0;
    if (!parse_real(body, value)) {
      throw std::runtime_error("input line " + std::to_string(line_number) +
                               ": cannot parse '" + std::string(body) +
                               "' as a real number");
    }
    if (!std::isfinite(value)) {
      throw std::runtime_error("input line " + std::to_string(line_number) +
                               ": non-finite value '" + std::string(body) + "'");
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace softround
