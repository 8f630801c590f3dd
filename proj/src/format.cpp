#include "berger/format.hpp"

#include <cmath>

#include <fmt/format.h>

namespace berger::fmtutil {

std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  return fmt::format("{:.17g}", v);
}

std::string optional_number(const std::optional<double>& v, std::string_view absent) {
  return v ? number(*v) : std::string(absent);
}

std::string quoted(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace berger::fmtutil
