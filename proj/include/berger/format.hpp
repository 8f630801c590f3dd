#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace berger::fmtutil {

// Shortest decimal form is not used; every float is written with 17
// significant digits so output is byte-stable and round-trips.
std::string number(double v);

std::string optional_number(const std::optional<double>& v, std::string_view absent);

std::string quoted(std::string_view s);

}  // namespace berger::fmtutil
