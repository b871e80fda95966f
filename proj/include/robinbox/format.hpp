#pragma once

#include <string>

namespace robinbox {

inline constexpr int kDefaultPrecision = 12;

// Shortest general-notation rendering with `precision` significant digits,
// independent of the C locale. Non-finite values print as nan, inf, -inf.
std::string format_number(double value, int precision = kDefaultPrecision);

}  // namespace robinbox
