#include "robinbox/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "robinbox/errors.hpp"

namespace robinbox {

std::string format_number(double value, int precision) {
  if (precision < 1 || precision > 17) {
    throw DomainError("precision must lie in [1, 17], got " + std::to_string(precision));
  }
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, precision);
  return std::string(buf.data(), res.ptr);
}

}  // namespace robinbox
