#include "antipodal/csv.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace antipodal {

namespace {

std::string to_chars_string(double value, std::chars_format fmt) {
  std::array<char, 512> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, fmt);
  if (ec != std::errc{}) throw std::runtime_error("number formatting overflow");
  return std::string(buf.data(), ptr);
}

}  // namespace

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("number formatting overflow");
  return std::string(buf.data(), ptr);
}

std::string format_fixed(double value) { return to_chars_string(value, std::chars_format::fixed); }

std::string format_optional(const std::optional<double>& value) {
  return value ? format_real(*value) : std::string{};
}

}  // namespace antipodal
