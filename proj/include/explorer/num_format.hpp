#ifndef EXPLORER_NUM_FORMAT_HPP_
#define EXPLORER_NUM_FORMAT_HPP_

#include <charconv>
#include <cstdint>
#include <string>

namespace explorer {

// Shortest round-trip decimal form, identical bytes for identical doubles.
// All deterministic text outputs (CSV, SVG, filenames) go through here.
inline std::string format_double(double value) {
  char buffer[32];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

inline std::string format_int(std::int64_t value) { return std::to_string(value); }

}  // namespace explorer

#endif  // EXPLORER_NUM_FORMAT_HPP_
