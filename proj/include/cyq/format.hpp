#pragma once

#include <string>

namespace cyq {

// Fixed-point with the given number of decimals, rounding half away from
// zero (table rendering convention).
std::string format_rounded(double value, int decimals);

// Shortest representation that parses back to the identical double; used for
// CSV cells.
std::string format_full(double value);

}  // namespace cyq
