// time.hpp — simulated-time representation and unit conversions
//
// The clock counts integer picoseconds. Calibrated per-access service times
// are sub-nanosecond (a few ns split across hundreds of blocks), so integer
// nanoseconds cannot represent them; picoseconds keep every timing quantity
// exact-integer and runs bit-reproducible.

#pragma once

#include <cmath>
#include <cstdint>

namespace syncsim {

using TimePs = std::int64_t;

constexpr TimePs kPsPerNs = 1000;

constexpr TimePs from_ns(std::int64_t ns) { return ns * kPsPerNs; }

inline TimePs from_ns(double ns) {
  return static_cast<TimePs>(std::llround(ns * static_cast<double>(kPsPerNs)));
}

inline TimePs from_ms(double ms) {
  return static_cast<TimePs>(std::llround(ms * 1e9));
}

constexpr TimePs from_seconds(double s) {
  return static_cast<TimePs>(s * 1e12);
}

inline double to_ns(TimePs t) { return static_cast<double>(t) / 1e3; }
inline double to_ms(TimePs t) { return static_cast<double>(t) / 1e9; }
inline double to_seconds(TimePs t) { return static_cast<double>(t) / 1e12; }

}  // namespace syncsim
