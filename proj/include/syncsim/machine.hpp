// machine.hpp — machine abstraction: per-access timing, topology, line
// mapping, and the two built-in calibrated profiles.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "syncsim/time.hpp"

namespace syncsim {

using WordAddress = std::uint64_t;
using LineId = std::uint64_t;

// Uncontended end-to-end latencies and per-line serialization costs, as seen
// by a block's master thread. "Atomic read" is an add of zero, "atomic write"
// an exchange. All strictly positive.
struct TimingParams {
  TimePs lat_volatile_read = 0;
  TimePs lat_volatile_write = 0;
  TimePs lat_atomic_read = 0;
  TimePs lat_atomic_write = 0;
  TimePs svc_volatile_read = 0;
  TimePs svc_volatile_write = 0;
  TimePs svc_atomic_read = 0;
  TimePs svc_atomic_write = 0;
  TimePs sync_threads_cost = 0;

  bool operator==(const TimingParams&) const = default;
};

struct MachineProfile {
  std::string name;
  TimingParams timing;
  // Whether an atomic unit with pending work captures its memory line and
  // services volatile accesses at atomic cost until the queue drains.
  bool line_hostage = false;
  int num_sms = 0;
  int max_blocks_per_sm = 0;
  int threads_per_block = 0;
  int warp_width = 0;        // threads whose same-line accesses coalesce
  int line_size = 0;         // bytes
  int word_size = 4;         // bytes

  int max_blocks() const { return num_sms * max_blocks_per_sm; }
  int words_per_line() const { return line_size / word_size; }

  bool operator==(const MachineProfile&) const = default;
};

// Fully-saturated block counts and 1000 accesses per block are baked into the
// calibration arithmetic; see make_*_profile() in machine.cpp.
MachineProfile make_tesla_profile();
MachineProfile make_fermi_profile();

// Throws std::invalid_argument on violated invariants (non-positive
// durations, svc_atomic < svc_volatile, line/word size mismatch).
void validate_profile(const MachineProfile& p);

inline LineId line_of(const MachineProfile& p, WordAddress addr) {
  return addr * static_cast<WordAddress>(p.word_size) /
         static_cast<WordAddress>(p.line_size);
}

// Key-value config file (durations in ns, fractional allowed).
std::string profile_to_config(const MachineProfile& p);
MachineProfile profile_from_config(const std::string& text);
MachineProfile load_profile_file(const std::string& path);
void save_profile_file(const MachineProfile& p, const std::string& path);

// Resolves a built-in name ("tesla"/"fermi") or a config-file path.
MachineProfile resolve_profile(const std::string& name_or_path);

// The three memory-system characteristics recovered from a benchmark table.
struct AbstractionReport {
  double atomic_vs_volatile_contentious_read = 0.0;
  double atomic_vs_volatile_contentious_write = 0.0;
  double volatile_contention_ratio_read = 0.0;
  double volatile_contention_ratio_write = 0.0;
  double hostage_ratio_read = 0.0;   // preceded-by-atomic vs pure volatile
  double hostage_ratio_write = 0.0;
  bool line_hostage = false;
};

inline constexpr double kDefaultHostageThreshold = 2.0;

}  // namespace syncsim
