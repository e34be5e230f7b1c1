// table.hpp — benchmark kinds and the per-profile results table.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

namespace syncsim {

enum class Access { Atomic, Volatile, VolatilePrecededByAtomic };
enum class Contention { Contentious, Noncontentious };
enum class Direction { Read, Write };

struct BenchmarkKind {
  Access access{};
  Contention contention{};
  Direction direction{};

  auto operator<=>(const BenchmarkKind&) const = default;
};

// The 12 valid kinds: {atomic, volatile} x {contentious, noncontentious} x
// {read, write} plus the four preceded-by-atomic volatile variants.
const std::array<BenchmarkKind, 12>& all_benchmark_kinds();

std::string to_string(Access a);
std::string to_string(Contention c);
std::string to_string(Direction d);
std::string kind_label(const BenchmarkKind& k);

std::optional<Access> access_from_string(const std::string& s);
std::optional<Contention> contention_from_string(const std::string& s);
std::optional<Direction> direction_from_string(const std::string& s);

struct BenchmarkTable {
  std::string profile_name;
  int blocks = 0;
  int accesses_per_block = 0;
  std::map<BenchmarkKind, double> time_ms;

  double at(const BenchmarkKind& k) const;  // throws on missing row
  bool complete() const { return time_ms.size() == all_benchmark_kinds().size(); }
};

// CSV with header: profile,blocks,accesses_per_block,access,contention,direction,time_ms
std::string table_to_csv(const BenchmarkTable& t);
BenchmarkTable table_from_csv(const std::string& text);  // throws with line number
BenchmarkTable load_table_file(const std::string& path);
void save_table_file(const BenchmarkTable& t, const std::string& path);

}  // namespace syncsim
