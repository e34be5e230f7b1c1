#include "syncsim/table.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace syncsim {

const std::array<BenchmarkKind, 12>& all_benchmark_kinds() {
  static const std::array<BenchmarkKind, 12> kinds = [] {
    std::array<BenchmarkKind, 12> v{};
    int i = 0;
    for (Access a : {Access::Volatile, Access::Atomic,
                     Access::VolatilePrecededByAtomic}) {
      for (Contention c : {Contention::Contentious, Contention::Noncontentious}) {
        for (Direction d : {Direction::Read, Direction::Write}) {
          v[i++] = BenchmarkKind{a, c, d};
        }
      }
    }
    return v;
  }();
  return kinds;
}

std::string to_string(Access a) {
  switch (a) {
    case Access::Atomic: return "atomic";
    case Access::Volatile: return "volatile";
    case Access::VolatilePrecededByAtomic: return "volatile_preceded_by_atomic";
  }
  return "?";
}

std::string to_string(Contention c) {
  return c == Contention::Contentious ? "contentious" : "noncontentious";
}

std::string to_string(Direction d) {
  return d == Direction::Read ? "read" : "write";
}

std::string kind_label(const BenchmarkKind& k) {
  return to_string(k.access) + "," + to_string(k.contention) + "," +
         to_string(k.direction);
}

std::optional<Access> access_from_string(const std::string& s) {
  if (s == "atomic") return Access::Atomic;
  if (s == "volatile") return Access::Volatile;
  if (s == "volatile_preceded_by_atomic") return Access::VolatilePrecededByAtomic;
  return std::nullopt;
}

std::optional<Contention> contention_from_string(const std::string& s) {
  if (s == "contentious") return Contention::Contentious;
  if (s == "noncontentious") return Contention::Noncontentious;
  return std::nullopt;
}

std::optional<Direction> direction_from_string(const std::string& s) {
  if (s == "read") return Direction::Read;
  if (s == "write") return Direction::Write;
  return std::nullopt;
}

double BenchmarkTable::at(const BenchmarkKind& k) const {
  auto it = time_ms.find(k);
  if (it == time_ms.end()) {
    throw std::runtime_error("benchmark table: missing row " + kind_label(k));
  }
  return it->second;
}

std::string table_to_csv(const BenchmarkTable& t) {
  std::ostringstream os;
  os << "profile,blocks,accesses_per_block,access,contention,direction,time_ms\n";
  char buf[64];
  for (const BenchmarkKind& k : all_benchmark_kinds()) {
    auto it = t.time_ms.find(k);
    if (it == t.time_ms.end()) continue;
    std::snprintf(buf, sizeof buf, "%.9f", it->second);
    os << t.profile_name << ',' << t.blocks << ',' << t.accesses_per_block
       << ',' << to_string(k.access) << ',' << to_string(k.contention) << ','
       << to_string(k.direction) << ',' << buf << "\n";
  }
  return os.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

BenchmarkTable table_from_csv(const std::string& text) {
  BenchmarkTable t;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#' || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (!saw_header) {
      if (fields.size() != 7 || fields[0] != "profile") {
        throw std::runtime_error("table csv: bad header at line " +
                                 std::to_string(lineno));
      }
      saw_header = true;
      continue;
    }
    if (fields.size() != 7) {
      throw std::runtime_error("table csv: expected 7 fields at line " +
                               std::to_string(lineno));
    }
    auto acc = access_from_string(fields[3]);
    auto con = contention_from_string(fields[4]);
    auto dir = direction_from_string(fields[5]);
    if (!acc || !con || !dir) {
      throw std::runtime_error("table csv: bad kind at line " +
                               std::to_string(lineno));
    }
    double ms = 0;
    try {
      ms = std::stod(fields[6]);
      t.blocks = std::stoi(fields[1]);
      t.accesses_per_block = std::stoi(fields[2]);
    } catch (const std::exception&) {
      throw std::runtime_error("table csv: bad number at line " +
                               std::to_string(lineno));
    }
    if (ms <= 0) {
      throw std::runtime_error("table csv: non-positive time at line " +
                               std::to_string(lineno));
    }
    t.profile_name = fields[0];
    t.time_ms[BenchmarkKind{*acc, *con, *dir}] = ms;
  }
  if (!saw_header) throw std::runtime_error("table csv: empty input");
  return t;
}

BenchmarkTable load_table_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open table file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return table_from_csv(os.str());
}

void save_table_file(const BenchmarkTable& t, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write table file: " + path);
  f << table_to_csv(t);
}

}  // namespace syncsim
