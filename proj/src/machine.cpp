#include "syncsim/machine.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "syncsim/table.hpp"

namespace syncsim {

namespace {

// Closed-form calibration from a saturated-GPU measurement pair:
// the noncontentious benchmark is a latency-bound dependent chain of 1000
// accesses per block, so lat = time / 1000; the contentious benchmark fully
// serializes at a single line, so svc = time / (1000 * blocks).
TimePs lat_from_ms(double noncontentious_ms) {
  return from_ns(noncontentious_ms * 1e6 / 1000.0);
}

TimePs svc_from_ms(double contentious_ms, int blocks) {
  return static_cast<TimePs>(
      std::llround(contentious_ms * 1e9 / (1000.0 * blocks)));
}

}  // namespace

MachineProfile make_tesla_profile() {
  MachineProfile p;
  p.name = "tesla";
  p.line_hostage = false;
  p.num_sms = 30;
  p.max_blocks_per_sm = 8;
  p.threads_per_block = 128;
  p.warp_width = 32;
  p.line_size = 128;
  p.word_size = 4;
  const int blocks = p.max_blocks();  // 240
  p.timing.lat_volatile_read = lat_from_ms(0.590);
  p.timing.lat_volatile_write = lat_from_ms(0.226);
  p.timing.lat_atomic_read = lat_from_ms(0.845);
  p.timing.lat_atomic_write = lat_from_ms(0.991);
  p.timing.svc_volatile_read = svc_from_ms(0.848, blocks);
  p.timing.svc_volatile_write = svc_from_ms(0.829, blocks);
  p.timing.svc_atomic_read = svc_from_ms(78.407, blocks);
  p.timing.svc_atomic_write = svc_from_ms(78.404, blocks);
  p.timing.sync_threads_cost = from_ns(20);
  validate_profile(p);
  return p;
}

MachineProfile make_fermi_profile() {
  MachineProfile p;
  p.name = "fermi";
  p.line_hostage = true;
  p.num_sms = 16;
  p.max_blocks_per_sm = 8;
  p.threads_per_block = 128;
  p.warp_width = 32;
  p.line_size = 128;
  p.word_size = 4;
  const int blocks = p.max_blocks();  // 128
  p.timing.lat_volatile_read = lat_from_ms(0.043);
  p.timing.lat_volatile_write = lat_from_ms(0.029);
  p.timing.lat_atomic_read = lat_from_ms(0.437);
  p.timing.lat_atomic_write = lat_from_ms(0.312);
  p.timing.svc_volatile_read = svc_from_ms(0.494, blocks);
  p.timing.svc_volatile_write = svc_from_ms(0.175, blocks);
  p.timing.svc_atomic_read = svc_from_ms(1.479, blocks);
  p.timing.svc_atomic_write = svc_from_ms(1.470, blocks);
  p.timing.sync_threads_cost = from_ns(20);
  validate_profile(p);
  return p;
}

void validate_profile(const MachineProfile& p) {
  auto positive = [](TimePs v, const char* what) {
    if (v <= 0) throw std::invalid_argument(std::string("profile: ") + what +
                                            " must be positive");
  };
  const TimingParams& t = p.timing;
  positive(t.lat_volatile_read, "lat_volatile_read");
  positive(t.lat_volatile_write, "lat_volatile_write");
  positive(t.lat_atomic_read, "lat_atomic_read");
  positive(t.lat_atomic_write, "lat_atomic_write");
  positive(t.svc_volatile_read, "svc_volatile_read");
  positive(t.svc_volatile_write, "svc_volatile_write");
  positive(t.svc_atomic_read, "svc_atomic_read");
  positive(t.svc_atomic_write, "svc_atomic_write");
  positive(t.sync_threads_cost, "sync_threads_cost");
  if (t.svc_atomic_read < t.svc_volatile_read ||
      t.svc_atomic_write < t.svc_volatile_write) {
    throw std::invalid_argument(
        "profile: atomic service time below volatile service time");
  }
  if (p.num_sms <= 0 || p.max_blocks_per_sm <= 0 || p.threads_per_block <= 0 ||
      p.warp_width <= 0 || p.line_size <= 0 || p.word_size <= 0) {
    throw std::invalid_argument("profile: topology fields must be positive");
  }
  if (p.line_size % (p.word_size * p.warp_width) != 0) {
    throw std::invalid_argument(
        "profile: line_size must be a multiple of word_size * warp_width");
  }
}

namespace {

std::string format_ns(TimePs ps) {
  char buf[64];
  if (ps % kPsPerNs == 0) {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(ps / kPsPerNs));
  } else {
    std::snprintf(buf, sizeof buf, "%.3f", to_ns(ps));
  }
  return buf;
}

}  // namespace

std::string profile_to_config(const MachineProfile& p) {
  std::ostringstream os;
  os << "name = " << p.name << "\n";
  os << "line_hostage = " << (p.line_hostage ? "true" : "false") << "\n";
  os << "num_sms = " << p.num_sms << "\n";
  os << "max_blocks_per_sm = " << p.max_blocks_per_sm << "\n";
  os << "threads_per_block = " << p.threads_per_block << "\n";
  os << "warp_width = " << p.warp_width << "\n";
  os << "line_size = " << p.line_size << "\n";
  os << "word_size = " << p.word_size << "\n";
  os << "lat_volatile_read = " << format_ns(p.timing.lat_volatile_read) << "\n";
  os << "lat_volatile_write = " << format_ns(p.timing.lat_volatile_write) << "\n";
  os << "lat_atomic_read = " << format_ns(p.timing.lat_atomic_read) << "\n";
  os << "lat_atomic_write = " << format_ns(p.timing.lat_atomic_write) << "\n";
  os << "svc_volatile_read = " << format_ns(p.timing.svc_volatile_read) << "\n";
  os << "svc_volatile_write = " << format_ns(p.timing.svc_volatile_write) << "\n";
  os << "svc_atomic_read = " << format_ns(p.timing.svc_atomic_read) << "\n";
  os << "svc_atomic_write = " << format_ns(p.timing.svc_atomic_write) << "\n";
  os << "sync_threads_cost = " << format_ns(p.timing.sync_threads_cost) << "\n";
  return os.str();
}

MachineProfile profile_from_config(const std::string& text) {
  MachineProfile p;
  p.word_size = 0;  // all fields must appear explicitly
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("profile config: missing '=' at line " +
                               std::to_string(lineno));
    }
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string()
                                    : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  auto want = [&](const std::string& key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end())
      throw std::runtime_error("profile config: missing key '" + key + "'");
    return it->second;
  };
  auto want_int = [&](const std::string& key) { return std::stoi(want(key)); };
  auto want_ns = [&](const std::string& key) {
    return from_ns(std::stod(want(key)));
  };
  p.name = want("name");
  const std::string hostage = want("line_hostage");
  if (hostage != "true" && hostage != "false")
    throw std::runtime_error("profile config: line_hostage must be true/false");
  p.line_hostage = hostage == "true";
  p.num_sms = want_int("num_sms");
  p.max_blocks_per_sm = want_int("max_blocks_per_sm");
  p.threads_per_block = want_int("threads_per_block");
  p.warp_width = want_int("warp_width");
  p.line_size = want_int("line_size");
  p.word_size = want_int("word_size");
  p.timing.lat_volatile_read = want_ns("lat_volatile_read");
  p.timing.lat_volatile_write = want_ns("lat_volatile_write");
  p.timing.lat_atomic_read = want_ns("lat_atomic_read");
  p.timing.lat_atomic_write = want_ns("lat_atomic_write");
  p.timing.svc_volatile_read = want_ns("svc_volatile_read");
  p.timing.svc_volatile_write = want_ns("svc_volatile_write");
  p.timing.svc_atomic_read = want_ns("svc_atomic_read");
  p.timing.svc_atomic_write = want_ns("svc_atomic_write");
  p.timing.sync_threads_cost = want_ns("sync_threads_cost");
  validate_profile(p);
  return p;
}

MachineProfile load_profile_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open profile file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return profile_from_config(os.str());
}

void save_profile_file(const MachineProfile& p, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write profile file: " + path);
  f << profile_to_config(p);
}

MachineProfile resolve_profile(const std::string& name_or_path) {
  if (name_or_path == "tesla") return make_tesla_profile();
  if (name_or_path == "fermi") return make_fermi_profile();
  std::ifstream f(name_or_path);
  if (!f) {
    throw std::runtime_error("unknown profile '" + name_or_path +
                             "' (built-ins: tesla, fermi; or a config path)");
  }
  std::ostringstream os;
  os << f.rdbuf();
  return profile_from_config(os.str());
}

}  // namespace syncsim
