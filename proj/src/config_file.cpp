#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "simmine/io.hpp"

namespace simmine {

namespace {

std::string normalize(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c != '_' && c != '-') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Field {
  const char* name;
  std::function<void(MinerConfig&, const std::string&)> set;
  std::function<std::string(const MinerConfig&)> get;
};

double parse_real(const std::string& v) {
  double out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) throw std::invalid_argument("expected a number, got '" + v + "'");
  return out;
}

bool parse_bool(const std::string& v) {
  const std::string n = normalize(v);
  if (n == "true" || n == "1" || n == "yes") return true;
  if (n == "false" || n == "0" || n == "no") return false;
  throw std::invalid_argument("expected true or false, got '" + v + "'");
}

std::string show(double v) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  out << v;
  return out.str();
}

std::string show(bool v) { return v ? "true" : "false"; }

template <auto Member, auto Field_>
Field real(const char* name) {
  return {name, [](MinerConfig& c, const std::string& v) { (c.*Member).*Field_ = parse_real(v); },
          [](const MinerConfig& c) { return show((c.*Member).*Field_); }};
}

template <auto Member, auto Field_>
Field flag(const char* name) {
  return {name, [](MinerConfig& c, const std::string& v) { (c.*Member).*Field_ = parse_bool(v); },
          [](const MinerConfig& c) { return show((c.*Member).*Field_); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> all = {
      real<&MinerConfig::fhm, &FhmConfig::relative_to_best>("relativeToBest"),
      real<&MinerConfig::fhm, &FhmConfig::dependency>("dependency"),
      real<&MinerConfig::fhm, &FhmConfig::length_one_loop>("lengthOneLoop"),
      real<&MinerConfig::fhm, &FhmConfig::length_two_loop>("lengthTwoLoop"),
      real<&MinerConfig::fhm, &FhmConfig::long_distance>("longDistance"),
      flag<&MinerConfig::fhm, &FhmConfig::all_tasks_connected>("allTasksConnected"),
      flag<&MinerConfig::fhm, &FhmConfig::long_distance_dependencies>("longDistanceDependencies"),
      flag<&MinerConfig::fhm, &FhmConfig::ignore_loop_dependency_thresholds>("ignoreLoopDependencyThresholds"),
      flag<&MinerConfig::dmm, &DmmConfig::ignore_event_types>("ignoreEventTypes"),
      real<&MinerConfig::dmm, &DmmConfig::min_support>("minSupport"),
      real<&MinerConfig::dmm, &DmmConfig::alpha>("alpha"),
  };
  return all;
}

}  // namespace

MinerConfig read_miner_config(const std::string& text, MinerConfig base) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fail = [&](const std::string& msg) { throw Error("line " + std::to_string(line_no) + ": " + msg, "io"); };
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    const Field* field = nullptr;
    for (const auto& f : fields()) {
      if (normalize(f.name) == normalize(key)) field = &f;
    }
    if (!field) fail("unknown setting '" + key + "'");
    try {
      field->set(base, value);
    } catch (const std::invalid_argument& e) {
      fail(std::string(key) + ": " + e.what());
    }
  }
  return base;
}

std::string write_miner_config(const MinerConfig& config) {
  std::string out;
  for (const auto& f : fields()) out += std::string(f.name) + " = " + f.get(config) + "\n";
  return out;
}

}  // namespace simmine
