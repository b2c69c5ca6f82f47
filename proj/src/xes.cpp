#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "simmine/io.hpp"

namespace simmine {

namespace {

constexpr std::string_view kConceptName = "concept:name";
constexpr std::string_view kLifecycle = "lifecycle:transition";
constexpr std::string_view kTimestamp = "time:timestamp";

std::string escape_xml(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// Days since 1970-01-01 to a proleptic Gregorian date.
void civil_from_days(long long z, long long& y, unsigned& m, unsigned& d) {
  z += 719468;
  const long long era = (z >= 0 ? z : z - 146096) / 146097;
  const auto doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<long long>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp < 10 ? mp + 3 : mp - 9;
  if (m <= 2) ++y;
}

long long days_from_civil(long long y, unsigned m, unsigned d) {
  y -= m <= 2;
  const long long era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m > 2 ? m - 3 : m + 9) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long long>(doe) - 719468;
}

std::string timestamp(std::size_t seconds) {
  const auto secs = static_cast<long long>(seconds);
  long long y;
  unsigned mo, d;
  civil_from_days(secs / 86400, y, mo, d);
  const long long rem = secs % 86400;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lld.000+00:00", y, mo, d, rem / 3600,
                (rem / 60) % 60, rem % 60);
  return buf;
}

// Seconds since the epoch for the timestamps this writer produces (UTC,
// optional fraction and offset); nullopt for anything else.
std::optional<std::size_t> parse_timestamp(const std::string& s) {
  long long y;
  unsigned mo, d, h, mi, se;
  int used = 0;
  if (std::sscanf(s.c_str(), "%lld-%u-%uT%u:%u:%u%n", &y, &mo, &d, &h, &mi, &se, &used) != 6) return std::nullopt;
  std::string rest = s.substr(static_cast<std::size_t>(used));
  if (!rest.empty() && rest[0] == '.') {
    std::size_t i = 1;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
    rest = rest.substr(i);
  }
  if (!(rest.empty() || rest == "Z" || rest == "+00:00")) return std::nullopt;
  const long long total = days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + se;
  if (total < 0) return std::nullopt;
  return static_cast<std::size_t>(total);
}

using boost::property_tree::ptree;

std::string attr(const ptree& node, const char* name) { return node.get<std::string>(std::string("<xmlattr>.") + name, ""); }

bool is_attribute_element(const std::string& tag) {
  return tag == "string" || tag == "date" || tag == "int" || tag == "float" || tag == "boolean" || tag == "id" ||
         tag == "list" || tag == "container";
}

Event read_event(const ptree& node, const std::string& path, std::size_t position, std::size_t& warnings,
                 bool& keep) {
  Event e;
  e.ordinal = position;
  bool named = false;
  keep = true;
  for (const auto& [tag, child] : node) {
    if (tag == "<xmlattr>" || tag == "<xmlcomment>") continue;
    const std::string key = attr(child, "key");
    if (tag == "string" && key == kConceptName) {
      e.activity = attr(child, "value");
      named = true;
    } else if (tag == "string" && key == kLifecycle) {
      auto l = parse_lifecycle(attr(child, "value"));
      if (!l) {
        ++warnings;
        keep = false;
      } else {
        e.lifecycle = *l;
      }
    } else if (tag == "date" && key == kTimestamp) {
      if (auto t = parse_timestamp(attr(child, "value"))) e.ordinal = *t;
      else ++warnings;
    } else {
      ++warnings;
    }
  }
  if (!named) throw Error(path + ": event without concept:name", "io");
  return e;
}

}  // namespace

void write_xes(const EventLog& log, std::ostream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<log xes.version=\"1.0\" xes.features=\"\">\n"
      << "  <extension name=\"Concept\" prefix=\"concept\" uri=\"http://www.xes-standard.org/concept.xesext\"/>\n"
      << "  <extension name=\"Lifecycle\" prefix=\"lifecycle\" uri=\"http://www.xes-standard.org/lifecycle.xesext\"/>\n"
      << "  <extension name=\"Time\" prefix=\"time\" uri=\"http://www.xes-standard.org/time.xesext\"/>\n"
      << "  <string key=\"concept:name\" value=\"" << escape_xml(log.source) << "\"/>\n";
  for (const auto& t : log.traces) {
    out << "  <trace>\n"
        << "    <string key=\"concept:name\" value=\"" << escape_xml(t.case_id) << "\"/>\n";
    for (const auto& e : t.events) {
      out << "    <event>\n"
          << "      <string key=\"concept:name\" value=\"" << escape_xml(e.activity) << "\"/>\n"
          << "      <string key=\"lifecycle:transition\" value=\"" << lifecycle_name(e.lifecycle) << "\"/>\n"
          << "      <date key=\"time:timestamp\" value=\"" << timestamp(e.ordinal) << "\"/>\n"
          << "    </event>\n";
    }
    out << "  </trace>\n";
  }
  out << "</log>\n";
}

std::string write_xes_string(const EventLog& log) {
  std::ostringstream out;
  write_xes(log, out);
  return out.str();
}

void write_xes_file(const EventLog& log, const std::filesystem::path& path) {
  write_text_file(path, write_xes_string(log));
}

XesReadResult read_xes(std::istream& in) {
  ptree tree;
  try {
    boost::property_tree::read_xml(in, tree);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw Error("malformed XES at line " + std::to_string(e.line()) + ": " + e.message(), "io");
  }
  auto root = tree.get_child_optional("log");
  if (!root) throw Error("XES document has no <log> root element", "io");

  XesReadResult result;
  std::size_t trace_no = 0;
  for (const auto& [tag, node] : *root) {
    if (tag == "<xmlattr>" || tag == "<xmlcomment>") continue;
    if (tag == "extension") {
      const std::string prefix = attr(node, "prefix");
      if (prefix != "concept" && prefix != "lifecycle" && prefix != "time") ++result.warnings;
    } else if (tag == "global" || tag == "classifier") {
      continue;
    } else if (tag == "string" && attr(node, "key") == kConceptName) {
      result.log.source = attr(node, "value");
    } else if (tag == "trace") {
      const std::string path = "log/trace[" + std::to_string(++trace_no) + "]";
      Trace t;
      std::size_t event_no = 0;
      for (const auto& [ttag, tnode] : node) {
        if (ttag == "<xmlattr>" || ttag == "<xmlcomment>") continue;
        if (ttag == "event") {
          bool keep = true;
          Event e = read_event(tnode, path + "/event[" + std::to_string(event_no + 1) + "]", t.events.size(),
                               result.warnings, keep);
          ++event_no;
          if (keep) t.events.push_back(std::move(e));
        } else if (ttag == "string" && attr(tnode, "key") == kConceptName) {
          t.case_id = attr(tnode, "value");
        } else if (is_attribute_element(ttag)) {
          ++result.warnings;
        } else {
          throw Error(path + "/" + ttag + ": unexpected element", "io");
        }
      }
      result.log.traces.push_back(std::move(t));
    } else if (is_attribute_element(tag)) {
      ++result.warnings;
    } else {
      throw Error("log/" + tag + ": unexpected element", "io");
    }
  }
  return result;
}

XesReadResult read_xes_string(const std::string& text) {
  std::istringstream in(text);
  return read_xes(in);
}

XesReadResult read_xes_file(const std::filesystem::path& path) { return read_xes_string(read_text_file(path)); }

}  // namespace simmine
