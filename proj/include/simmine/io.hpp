#pragma once

// Serialization: XES event logs, the canonical model text format, DOT export
// and JSON quality reports. All writers are deterministic.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "simmine/automata.hpp"
#include "simmine/model.hpp"

namespace simmine {

// ---------------------------------------------------------------------------
// XES

/// Writes the concept, lifecycle and time extensions. Event timestamps are
/// 1970-01-01T00:00:00Z plus the event ordinal in seconds.
void write_xes(const EventLog& log, std::ostream& out);
std::string write_xes_string(const EventLog& log);
void write_xes_file(const EventLog& log, const std::filesystem::path& path);

struct XesReadResult {
  EventLog log;
  /// Unknown extensions, attributes, elements and lifecycle values skipped.
  std::size_t warnings = 0;
};

/// Errors carry the element path of the offending node, for example
/// "log/trace[3]/event[2]".
XesReadResult read_xes(std::istream& in);
XesReadResult read_xes_string(const std::string& text);
XesReadResult read_xes_file(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Canonical model text
//
//   model declare                      model imperative
//   activity "A"                       activity "A"
//   constraint Response "A" "B"        node start start
//                                      node t1 task "A"
//                                      edge start t1
//
// Lines are sorted, names are double-quoted with \" and \\ escapes, and '#'
// starts a comment.

std::string write_model(const ProcessModel& model);
void write_model_file(const ProcessModel& model, const std::filesystem::path& path);

/// Parses and validates; errors carry the line number.
ProcessModel read_model(const std::string& text);
ProcessModel read_model_file(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// DOT

std::string export_dot(const DeclareModel& model);
std::string export_dot(const ImperativeModel& model);
std::string export_dot(const ProcessModel& model);
/// Accepting states are drawn as double circles.
std::string export_dot(const Fsa& fsa);

// ---------------------------------------------------------------------------
// Miner configuration files

struct MinerConfig {
  FhmConfig fhm;
  DmmConfig dmm;

  bool operator==(const MinerConfig&) const = default;
};

/// Plain `key = value` lines; '#' starts a comment. Keys are the miner
/// setting names (relativeToBest, dependency, lengthOneLoop, lengthTwoLoop,
/// longDistance, allTasksConnected, longDistanceDependencies,
/// ignoreLoopDependencyThresholds, ignoreEventTypes, minSupport, alpha),
/// matched ignoring case and underscores. Unset keys keep `base` values.
MinerConfig read_miner_config(const std::string& text, MinerConfig base = {});
std::string write_miner_config(const MinerConfig& config);

// ---------------------------------------------------------------------------
// Reports

std::string report_json(const QualityReport& report);

/// Reads a whole file; errors are tagged with the "io" stage.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace simmine
