#pragma once

// Core value types shared by every stage of the translator: both process
// model paradigms, the event log, and the simulation/miner configurations.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace simmine {

/// Error raised by every fallible operation. `stage()` names the pipeline
/// stage ("io", "simulate", "mine", ...) when one is known.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, std::string stage = {})
      : std::runtime_error(what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

using Activity = std::string;
using Word = std::vector<Activity>;

// ---------------------------------------------------------------------------
// Declarative paradigm

enum class Template : std::uint8_t {
  Existence,
  Absence2,
  Init,
  End,
  RespondedExistence,
  Response,
  Precedence,
  Succession,
  ChainResponse,
  ChainPrecedence,
  ChainSuccession,
  CoExistence,
  NotSuccession,
  NotChainSuccession,
};

inline constexpr std::array<Template, 14> kAllTemplates = {
    Template::Existence,       Template::Absence2,
    Template::Init,            Template::End,
    Template::RespondedExistence, Template::Response,
    Template::Precedence,      Template::Succession,
    Template::ChainResponse,   Template::ChainPrecedence,
    Template::ChainSuccession, Template::CoExistence,
    Template::NotSuccession,   Template::NotChainSuccession,
};

std::string_view template_name(Template t);
std::optional<Template> parse_template(std::string_view name);
int arity(Template t);

struct Constraint {
  Template kind{};
  std::vector<Activity> params;

  const Activity& first() const { return params.at(0); }
  const Activity& second() const { return params.at(1); }

  auto operator<=>(const Constraint&) const = default;
};

Constraint make_constraint(Template t, Activity a);
Constraint make_constraint(Template t, Activity a, Activity b);

/// "ChainSuccession(A,B)"
std::string to_string(const Constraint& c);

struct DeclareModel {
  std::set<Activity> alphabet;
  std::set<Constraint> constraints;

  bool operator==(const DeclareModel&) const = default;
};

// ---------------------------------------------------------------------------
// Imperative paradigm (control-flow subset of BPMN)

enum class NodeKind : std::uint8_t { Start, End, Task, XorSplit, XorJoin, AndSplit, AndJoin };

std::string_view node_kind_name(NodeKind k);
std::optional<NodeKind> parse_node_kind(std::string_view name);

struct Node {
  NodeKind kind{};
  Activity label;  // tasks only

  bool operator==(const Node&) const = default;
};

using NodeId = std::string;
using Edge = std::pair<NodeId, NodeId>;

struct ImperativeModel {
  std::map<NodeId, Node> nodes;
  std::set<Edge> edges;

  void add_node(NodeId id, NodeKind kind, Activity label = {});
  void add_edge(NodeId from, NodeId to) { edges.emplace(std::move(from), std::move(to)); }

  /// Task labels.
  std::set<Activity> alphabet() const;
  std::vector<NodeId> successors(const NodeId& id) const;
  std::vector<NodeId> predecessors(const NodeId& id) const;

  bool operator==(const ImperativeModel&) const = default;
};

using ProcessModel = std::variant<DeclareModel, ImperativeModel>;

enum class Paradigm : std::uint8_t { Declare, Imperative };

std::string_view paradigm_name(Paradigm p);
std::optional<Paradigm> parse_paradigm(std::string_view name);
Paradigm paradigm_of(const ProcessModel& m);
std::set<Activity> alphabet_of(const ProcessModel& m);

// ---------------------------------------------------------------------------
// Event logs

enum class Lifecycle : std::uint8_t { Start, Complete };

std::string_view lifecycle_name(Lifecycle l);
std::optional<Lifecycle> parse_lifecycle(std::string_view name);

struct Event {
  Activity activity;
  Lifecycle lifecycle = Lifecycle::Complete;
  std::size_t ordinal = 0;

  bool operator==(const Event&) const = default;
};

struct Trace {
  std::string case_id;
  std::vector<Event> events;

  /// Appends an event with the next ordinal.
  void append(Activity activity, Lifecycle lifecycle = Lifecycle::Complete);

  bool operator==(const Trace&) const = default;
};

struct EventLog {
  std::vector<Trace> traces;
  std::string source;

  bool operator==(const EventLog&) const = default;
};

/// Activity executions of a trace: the names of its complete events, in order.
Word completions(const Trace& t);

/// Every event as "<activity>+<lifecycle>", the classifier used when start and
/// complete events must be told apart.
Word typed_events(const Trace& t);

inline constexpr std::string_view kTypedSeparator = "+";
std::string typed_name(const Activity& a, Lifecycle l);

/// True when some activity in the trace starts while another is still running.
bool has_overlap(const Trace& t);

// ---------------------------------------------------------------------------
// Configuration records

struct SimulationParams {
  std::uint64_t trace_count = 1;  // N
  std::uint64_t max_length = 1;   // L, in activity executions
  std::uint64_t seed = 0;

  bool operator==(const SimulationParams&) const = default;
};

/// Flexible heuristics miner thresholds, 0-100 scale.
struct FhmConfig {
  double relative_to_best = 0.0;
  double dependency = 49.0;
  double length_one_loop = 0.0;
  double length_two_loop = 0.0;
  double long_distance = 100.0;
  bool all_tasks_connected = true;
  bool long_distance_dependencies = true;
  bool ignore_loop_dependency_thresholds = false;

  bool operator==(const FhmConfig&) const = default;
};

/// Declare miner thresholds, 0-100 scale.
struct DmmConfig {
  bool ignore_event_types = false;
  double min_support = 100.0;
  double alpha = 0.0;

  bool operator==(const DmmConfig&) const = default;
};

struct QualityReport {
  double fitness = 0.0;
  double appropriateness = 0.0;
  SimulationParams params_used;
  std::size_t validation_traces = 0;
  std::size_t skipped_for_appropriateness = 0;
  std::map<std::size_t, std::size_t> trace_length_histogram;

  bool operator==(const QualityReport&) const = default;
};

// ---------------------------------------------------------------------------
// Validation

struct Diagnostic {
  std::string rule;     // stable identifier of the violated invariant
  std::string subject;  // offending element
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

std::vector<Diagnostic> validate_declare(const DeclareModel& model);
std::vector<Diagnostic> validate_imperative(const ImperativeModel& model);
std::vector<Diagnostic> validate_log(const EventLog& log);
std::vector<Diagnostic> validate_fhm(const FhmConfig& config);

/// Throws Error carrying every diagnostic when the list is non-empty.
void throw_if_invalid(const std::vector<Diagnostic>& diagnostics, const std::string& what,
                      const std::string& stage = {});

}  // namespace simmine
