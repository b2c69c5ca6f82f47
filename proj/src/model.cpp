#include "simmine/model.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace simmine {

namespace {

constexpr std::array<std::string_view, 14> kTemplateNames = {
    "Existence",     "Absence2",       "Init",           "End",
    "RespondedExistence", "Response",   "Precedence",     "Succession",
    "ChainResponse", "ChainPrecedence", "ChainSuccession", "CoExistence",
    "NotSuccession", "NotChainSuccession",
};

constexpr std::array<std::string_view, 7> kNodeKindNames = {
    "start", "end", "task", "xor-split", "xor-join", "and-split", "and-join",
};

bool has_control_character(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return u < 0x20 || u == 0x7f;
  });
}

void check_name(std::vector<Diagnostic>& out, const std::string& name, const std::string& where) {
  if (name.empty()) {
    out.push_back({"empty-activity-name", where, "activity name must not be empty"});
  } else if (has_control_character(name)) {
    out.push_back({"control-character", where, "activity name contains a control character"});
  }
}

}  // namespace

std::string_view template_name(Template t) { return kTemplateNames.at(static_cast<std::size_t>(t)); }

std::optional<Template> parse_template(std::string_view name) {
  for (std::size_t i = 0; i < kTemplateNames.size(); ++i) {
    if (kTemplateNames[i] == name) return static_cast<Template>(i);
  }
  return std::nullopt;
}

int arity(Template t) {
  switch (t) {
    case Template::Existence:
    case Template::Absence2:
    case Template::Init:
    case Template::End:
      return 1;
    default:
      return 2;
  }
}

Constraint make_constraint(Template t, Activity a) { return Constraint{t, {std::move(a)}}; }

Constraint make_constraint(Template t, Activity a, Activity b) {
  return Constraint{t, {std::move(a), std::move(b)}};
}

std::string to_string(const Constraint& c) {
  std::string out(template_name(c.kind));
  out += '(';
  for (std::size_t i = 0; i < c.params.size(); ++i) {
    if (i) out += ',';
    out += c.params[i];
  }
  out += ')';
  return out;
}

std::string_view node_kind_name(NodeKind k) { return kNodeKindNames.at(static_cast<std::size_t>(k)); }

std::optional<NodeKind> parse_node_kind(std::string_view name) {
  for (std::size_t i = 0; i < kNodeKindNames.size(); ++i) {
    if (kNodeKindNames[i] == name) return static_cast<NodeKind>(i);
  }
  return std::nullopt;
}

void ImperativeModel::add_node(NodeId id, NodeKind kind, Activity label) {
  nodes.insert_or_assign(std::move(id), Node{kind, std::move(label)});
}

std::set<Activity> ImperativeModel::alphabet() const {
  std::set<Activity> out;
  for (const auto& [id, node] : nodes) {
    if (node.kind == NodeKind::Task) out.insert(node.label);
  }
  return out;
}

std::vector<NodeId> ImperativeModel::successors(const NodeId& id) const {
  std::vector<NodeId> out;
  for (auto it = edges.lower_bound({id, NodeId{}}); it != edges.end() && it->first == id; ++it) {
    out.push_back(it->second);
  }
  return out;
}

std::vector<NodeId> ImperativeModel::predecessors(const NodeId& id) const {
  std::vector<NodeId> out;
  for (const auto& [from, to] : edges) {
    if (to == id) out.push_back(from);
  }
  return out;
}

std::string_view paradigm_name(Paradigm p) {
  return p == Paradigm::Declare ? "declare" : "imperative";
}

std::optional<Paradigm> parse_paradigm(std::string_view name) {
  if (name == "declare") return Paradigm::Declare;
  if (name == "imperative") return Paradigm::Imperative;
  return std::nullopt;
}

Paradigm paradigm_of(const ProcessModel& m) {
  return std::holds_alternative<DeclareModel>(m) ? Paradigm::Declare : Paradigm::Imperative;
}

std::set<Activity> alphabet_of(const ProcessModel& m) {
  if (const auto* d = std::get_if<DeclareModel>(&m)) return d->alphabet;
  return std::get<ImperativeModel>(m).alphabet();
}

std::string_view lifecycle_name(Lifecycle l) { return l == Lifecycle::Start ? "start" : "complete"; }

std::optional<Lifecycle> parse_lifecycle(std::string_view name) {
  if (name == "start") return Lifecycle::Start;
  if (name == "complete") return Lifecycle::Complete;
  return std::nullopt;
}

void Trace::append(Activity activity, Lifecycle lifecycle) {
  std::size_t ordinal = events.empty() ? 0 : events.back().ordinal + 1;
  events.push_back(Event{std::move(activity), lifecycle, ordinal});
}

Word completions(const Trace& t) {
  Word out;
  out.reserve(t.events.size());
  for (const auto& e : t.events) {
    if (e.lifecycle == Lifecycle::Complete) out.push_back(e.activity);
  }
  return out;
}

std::string typed_name(const Activity& a, Lifecycle l) {
  std::string out = a;
  out += kTypedSeparator;
  out += lifecycle_name(l);
  return out;
}

Word typed_events(const Trace& t) {
  Word out;
  out.reserve(t.events.size());
  for (const auto& e : t.events) out.push_back(typed_name(e.activity, e.lifecycle));
  return out;
}

bool has_overlap(const Trace& t) {
  std::size_t running = 0;
  for (const auto& e : t.events) {
    if (e.lifecycle == Lifecycle::Start) {
      if (running > 0) return true;
      ++running;
    } else if (running > 0) {
      --running;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

std::vector<Diagnostic> validate_declare(const DeclareModel& model) {
  std::vector<Diagnostic> out;
  for (const auto& a : model.alphabet) check_name(out, a, "activity '" + a + "'");

  for (const auto& c : model.constraints) {
    const auto label = to_string(c);
    if (static_cast<int>(c.params.size()) != arity(c.kind)) {
      out.push_back({"arity", label,
                     std::string(template_name(c.kind)) + " takes " + std::to_string(arity(c.kind)) +
                         " parameter(s)"});
      continue;
    }
    if (c.params.size() == 2 && c.params[0] == c.params[1]) {
      out.push_back({"distinct-params", label, "binary template needs distinct activities"});
    }
    for (const auto& p : c.params) {
      if (!model.alphabet.contains(p)) {
        out.push_back({"unknown-activity", label, "unknown activity " + p});
      }
    }
  }
  return out;
}

std::vector<Diagnostic> validate_imperative(const ImperativeModel& model) {
  std::vector<Diagnostic> out;
  std::map<NodeId, std::size_t> in_degree, out_degree;
  for (const auto& [id, node] : model.nodes) {
    in_degree[id];
    out_degree[id];
  }
  for (const auto& [from, to] : model.edges) {
    bool ok = true;
    if (!model.nodes.contains(from)) {
      out.push_back({"dangling-edge", from + "->" + to, "edge source " + from + " is not a node"});
      ok = false;
    }
    if (!model.nodes.contains(to)) {
      out.push_back({"dangling-edge", from + "->" + to, "edge target " + to + " is not a node"});
      ok = false;
    }
    if (ok) {
      ++out_degree[from];
      ++in_degree[to];
    }
  }

  std::vector<NodeId> starts, ends;
  for (const auto& [id, node] : model.nodes) {
    const auto in = in_degree[id];
    const auto outd = out_degree[id];
    switch (node.kind) {
      case NodeKind::Start:
        starts.push_back(id);
        if (in != 0) out.push_back({"start-incoming", id, "start event has incoming edges"});
        break;
      case NodeKind::End:
        ends.push_back(id);
        if (outd != 0) out.push_back({"end-outgoing", id, "end event has outgoing edges"});
        break;
      case NodeKind::Task:
        check_name(out, node.label, "task '" + id + "'");
        if (in != 1) out.push_back({"task-in-degree", id, "task in-degree must be 1"});
        if (outd != 1) out.push_back({"task-out-degree", id, "task out-degree must be 1"});
        break;
      case NodeKind::XorSplit:
      case NodeKind::AndSplit:
        if (outd < 2) out.push_back({"split-degree", id, "split needs at least two outgoing edges"});
        if (in < 1) out.push_back({"gateway-in-degree", id, "gateway has no incoming edge"});
        break;
      case NodeKind::XorJoin:
      case NodeKind::AndJoin:
        if (in < 2) out.push_back({"join-degree", id, "join needs at least two incoming edges"});
        if (outd < 1) out.push_back({"gateway-out-degree", id, "gateway has no outgoing edge"});
        break;
    }
  }
  if (starts.empty()) out.push_back({"start-count", "", "missing start event"});
  if (starts.size() > 1) out.push_back({"start-count", starts[1], "multiple start events"});
  if (ends.empty()) out.push_back({"end-count", "", "missing end event"});

  if (starts.size() == 1 && !ends.empty()) {
    std::set<NodeId> forward{starts.front()};
    std::deque<NodeId> queue{starts.front()};
    while (!queue.empty()) {
      auto id = queue.front();
      queue.pop_front();
      for (const auto& s : model.successors(id)) {
        if (model.nodes.contains(s) && forward.insert(s).second) queue.push_back(s);
      }
    }
    std::map<NodeId, std::vector<NodeId>> preds;
    for (const auto& [from, to] : model.edges) preds[to].push_back(from);
    std::set<NodeId> backward(ends.begin(), ends.end());
    queue.assign(ends.begin(), ends.end());
    while (!queue.empty()) {
      auto id = queue.front();
      queue.pop_front();
      for (const auto& p : preds[id]) {
        if (model.nodes.contains(p) && backward.insert(p).second) queue.push_back(p);
      }
    }
    for (const auto& [id, node] : model.nodes) {
      if (!forward.contains(id)) {
        out.push_back({"unreachable", id, "node is not reachable from the start event"});
      } else if (!backward.contains(id)) {
        out.push_back({"no-path-to-end", id, "node does not reach an end event"});
      }
    }
  }
  return out;
}

std::vector<Diagnostic> validate_log(const EventLog& log) {
  std::vector<Diagnostic> out;
  std::set<std::string> seen;
  for (const auto& trace : log.traces) {
    if (!seen.insert(trace.case_id).second) {
      out.push_back({"duplicate-case-id", trace.case_id, "case id is not unique"});
    }
    std::map<Activity, std::size_t> open;
    for (std::size_t i = 0; i < trace.events.size(); ++i) {
      const auto& e = trace.events[i];
      check_name(out, e.activity, "trace '" + trace.case_id + "' event " + std::to_string(i));
      if (i > 0 && e.ordinal <= trace.events[i - 1].ordinal) {
        out.push_back({"ordinal-order", trace.case_id, "event ordinals must be strictly increasing"});
      }
      if (e.lifecycle == Lifecycle::Start) {
        ++open[e.activity];
      } else if (auto it = open.find(e.activity); it != open.end() && it->second > 0) {
        --it->second;
      }
    }
    for (const auto& [activity, count] : open) {
      if (count > 0) {
        out.push_back({"unmatched-start", trace.case_id,
                       "start of " + activity + " has no later complete"});
      }
    }
  }
  return out;
}

std::vector<Diagnostic> validate_fhm(const FhmConfig& config) {
  std::vector<Diagnostic> out;
  auto check = [&](double v, const char* name) {
    if (!(v >= 0.0 && v <= 100.0)) out.push_back({"threshold-range", name, "threshold must lie in [0, 100]"});
  };
  check(config.relative_to_best, "relativeToBest");
  check(config.dependency, "dependency");
  check(config.length_one_loop, "lengthOneLoop");
  check(config.length_two_loop, "lengthTwoLoop");
  check(config.long_distance, "longDistance");
  return out;
}

void throw_if_invalid(const std::vector<Diagnostic>& diagnostics, const std::string& what,
                      const std::string& stage) {
  if (diagnostics.empty()) return;
  std::ostringstream msg;
  msg << what << " is invalid:";
  for (const auto& d : diagnostics) {
    msg << "\n  [" << d.rule << "]";
    if (!d.subject.empty()) msg << ' ' << d.subject << ':';
    msg << ' ' << d.message;
  }
  throw Error(msg.str(), stage);
}

}  // namespace simmine
