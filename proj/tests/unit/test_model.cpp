#include "doctest.h"
#include "simmine/bundled.hpp"
#include "simmine/model.hpp"

using namespace simmine;

namespace {

bool has_rule(const std::vector<Diagnostic>& d, const std::string& rule) {
  for (const auto& x : d) {
    if (x.rule == rule) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("template names round trip and arity") {
  for (auto t : kAllTemplates) {
    auto parsed = parse_template(template_name(t));
    REQUIRE(parsed);
    CHECK(*parsed == t);
  }
  CHECK_FALSE(parse_template("Chainsuccession"));
  CHECK(arity(Template::Existence) == 1);
  CHECK(arity(Template::Absence2) == 1);
  CHECK(arity(Template::Init) == 1);
  CHECK(arity(Template::End) == 1);
  std::size_t binary = 0;
  for (auto t : kAllTemplates) binary += arity(t) == 2;
  CHECK(binary == 10);
  CHECK(to_string(make_constraint(Template::ChainSuccession, "A", "B")) == "ChainSuccession(A,B)");
}

TEST_CASE("node kinds, paradigms and lifecycles parse back") {
  for (auto k : {NodeKind::Start, NodeKind::End, NodeKind::Task, NodeKind::XorSplit, NodeKind::XorJoin,
                 NodeKind::AndSplit, NodeKind::AndJoin}) {
    CHECK(parse_node_kind(node_kind_name(k)) == k);
  }
  CHECK(parse_paradigm("declare") == Paradigm::Declare);
  CHECK(parse_paradigm("imperative") == Paradigm::Imperative);
  CHECK_FALSE(parse_paradigm("bpmn"));
  CHECK(parse_lifecycle("start") == Lifecycle::Start);
  CHECK(parse_lifecycle("complete") == Lifecycle::Complete);
  CHECK_FALSE(parse_lifecycle("schedule"));
}

TEST_CASE("miner configurations default to the recommended values") {
  FhmConfig f;
  CHECK(f.relative_to_best == 0.0);
  CHECK(f.dependency == 49.0);
  CHECK(f.length_one_loop == 0.0);
  CHECK(f.length_two_loop == 0.0);
  CHECK(f.long_distance == 100.0);
  CHECK(f.all_tasks_connected == true);
  CHECK(f.long_distance_dependencies == true);
  CHECK(f.ignore_loop_dependency_thresholds == false);
  DmmConfig d;
  CHECK(d.ignore_event_types == false);
  CHECK(d.min_support == 100.0);
  CHECK(d.alpha == 0.0);
  CHECK(validate_fhm(f).empty());
  f.dependency = 101.0;
  CHECK(has_rule(validate_fhm(f), "threshold-range"));
}

TEST_CASE("validate_declare") {
  CHECK(validate_declare(bundled::chain_succession()).empty());

  DeclareModel unknown{{"A"}, {make_constraint(Template::Response, "A", "B")}};
  auto d = validate_declare(unknown);
  REQUIRE(d.size() == 1);
  CHECK(d[0].rule == "unknown-activity");
  CHECK(d[0].message == "unknown activity B");

  DeclareModel same{{"A", "B"}, {make_constraint(Template::ChainSuccession, "A", "A")}};
  d = validate_declare(same);
  REQUIRE(d.size() == 1);
  CHECK(d[0].message == "binary template needs distinct activities");

  DeclareModel bad_arity{{"A", "B"}, {Constraint{Template::Response, {"A"}}}};
  CHECK(has_rule(validate_declare(bad_arity), "arity"));

  DeclareModel bad_names{{"", "A\tB"}, {}};
  CHECK(has_rule(validate_declare(bad_names), "empty-activity-name"));
  CHECK(has_rule(validate_declare(bad_names), "control-character"));

  CHECK(validate_declare(unknown) == validate_declare(unknown));
}

TEST_CASE("validate_imperative") {
  CHECK(validate_imperative(bundled::sequence_abc()).empty());
  CHECK(validate_imperative(bundled::choice_loop()).empty());
  CHECK(validate_imperative(bundled::chain_succession_imperative()).empty());

  auto two_starts = bundled::sequence_abc();
  two_starts.add_node("s2", NodeKind::Start);
  two_starts.add_edge("s2", "t2");
  auto d = validate_imperative(two_starts);
  bool found = false;
  for (const auto& x : d) found = found || x.message == "multiple start events";
  CHECK(found);

  auto forked_task = bundled::sequence_abc();
  forked_task.add_edge("t1", "t3");
  found = false;
  for (const auto& x : validate_imperative(forked_task)) found = found || x.message == "task out-degree must be 1";
  CHECK(found);

  ImperativeModel empty;
  CHECK(has_rule(validate_imperative(empty), "start-count"));
  CHECK(has_rule(validate_imperative(empty), "end-count"));

  auto dangling = bundled::sequence_abc();
  dangling.add_edge("t3", "nowhere");
  CHECK(has_rule(validate_imperative(dangling), "dangling-edge"));

  auto island = bundled::sequence_abc();
  island.add_node("x", NodeKind::Task, "X");
  CHECK(has_rule(validate_imperative(island), "unreachable"));

  ImperativeModel thin_split;
  thin_split.add_node("start", NodeKind::Start);
  thin_split.add_node("end", NodeKind::End);
  thin_split.add_node("g", NodeKind::XorSplit);
  thin_split.add_edge("start", "g");
  thin_split.add_edge("g", "end");
  CHECK(has_rule(validate_imperative(thin_split), "split-degree"));

  // Only the end event is left unreachable from a loop with no exit.
  ImperativeModel trap;
  trap.add_node("start", NodeKind::Start);
  trap.add_node("end", NodeKind::End);
  trap.add_node("j", NodeKind::XorJoin);
  trap.add_node("t", NodeKind::Task, "A");
  trap.add_edge("start", "j");
  trap.add_edge("j", "t");
  trap.add_edge("t", "j");
  CHECK(has_rule(validate_imperative(trap), "no-path-to-end"));
}

TEST_CASE("trace projections and overlap") {
  Trace t;
  t.append("A", Lifecycle::Start);
  t.append("B", Lifecycle::Start);
  t.append("A", Lifecycle::Complete);
  t.append("B", Lifecycle::Complete);
  CHECK(t.events[2].ordinal == 2);
  CHECK(completions(t) == Word{"A", "B"});
  CHECK(typed_events(t) == Word{"A+start", "B+start", "A+complete", "B+complete"});
  CHECK(has_overlap(t));

  Trace seq;
  seq.append("A", Lifecycle::Start);
  seq.append("A", Lifecycle::Complete);
  seq.append("B", Lifecycle::Start);
  seq.append("B", Lifecycle::Complete);
  CHECK_FALSE(has_overlap(seq));
  Trace bare;
  bare.append("A");
  bare.append("B");
  CHECK_FALSE(has_overlap(bare));
}

TEST_CASE("validate_log") {
  EventLog log;
  Trace a;
  a.case_id = "case-1";
  a.append("A", Lifecycle::Start);
  log.traces.push_back(a);
  log.traces.push_back(a);
  CHECK(has_rule(validate_log(log), "duplicate-case-id"));
  CHECK(has_rule(validate_log(log), "unmatched-start"));
  log.traces[1].case_id = "case-2";
  log.traces[0].append("A", Lifecycle::Complete);
  log.traces[1].append("A", Lifecycle::Complete);
  CHECK(validate_log(log).empty());
  log.traces[0].events[1].ordinal = 0;
  CHECK(has_rule(validate_log(log), "ordinal-order"));
}

TEST_CASE("alphabet_of covers both paradigms") {
  CHECK(alphabet_of(bundled::sequence_abc()) == std::set<Activity>{"A", "B", "C"});
  CHECK(alphabet_of(bundled::chain_precedence()) == std::set<Activity>{"A", "B", "C"});
  CHECK(paradigm_of(bundled::chain_precedence()) == Paradigm::Declare);
  CHECK(paradigm_of(bundled::choice_loop()) == Paradigm::Imperative);
}

TEST_CASE("throw_if_invalid carries the stage") {
  DeclareModel unknown{{"A"}, {make_constraint(Template::Response, "A", "B")}};
  try {
    throw_if_invalid(validate_declare(unknown), "model", "io");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.stage() == "io");
    CHECK(std::string(e.what()).find("unknown activity B") != std::string::npos);
  }
  CHECK_NOTHROW(throw_if_invalid({}, "model"));
}
