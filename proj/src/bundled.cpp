#include "simmine/bundled.hpp"

namespace simmine::bundled {

ImperativeModel sequence_abc() {
  ImperativeModel m;
  m.add_node("start", NodeKind::Start);
  m.add_node("end", NodeKind::End);
  m.add_node("t1", NodeKind::Task, "A");
  m.add_node("t2", NodeKind::Task, "B");
  m.add_node("t3", NodeKind::Task, "C");
  m.add_edge("start", "t1");
  m.add_edge("t1", "t2");
  m.add_edge("t2", "t3");
  m.add_edge("t3", "end");
  return m;
}

DeclareModel declare_abc() {
  DeclareModel m;
  m.alphabet = {"A", "B", "C"};
  m.constraints = {
      make_constraint(Template::Init, "A"),
      make_constraint(Template::End, "C"),
      make_constraint(Template::Absence2, "A"),
      make_constraint(Template::ChainSuccession, "A", "B"),
      make_constraint(Template::ChainSuccession, "B", "C"),
  };
  return m;
}

ImperativeModel choice_loop() {
  ImperativeModel m;
  m.add_node("start", NodeKind::Start);
  m.add_node("end", NodeKind::End);
  m.add_node("t1", NodeKind::Task, "A");
  m.add_node("t2", NodeKind::Task, "B");
  m.add_node("t3", NodeKind::Task, "C");
  m.add_node("g1", NodeKind::XorJoin);
  m.add_node("g2", NodeKind::XorSplit);
  m.add_node("g3", NodeKind::XorJoin);
  m.add_node("g4", NodeKind::XorSplit);
  m.add_edge("start", "g1");
  m.add_edge("g1", "t1");
  m.add_edge("t1", "g2");
  m.add_edge("g2", "t2");
  m.add_edge("g2", "t3");
  m.add_edge("t2", "g3");
  m.add_edge("t3", "g3");
  m.add_edge("g3", "g4");
  m.add_edge("g4", "g1");
  m.add_edge("g4", "end");
  return m;
}

DeclareModel chain_precedence() {
  DeclareModel m;
  m.alphabet = {"A", "B", "C"};
  m.constraints = {make_constraint(Template::ChainPrecedence, "A", "B")};
  return m;
}

DeclareModel chain_succession() {
  DeclareModel m;
  m.alphabet = {"A", "B", "C"};
  m.constraints = {make_constraint(Template::ChainSuccession, "A", "B")};
  return m;
}

ImperativeModel chain_succession_imperative() {
  ImperativeModel m;
  m.add_node("start", NodeKind::Start);
  m.add_node("end", NodeKind::End);
  m.add_node("t1", NodeKind::Task, "A");
  m.add_node("t2", NodeKind::Task, "B");
  m.add_node("t3", NodeKind::Task, "C");
  m.add_node("g1", NodeKind::XorJoin);
  m.add_node("g2", NodeKind::XorSplit);
  m.add_edge("start", "g1");
  m.add_edge("g1", "g2");
  m.add_edge("g2", "t1");
  m.add_edge("t1", "t2");
  m.add_edge("t2", "g1");
  m.add_edge("g2", "t3");
  m.add_edge("t3", "g1");
  m.add_edge("g2", "end");
  return m;
}

std::map<std::string, ProcessModel> all() {
  return {
      {"sequence", sequence_abc()},
      {"declare-sequence", declare_abc()},
      {"choice-loop", choice_loop()},
      {"chain-precedence", chain_precedence()},
      {"chain-succession", chain_succession()},
      {"chain-succession-imperative", chain_succession_imperative()},
  };
}

}  // namespace simmine::bundled
