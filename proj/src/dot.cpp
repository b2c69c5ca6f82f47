#include <sstream>

#include "simmine/io.hpp"

namespace simmine {

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string export_dot(const DeclareModel& model) {
  std::map<Activity, std::vector<std::string>> unary;
  for (const auto& c : model.constraints) {
    if (arity(c.kind) == 1) unary[c.first()].emplace_back(template_name(c.kind));
  }
  std::ostringstream out;
  out << "digraph declare {\n  node [shape=box];\n";
  for (const auto& a : model.alphabet) {
    std::string label = a;
    for (const auto& u : unary[a]) label += "\n" + u;
    out << "  " << dot_quote(a) << " [label=" << dot_quote(label) << "];\n";
  }
  for (const auto& c : model.constraints) {
    if (arity(c.kind) != 2) continue;
    out << "  " << dot_quote(c.first()) << " -> " << dot_quote(c.second()) << " [label="
        << dot_quote(template_name(c.kind)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const ImperativeModel& model) {
  std::ostringstream out;
  out << "digraph imperative {\n  rankdir=LR;\n";
  for (const auto& [id, node] : model.nodes) {
    out << "  " << dot_quote(id) << " [";
    switch (node.kind) {
      case NodeKind::Start: out << "shape=circle,label=\"\""; break;
      case NodeKind::End: out << "shape=circle,penwidth=3,label=\"\""; break;
      case NodeKind::Task: out << "shape=box,style=rounded,label=" << dot_quote(node.label); break;
      case NodeKind::XorSplit:
      case NodeKind::XorJoin: out << "shape=diamond,label=\"X\""; break;
      case NodeKind::AndSplit:
      case NodeKind::AndJoin: out << "shape=diamond,label=\"+\""; break;
    }
    out << "];\n";
  }
  for (const auto& [from, to] : model.edges) out << "  " << dot_quote(from) << " -> " << dot_quote(to) << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const ProcessModel& model) {
  return std::visit([](const auto& m) { return export_dot(m); }, model);
}

std::string export_dot(const Fsa& fsa) {
  std::ostringstream out;
  out << "digraph fsa {\n  rankdir=LR;\n";
  for (std::size_t s = 0; s < fsa.state_count(); ++s) {
    out << "  s" << s << " [shape=" << (fsa.accepting(static_cast<int>(s)) ? "doublecircle" : "circle")
        << (s == 0 ? ",style=bold" : "") << ",label=\"" << s << "\"];\n";
  }
  for (std::size_t s = 0; s < fsa.state_count(); ++s) {
    for (Symbol x = 0; x < fsa.alphabet().size(); ++x) {
      int t = fsa.next(static_cast<int>(s), x);
      if (t != Fsa::kNoState) out << "  s" << s << " -> s" << t << " [label=" << dot_quote(fsa.alphabet()[x]) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace simmine
