#include <algorithm>
#include <fstream>
#include <sstream>

#include "simmine/io.hpp"

namespace simmine {

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

bool bare_safe(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == ':';
  });
}

std::string token(std::string_view s) { return bare_safe(s) ? std::string(s) : quote(s); }

// Splits a line into bare and double-quoted tokens; a '#' outside quotes ends
// the line.
std::vector<std::string> tokenize(const std::string& line, std::size_t line_no) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) { throw Error("line " + std::to_string(line_no) + ": " + msg, "io"); };
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == '"') {
      std::string tok;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char d = line[i++];
        if (d == '\\') {
          if (i == line.size()) fail("dangling escape");
          tok += line[i++];
        } else if (d == '"') {
          closed = true;
          break;
        } else {
          tok += d;
        }
      }
      if (!closed) fail("unterminated string");
      out.push_back(std::move(tok));
    } else {
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '"' &&
             line[j] != '#') {
        ++j;
      }
      out.push_back(line.substr(i, j - i));
      i = j;
    }
  }
  return out;
}

std::string header(Paradigm p) { return "model " + std::string(paradigm_name(p)) + "\n"; }

}  // namespace

std::string write_model(const ProcessModel& model) {
  std::ostringstream out;
  if (const auto* d = std::get_if<DeclareModel>(&model)) {
    out << header(Paradigm::Declare);
    for (const auto& a : d->alphabet) out << "activity " << quote(a) << '\n';
    for (const auto& c : d->constraints) {
      out << "constraint " << template_name(c.kind);
      for (const auto& p : c.params) out << ' ' << quote(p);
      out << '\n';
    }
  } else {
    const auto& m = std::get<ImperativeModel>(model);
    out << header(Paradigm::Imperative);
    for (const auto& a : m.alphabet()) out << "activity " << quote(a) << '\n';
    for (const auto& [id, node] : m.nodes) {
      out << "node " << token(id) << ' ' << node_kind_name(node.kind);
      if (node.kind == NodeKind::Task) out << ' ' << quote(node.label);
      out << '\n';
    }
    for (const auto& [from, to] : m.edges) out << "edge " << token(from) << ' ' << token(to) << '\n';
  }
  return out.str();
}

void write_model_file(const ProcessModel& model, const std::filesystem::path& path) {
  write_text_file(path, write_model(model));
}

ProcessModel read_model(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<Paradigm> paradigm;
  DeclareModel declare;
  ImperativeModel imperative;
  std::set<Activity> listed;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tok = tokenize(line, line_no);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& msg) { throw Error("line " + std::to_string(line_no) + ": " + msg, "io"); };
    const std::string& kw = tok[0];
    if (kw == "model") {
      if (paradigm) fail("duplicate model header");
      if (tok.size() != 2) fail("expected: model declare|imperative");
      paradigm = parse_paradigm(tok[1]);
      if (!paradigm) fail("unknown paradigm '" + tok[1] + "'");
      continue;
    }
    if (!paradigm) fail("expected a 'model' header before '" + kw + "'");
    if (kw == "activity") {
      if (tok.size() != 2) fail("expected: activity \"name\"");
      listed.insert(tok[1]);
    } else if (kw == "constraint" && *paradigm == Paradigm::Declare) {
      if (tok.size() < 2) fail("expected: constraint Template \"a\" [\"b\"]");
      auto t = parse_template(tok[1]);
      if (!t) fail("unknown template '" + tok[1] + "'");
      if (tok.size() != static_cast<std::size_t>(2 + arity(*t))) {
        fail(std::string(template_name(*t)) + " takes " + std::to_string(arity(*t)) + " parameter(s)");
      }
      declare.constraints.insert(arity(*t) == 1 ? make_constraint(*t, tok[2]) : make_constraint(*t, tok[2], tok[3]));
    } else if (kw == "node" && *paradigm == Paradigm::Imperative) {
      if (tok.size() < 3) fail("expected: node id kind [\"label\"]");
      auto k = parse_node_kind(tok[2]);
      if (!k) fail("unknown node kind '" + tok[2] + "'");
      if ((*k == NodeKind::Task) != (tok.size() == 4) || tok.size() > 4) {
        fail(*k == NodeKind::Task ? "a task needs exactly one label" : "only tasks carry a label");
      }
      if (imperative.nodes.contains(tok[1])) fail("duplicate node '" + tok[1] + "'");
      imperative.add_node(tok[1], *k, tok.size() == 4 ? tok[3] : Activity{});
    } else if (kw == "edge" && *paradigm == Paradigm::Imperative) {
      if (tok.size() != 3) fail("expected: edge from to");
      imperative.add_edge(tok[1], tok[2]);
    } else {
      fail("unexpected '" + kw + "' in a " + std::string(paradigm_name(*paradigm)) + " model");
    }
  }
  if (!paradigm) throw Error("empty model document", "io");

  if (*paradigm == Paradigm::Declare) {
    declare.alphabet = std::move(listed);
    throw_if_invalid(validate_declare(declare), "declarative model", "io");
    return declare;
  }
  throw_if_invalid(validate_imperative(imperative), "imperative model", "io");
  if (!listed.empty() && listed != imperative.alphabet()) {
    throw Error("activity list does not match the task labels", "io");
  }
  return imperative;
}

ProcessModel read_model_file(const std::filesystem::path& path) {
  try {
    return read_model(read_text_file(path));
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what(), e.stage());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading", "io");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing", "io");
  out << text;
  if (!out.flush()) throw Error("failed writing '" + path.string() + "'", "io");
}

}  // namespace simmine
