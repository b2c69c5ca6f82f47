#include "simmine/regex.hpp"

#include <algorithm>

namespace simmine {

struct Regex::Node {
  Op op;
  std::set<Symbol> symbols;
  std::vector<Regex> children;
};

Regex Regex::nothing() { return Regex(std::make_shared<const Node>(Node{Op::Nothing, {}, {}})); }

Regex Regex::epsilon() { return Regex(std::make_shared<const Node>(Node{Op::Epsilon, {}, {}})); }

Regex Regex::symbols(std::set<Symbol> set) {
  if (set.empty()) return nothing();
  return Regex(std::make_shared<const Node>(Node{Op::Symbols, std::move(set), {}}));
}

Regex Regex::concat(std::vector<Regex> parts) {
  if (parts.empty()) return epsilon();
  if (parts.size() == 1) return parts.front();
  return Regex(std::make_shared<const Node>(Node{Op::Concat, {}, std::move(parts)}));
}

Regex Regex::alt(std::vector<Regex> parts) {
  if (parts.empty()) return nothing();
  if (parts.size() == 1) return parts.front();
  return Regex(std::make_shared<const Node>(Node{Op::Union, {}, std::move(parts)}));
}

Regex Regex::star(Regex inner) {
  return Regex(std::make_shared<const Node>(Node{Op::Star, {}, {std::move(inner)}}));
}

Regex::Op Regex::op() const { return node_->op; }
const std::set<Symbol>& Regex::symbol_set() const { return node_->symbols; }
const std::vector<Regex>& Regex::children() const { return node_->children; }

namespace {

std::string symbol_text(std::span<const Activity> names, Symbol s, bool compact) {
  return compact ? names[s] : "<" + names[s] + ">";
}

std::string render_node(const Regex& r, std::span<const Activity> names, bool compact) {
  switch (r.op()) {
    case Regex::Op::Nothing:
      return "[]";
    case Regex::Op::Epsilon:
      return "()";
    case Regex::Op::Symbols: {
      const auto& set = r.symbol_set();
      if (set.size() == 1) return symbol_text(names, *set.begin(), compact);
      if (set.size() == names.size()) return ".";
      std::string out = "[";
      if (set.size() * 2 > names.size()) {
        out += '^';
        for (Symbol s = 0; s < names.size(); ++s) {
          if (!set.contains(s)) out += symbol_text(names, s, compact);
        }
      } else {
        for (auto s : set) out += symbol_text(names, s, compact);
      }
      return out + "]";
    }
    case Regex::Op::Concat: {
      std::string out;
      for (const auto& c : r.children()) {
        auto part = render_node(c, names, compact);
        out += c.op() == Regex::Op::Union ? "(" + part + ")" : part;
      }
      return out;
    }
    case Regex::Op::Union: {
      std::string out;
      for (std::size_t i = 0; i < r.children().size(); ++i) {
        if (i) out += '|';
        out += render_node(r.children()[i], names, compact);
      }
      return out;
    }
    case Regex::Op::Star: {
      const auto& c = r.children().front();
      auto part = render_node(c, names, compact);
      bool atomic = c.op() == Regex::Op::Symbols;
      return (atomic ? part : "(" + part + ")") + "*";
    }
  }
  return {};
}

}  // namespace

std::string Regex::render(std::span<const Activity> names) const {
  bool compact = std::all_of(names.begin(), names.end(), [](const Activity& a) { return a.size() == 1; });
  return render_node(*this, names, compact);
}

Regex constraint_regex(const Constraint& c, std::span<const Activity> alphabet) {
  auto index_of = [&](const Activity& name) -> Symbol {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), name);
    if (it == alphabet.end() || *it != name) {
      throw Error("constraint " + to_string(c) + " references '" + name + "' outside the alphabet");
    }
    return static_cast<Symbol>(it - alphabet.begin());
  };
  auto all_except = [&](std::initializer_list<Symbol> excluded) {
    std::set<Symbol> set;
    for (Symbol s = 0; s < alphabet.size(); ++s) set.insert(s);
    for (auto e : excluded) set.erase(e);
    return Regex::symbols(std::move(set));
  };
  using R = Regex;

  const Symbol a = index_of(c.first());
  const R any = R::star(all_except({}));
  const R A = R::symbol(a);
  const R not_a = all_except({a});

  switch (c.kind) {
    case Template::Existence:
      return R::concat({any, A, any});
    case Template::Absence2:
      return R::concat({R::star(not_a), R::optional(R::concat({A, R::star(not_a)}))});
    case Template::Init:
      return R::concat({A, any});
    case Template::End:
      return R::concat({any, A});
    default:
      break;
  }

  const Symbol b = index_of(c.second());
  const R B = R::symbol(b);
  const R not_b = all_except({b});
  const R not_ab = all_except({a, b});

  switch (c.kind) {
    case Template::RespondedExistence:
      return R::alt({R::star(not_a), R::concat({any, B, any})});
    case Template::Response:
      return R::concat({R::optional(R::concat({any, A, any, B})), R::star(not_a)});
    case Template::Precedence:
      return R::concat({R::star(not_ab), R::optional(R::concat({A, any}))});
    case Template::Succession:
      return R::concat({R::star(not_ab), R::optional(R::concat({A, any, B, R::star(not_ab)}))});
    case Template::ChainResponse:
      return R::star(R::alt({not_a, R::concat({A, B})}));
    case Template::ChainPrecedence:
      return R::star(R::alt({not_b, R::concat({A, B})}));
    case Template::ChainSuccession:
      return R::star(R::alt({not_ab, R::concat({A, B})}));
    case Template::CoExistence:
      return R::alt({R::star(not_ab), R::concat({any, A, any, B, any}), R::concat({any, B, any, A, any})});
    case Template::NotSuccession:
      return R::concat({R::star(not_a), R::optional(R::concat({A, R::star(not_b)}))});
    case Template::NotChainSuccession:
      return R::concat({R::star(R::alt({not_a, R::concat({R::plus(A), not_ab})})), R::star(A)});
    default:
      throw Error("unhandled template " + std::string(template_name(c.kind)));
  }
}

}  // namespace simmine
