#pragma once

// Regular expressions over integer symbols (an index into a sorted activity
// alphabet). Each constraint template has a fixed expression; compiling it
// yields the constraint's automaton.

#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "simmine/model.hpp"

namespace simmine {

using Symbol = std::size_t;

class Regex {
 public:
  enum class Op { Nothing, Epsilon, Symbols, Concat, Union, Star };

  static Regex nothing();
  static Regex epsilon();
  static Regex symbols(std::set<Symbol> set);
  static Regex symbol(Symbol s) { return symbols({s}); }
  static Regex concat(std::vector<Regex> parts);
  static Regex alt(std::vector<Regex> parts);
  static Regex star(Regex inner);
  static Regex optional(Regex inner) { return alt({std::move(inner), epsilon()}); }
  static Regex plus(Regex inner) { return concat({inner, star(inner)}); }

  Op op() const;
  const std::set<Symbol>& symbol_set() const;
  const std::vector<Regex>& children() const;

  /// Human-readable form; sets covering most of the alphabet print as [^...].
  std::string render(std::span<const Activity> names) const;

 private:
  struct Node;
  explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// The expression recognising exactly the traces that satisfy `constraint`,
/// over `alphabet` (sorted, unique; must contain the parameters).
Regex constraint_regex(const Constraint& constraint, std::span<const Activity> alphabet);

}  // namespace simmine
