#pragma once

// Nondeterministic automata with epsilon moves; only used as an intermediate
// form on the way to a normalized Fsa.

#include <cstddef>
#include <utility>
#include <vector>

#include "simmine/automata.hpp"

namespace simmine::detail {

struct Nfa {
  struct State {
    std::vector<int> epsilon;
    std::vector<std::pair<Symbol, int>> moves;
    bool accepting = false;
  };

  std::vector<State> states;
  int initial = 0;

  int add_state() {
    states.emplace_back();
    return static_cast<int>(states.size()) - 1;
  }
};

/// Thompson construction.
Nfa thompson(const Regex& regex);

/// Subset construction followed by Fsa normalization.
Fsa determinize(const Nfa& nfa, std::vector<Activity> alphabet);

}  // namespace simmine::detail
