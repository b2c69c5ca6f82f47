#pragma once

// Operational semantics of imperative models. Every sequence flow is a place;
// every node contributes one or more transitions:
//
//   start        source place -> all outgoing flows
//   end          one transition per incoming flow, consuming it
//   task         incoming flow -> outgoing flow, labelled with the activity
//   xor gateway  one transition per (incoming, outgoing) pair
//   and-split    one transition per incoming flow, producing on all outgoing
//   and-join     all incoming flows -> all outgoing flows
//
// A run is complete when no token is left anywhere.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simmine/automata.hpp"
#include "simmine/model.hpp"

namespace simmine {

using Marking = std::vector<std::uint32_t>;

class TokenNet {
 public:
  struct Transition {
    std::vector<std::size_t> inputs;
    std::vector<std::size_t> outputs;
    std::optional<Activity> label;  // tasks only
    std::size_t node = 0;           // index into node_ids()
  };

  /// The model must pass validate_imperative.
  explicit TokenNet(const ImperativeModel& model);

  std::size_t place_count() const { return place_count_; }
  std::size_t source_place() const { return source_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::vector<NodeId>& node_ids() const { return node_ids_; }
  const std::vector<Activity>& alphabet() const { return alphabet_; }

  /// Transitions labelled with `activity`.
  const std::vector<std::size_t>& labelled(const Activity& activity) const;

  Marking initial_marking() const;
  bool enabled(const Marking& m, std::size_t transition) const;
  void fire(Marking& m, std::size_t transition) const;

 private:
  std::size_t place_count_ = 0;
  std::size_t source_ = 0;
  std::vector<Transition> transitions_;
  std::vector<NodeId> node_ids_;
  std::vector<Activity> alphabet_;
  std::vector<std::vector<std::size_t>> by_label_;
};

struct ExploreLimits {
  std::uint32_t max_tokens_per_place = 3;
  std::size_t max_markings = 200'000;
};

struct BehaviourAutomaton {
  Fsa fsa;
  /// True when some firing was cut off by max_tokens_per_place, so the
  /// automaton under-approximates the model's language.
  bool truncated = false;
};

/// Language of complete runs, projected on task labels, as a minimal DFA over
/// the model's task alphabet. Throws when more than max_markings reachable
/// markings are found.
BehaviourAutomaton behaviour_automaton(const ImperativeModel& model, const ExploreLimits& limits = {});

struct ReplayResult {
  std::size_t produced = 0;
  std::size_t consumed = 0;
  std::size_t missing = 0;
  std::size_t remaining = 0;

  /// 0.5 * (1 - missing/consumed) + 0.5 * (1 - remaining/produced)
  double fitness() const;
};

/// Token replay of an activity sequence. Silent transitions are searched
/// breadth-first (shortest enabling sequence first, at most
/// `silent_search_limit` markings per search); when a task cannot be enabled
/// its missing input tokens are created.
ReplayResult token_replay(const TokenNet& net, std::span<const Activity> trace,
                          std::size_t silent_search_limit = 5000);

}  // namespace simmine
