#pragma once

// Deterministic finite automata over activity alphabets: compiled constraints,
// their products, bounded language enumeration, and random accepting walks.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "simmine/model.hpp"
#include "simmine/regex.hpp"
#include "simmine/rng.hpp"
#include "simmine/semantics.hpp"

namespace simmine {

/// Minimal, trimmed DFA. State 0 is initial; states are numbered in
/// breadth-first order over the sorted alphabet, so two automata for the same
/// language over the same alphabet compare equal. Every state reaches an
/// accepting state, except that an empty language is a single non-accepting
/// state without transitions.
class Fsa {
 public:
  static constexpr int kNoState = -1;

  /// The empty language over `alphabet`.
  explicit Fsa(std::vector<Activity> alphabet = {});

  static Fsa universal(std::vector<Activity> alphabet);
  static Fsa from_regex(const Regex& regex, std::vector<Activity> alphabet);

  /// Builds from an arbitrary (possibly partial, possibly redundant) DFA table
  /// and normalizes it. `delta[s][symbol]` is a state or kNoState.
  static Fsa from_table(std::vector<Activity> alphabet, const std::vector<bool>& accepting,
                        const std::vector<std::vector<int>>& delta, int initial = 0);

  const std::vector<Activity>& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return accepting_.size(); }
  int initial() const { return 0; }
  bool accepting(int state) const { return accepting_.at(static_cast<std::size_t>(state)); }
  int next(int state, Symbol symbol) const { return delta_[static_cast<std::size_t>(state)][symbol]; }
  std::size_t transition_count() const;

  std::optional<Symbol> symbol_of(std::string_view name) const;

  /// State reached by reading `word`, or kNoState if the run dies (which
  /// includes any activity outside the alphabet).
  int run(std::span<const Activity> word) const;
  bool accepts(std::span<const Activity> word) const;
  bool empty() const { return !accepting_[0] && transition_count() == 0; }

  /// Length of the shortest accepted word; nullopt for the empty language.
  std::optional<std::size_t> shortest_accepted_length() const;

  /// Same language over a larger alphabet (new symbols have no transitions).
  Fsa with_alphabet(std::vector<Activity> superset) const;

  bool operator==(const Fsa&) const = default;

 private:
  std::vector<Activity> alphabet_;
  std::vector<bool> accepting_;
  std::vector<std::vector<int>> delta_;
};

Fsa compile_constraint(const Constraint& constraint, std::span<const Activity> alphabet);

/// Intersection of the languages. All inputs must share one alphabet.
Fsa product(std::span<const Fsa> automata);

/// Product of every constraint of the model over its alphabet; the universal
/// automaton when there are no constraints.
Fsa compile_model(const DeclareModel& model);

/// Every accepted word of length <= k, shortest first then lexicographic.
/// Throws when more than `cap` prefixes would have to be generated.
std::vector<Word> language_upto(const Fsa& fsa, std::size_t k,
                                std::uint64_t cap = kDefaultEnumerationCap);

/// Random accepting word of length <= max_len. At every state the outgoing
/// transitions and, in accepting states, a stop move are equally likely; a walk
/// that reaches max_len in a non-accepting state is restarted. `max_restarts`
/// of 0 means 10 * max_len.
Word random_accepting_walk(const Fsa& fsa, std::size_t max_len, Rng& rng,
                           std::size_t max_restarts = 0);

}  // namespace simmine
