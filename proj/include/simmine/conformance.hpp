#pragma once

// Scoring a model against a log (replay fitness, escaping-edges
// appropriateness) and bounded trace equivalence between two models.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "simmine/automata.hpp"
#include "simmine/model.hpp"
#include "simmine/semantics.hpp"

namespace simmine {

/// Language of complete runs of either paradigm as a minimal DFA over the
/// model's alphabet.
Fsa language_automaton(const ProcessModel& model);

/// The activity sequence a model of this paradigm reads from a trace: complete
/// events, or typed events for a Declare model whose whole alphabet is typed.
Word project(const ProcessModel& model, const Trace& trace);

/// True when every alphabet entry ends in "+start" or "+complete".
bool has_typed_alphabet(const DeclareModel& model);

/// Declarative: mean over traces of satisfied/total constraints (1 without
/// constraints, 0 for a trace using an activity outside the alphabet).
/// Imperative: mean token-replay fitness, 1 for every trace the model accepts.
double fitness(const ProcessModel& model, const EventLog& log);
double fitness(const DeclareModel& model, const EventLog& log);
double fitness(const ImperativeModel& model, const EventLog& log);

struct Appropriateness {
  double value = 0.0;
  std::size_t skipped = 0;  // traces the model cannot replay
};

/// Escaping-edges precision on the model's minimal language automaton. For
/// every state, the observed continuations are the next activities (and the
/// end of the trace) seen anywhere in the log at that state; the score is the
/// visit-weighted mean of observed/allowed continuations over all prefixes of
/// replayable traces. 0 when no trace is replayable.
Appropriateness appropriateness_detail(const ProcessModel& model, const EventLog& log);
double appropriateness(const ProcessModel& model, const EventLog& log);

struct EquivalenceResult {
  bool equal = true;
  /// Up to 10 words of length <= k in the symmetric difference, shortest first.
  std::vector<Word> counterexamples;
};

/// Compares the languages of both models up to length k over the union of
/// their alphabets. Throws when more than `cap` prefixes would be enumerated.
EquivalenceResult trace_equivalent_upto(const ProcessModel& a, const ProcessModel& b, std::size_t k,
                                        std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace simmine
