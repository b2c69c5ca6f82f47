#pragma once

// Finite-trace semantics of the constraint templates, evaluated directly on
// activity sequences. This is the reference the automata are checked against.

#include <cstdint>
#include <span>
#include <vector>

#include "simmine/model.hpp"

namespace simmine {

struct Verdict {
  bool satisfied = true;
  std::size_t activations = 0;

  bool operator==(const Verdict&) const = default;
};

Verdict evaluate(const Constraint& constraint, std::span<const Activity> trace);

/// Conjunction over all constraints. Throws if the trace uses an activity
/// outside the model alphabet.
bool model_satisfies(const DeclareModel& model, std::span<const Activity> trace);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Number of words of length <= max_len over an alphabet of the given size,
/// saturating at UINT64_MAX.
std::uint64_t bounded_word_count(std::size_t alphabet_size, std::size_t max_len);

/// Every word over `alphabet` of length <= max_len, shortest first and
/// lexicographic (by alphabet position) within a length.
std::vector<Word> enumerate_traces(std::span<const Activity> alphabet, std::size_t max_len,
                                   std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace simmine
