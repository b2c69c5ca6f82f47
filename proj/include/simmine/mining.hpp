#pragma once

// Discovery of a target model from an event log: a heuristics-style
// dependency miner producing imperative models and a template-instantiation
// miner producing declarative models.

#include <cstddef>
#include <set>
#include <vector>

#include "simmine/model.hpp"

namespace simmine {

/// Ordering statistics over the activity-execution (complete) projection of a
/// log. Indices 0..n-1 are the sorted activities; every trace is framed by an
/// artificial start (index n) and end (index n+1).
class DependencyStats {
 public:
  const std::vector<Activity>& activities() const { return activities_; }
  std::size_t start_index() const { return activities_.size(); }
  std::size_t end_index() const { return activities_.size() + 1; }
  std::size_t node_count() const { return activities_.size() + 2; }
  std::size_t trace_count() const { return trace_count_; }

  /// Index of an activity; throws when it never occurs.
  std::size_t index_of(const Activity& a) const;

  /// |a>b|: how often b directly follows a.
  std::size_t direct_follows(std::size_t a, std::size_t b) const { return direct_[a][b]; }
  std::size_t direct_follows(const Activity& a, const Activity& b) const;
  /// |a>>b|: how often the pattern a b a occurs.
  std::size_t length_two_follows(std::size_t a, std::size_t b) const { return two_[a][b]; }
  /// Occurrences of a followed later in the same trace by some b.
  std::size_t eventually_follows(std::size_t a, std::size_t b) const { return eventually_[a][b]; }
  std::size_t frequency(std::size_t a) const { return frequency_[a]; }
  /// How often a returns after a run of b's only (a b+ a).
  std::size_t returns_around(std::size_t a, std::size_t b) const { return around_[a][b]; }
  /// Number of traces containing a, and containing both a and b.
  std::size_t traces_with(std::size_t a) const { return together_[a][a]; }
  std::size_t traces_with(std::size_t a, std::size_t b) const { return together_[a][b]; }

  /// 100 * (|a>b| - |b>a|) / (|a>b| + |b>a| + 1) for a != b, and
  /// 100 * |a>a| / (|a>a| + 1) on the diagonal.
  double measure(std::size_t a, std::size_t b) const;
  double measure(const Activity& a, const Activity& b) const;
  /// 100 * (|a>>b| + |b>>a|) / (|a>>b| + |b>>a| + 1)
  double length_two_measure(std::size_t a, std::size_t b) const;

 private:
  friend DependencyStats dependency_stats(const EventLog& log);

  std::vector<Activity> activities_;
  std::size_t trace_count_ = 0;
  std::vector<std::vector<std::size_t>> direct_, two_, eventually_, together_, around_;
  std::vector<std::size_t> frequency_;
};

DependencyStats dependency_stats(const EventLog& log);

/// Accepted dependency arcs between DependencyStats indices, plus the
/// long-distance subset.
struct DependencyGraph {
  std::set<std::pair<std::size_t, std::size_t>> arcs;
  std::set<std::pair<std::size_t, std::size_t>> long_distance;
};

/// Arcs with measure >= dependency, plus relative-to-best, short-loop,
/// connectivity and long-distance extensions as configured. Two activities
/// that directly follow each other in both orders count as concurrent unless
/// one returns around the other (a b+ a) or neither always occurs with the
/// other; in those cases both arcs are kept.
DependencyGraph dependency_graph(const DependencyStats& stats, const EventLog& log, const FhmConfig& config);

/// Heuristics mining followed by conversion of the dependency graph (with
/// split/join bindings observed in the log) into an imperative model.
ImperativeModel mine_imperative(const EventLog& log, const FhmConfig& config = {});

// ---------------------------------------------------------------------------

struct CandidateScore {
  Constraint constraint;
  double support = 0.0;          // % of traces satisfying the constraint
  double activation_rate = 0.0;  // % of traces activating it at least once

  bool operator==(const CandidateScore&) const = default;
};

/// True when the miner must work on typed (start/complete) events: event types
/// are not ignored and some trace has overlapping activity executions.
bool uses_typed_events(const EventLog& log, const DmmConfig& config);

/// Scores every template instantiation over the observed activity universe
/// (joined with `extra_alphabet`). CoExistence is instantiated once per
/// unordered pair, with parameters in alphabetical order.
std::vector<CandidateScore> score_declare_candidates(const EventLog& log, const DmmConfig& config,
                                                     const std::set<Activity>& extra_alphabet = {});

/// Constraints directly implied by `c` (one subsumption step).
std::vector<Constraint> implied_constraints(const Constraint& c);

/// Drops every constraint implied, transitively, by another one in the set.
std::set<Constraint> prune_redundant(const std::set<Constraint>& constraints);

/// Candidates with support >= min_support and activation rate >= alpha,
/// without redundant ones.
DeclareModel mine_declare(const EventLog& log, const DmmConfig& config = {},
                          const std::set<Activity>& extra_alphabet = {});

}  // namespace simmine
