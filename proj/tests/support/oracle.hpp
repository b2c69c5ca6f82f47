#pragma once

// Brute-force reference definitions used to check the library. They are
// written as quantifiers over trace positions and share no code with
// src/semantics.cpp.

#include <cstddef>
#include <set>
#include <vector>

#include "simmine/model.hpp"

namespace simmine::oracle {

inline bool holds(const Constraint& c, const Word& t) {
  const std::size_t n = t.size();
  const Activity& a = c.first();
  auto at = [&](std::size_t i, const Activity& x) { return i < n && t[i] == x; };
  auto exists = [&](std::size_t from, std::size_t to, const Activity& x) {
    for (std::size_t j = from; j < to && j < n; ++j) {
      if (t[j] == x) return true;
    }
    return false;
  };
  std::size_t count_a = 0;
  for (const auto& x : t) count_a += x == a;
  switch (c.kind) {
    case Template::Existence: return count_a >= 1;
    case Template::Absence2: return count_a < 2;
    case Template::Init: return at(0, a);
    case Template::End: return n > 0 && t[n - 1] == a;
    default: break;
  }
  const Activity& b = c.second();
  bool ok = true;
  switch (c.kind) {
    case Template::RespondedExistence:
      return !exists(0, n, a) || exists(0, n, b);
    case Template::Response:
      for (std::size_t i = 0; i < n; ++i) ok = ok && (!at(i, a) || exists(i + 1, n, b));
      return ok;
    case Template::Precedence:
      for (std::size_t i = 0; i < n; ++i) ok = ok && (!at(i, b) || exists(0, i, a));
      return ok;
    case Template::Succession:
      return holds(make_constraint(Template::Response, a, b), t) && holds(make_constraint(Template::Precedence, a, b), t);
    case Template::ChainResponse:
      for (std::size_t i = 0; i < n; ++i) ok = ok && (!at(i, a) || at(i + 1, b));
      return ok;
    case Template::ChainPrecedence:
      for (std::size_t i = 0; i < n; ++i) ok = ok && (!at(i, b) || (i > 0 && at(i - 1, a)));
      return ok;
    case Template::ChainSuccession:
      return holds(make_constraint(Template::ChainResponse, a, b), t) &&
             holds(make_constraint(Template::ChainPrecedence, a, b), t);
    case Template::CoExistence:
      return exists(0, n, a) == exists(0, n, b);
    case Template::NotSuccession:
      for (std::size_t i = 0; i < n; ++i) ok = ok && (!at(i, a) || !exists(i + 1, n, b));
      return ok;
    case Template::NotChainSuccession:
      for (std::size_t i = 0; i < n; ++i) ok = ok && (!at(i, a) || !at(i + 1, b));
      return ok;
    default:
      return false;
  }
}

/// Every word over `alphabet` of length <= k, by odometer counting.
inline std::vector<Word> all_words(const std::vector<Activity>& alphabet, std::size_t k) {
  std::vector<Word> out{{}};
  for (std::size_t len = 1; len <= k; ++len) {
    std::vector<std::size_t> digits(len, 0);
    for (;;) {
      Word w;
      for (auto d : digits) w.push_back(alphabet[d]);
      out.push_back(std::move(w));
      std::size_t i = len;
      while (i > 0 && ++digits[i - 1] == alphabet.size()) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

/// Words of length <= k satisfying every constraint.
inline std::set<Word> bounded_language(const DeclareModel& m, std::size_t k) {
  std::vector<Activity> alphabet(m.alphabet.begin(), m.alphabet.end());
  std::set<Word> out;
  for (auto& w : all_words(alphabet, k)) {
    bool ok = true;
    for (const auto& c : m.constraints) ok = ok && holds(c, w);
    if (ok) out.insert(std::move(w));
  }
  return out;
}

/// Every constraint over the alphabet: unary templates per activity, binary
/// templates per ordered pair of distinct activities.
inline std::vector<Constraint> all_instantiations(const std::vector<Activity>& alphabet) {
  std::vector<Constraint> out;
  for (auto t : kAllTemplates) {
    for (const auto& a : alphabet) {
      if (arity(t) == 1) {
        out.push_back(make_constraint(t, a));
        continue;
      }
      for (const auto& b : alphabet) {
        if (a != b) out.push_back(make_constraint(t, a, b));
      }
    }
  }
  return out;
}

}  // namespace simmine::oracle
