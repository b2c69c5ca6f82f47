#include "simmine/semantics.hpp"

#include <algorithm>
#include <limits>

namespace simmine {

namespace {

std::size_t count_of(std::span<const Activity> t, const Activity& a) {
  return static_cast<std::size_t>(std::count(t.begin(), t.end(), a));
}

// every a eventually followed by some b
bool response(std::span<const Activity> t, const Activity& a, const Activity& b) {
  bool pending = false;
  for (const auto& x : t) {
    if (x == a) pending = true;
    else if (x == b) pending = false;
  }
  return !pending;
}

// every b preceded by some a
bool precedence(std::span<const Activity> t, const Activity& a, const Activity& b) {
  for (const auto& x : t) {
    if (x == a) return true;
    if (x == b) return false;
  }
  return true;
}

// every a immediately followed by b
bool chain_response(std::span<const Activity> t, const Activity& a, const Activity& b) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == a && (i + 1 == t.size() || t[i + 1] != b)) return false;
  }
  return true;
}

// every b immediately preceded by a
bool chain_precedence(std::span<const Activity> t, const Activity& a, const Activity& b) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == b && (i == 0 || t[i - 1] != a)) return false;
  }
  return true;
}

}  // namespace

Verdict evaluate(const Constraint& c, std::span<const Activity> t) {
  const auto& a = c.first();
  const auto ca = count_of(t, a);
  switch (c.kind) {
    case Template::Existence:
      return {ca >= 1, ca};
    case Template::Absence2:
      return {ca <= 1, ca};
    case Template::Init:
      return {!t.empty() && t.front() == a, ca};
    case Template::End:
      return {!t.empty() && t.back() == a, ca};
    default:
      break;
  }

  const auto& b = c.second();
  const auto cb = count_of(t, b);
  switch (c.kind) {
    case Template::RespondedExistence:
      return {ca == 0 || cb > 0, ca};
    case Template::Response:
      return {response(t, a, b), ca};
    case Template::Precedence:
      return {precedence(t, a, b), cb};
    case Template::Succession:
      return {response(t, a, b) && precedence(t, a, b), ca + cb};
    case Template::ChainResponse:
      return {chain_response(t, a, b), ca};
    case Template::ChainPrecedence:
      return {chain_precedence(t, a, b), cb};
    case Template::ChainSuccession:
      return {chain_response(t, a, b) && chain_precedence(t, a, b), ca + cb};
    case Template::CoExistence:
      return {(ca > 0) == (cb > 0), ca + cb};
    case Template::NotSuccession: {
      bool seen_a = false;
      for (const auto& x : t) {
        if (x == a) seen_a = true;
        else if (x == b && seen_a) return {false, ca + cb};
      }
      return {true, ca + cb};
    }
    case Template::NotChainSuccession: {
      for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        if (t[i] == a && t[i + 1] == b) return {false, ca + cb};
      }
      return {true, ca + cb};
    }
    default:
      throw Error("unhandled template " + std::string(template_name(c.kind)));
  }
}

bool model_satisfies(const DeclareModel& model, std::span<const Activity> trace) {
  for (const auto& x : trace) {
    if (!model.alphabet.contains(x)) throw Error("activity '" + x + "' is not in the model alphabet");
  }
  return std::all_of(model.constraints.begin(), model.constraints.end(),
                     [&](const Constraint& c) { return evaluate(c, trace).satisfied; });
}

std::uint64_t bounded_word_count(std::size_t alphabet_size, std::size_t max_len) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1, power = 1;
  for (std::size_t i = 1; i <= max_len; ++i) {
    if (alphabet_size != 0 && power > kMax / alphabet_size) return kMax;
    power *= alphabet_size;
    if (total > kMax - power) return kMax;
    total += power;
  }
  return total;
}

std::vector<Word> enumerate_traces(std::span<const Activity> alphabet, std::size_t max_len,
                                   std::uint64_t cap) {
  const auto required = bounded_word_count(alphabet.size(), max_len);
  if (required > cap) {
    throw Error("enumerating words up to length " + std::to_string(max_len) + " over " +
                std::to_string(alphabet.size()) + " activities requires a cap of at least " +
                std::to_string(required) + " (cap is " + std::to_string(cap) + ")");
  }
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(required));
  out.emplace_back();
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len && !alphabet.empty(); ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& a : alphabet) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace simmine
