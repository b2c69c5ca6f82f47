#pragma once

// Reconstructed example models shipped with the tool. They follow textual
// descriptions of well-known evaluation models; they are not exact copies.

#include <map>
#include <string>

#include "simmine/model.hpp"

namespace simmine::bundled {

/// Start -> A -> B -> C -> End.
ImperativeModel sequence_abc();

/// Declarative model admitting exactly the trace <A,B,C>.
DeclareModel declare_abc();

/// Loop over A followed by a choice between B and C: (A (B|C))+.
ImperativeModel choice_loop();

/// ChainPrecedence(A,B) over {A,B,C}.
DeclareModel chain_precedence();

/// ChainSuccession(A,B) over {A,B,C}.
DeclareModel chain_succession();

/// Imperative model with the language (C | A B)*, equivalent to
/// chain_succession().
ImperativeModel chain_succession_imperative();

/// All of the above by file stem: "sequence", "declare-sequence",
/// "choice-loop", "chain-precedence", "chain-succession",
/// "chain-succession-imperative".
std::map<std::string, ProcessModel> all();

}  // namespace simmine::bundled
