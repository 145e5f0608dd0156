#pragma once

#include <optional>
#include <string>

#include "hiersl/ata.hpp"
#include "hiersl/parity_game.hpp"
#include "hiersl/tree.hpp"

namespace hiersl {

/// Complement: swap ∧/∨ and ⊤/⊥, shift every color by one.
Ata dualize(const Ata& a);

/// Disjoint union with a fresh initial state choosing either automaton.
Ata union_initial(const Ata& a1, const Ata& a2);

/// Narrowing to the components `keep` ⊆ dims: the automaton then reads
/// L_keep-trees t and accepts t iff it accepted every widening of t.
Ata narrow_ata(const Ata& a, const IndexSet& keep);

/// Every transition is a disjunction of conjunctions holding at most one
/// atom per direction.  Directions left out of a disjunct are unconstrained.
bool is_nta(const Ata& a);

/// Existential projection of proposition p (the input must satisfy is_nta).
Ata project(const Ata& nta, const std::string& p);

/// Alternation removal: an NTA with the same language.  Throws
/// ResourceError naming `context` when more than `cap` states are built.
Ata simulate(const Ata& a, std::size_t cap = 1000000, const std::string& context = "");

struct GameStats {
  std::size_t vertices = 0;
};

/// Acceptance game of `a` on the regular tree generated by `t`.
bool membership(const Ata& a, const TreeGen& t, GameStats* stats = nullptr);

struct EmptinessResult {
  bool empty = true;
  std::optional<TreeGen> witness;
};

/// Replaces every state of an NTA whose language is empty by `false`.
Ata prune_empty_states(const Ata& nta);

/// Emptiness of an NTA; a regular witness tree is returned when nonempty.
EmptinessResult emptiness(const Ata& nta);

}  // namespace hiersl
