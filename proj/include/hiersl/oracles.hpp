#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hiersl/cgsi.hpp"
#include "hiersl/cks.hpp"
#include "hiersl/qctl.hpp"
#include "hiersl/sli.hpp"

// Brute-force and classical oracles.  Nothing here calls the automata
// engine; only the formula and model types are shared.
namespace hiersl::oracle {

enum class Tri { False, True, Unknown };
std::string tri_name(Tri t);

/// Eventually periodic sequence stem·loop^ω (loop nonempty).
struct Lasso {
  std::vector<int> stem;
  std::vector<int> loop;
  int length() const { return static_cast<int>(stem.size() + loop.size()); }
  int at(long i) const;  // element i of the infinite sequence
};

/// Mealy strategy with `memory` states whose choices depend only on the
/// observation class of the position read: memory is updated on reading a
/// position, then the action for the updated memory is played.
struct Strategy {
  int memory = 1;
  std::vector<std::vector<int>> action;  // [memory][class]
  std::vector<std::vector<int>> update;  // [memory][class]
  int observation = -1;                  // index into the game's observations; -1 = identity
};

int class_of(const Cgsi& g, int observation, int v);
int class_count(const Cgsi& g, int observation);

/// The play from history ρ when agent i follows profile[i].
Lasso outcome(const std::vector<Strategy>& profile, const Play& rho, const Cgsi& g);

/// LTL over a lasso; `atom(f, k)` gives the truth of the state (or, for
/// Sli, atomic) subformula f at position k of stem·loop.
bool eval_ltl_on_lasso(const Qctl& path, const Lasso& l,
                       const std::function<bool(const Qctl&, int)>& atom);
bool eval_ltl_on_lasso(const Sli& path, const Lasso& positions, const Cgsi& g);

enum class Objective { Reach, Safe };

/// Perfect information: can the controllers force `targets` (reach) or
/// stay inside them (safe) whatever the other agents do, the others
/// choosing after seeing the controllers' actions.
bool attractor_solve(const Cgsi& g, const std::vector<int>& controllers, const std::vector<int>& targets,
                     Objective mode);
bool attractor_reach(const Cgsi& g, const std::vector<int>& controllers, const std::vector<int>& targets);

/// One agent observing through `observation` against perfectly informed
/// opponents, solved on the belief-set game.
bool knowledge_solve(const Cgsi& g, const std::string& observation, int agent, const std::vector<int>& targets,
                     Objective mode);

/// SLi semantics with quantifiers ranging over `memory`-state uniform
/// strategies.  Unknown when the formula nests a quantifier or binding under a
/// temporal operator or an agent is unbound at a temporal operator.
Tri bounded_sli_eval(const Sli& phi, const Cgsi& g, int memory);

/// Classical CTL* on a structure (no propositional quantifiers).
bool ctl_star_holds(const Cks& k, const Qctl& phi, int state);
std::vector<bool> ctl_star_states(const Cks& k, const Qctl& phi);

/// Parity game by enumeration of positional strategies (max-even).
/// owner[v] 0 = Eve; returns Eve's winning region.
std::vector<bool> brute_force_parity(const std::vector<int>& owner, const std::vector<int>& color,
                                     const std::vector<std::vector<int>>& succ);

}  // namespace hiersl::oracle
