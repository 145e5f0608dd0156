#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hiersl/common.hpp"

namespace hiersl {

class Cgsi;

// Strategy Logic with imperfect information.
//
// Core constructors: atom, negation, disjunction, next, until, strategy
// quantifier <<x:o>>, binding (a,x).  `True` is kept as a leaf so that
// F phi == true U phi needs no witness proposition.  Everything else
// (&, ->, <->, F, G, [[x:o]]) is desugared at construction time.

enum class SliKind { True, Atom, Not, Or, Next, Until, Exists, Bind };

struct SliNode;
using Sli = std::shared_ptr<const SliNode>;

struct SliNode {
  SliKind kind;
  std::string name;         // atom: proposition; Exists/Bind: variable
  std::string agent;        // Bind
  std::string observation;  // Exists
  std::vector<Sli> children;
  SourceSpan span;
};

Sli sli_true(SourceSpan span = {});
Sli sli_atom(std::string p, SourceSpan span = {});
Sli sli_not(Sli f, SourceSpan span = {});
Sli sli_or(Sli a, Sli b, SourceSpan span = {});
Sli sli_next(Sli f, SourceSpan span = {});
Sli sli_until(Sli a, Sli b, SourceSpan span = {});
Sli sli_exists(std::string var, std::string obs, Sli body, SourceSpan span = {});
Sli sli_bind(std::string agent, std::string var, Sli body, SourceSpan span = {});

Sli sli_and(Sli a, Sli b);
Sli sli_implies(Sli a, Sli b);
Sli sli_eventually(Sli f);
Sli sli_globally(Sli f);
Sli sli_forall(std::string var, std::string obs, Sli body);

std::string to_string(const Sli& f);
bool structurally_equal(const Sli& a, const Sli& b);
std::size_t formula_size(const Sli& f);

/// Declared symbols.  Empty lists mean "not declared" and are not checked.
struct SliSignature {
  std::vector<std::string> propositions;
  std::vector<std::string> agents;
  std::vector<std::string> variables;
  std::vector<std::string> observations;
};

/// Parses the ASCII concrete syntax (see docs/grammar.md).
Sli parse_sli(std::string_view text, const SliSignature* signature = nullptr);

struct FreeSet {
  std::set<std::string> variables;
  std::set<std::string> agents;
  bool empty() const { return variables.empty() && agents.empty(); }
  bool operator==(const FreeSet&) const = default;
};

/// Free variables (bound by (a,x) outside any quantifier for x) and free
/// agents (a temporal operator occurs outside every binding for them).
FreeSet free_symbols(const Sli& f, const std::vector<std::string>& agents);
bool is_sentence(const Sli& f, const std::vector<std::string>& agents);

/// Quantifier occurrence used in hierarchy witnesses.
struct QuantifierRef {
  std::string variable;
  std::string observation;
  SourceSpan span;
};

struct HierarchyReport {
  bool hierarchical = true;
  // Outer quantifier, then the inner one whose observation is not finer.
  std::optional<std::pair<QuantifierRef, QuantifierRef>> witness;
  std::string describe() const;
};

/// Checks that every quantifier observes at least as finely (in `game`) as
/// every enclosing quantifier.  Unknown observation symbols throw.
HierarchyReport is_hierarchical_instance(const Sli& f, const Cgsi& game);

/// Strategy quantifiers in syntactic order (preorder).
std::vector<QuantifierRef> quantifiers(const Sli& f);

/// Exists x1^o1 ... xn^on (a1,x1)...(an,xn) AND_i [(Exists yi^di (ai,yi) goal_i) -> goal_i].
/// Variables are named x<i> and y<i> after the agent index.
Sli build_nash_formula(const std::vector<std::string>& agents,
                       const std::vector<Sli>& goals,
                       const std::vector<std::string>& obs,
                       const std::vector<std::string>& deviation_obs);

}  // namespace hiersl
