#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hiersl/common.hpp"

namespace hiersl {

// QCTL* with imperfect information: CTL* plus propositional quantifiers
// annotated by concrete observations (sets of local-state component indices).
//
// State kinds: True, Atom, Not, Or, E, Exists.  Path kinds: Next, Until, and
// Not/Or over a path operand.  A node is a state formula iff it contains no
// temporal operator outside an E.  Exists bodies and top-level formulas must
// be state formulas; the constructors enforce it.

enum class QKind { True, Atom, Not, Or, E, Exists, Next, Until };

struct QNode;
using Qctl = std::shared_ptr<const QNode>;

struct QNode {
  QKind kind;
  std::string prop;  // Atom, Exists
  IndexSet obs;      // Exists
  std::vector<Qctl> children;
  bool state = true;
  SourceSpan span;
};

Qctl q_true(SourceSpan span = {});
Qctl q_atom(std::string p, SourceSpan span = {});
Qctl q_not(Qctl f, SourceSpan span = {});
Qctl q_or(Qctl a, Qctl b, SourceSpan span = {});
Qctl q_E(Qctl path, SourceSpan span = {});
Qctl q_exists(std::string p, IndexSet obs, Qctl body, SourceSpan span = {});
Qctl q_next(Qctl f, SourceSpan span = {});
Qctl q_until(Qctl a, Qctl b, SourceSpan span = {});

Qctl q_false();
Qctl q_and(Qctl a, Qctl b);
Qctl q_and_all(const std::vector<Qctl>& fs);  // empty -> true
Qctl q_or_all(const std::vector<Qctl>& fs);   // empty -> false
Qctl q_implies(Qctl a, Qctl b);
Qctl q_A(Qctl path);
Qctl q_eventually(Qctl f);
Qctl q_globally(Qctl f);
Qctl q_forall(std::string p, IndexSet obs, Qctl body);

std::string to_string(const Qctl& f);
bool structurally_equal(const Qctl& a, const Qctl& b);
std::size_t formula_size(const Qctl& f);

struct QctlSignature {
  std::vector<std::string> propositions;  // empty: unchecked
  int components = -1;                    // n; negative: unchecked
};

/// Parses state formulas; quantifiers are written `exists p : {1,3} . phi`.
Qctl parse_qctl(std::string_view text, const QctlSignature* signature = nullptr);

std::set<std::string> ap_quantified(const Qctl& f);
std::set<std::string> ap_free(const Qctl& f);
/// All atoms mentioned anywhere (free or bound).
std::set<std::string> ap_all(const Qctl& f);

/// Renames quantified occurrences so that quantified and free propositions
/// are disjoint.  Every binder gets its own fresh name `p_k`, avoiding
/// `reserved` and every name already in the formula.
Qctl split_props(const Qctl& f, const std::set<std::string>& reserved = {});

struct QctlHierarchyReport {
  bool hierarchical = true;
  // Outer binder, inner binder whose observation does not contain the outer one.
  std::optional<std::pair<Qctl, Qctl>> witness;
  std::string describe() const;
};

QctlHierarchyReport check_hierarchical_qctl(const Qctl& f);
bool is_hierarchical_qctl(const Qctl& f);

/// Intersection of the concrete observations occurring in f ([n] if none).
IndexSet observation_index(const Qctl& f, int n);

/// Maximal state subformulas of a path formula, looking through negations
/// (a state formula yields itself).  Constant leaves (true, !true, ...) are skipped.
std::vector<Qctl> max_state_subformulas(const Qctl& path);

/// Atoms, E- and Exists-subformulas of a path formula, looking through
/// every boolean connective; `true` leaves are skipped.
std::vector<Qctl> leaf_state_subformulas(const Qctl& path);

/// Number of propositional quantifiers.
std::size_t quantifier_count(const Qctl& f);

}  // namespace hiersl
