#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hiersl/ata.hpp"
#include "hiersl/cks.hpp"
#include "hiersl/qctl.hpp"

namespace hiersl {

struct McOptions {
  std::size_t cap = 1000000;  // per-construction state budget
  /// Drop path-guessing states whose run is bound to die on the free
  /// propositions of the structure (language preserving).
  bool prune_dead_states = true;
  bool keep_dumps = false;
};

struct StageStat {
  std::string stage;  // atom, not, or, E, exists, final
  std::string subformula;
  std::size_t states = 0;
  double millis = 0;  // excluding the stages of its subformulas
};

struct McStats {
  std::vector<StageStat> stages;
  std::size_t game_vertices = 0;
  std::size_t table_entries = 0;
  std::vector<std::string> dumps;
};

/// Builds the automata A_φ^s on demand, memoized
/// per subformula.  One automaton serves every state s of the structure:
/// its root s is the initial state of A_φ^s.  The formula must be
/// hierarchical and have disjoint quantified and free propositions (see
/// split_props).
class QctlAutomata {
 public:
  QctlAutomata(const Cks& k, Qctl phi, McOptions opts = {});

  /// Shared automaton of `sub` over (AP_q(Φ), X_{I_φ})-trees, one root per state.
  const Ata& family(const Qctl& sub);
  /// A_φ^s on its own.
  Ata automaton(const Qctl& sub, int s);
  IndexSet index_of(const Qctl& sub);
  const std::vector<std::string>& quantified_props() const { return aps_; }
  const Qctl& formula() const { return phi_; }
  McStats& stats() { return stats_; }

  /// Acceptance game of A_Φ^{s} on the empty-labelled complete X_{I_Φ}-tree.
  bool holds_at(int s);

 private:
  Ata build(const Qctl& sub);
  Ata build_atom(const Qctl& sub);
  Ata build_or(const Qctl& sub);
  Ata build_E(const Qctl& sub);
  Ata build_exists(const Qctl& sub);
  const std::string& key_of(const Qctl& sub);
  Ata narrowed(const Qctl& sub, const IndexSet& to);
  void check_cap(const std::string& stage, const Qctl& sub, std::size_t n) const;

  const Cks& k_;
  Qctl phi_;
  McOptions opts_;
  std::vector<std::string> aps_;
  std::map<const QNode*, std::string> keys_;
  std::map<const QNode*, IndexSet> index_;
  std::map<std::string, std::unique_ptr<Ata>> table_;
  McStats stats_;
  double nested_millis_ = 0;
};

/// K ⊨ φ under tree semantics.  Applies split_props, refuses
/// non-hierarchical formulas (RefusedError carrying the witness), and
/// throws ResourceError when a construction exceeds the cap.
bool model_check_qctl(const Cks& k, const Qctl& phi, const McOptions& opts = {},
                      McStats* stats = nullptr);

}  // namespace hiersl
