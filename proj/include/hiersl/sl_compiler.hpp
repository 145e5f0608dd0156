#pragma once

#include <map>
#include <string>
#include <vector>

#include "hiersl/cgsi.hpp"
#include "hiersl/cks.hpp"
#include "hiersl/qctl.hpp"
#include "hiersl/sli.hpp"

namespace hiersl {

/// Partial map from agents to strategy variables.
using BindingContext = std::map<std::string, std::string>;

struct CompiledInstance {
  Cks cks;
  Qctl formula;
  std::map<std::string, std::string> position_props;  // position -> p_v
  std::map<std::string, std::string> action_props;    // "m:x" -> p_m^x
  std::map<std::string, IndexSet> observation_table;  // o -> obs(o)
  HierarchyReport hierarchy;
};

/// Proposition p_v, in a namespace disjoint from game propositions.
std::string position_prop(const std::string& v);
/// Proposition p_m^x.
std::string action_prop(const std::string& m, const std::string& x);

/// Components 1..n are the observation classes, component n+1 the position.
Cks build_cks(const Cgsi& g);

/// {j | O(o) ⊆ O(o_j)}.
IndexSet concrete_obs(const std::string& o, const Cgsi& g);

/// A G ⋁_m (p_m^x ∧ ⋀_{m'≠m} ¬p_{m'}^x).
Qctl phi_strat(const std::string& x, const std::vector<std::string>& actions);

/// G ⋀ ((p_v ∧ ⋀_a p_{c_a}^{f(a)}) → X p_{δ(v,c)}) over reachable positions v.
Qctl psi_out(const BindingContext& f, const Cgsi& g);

Qctl translate(const Sli& phi, const BindingContext& f, const Cgsi& g);

/// Requires a sentence; a hierarchy violation is reported, not thrown.
CompiledInstance compile(const Sli& phi, const Cgsi& g);

}  // namespace hiersl
