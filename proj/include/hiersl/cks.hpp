#pragma once

#include <string>
#include <vector>

#include "hiersl/common.hpp"

namespace hiersl {

/// Compound Kripke structure.  Component i (1-based) has local states
/// `components[i-1]`; a state is a tuple of local-state indices, one per
/// component.  Local states of different components are disjoint because
/// they are tagged by their component index.
struct Cks {
  std::vector<std::vector<std::string>> components;
  std::vector<std::vector<int>> states;
  int initial = 0;
  std::vector<std::vector<int>> succ;
  std::vector<std::vector<std::string>> labels;  // per state, sorted
  std::vector<std::string> propositions;

  int n() const { return static_cast<int>(components.size()); }
  int num_states() const { return static_cast<int>(states.size()); }
  bool has_label(int s, const std::string& p) const;
  /// Local states of `s` at the components of `dims`, in order.
  std::vector<int> project(int s, const IndexSet& dims) const;
  std::string state_name(int s) const;
};

std::vector<std::string> validate_cks(const Cks& k);

}  // namespace hiersl
