#pragma once

#include <string>
#include <vector>

#include "hiersl/common.hpp"

namespace hiersl {

/// Concurrent game structure with imperfect information.
///
/// Joint actions are encoded in mixed radix: agent 0 is the least
/// significant digit, base |Act|.  `delta[v][c]` is -1 when undefined
/// (reported by validate).  Observations are stored as relations so that
/// malformed inputs can be diagnosed; `obs_class` holds canonical class ids
/// and is filled by `finalize()` once the relations are equivalences.
class Cgsi {
 public:
  std::vector<std::string> agents;
  std::vector<std::string> actions;
  std::vector<std::string> positions;
  std::vector<std::string> propositions;
  std::vector<std::string> variables;  // optional declaration
  int initial = 0;
  std::vector<std::vector<std::string>> labels;    // per position, sorted
  std::vector<std::vector<int>> delta;             // [position][joint]
  std::vector<std::string> obs_names;
  std::vector<std::vector<std::vector<bool>>> obs_relation;  // [obs][v][w]
  std::vector<std::vector<int>> obs_class;                   // [obs][v]

  int num_agents() const { return static_cast<int>(agents.size()); }
  int num_actions() const { return static_cast<int>(actions.size()); }
  int num_positions() const { return static_cast<int>(positions.size()); }
  int joint_count() const;
  int encode_joint(const std::vector<int>& acts) const;
  std::vector<int> decode_joint(int joint) const;
  int succ(int v, int joint) const { return delta[v][joint]; }

  int agent_index(const std::string& a) const;
  int action_index(const std::string& m) const;
  int position_index(const std::string& v) const;
  int observation_index(const std::string& o) const;  // -1 if unknown
  bool has_label(int v, const std::string& p) const;

  const std::vector<std::string>& observation_names() const { return obs_names; }
  /// O(o1) ⊆ O(o2).  Throws on unknown symbols.
  bool finer(const std::string& o1, const std::string& o2) const;
  bool equivalent(int obs, int v, int w) const { return obs_class[obs][v] == obs_class[obs][w]; }

  /// Builds class ids from the relations; throws ModelError if invalid.
  void finalize();
};

/// One message per violated structural condition; empty when valid.
std::vector<std::string> validate_cgsi(const Cgsi& g);

/// Sets an observation from a partition given as blocks of positions.
void set_observation_blocks(Cgsi& g, const std::string& name,
                            const std::vector<std::vector<int>>& blocks);
/// Adds the identity observation under `name`.
void add_identity_observation(Cgsi& g, const std::string& name);

using Play = std::vector<int>;

bool play_valid(const Cgsi& g, const Play& p);
/// Synchronous perfect recall: equal length and pointwise equivalence.
bool play_obs_equiv(const Play& a, const Play& b, const std::string& obs, const Cgsi& g);

/// The observation symbols are totally ordered by refinement.
bool yields_hierarchical_observation(const Cgsi& g);

}  // namespace hiersl
