#include "hiersl/generators.hpp"

#include <algorithm>
#include <set>

namespace hiersl::gen {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Cgsi random_game(Rng& rng, const GameShape& shape) {
  Cgsi g;
  const int n = uniform(rng, shape.min_positions, shape.max_positions);
  for (int i = 0; i < shape.agents; ++i) g.agents.push_back("a" + std::to_string(i + 1));
  for (int i = 0; i < shape.actions; ++i) g.actions.push_back("m" + std::to_string(i));
  for (int v = 0; v < n; ++v) g.positions.push_back("v" + std::to_string(v));
  g.propositions = shape.propositions;
  std::sort(g.propositions.begin(), g.propositions.end());
  g.initial = 0;
  g.labels.resize(n);
  for (int v = 0; v < n; ++v)
    for (const auto& p : g.propositions)
      if (uniform(rng, 0, 2) == 0) g.labels[v].push_back(p);
  g.delta.assign(n, std::vector<int>(g.joint_count()));
  for (int v = 0; v < n; ++v)
    for (int c = 0; c < g.joint_count(); ++c) g.delta[v][c] = uniform(rng, 0, n - 1);
  add_identity_observation(g, "id");
  if (shape.partial_observation) {
    const int classes = uniform(rng, 1, n);
    std::vector<std::vector<int>> blocks(classes);
    for (int v = 0; v < n; ++v) blocks[v < classes ? v : uniform(rng, 0, classes - 1)].push_back(v);
    set_observation_blocks(g, "o", blocks);
  }
  g.finalize();
  return g;
}

Cks random_cks(Rng& rng, int states, int components, int locals, const std::vector<std::string>& props) {
  Cks k;
  for (int c = 0; c < components; ++c) {
    std::vector<std::string> names;
    for (int l = 0; l < locals; ++l) names.push_back("c" + std::to_string(c + 1) + "_" + std::to_string(l));
    k.components.push_back(std::move(names));
  }
  std::set<std::vector<int>> used;
  int capacity = 1;
  for (int c = 0; c < components; ++c) capacity *= locals;
  states = std::min(states, capacity);
  while (static_cast<int>(k.states.size()) < states) {
    std::vector<int> t;
    for (int c = 0; c < components; ++c) t.push_back(uniform(rng, 0, locals - 1));
    if (used.insert(t).second) k.states.push_back(std::move(t));
  }
  k.propositions = props;
  std::sort(k.propositions.begin(), k.propositions.end());
  k.succ.resize(states);
  k.labels.resize(states);
  for (int s = 0; s < states; ++s) {
    std::set<int> succ;
    int out = uniform(rng, 1, std::min(states, 3));
    while (static_cast<int>(succ.size()) < out) succ.insert(uniform(rng, 0, states - 1));
    k.succ[s].assign(succ.begin(), succ.end());
    for (const auto& p : k.propositions)
      if (uniform(rng, 0, 1)) k.labels[s].push_back(p);
  }
  k.initial = 0;
  return k;
}

namespace {

Qctl random_path(Rng& rng, const std::vector<std::string>& props, int depth);

Qctl random_state(Rng& rng, const std::vector<std::string>& props, int depth) {
  if (depth <= 0) {
    int i = uniform(rng, 0, static_cast<int>(props.size()));
    return i == static_cast<int>(props.size()) ? q_true() : q_atom(props[i]);
  }
  switch (uniform(rng, 0, 4)) {
    case 0: return q_not(random_state(rng, props, depth - 1));
    case 1: return q_or(random_state(rng, props, depth - 1), random_state(rng, props, depth - 1));
    case 2: return q_A(random_path(rng, props, depth - 1));
    default: return q_E(random_path(rng, props, depth - 1));
  }
}

Qctl random_path(Rng& rng, const std::vector<std::string>& props, int depth) {
  if (depth <= 0) return random_state(rng, props, 0);
  switch (uniform(rng, 0, 5)) {
    case 0: return q_not(random_path(rng, props, depth - 1));
    case 1: return q_or(random_path(rng, props, depth - 1), random_path(rng, props, depth - 1));
    case 2: return q_next(random_path(rng, props, depth - 1));
    case 3: return q_until(random_path(rng, props, depth - 1), random_path(rng, props, depth - 1));
    case 4: return q_globally(random_path(rng, props, depth - 1));
    default: return random_state(rng, props, depth - 1);
  }
}

}  // namespace

Qctl random_ctl_star(Rng& rng, const std::vector<std::string>& props, int depth) {
  return random_state(rng, props, depth);
}

}  // namespace hiersl::gen
