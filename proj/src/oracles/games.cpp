#include <algorithm>
#include <map>
#include <set>

#include "hiersl/oracles.hpp"

namespace hiersl::oracle {

namespace {

std::vector<char> as_mask(const Cgsi& g, const std::vector<int>& targets) {
  std::vector<char> m(g.num_positions(), 0);
  for (int v : targets) m.at(v) = 1;
  return m;
}

// Successors of v grouped by the controllers' part of the joint action.
std::vector<std::vector<int>> grouped_successors(const Cgsi& g, const std::vector<int>& controllers, int v) {
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int c = 0; c < g.joint_count(); ++c) {
    std::vector<int> acts = g.decode_joint(c), key;
    for (int a : controllers) key.push_back(acts[a]);
    groups[key].push_back(g.succ(v, c));
  }
  std::vector<std::vector<int>> out;
  for (auto& [key, succ] : groups) out.push_back(std::move(succ));
  return out;
}

}  // namespace

bool attractor_solve(const Cgsi& g, const std::vector<int>& controllers, const std::vector<int>& targets,
                     Objective mode) {
  const int n = g.num_positions();
  std::vector<char> target = as_mask(g, targets);
  std::vector<char> win = target;
  std::vector<std::vector<std::vector<int>>> groups(n);
  for (int v = 0; v < n; ++v) groups[v] = grouped_successors(g, controllers, v);
  auto forced = [&](int v) {
    for (const auto& succ : groups[v])
      if (std::all_of(succ.begin(), succ.end(), [&](int w) { return win[w]; })) return true;
    return false;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (mode == Objective::Reach && !win[v] && forced(v)) {
        win[v] = 1;
        changed = true;
      } else if (mode == Objective::Safe && win[v] && !forced(v)) {
        win[v] = 0;
        changed = true;
      }
    }
  }
  return win[g.initial];
}

bool attractor_reach(const Cgsi& g, const std::vector<int>& controllers, const std::vector<int>& targets) {
  return attractor_solve(g, controllers, targets, Objective::Reach);
}

bool knowledge_solve(const Cgsi& g, const std::string& observation, int agent, const std::vector<int>& targets,
                     Objective mode) {
  const int o = g.observation_index(observation);
  if (o < 0) throw Error("unknown observation " + observation);
  std::vector<char> target = as_mask(g, targets);
  using Set = std::vector<int>;
  // Reach: the positions whose play has not yet met a target.  Safe: the belief.
  auto filter = [&](Set s) {
    if (mode == Objective::Reach) s.erase(std::remove_if(s.begin(), s.end(), [&](int v) { return target[v]; }), s.end());
    return s;
  };
  auto moves = [&](const Set& s, int act) {
    std::map<int, std::set<int>> by_class;
    for (int v : s)
      for (int c = 0; c < g.joint_count(); ++c)
        if (g.decode_joint(c)[agent] == act) {
          int w = g.succ(v, c);
          by_class[g.obs_class[o][w]].insert(w);
        }
    std::vector<Set> out;
    for (auto& [cls, ws] : by_class) out.push_back(filter(Set(ws.begin(), ws.end())));
    return out;
  };

  std::map<Set, int> ids;
  std::vector<Set> sets;
  std::vector<std::vector<std::vector<int>>> edges;  // [set][action] -> successor ids
  auto intern = [&](const Set& s) {
    auto [it, fresh] = ids.try_emplace(s, static_cast<int>(sets.size()));
    if (fresh) sets.push_back(s);
    return it->second;
  };
  intern(filter({g.initial}));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<std::vector<int>> per_action;
    for (int act = 0; act < g.num_actions(); ++act) {
      std::vector<int> succ;
      for (const Set& s2 : moves(sets[i], act)) succ.push_back(intern(s2));
      per_action.push_back(std::move(succ));
    }
    edges.push_back(std::move(per_action));
  }

  const int m = static_cast<int>(sets.size());
  std::vector<char> win(m, 0);
  for (int i = 0; i < m; ++i) {
    if (mode == Objective::Reach) win[i] = sets[i].empty();
    else win[i] = std::all_of(sets[i].begin(), sets[i].end(), [&](int v) { return target[v]; });
  }
  auto forced = [&](int i) {
    for (const auto& succ : edges[i])
      if (std::all_of(succ.begin(), succ.end(), [&](int j) { return win[j]; })) return true;
    return false;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < m; ++i) {
      if (mode == Objective::Reach && !win[i] && forced(i)) {
        win[i] = 1;
        changed = true;
      } else if (mode == Objective::Safe && win[i] && !forced(i)) {
        win[i] = 0;
        changed = true;
      }
    }
  }
  return win[0];
}

std::vector<bool> brute_force_parity(const std::vector<int>& owner, const std::vector<int>& color,
                                     const std::vector<std::vector<int>>& succ) {
  const int n = static_cast<int>(owner.size());
  std::vector<int> eve;
  for (int v = 0; v < n; ++v)
    if (owner[v] == 0 && !succ[v].empty()) eve.push_back(v);
  std::vector<int> choice(eve.size(), 0);
  std::vector<bool> region(n, false);
  for (;;) {
    std::vector<std::vector<int>> edges(n);
    for (int v = 0; v < n; ++v) edges[v] = succ[v];
    for (std::size_t i = 0; i < eve.size(); ++i) edges[eve[i]] = {succ[eve[i]][choice[i]]};

    // Adam wins from v if he reaches an Eve dead end or a cycle whose top color is odd.
    std::vector<char> bad(n, 0);
    for (int v = 0; v < n; ++v)
      if (owner[v] == 0 && succ[v].empty()) bad[v] = 1;
    for (int u = 0; u < n; ++u) {
      if (color[u] % 2 == 0 || bad[u]) continue;
      std::vector<char> seen(n, 0);
      std::vector<int> st{u};
      bool cycle = false;
      while (!st.empty() && !cycle) {
        int x = st.back();
        st.pop_back();
        for (int y : edges[x]) {
          if (color[y] > color[u]) continue;
          if (y == u) cycle = true;
          if (!seen[y]) {
            seen[y] = 1;
            st.push_back(y);
          }
        }
      }
      if (cycle) bad[u] = 1;
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < n; ++v)
        if (!bad[v] && std::any_of(edges[v].begin(), edges[v].end(), [&](int w) { return bad[w]; }) &&
            (owner[v] == 1 || !edges[v].empty())) {
          bad[v] = 1;
          changed = true;
        }
    }
    for (int v = 0; v < n; ++v)
      if (!bad[v]) region[v] = true;

    std::size_t i = 0;
    while (i < eve.size() && ++choice[i] == static_cast<int>(succ[eve[i]].size())) choice[i++] = 0;
    if (i == eve.size()) break;
  }
  return region;
}

}  // namespace hiersl::oracle
