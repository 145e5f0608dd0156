#include "hiersl/cgsi.hpp"

#include <algorithm>

namespace hiersl {

namespace {

int find_name(const std::vector<std::string>& names, const std::string& x) {
  auto it = std::find(names.begin(), names.end(), x);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

}  // namespace

int Cgsi::joint_count() const {
  int c = 1;
  for (int i = 0; i < num_agents(); ++i) c *= num_actions();
  return c;
}

int Cgsi::encode_joint(const std::vector<int>& acts) const {
  int c = 0;
  for (int i = num_agents() - 1; i >= 0; --i) c = c * num_actions() + acts[i];
  return c;
}

std::vector<int> Cgsi::decode_joint(int joint) const {
  std::vector<int> acts(agents.size());
  for (int i = 0; i < num_agents(); ++i) {
    acts[i] = joint % num_actions();
    joint /= num_actions();
  }
  return acts;
}

int Cgsi::agent_index(const std::string& a) const { return find_name(agents, a); }
int Cgsi::action_index(const std::string& m) const { return find_name(actions, m); }
int Cgsi::position_index(const std::string& v) const { return find_name(positions, v); }
int Cgsi::observation_index(const std::string& o) const { return find_name(obs_names, o); }

bool Cgsi::has_label(int v, const std::string& p) const {
  return std::binary_search(labels[v].begin(), labels[v].end(), p);
}

bool Cgsi::finer(const std::string& o1, const std::string& o2) const {
  int a = observation_index(o1), b = observation_index(o2);
  if (a < 0) throw Error("unknown observation symbol '" + o1 + "'");
  if (b < 0) throw Error("unknown observation symbol '" + o2 + "'");
  // Class-map inclusion: every o1-class lies inside one o2-class.
  std::vector<int> image(positions.size(), -1);
  for (int v = 0; v < num_positions(); ++v) {
    int& slot = image[obs_class[a][v]];
    if (slot < 0) slot = obs_class[b][v];
    else if (slot != obs_class[b][v]) return false;
  }
  return true;
}

void Cgsi::finalize() {
  auto problems = validate_cgsi(*this);
  if (!problems.empty()) throw ModelError(problems);
  obs_class.assign(obs_names.size(), std::vector<int>(positions.size(), -1));
  for (std::size_t o = 0; o < obs_names.size(); ++o) {
    int next = 0;
    for (int v = 0; v < num_positions(); ++v) {
      if (obs_class[o][v] >= 0) continue;
      for (int w = v; w < num_positions(); ++w)
        if (obs_relation[o][v][w]) obs_class[o][w] = next;
      ++next;
    }
  }
}

std::vector<std::string> validate_cgsi(const Cgsi& g) {
  std::vector<std::string> errs;
  const int nv = g.num_positions();
  if (g.actions.empty()) errs.push_back("no actions declared");
  if (nv == 0) errs.push_back("no positions declared");
  if (g.agents.empty()) errs.push_back("no agents declared");
  if (!errs.empty()) return errs;
  if (g.initial < 0 || g.initial >= nv) errs.push_back("initial position out of range");
  if (static_cast<int>(g.labels.size()) != nv) errs.push_back("labels do not cover all positions");
  for (std::size_t v = 0; v < g.labels.size(); ++v)
    for (const auto& p : g.labels[v])
      if (!g.propositions.empty() && find_name(g.propositions, p) < 0)
        errs.push_back("position " + g.positions[v] + " labelled with undeclared proposition " + p);
  if (static_cast<int>(g.delta.size()) != nv) {
    errs.push_back("transition table does not cover all positions");
  } else {
    for (int v = 0; v < nv; ++v) {
      for (int c = 0; c < g.joint_count(); ++c) {
        int t = c < static_cast<int>(g.delta[v].size()) ? g.delta[v][c] : -1;
        if (t >= 0 && t < nv) continue;
        std::string joint;
        auto acts = g.decode_joint(c);
        for (int a = 0; a < g.num_agents(); ++a)
          joint += (a ? ", " : "") + g.agents[a] + "=" + g.actions[acts[a]];
        errs.push_back("missing transition from " + g.positions[v] + " on {" + joint + "}");
      }
    }
  }
  for (std::size_t o = 0; o < g.obs_names.size(); ++o) {
    const auto& r = g.obs_relation[o];
    const std::string& name = g.obs_names[o];
    for (int v = 0; v < nv; ++v)
      if (!r[v][v]) errs.push_back("observation " + name + " not reflexive at " + g.positions[v]);
    for (int v = 0; v < nv; ++v)
      for (int w = 0; w < nv; ++w)
        if (r[v][w] && !r[w][v])
          errs.push_back("observation " + name + " not symmetric on (" + g.positions[v] + ", " +
                         g.positions[w] + ")");
    bool broken = false;
    for (int u = 0; u < nv && !broken; ++u)
      for (int v = 0; v < nv && !broken; ++v)
        for (int w = 0; w < nv && !broken; ++w)
          if (r[u][v] && r[v][w] && !r[u][w]) {
            errs.push_back("observation " + name + " not transitive on (" + g.positions[u] +
                           ", " + g.positions[v] + ", " + g.positions[w] + ")");
            broken = true;
          }
  }
  return errs;
}

void set_observation_blocks(Cgsi& g, const std::string& name,
                            const std::vector<std::vector<int>>& blocks) {
  int nv = g.num_positions();
  std::vector<std::vector<bool>> rel(nv, std::vector<bool>(nv, false));
  for (const auto& b : blocks)
    for (int v : b)
      for (int w : b) rel[v][w] = true;
  int idx = g.observation_index(name);
  if (idx < 0) {
    g.obs_names.push_back(name);
    g.obs_relation.push_back(std::move(rel));
  } else {
    g.obs_relation[idx] = std::move(rel);
  }
}

void add_identity_observation(Cgsi& g, const std::string& name) {
  std::vector<std::vector<int>> blocks;
  for (int v = 0; v < g.num_positions(); ++v) blocks.push_back({v});
  set_observation_blocks(g, name, blocks);
}

bool play_valid(const Cgsi& g, const Play& p) {
  if (p.empty() || p[0] != g.initial) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    bool ok = false;
    for (int c = 0; c < g.joint_count() && !ok; ++c) ok = g.succ(p[i], c) == p[i + 1];
    if (!ok) return false;
  }
  return true;
}

bool play_obs_equiv(const Play& a, const Play& b, const std::string& obs, const Cgsi& g) {
  int o = g.observation_index(obs);
  if (o < 0) throw Error("unknown observation symbol '" + obs + "'");
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!g.equivalent(o, a[i], b[i])) return false;
  return true;
}

bool yields_hierarchical_observation(const Cgsi& g) {
  for (const auto& a : g.obs_names)
    for (const auto& b : g.obs_names)
      if (!g.finer(a, b) && !g.finer(b, a)) return false;
  return true;
}

}  // namespace hiersl
