#include "support.hpp"

#include <algorithm>

namespace hiersl::test {

std::string model_path(const std::string& name) { return std::string(HIERSL_MODELS_DIR) + "/" + name; }

Model load_fixture(const std::string& name) { return load_model(model_path(name)); }

std::string fixture_text(const std::string& name) { return read_text_file(model_path(name)); }

DirectionSpace grid(std::vector<int> radices) {
  DirectionSpace d;
  for (std::size_t i = 0; i < radices.size(); ++i) d.dims.push_back(static_cast<int>(i) + 1);
  d.radices = std::move(radices);
  return d;
}

namespace {

int random_formula(Rng& rng, Ata& a, int states, int depth) {
  const int nd = a.dirs.size();
  int r = gen::uniform(rng, 0, 9);
  if (depth == 0 || r < 4) {
    if (r == 0 && depth > 0) return gen::uniform(rng, 0, 1) ? PbfArena::kTrue : PbfArena::kFalse;
    return a.pbf.atom(gen::uniform(rng, 0, nd - 1), gen::uniform(rng, 0, states - 1));
  }
  std::vector<int> kids{random_formula(rng, a, states, depth - 1), random_formula(rng, a, states, depth - 1)};
  return r < 7 ? a.pbf.conj(kids) : a.pbf.disj(kids);
}

int random_dnf(Rng& rng, Ata& a, int states) {
  const int nd = a.dirs.size();
  std::vector<int> disjuncts;
  int n = gen::uniform(rng, 0, 3);
  for (int i = 0; i < n; ++i) {
    std::vector<int> atoms;
    for (int d = 0; d < nd; ++d)
      if (gen::uniform(rng, 0, 3) > 0) atoms.push_back(a.pbf.atom(d, gen::uniform(rng, 0, states - 1)));
    disjuncts.push_back(a.pbf.conj(atoms));
  }
  return a.pbf.disj(disjuncts);
}

}  // namespace

Ata random_ata(Rng& rng, const std::vector<std::string>& aps, const DirectionSpace& dirs, int states,
               int max_color, bool nta) {
  Ata a;
  a.aps = aps;
  a.dirs = dirs;
  for (int q = 0; q < states; ++q) a.add_state(gen::uniform(rng, 0, max_color), "q" + std::to_string(q));
  for (int q = 0; q < states; ++q) {
    std::uint64_t support = 0;
    for (std::size_t i = 0; i < aps.size(); ++i)
      if (gen::uniform(rng, 0, 1)) support |= std::uint64_t{1} << i;
    a.set_transition(q, support, [&](std::uint64_t) {
      return nta ? random_dnf(rng, a, states) : random_formula(rng, a, states, 3);
    });
  }
  a.initial = 0;
  a.roots = {0};
  return a;
}

TreeGen random_tree(Rng& rng, const DirectionSpace& dirs, const std::vector<std::string>& aps, int vertices) {
  TreeGen t;
  t.dirs = dirs;
  t.aps = aps;
  const int nd = dirs.size();
  std::vector<std::vector<int>> by_dir(nd);
  for (int v = 0; v < std::max(vertices, nd); ++v) {
    int d = v < nd ? v : gen::uniform(rng, 0, nd - 1);
    std::uint64_t lab = 0;
    for (std::size_t i = 0; i < aps.size(); ++i)
      if (gen::uniform(rng, 0, 1)) lab |= std::uint64_t{1} << i;
    by_dir[d].push_back(t.add_vertex(d, lab));
  }
  for (int v = 0; v < t.size(); ++v)
    for (int e = 0; e < nd; ++e)
      t.add_edge(v, e, by_dir[e][gen::uniform(rng, 0, static_cast<int>(by_dir[e].size()) - 1)]);
  t.root = gen::uniform(rng, 0, t.size() - 1);
  return t;
}

ParityGame random_parity_game(Rng& rng, int vertices, int max_color) {
  ParityGame g;
  for (int v = 0; v < vertices; ++v) g.add_vertex(gen::uniform(rng, 0, 1), gen::uniform(rng, 0, max_color));
  for (int v = 0; v < vertices; ++v) {
    int out = gen::uniform(rng, 1, std::min(3, vertices));
    std::vector<int> succ;
    while (static_cast<int>(succ.size()) < out) {
      int w = gen::uniform(rng, 0, vertices - 1);
      if (std::find(succ.begin(), succ.end(), w) == succ.end()) succ.push_back(w);
    }
    g.succ[v] = succ;
  }
  return g;
}

Qctl random_ltl(Rng& rng, const std::vector<std::string>& props, int depth) {
  if (depth <= 0) return q_atom(props[gen::uniform(rng, 0, static_cast<int>(props.size()) - 1)]);
  switch (gen::uniform(rng, 0, 6)) {
    case 0: return q_not(random_ltl(rng, props, depth - 1));
    case 1: return q_or(random_ltl(rng, props, depth - 1), random_ltl(rng, props, depth - 1));
    case 2: return q_and(random_ltl(rng, props, depth - 1), random_ltl(rng, props, depth - 1));
    case 3: return q_next(random_ltl(rng, props, depth - 1));
    case 4: return q_until(random_ltl(rng, props, depth - 1), random_ltl(rng, props, depth - 1));
    case 5: return q_globally(random_ltl(rng, props, depth - 1));
    default: return q_eventually(random_ltl(rng, props, depth - 1));
  }
}

Sli controller_formula(const Cgsi& g, const std::vector<int>& controllers, const std::string& controller_obs,
                       oracle::Objective mode, const std::string& target) {
  Sli body = mode == oracle::Objective::Reach ? sli_eventually(sli_atom(target)) : sli_globally(sli_atom(target));
  auto is_controller = [&](int a) { return std::find(controllers.begin(), controllers.end(), a) != controllers.end(); };
  auto var = [&](int a) { return (is_controller(a) ? "x" : "y") + std::to_string(a + 1); };
  for (int a = g.num_agents() - 1; a >= 0; --a) body = sli_bind(g.agents[a], var(a), body);
  for (int a = g.num_agents() - 1; a >= 0; --a)
    if (!is_controller(a)) body = sli_forall(var(a), "id", body);
  for (int a = g.num_agents() - 1; a >= 0; --a)
    if (is_controller(a)) body = sli_exists(var(a), controller_obs, body);
  return body;
}

std::vector<int> labelled(const Cgsi& g, const std::string& p) {
  std::vector<int> out;
  for (int v = 0; v < g.num_positions(); ++v)
    if (g.has_label(v, p)) out.push_back(v);
  return out;
}

}  // namespace hiersl::test
