#include "hiersl/tree_automata.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace hiersl {

Ata dualize(const Ata& a) {
  Ata out;
  out.aps = a.aps;
  out.dirs = a.dirs;
  embed_ata(out, a, true);
  out.initial = a.initial;
  out.roots = a.roots;
  return out;
}

Ata union_initial(const Ata& a1, const Ata& a2) {
  if (!(a1.dirs == a2.dirs)) throw Error("union of automata over different directions");
  Ata out;
  out.aps = a1.aps;
  out.dirs = a1.dirs;
  int q0 = out.add_state(0, "or");
  int o1 = embed_ata(out, a1, false);
  int o2 = embed_ata(out, a2, false);
  int i1 = o1 + a1.initial, i2 = o2 + a2.initial;
  std::uint64_t support = out.states[i1].support | out.states[i2].support;
  out.set_transition(q0, support, [&](std::uint64_t l) {
    return out.pbf.disj(out.transition(i1, l), out.transition(i2, l));
  });
  out.initial = q0;
  return out;
}

Ata narrow_ata(const Ata& a, const IndexSet& keep) {
  DirectionSpace sub = a.dirs.restrict_to(keep);
  if (sub == a.dirs) return a;
  std::vector<int> map = a.dirs.projection_to(sub);
  Ata out;
  out.aps = a.aps;
  out.dirs = sub;
  embed_ata(out, a, false, map);
  out.initial = a.initial;
  out.roots = a.roots;
  return out;
}

namespace {

bool conj_of_atoms_ok(const PbfArena& pbf, int f) {
  const PbfNode& n = pbf.node(f);
  if (n.kind == PbfKind::Atom || n.kind == PbfKind::True) return true;
  if (n.kind != PbfKind::And) return false;
  std::vector<int> dirs;
  for (int k : n.kids) {
    const PbfNode& c = pbf.node(k);
    if (c.kind != PbfKind::Atom) return false;
    dirs.push_back(c.dir);
  }
  std::sort(dirs.begin(), dirs.end());
  return std::adjacent_find(dirs.begin(), dirs.end()) == dirs.end();
}

bool nta_formula(const PbfArena& pbf, int f) {
  const PbfNode& n = pbf.node(f);
  if (n.kind == PbfKind::False) return true;
  if (n.kind == PbfKind::Or) {
    for (int k : n.kids)
      if (!conj_of_atoms_ok(pbf, k)) return false;
    return true;
  }
  return conj_of_atoms_ok(pbf, f);
}

}  // namespace

bool is_nta(const Ata& a) {
  for (const auto& s : a.states)
    for (int f : s.delta)
      if (!nta_formula(a.pbf, f)) return false;
  return true;
}

Ata project(const Ata& nta, const std::string& p) {
  if (!is_nta(nta)) throw Error("projection requires a nondeterministic tree automaton");
  int idx = nta.ap_index(p);
  if (idx < 0) return nta;
  const std::uint64_t bit = std::uint64_t{1} << idx;
  Ata out = nta;
  for (int q = 0; q < out.size(); ++q) {
    if (!(nta.states[q].support & bit)) continue;
    out.set_transition(q, nta.states[q].support & ~bit, [&](std::uint64_t l) {
      return out.pbf.disj(nta.transition(q, l | bit), nta.transition(q, l & ~bit));
    });
  }
  return out;
}

bool membership(const Ata& a, const TreeGen& t, GameStats* stats) {
  if (!(a.dirs == t.dirs)) throw Error("membership: tree and automaton directions differ");
  // Tree labels translated to automaton letters.
  std::vector<int> bit_of(t.aps.size(), -1);
  for (std::size_t i = 0; i < t.aps.size(); ++i) bit_of[i] = a.ap_index(t.aps[i]);
  std::vector<std::uint64_t> letter(t.size(), 0);
  for (int v = 0; v < t.size(); ++v)
    for (std::size_t i = 0; i < t.aps.size(); ++i)
      if (bit_of[i] >= 0 && ((t.label[v] >> i) & 1U)) letter[v] |= std::uint64_t{1} << bit_of[i];

  ParityGame g;
  const int win = g.add_vertex(kEve, 0);
  g.add_edge(win, win);
  const int lose = g.add_vertex(kEve, 1);
  g.add_edge(lose, lose);
  // Vertex payload: tree vertex, and either an automaton state or a formula.
  struct Payload {
    int tree;
    int state;    // >= 0 for state vertices
    int formula;  // >= 0 for formula vertices
  };
  std::vector<Payload> payload(2, {-1, -1, -1});
  std::unordered_map<std::uint64_t, int> state_vx, pbf_vx;
  std::vector<int> work;
  auto key_of = [](int tv, int x) {
    return (static_cast<std::uint64_t>(tv) << 32) | static_cast<std::uint32_t>(x);
  };
  auto state_vertex = [&](int tv, int q) {
    auto [it, fresh] = state_vx.try_emplace(key_of(tv, q), g.size());
    if (fresh) {
      g.add_vertex(kEve, a.states[q].color);
      payload.push_back({tv, q, -1});
      work.push_back(it->second);
    }
    return it->second;
  };
  auto pbf_vertex = [&](int tv, int f) {
    if (f == PbfArena::kTrue) return win;
    if (f == PbfArena::kFalse) return lose;
    const PbfNode& n = a.pbf.node(f);
    if (n.kind == PbfKind::Atom) {
      int child = t.child(tv, n.dir);
      if (child < 0) throw Error("membership: tree is not complete");
      return state_vertex(child, n.state);
    }
    auto [it, fresh] = pbf_vx.try_emplace(key_of(tv, f), g.size());
    if (fresh) {
      g.add_vertex(n.kind == PbfKind::Or ? kEve : kAdam, 0);
      payload.push_back({tv, -1, f});
      work.push_back(it->second);
    }
    return it->second;
  };

  const int root = state_vertex(t.root, a.initial);
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    Payload p = payload[v];
    if (p.state >= 0) {
      int target = pbf_vertex(p.tree, a.transition(p.state, letter[p.tree]));
      g.add_edge(v, target);
    } else {
      std::vector<int> kids = a.pbf.node(p.formula).kids;
      for (int k : kids) {
        int target = pbf_vertex(p.tree, k);
        g.add_edge(v, target);
      }
    }
  }
  if (stats) stats->vertices = static_cast<std::size_t>(g.size());
  return solve_parity(g).winner[root] == kEve;
}

namespace {

struct EmptinessGame {
  ParityGame g;
  struct Choice {
    std::uint64_t letter;
    PbfModel atoms;
  };
  std::vector<Choice> choice_of;  // per game vertex (only choice vertices meaningful)
  std::vector<int> state_vx;
};

// Eve picks a letter and a minimal model at every state; Adam picks the
// direction to follow.  Seeded with the initial state, or every state.
EmptinessGame emptiness_game(const Ata& nta, bool all_states) {
  EmptinessGame eg;
  ParityGame& g = eg.g;
  const int win = g.add_vertex(kEve, 0);
  g.add_edge(win, win);
  const int lose = g.add_vertex(kEve, 1);
  g.add_edge(lose, lose);
  eg.state_vx.assign(nta.size(), -1);
  std::vector<int> order;
  auto state_vertex = [&](int q) {
    if (eg.state_vx[q] < 0) {
      eg.state_vx[q] = g.add_vertex(kEve, nta.states[q].color);
      order.push_back(q);
    }
    return eg.state_vx[q];
  };
  state_vertex(nta.initial);
  if (all_states)
    for (int q = 0; q < nta.size(); ++q) state_vertex(q);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int q = order[i];
    int v = eg.state_vx[q];
    const AtaState& s = nta.states[q];
    std::map<PbfModel, int> seen;
    for (std::uint64_t idx = 0; idx < s.delta.size(); ++idx) {
      std::uint64_t l = expand_bits(idx, s.support);
      for (auto& m : nta.pbf.minimal_models(s.delta[idx])) {
        if (seen.count(m)) continue;
        int c = g.add_vertex(kAdam, 0);
        seen.emplace(m, c);
        eg.choice_of.resize(g.size());
        eg.choice_of[c] = {l, m};
        g.add_edge(v, c);
        if (m.empty()) g.add_edge(c, win);
        for (auto [d, q2] : m) g.add_edge(c, state_vertex(q2));
      }
    }
    if (g.succ[v].empty()) g.add_edge(v, lose);
  }
  return eg;
}

}  // namespace

Ata prune_empty_states(const Ata& nta) {
  if (!is_nta(nta)) throw Error("pruning requires a nondeterministic tree automaton");
  EmptinessGame eg = emptiness_game(nta, true);
  ParitySolution sol = solve_parity(eg.g);
  std::vector<char> empty(nta.size());
  for (int q = 0; q < nta.size(); ++q) empty[q] = sol.winner[eg.state_vx[q]] != kEve;
  Ata out;
  out.aps = nta.aps;
  out.dirs = nta.dirs;
  out.initial = nta.initial;
  out.roots = nta.roots;
  for (const auto& s : nta.states) out.add_state(s.color, s.name);
  std::unordered_map<int, int> memo;
  for (int q = 0; q < nta.size(); ++q) {
    const AtaState& s = nta.states[q];
    if (empty[q]) {
      out.set_constant_transition(q, PbfArena::kFalse);
      continue;
    }
    out.set_transition(q, s.support, [&](std::uint64_t letter) {
      return out.pbf.import(
          nta.pbf, nta.transition(q, letter),
          [&](int d, int q2) { return empty[q2] ? PbfArena::kFalse : out.pbf.atom(d, q2); }, false, memo);
    });
  }
  return trim_ata(out);
}

EmptinessResult emptiness(const Ata& nta) {
  if (!is_nta(nta)) throw Error("emptiness requires a nondeterministic tree automaton");
  EmptinessGame eg = emptiness_game(nta, false);
  const auto& choice_of = eg.choice_of;
  const auto& state_vx = eg.state_vx;
  using Choice = EmptinessGame::Choice;
  ParitySolution sol = solve_parity(eg.g);
  EmptinessResult res;
  const int root = state_vx[nta.initial];
  res.empty = sol.winner[root] != kEve;
  if (res.empty) return res;

  // Witness: vertices (state, direction) following Eve's choices; directions a
  // choice leaves open lead to an unconstrained subtree labelled ∅.
  TreeGen t;
  t.dirs = nta.dirs;
  t.aps = nta.aps;
  const int nd = nta.dirs.size();
  std::vector<int> top(nd);
  for (int d = 0; d < nd; ++d) top[d] = t.add_vertex(d, 0);
  for (int d = 0; d < nd; ++d)
    for (int e = 0; e < nd; ++e) t.edges[top[d]].push_back({e, top[e]});
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> work;
  auto vertex = [&](int q, int d) {
    auto it = ids.find({q, d});
    if (it != ids.end()) return it->second;
    int c = sol.strategy[state_vx[q]];
    int id = t.add_vertex(d, choice_of[c].letter);
    ids.emplace(std::make_pair(q, d), id);
    work.push_back({q, d});
    return id;
  };
  t.root = vertex(nta.initial, 0);
  while (!work.empty()) {
    auto [q, d] = work.back();
    work.pop_back();
    int id = ids[{q, d}];
    const Choice& ch = choice_of[sol.strategy[state_vx[q]]];
    std::vector<int> target(nd, -1);
    for (auto [dir, q2] : ch.atoms) target[dir] = vertex(q2, dir);
    for (int e = 0; e < nd; ++e) t.add_edge(id, e, target[e] >= 0 ? target[e] : top[e]);
  }
  res.witness = trim(t);
  return res;
}

}  // namespace hiersl
