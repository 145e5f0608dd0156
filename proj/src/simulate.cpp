#include <algorithm>
#include <map>
#include <unordered_map>

#include "hiersl/safra.hpp"
#include "hiersl/tree_automata.hpp"

namespace hiersl {

namespace {

// A local strategy: for each active state q, one minimal model of its
// transition, flattened into (direction, q, q') triples.
using Triple = std::uint64_t;
// Per direction, the successors of each active state.
using Relation = std::map<int, std::map<int, std::vector<int>>>;

Triple pack(int d, int q, int q2) {
  return (static_cast<std::uint64_t>(d) << 42) | (static_cast<std::uint64_t>(q) << 21) |
         static_cast<std::uint64_t>(q2);
}
int dir_of(Triple t) { return static_cast<int>(t >> 42); }
int from_of(Triple t) { return static_cast<int>((t >> 21) & 0x1fffff); }
int to_of(Triple t) { return static_cast<int>(t & 0x1fffff); }

// The language of a simulation state is the intersection of the languages
// of the ATA states it tracks, so local strategies are compared by the
// (direction, successor) pairs they reach.
struct LocalChoice {
  std::vector<Triple> targets;  // pack(d, 0, q')
  std::vector<Triple> triples;
};

void keep_minimal_choices(std::vector<LocalChoice>& sets) {
  std::sort(sets.begin(), sets.end(), [](const LocalChoice& a, const LocalChoice& b) {
    return a.targets.size() != b.targets.size() ? a.targets.size() < b.targets.size() : a.targets < b.targets;
  });
  std::vector<LocalChoice> kept;
  for (auto& s : sets) {
    bool dominated = false;
    for (const auto& k : kept)
      if (std::includes(s.targets.begin(), s.targets.end(), k.targets.begin(), k.targets.end())) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(std::move(s));
  }
  sets = std::move(kept);
}

// Local strategies of the active states on `letter`, one relation per
// strategy.  False when some active state has no model.
bool local_relations(const Ata& a, const std::vector<int>& active, std::uint64_t letter, std::size_t cap,
                     const std::string& context, std::vector<Relation>& out) {
  std::vector<LocalChoice> choices{{}};
  for (int q : active) {
    std::vector<PbfModel> models = a.pbf.minimal_models(a.transition(q, letter));
    if (models.empty()) return false;
    std::vector<LocalChoice> next;
    for (const auto& c : choices)
      for (const auto& m : models) {
        LocalChoice merged = c;
        for (auto [d, q2] : m) {
          merged.triples.push_back(pack(d, q, q2));
          merged.targets.push_back(pack(d, 0, q2));
        }
        std::sort(merged.targets.begin(), merged.targets.end());
        merged.targets.erase(std::unique(merged.targets.begin(), merged.targets.end()), merged.targets.end());
        next.push_back(std::move(merged));
      }
    keep_minimal_choices(next);
    if (next.size() > cap) throw ResourceError("simulate", context, next.size());
    choices = std::move(next);
  }
  for (const auto& c : choices) {
    Relation rel;
    for (Triple t : c.triples) rel[dir_of(t)][from_of(t)].push_back(to_of(t));
    out.push_back(std::move(rel));
  }
  return true;
}

std::vector<int> image(const std::map<int, std::vector<int>>& r, const std::vector<int>& from) {
  std::vector<int> out;
  for (int q : from) {
    auto it = r.find(q);
    if (it != r.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string set_key(const std::vector<int>& s) {
  std::string k;
  for (int x : s) k += std::to_string(x) + ",";
  return k;
}

struct Prepared {
  Ata a;
  std::vector<char> cyclic;  // per state: lies on a cycle
};

Prepared prepare(const Ata& input) {
  Prepared p{reduce_ata(input), {}};
  normalize_colors(p.a);
  std::vector<char> scc_cyclic;
  std::vector<int> comp = state_sccs(state_graph(p.a), scc_cyclic);
  p.cyclic.resize(p.a.size());
  for (int q = 0; q < p.a.size(); ++q) p.cyclic[q] = scc_cyclic[comp[q]];
  return p;
}

// Every cycle carries colors within {0} or within {1,2}.
bool is_buchi(const Prepared& p) {
  std::vector<char> scc_cyclic;
  std::vector<int> comp = state_sccs(state_graph(p.a), scc_cyclic);
  std::vector<int> lo(scc_cyclic.size(), 1 << 30), hi(scc_cyclic.size(), -1);
  for (int q = 0; q < p.a.size(); ++q) {
    lo[comp[q]] = std::min(lo[comp[q]], p.a.states[q].color);
    hi[comp[q]] = std::max(hi[comp[q]], p.a.states[q].color);
  }
  for (std::size_t c = 0; c < scc_cyclic.size(); ++c)
    if (scc_cyclic[c] && lo[c] == 0 && hi[c] > 0) return false;
  return true;
}

Ata new_nta(const Ata& a) {
  Ata out;
  out.aps = a.aps;
  out.dirs = a.dirs;
  return out;
}

void check_size(const Ata& a) {
  if (a.size() >= (1 << 21) || a.dirs.size() >= (1 << 21))
    throw ResourceError("simulate", "automaton too large to encode", static_cast<std::size_t>(a.size()));
}

// Breakpoint construction for automata whose threads are accepted iff they
// visit states colored 2 (or loop on color 0) infinitely often.  NTA state
// (S, O): O holds the threads owing a visit since the last breakpoint.
Ata simulate_buchi(const Prepared& p, std::size_t cap, const std::string& context) {
  const Ata& a = p.a;
  auto good = [&](int q) { return p.cyclic[q] && a.states[q].color % 2 == 0; };
  Ata out = new_nta(a);
  std::unordered_map<std::string, int> ids;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> sets;
  auto intern = [&](std::vector<int> s, std::vector<int> o, int color) {
    std::string key = std::to_string(color) + "|" + set_key(s) + "|" + set_key(o);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    if (sets.size() >= cap) throw ResourceError("simulate", context, sets.size());
    int id = out.add_state(color, "b" + std::to_string(sets.size()));
    ids.emplace(std::move(key), id);
    sets.push_back({std::move(s), std::move(o)});
    return id;
  };
  out.initial = intern({a.initial}, {}, 0);
  for (int r : a.roots) out.roots.push_back(intern({r}, {}, 0));

  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto [s, o] = sets[i];
    std::uint64_t support = 0;
    for (int q : s) support |= a.states[q].support;
    out.set_transition(static_cast<int>(i), support, [&](std::uint64_t letter) -> int {
      std::vector<Relation> rels;
      if (!local_relations(a, s, letter, cap, context, rels)) return PbfArena::kFalse;
      std::vector<int> disjuncts;
      for (const auto& rel : rels) {
        std::vector<int> conjuncts;
        for (const auto& [d, r] : rel) {
          std::vector<int> s2 = image(r, s);
          std::vector<int> o2 = image(r, o.empty() ? s : o);
          o2.erase(std::remove_if(o2.begin(), o2.end(), good), o2.end());
          int color = o.empty() ? 2 : 1;
          conjuncts.push_back(out.pbf.atom(d, intern(std::move(s2), std::move(o2), color)));
        }
        disjuncts.push_back(out.pbf.conj(std::move(conjuncts)));
      }
      return out.pbf.disj(std::move(disjuncts));
    });
  }
  return out;
}

// The thread checker is the complement of the Safra–Piterman
// determinization of the "some bad thread" Büchi automaton: ATA states
// colored C(q)+1 under the parity layering, or the bad states directly when
// the automaton is co-Büchi.
Ata simulate_safra(const Prepared& p, std::size_t cap, const std::string& context) {
  const Ata& a = p.a;
  std::vector<int> bad(a.size());
  bool cobuchi = true;
  for (int q = 0; q < a.size(); ++q) {
    bad[q] = p.cyclic[q] ? a.states[q].color + 1 : 1;
    if (bad[q] > 2) cobuchi = false;
  }
  ParityLayers layers(bad);
  const int modes = cobuchi ? 1 : layers.modes();
  auto state_of = [&](int x) { return cobuchi ? x : layers.state_of(x); };
  auto enter = [&](int q, std::vector<int>& out) {
    if (cobuchi) out.push_back(q);
    else layers.enter(q, out);
  };
  auto lift = [&](int x, const std::vector<int>& succ, std::vector<int>& out) {
    if (cobuchi) out.insert(out.end(), succ.begin(), succ.end());
    else layers.lift(x, succ, out);
  };
  auto accepting = [&](int x) { return cobuchi ? bad[x] == 2 : layers.accepting(x); };
  const int max_names = std::max(1, cobuchi ? a.size() : layers.size());

  Ata out = new_nta(a);
  std::unordered_map<std::string, int> ids;
  std::vector<SafraTree> trees;
  auto intern = [&](SafraTree t, int color) {
    std::string key = std::to_string(color) + "|" + t.key();
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    if (trees.size() >= cap) throw ResourceError("simulate", context, trees.size());
    int id = out.add_state(color, "s" + std::to_string(trees.size()));
    ids.emplace(std::move(key), id);
    trees.push_back(std::move(t));
    return id;
  };
  auto initial = [&](int q) {
    std::vector<int> init;
    enter(q, init);
    return intern(safra_initial(init), 0);
  };
  out.initial = initial(a.initial);
  for (int r : a.roots) out.roots.push_back(initial(r));

  for (std::size_t i = 0; i < trees.size(); ++i) {
    const SafraTree tree = trees[i];
    std::vector<int> active;
    for (int x : tree.root_label())
      if (x % modes == 0) active.push_back(state_of(x));
    std::uint64_t support = 0;
    for (int q : active) support |= a.states[q].support;

    out.set_transition(static_cast<int>(i), support, [&](std::uint64_t letter) -> int {
      std::vector<Relation> rels;
      if (!local_relations(a, active, letter, cap, context, rels)) return PbfArena::kFalse;
      std::vector<int> disjuncts;
      for (const auto& rel : rels) {
        std::vector<int> conjuncts;
        for (const auto& [d, r] : rel) {
          int pr;
          SafraTree next = safra_step(
              tree,
              [&](int x, std::vector<int>& succ) {
                auto it = r.find(state_of(x));
                if (it != r.end()) lift(x, it->second, succ);
              },
              accepting, max_names, pr);
          if (next.empty()) continue;
          int color = safra_color(pr, max_names) + 1;
          conjuncts.push_back(out.pbf.atom(d, intern(std::move(next), color)));
        }
        disjuncts.push_back(out.pbf.conj(std::move(conjuncts)));
      }
      return out.pbf.disj(std::move(disjuncts));
    });
  }
  return out;
}

}  // namespace

// Alternation removal.  The NTA guesses, at every node, a local strategy of
// the acceptance game (one minimal model per active state) and checks with
// a deterministic automaton that every thread of the guessed run satisfies
// the parity condition.  A direction whose relation is empty carries no
// obligation and is left out of the disjunct.
Ata simulate(const Ata& input, std::size_t cap, const std::string& context) {
  if (is_nta(input)) return input;
  check_size(input);
  Prepared p = prepare(input);
  Ata out = is_buchi(p) ? simulate_buchi(p, cap, context) : simulate_safra(p, cap, context);
  compress_colors(out);
  return reduce_ata(out);
}

}  // namespace hiersl
