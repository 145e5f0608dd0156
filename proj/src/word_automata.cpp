#include "hiersl/word_automata.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hiersl/safra.hpp"

namespace hiersl {

std::vector<int> Npw::successors(int q, std::uint64_t letter) const {
  std::vector<int> out;
  for (const auto& e : edges[q])
    if (e.guard.admits(letter)) out.push_back(e.to);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

/// Exists a reachable cycle whose maximal color is even, in a graph
/// given by adjacency lists and node colors.
bool has_even_cycle(const std::vector<std::vector<int>>& adj, const std::vector<int>& color, int start) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> reach(n, 0);
  std::vector<int> stack{start};
  reach[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!reach[w]) {
        reach[w] = 1;
        stack.push_back(w);
      }
  }
  std::set<int> evens;
  for (int v = 0; v < n; ++v)
    if (reach[v] && color[v] % 2 == 0) evens.insert(color[v]);
  for (int c : evens) {
    // Tarjan restricted to reachable nodes of color <= c.
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on(n, 0);
    std::vector<int> st;
    int counter = 0, ncomp = 0;
    auto allowed = [&](int v) { return reach[v] && color[v] <= c; };
    std::function<void(int)> dfs = [&](int v) {
      index[v] = low[v] = counter++;
      st.push_back(v);
      on[v] = 1;
      for (int w : adj[v]) {
        if (!allowed(w)) continue;
        if (index[w] < 0) {
          dfs(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
      if (low[v] == index[v]) {
        int x;
        do {
          x = st.back();
          st.pop_back();
          on[x] = 0;
          comp[x] = ncomp;
        } while (x != v);
        ++ncomp;
      }
    };
    for (int v = 0; v < n; ++v)
      if (allowed(v) && index[v] < 0) dfs(v);
    for (int v = 0; v < n; ++v) {
      if (!allowed(v) || color[v] != c) continue;
      for (int w : adj[v])
        if (allowed(w) && comp[w] == comp[v]) return true;
    }
  }
  return false;
}

template <typename Succ>
bool lasso_product(int states, int initial, const std::vector<int>& colors, const Word& stem,
                   const Word& loop, Succ succ) {
  if (loop.empty()) throw Error("lasso loop must be nonempty");
  const int len = static_cast<int>(stem.size() + loop.size());
  auto letter = [&](int i) { return i < static_cast<int>(stem.size()) ? stem[i] : loop[i - stem.size()]; };
  auto next_pos = [&](int i) { return i + 1 < len ? i + 1 : static_cast<int>(stem.size()); };
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(states) * len);
  std::vector<int> color(adj.size());
  for (int q = 0; q < states; ++q)
    for (int i = 0; i < len; ++i) {
      int node = q * len + i;
      color[node] = colors[q];
      for (int r : succ(q, letter(i))) adj[node].push_back(r * len + next_pos(i));
    }
  return has_even_cycle(adj, color, initial * len);
}

}  // namespace

bool lasso_accepts(const Npw& a, const Word& stem, const Word& loop) {
  return lasso_product(a.size(), a.initial, a.color, stem, loop,
                       [&](int q, std::uint64_t l) { return a.successors(q, l); });
}

bool lasso_accepts(const Dpw& a, const Word& stem, const Word& loop) {
  std::uint64_t mask = a.num_atoms >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << a.num_atoms) - 1);
  return lasso_product(a.size(), a.initial, a.color, stem, loop, [&](int q, std::uint64_t l) {
    return std::vector<int>{a.next[q][l & mask]};
  });
}

Dpw determinize(const Npw& a, std::size_t cap) {
  if (a.num_atoms() > 16) throw Error("determinize: alphabet too large");
  const std::uint64_t letters = std::uint64_t{1} << a.num_atoms();
  ParityLayers layers(a.color);
  const int max_names = std::max(1, layers.size());

  Dpw d;
  d.num_atoms = a.num_atoms();
  std::unordered_map<std::string, int> ids;
  std::vector<SafraTree> trees;
  auto intern = [&](SafraTree t, int color) {
    std::string key = std::to_string(color) + "|" + t.key();
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    if (trees.size() >= cap) throw ResourceError("determinize", "word automaton", trees.size());
    int id = static_cast<int>(trees.size());
    ids.emplace(std::move(key), id);
    trees.push_back(std::move(t));
    d.color.push_back(color);
    d.next.emplace_back();
    return id;
  };
  std::vector<int> init;
  layers.enter(a.initial, init);
  d.initial = intern(safra_initial(init), 0);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::uint64_t l = 0; l < letters; ++l) {
      int p;
      SafraTree next = safra_step(
          trees[i],
          [&](int s, std::vector<int>& out) { layers.lift(s, a.successors(layers.state_of(s), l), out); },
          [&](int s) { return layers.accepting(s); }, max_names, p);
      int c = next.empty() ? 1 : safra_color(p, max_names);
      int target = intern(std::move(next), c);
      d.next[i].push_back(target);
    }
  }
  return d;
}

Npw dpw_as_npw(const Dpw& d) {
  Npw a;
  for (int i = 0; i < d.num_atoms; ++i) a.atom_names.push_back("a" + std::to_string(i));
  a.initial = d.initial;
  a.color = d.color;
  a.edges.resize(d.size());
  std::uint64_t all = d.num_atoms >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << d.num_atoms) - 1);
  for (int q = 0; q < d.size(); ++q)
    for (std::uint64_t l = 0; l < d.next[q].size(); ++l)
      a.edges[q].push_back({Cube{l, all & ~l}, d.next[q][l]});
  return a;
}

namespace {

std::string cube_string(const Cube& c, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size() && i < 64; ++i) {
    if ((c.pos >> i) & 1U) out += (out.empty() ? "" : " & ") + names[i];
    if ((c.neg >> i) & 1U) out += (out.empty() ? "!" : " & !") + names[i];
  }
  return out.empty() ? "true" : out;
}

}  // namespace

std::string dump(const Npw& a) {
  std::ostringstream out;
  out << "npw states=" << a.size() << " initial=" << a.initial << "\n";
  for (int q = 0; q < a.size(); ++q) {
    out << "  q" << q << " color=" << a.color[q] << "\n";
    for (const auto& e : a.edges[q])
      out << "    [" << cube_string(e.guard, a.atom_names) << "] -> q" << e.to << "\n";
  }
  return out.str();
}

std::string dump(const Dpw& a) {
  std::ostringstream out;
  out << "dpw states=" << a.size() << " initial=" << a.initial << "\n";
  for (int q = 0; q < a.size(); ++q) {
    out << "  q" << q << " color=" << a.color[q] << " :";
    for (int t : a.next[q]) out << " q" << t;
    out << "\n";
  }
  return out.str();
}

}  // namespace hiersl
