#include "hiersl/ata.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <unordered_map>

namespace hiersl {

std::uint64_t compress_bits(std::uint64_t x, std::uint64_t mask) {
  std::uint64_t out = 0;
  int k = 0;
  while (mask) {
    std::uint64_t low = mask & (~mask + 1);
    if (x & low) out |= std::uint64_t{1} << k;
    ++k;
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t expand_bits(std::uint64_t x, std::uint64_t mask) {
  std::uint64_t out = 0;
  int k = 0;
  while (mask) {
    std::uint64_t low = mask & (~mask + 1);
    if ((x >> k) & 1U) out |= low;
    ++k;
    mask &= mask - 1;
  }
  return out;
}

int Ata::add_state(int color, std::string name) {
  AtaState s;
  s.color = color;
  s.name = std::move(name);
  s.delta.assign(1, PbfArena::kFalse);
  states.push_back(std::move(s));
  return size() - 1;
}

void Ata::set_transition(int q, std::uint64_t support, const std::function<int(std::uint64_t)>& f) {
  int bits = std::popcount(support);
  if (bits > kMaxSupportBits)
    throw ResourceError("transition table", "state " + std::to_string(q), std::size_t{1} << bits);
  std::vector<int> table(std::size_t{1} << bits);
  for (std::uint64_t i = 0; i < table.size(); ++i) table[i] = f(expand_bits(i, support));
  // Drop letters the transition does not actually depend on.
  std::uint64_t needed = 0;
  for (int b = 0; b < bits; ++b) {
    for (std::uint64_t i = 0; i < table.size(); ++i)
      if (!((i >> b) & 1U) && table[i] != table[i | (std::uint64_t{1} << b)]) {
        needed |= std::uint64_t{1} << b;
        break;
      }
  }
  if (needed != (table.size() - 1)) {
    std::uint64_t new_support = expand_bits(needed, support);
    std::vector<int> small(std::size_t{1} << std::popcount(new_support));
    for (std::uint64_t i = 0; i < small.size(); ++i)
      small[i] = table[compress_bits(expand_bits(i, new_support), support)];
    support = new_support;
    table = std::move(small);
  }
  states[q].support = support;
  states[q].delta = std::move(table);
}

int Ata::transition(int q, std::uint64_t letter) const {
  const AtaState& s = states[q];
  return s.delta[compress_bits(letter, s.support)];
}

int Ata::ap_index(const std::string& p) const {
  auto it = std::find(aps.begin(), aps.end(), p);
  return it == aps.end() ? -1 : static_cast<int>(it - aps.begin());
}

int embed_ata(Ata& dst, const Ata& src, bool dual, const std::vector<int>& dir_map) {
  if (dst.aps != src.aps) throw Error("automata over different propositions");
  const int offset = dst.size();
  for (const auto& s : src.states) {
    AtaState t;
    t.color = dual ? s.color + 1 : s.color;
    t.name = dual ? "~" + s.name : s.name;
    dst.states.push_back(std::move(t));
  }
  std::unordered_map<int, int> memo;
  auto map_atom = [&](int d, int q) { return dst.pbf.atom(dir_map.empty() ? d : dir_map[d], q + offset); };
  for (int q = 0; q < src.size(); ++q) {
    AtaState& t = dst.states[offset + q];
    t.support = src.states[q].support;
    t.delta.clear();
    for (int f : src.states[q].delta) t.delta.push_back(dst.pbf.import(src.pbf, f, map_atom, dual, memo));
  }
  return offset;
}

Ata trim_ata(const Ata& a) {
  std::vector<int> id(a.size(), -1);
  std::vector<int> order;
  auto visit = [&](int q) {
    if (id[q] < 0) {
      id[q] = static_cast<int>(order.size());
      order.push_back(q);
    }
  };
  visit(a.initial);
  for (int r : a.roots) visit(r);
  std::vector<PbfAtom> atoms;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int f : a.states[order[i]].delta) {
      atoms.clear();
      a.pbf.atoms_of(f, atoms);
      for (auto [d, q] : atoms) visit(q);
    }
  }
  Ata out;
  out.aps = a.aps;
  out.dirs = a.dirs;
  std::unordered_map<int, int> memo;
  auto map_atom = [&](int d, int q) { return out.pbf.atom(d, id[q]); };
  for (int q : order) {
    AtaState t;
    t.color = a.states[q].color;
    t.name = a.states[q].name;
    t.support = a.states[q].support;
    for (int f : a.states[q].delta) t.delta.push_back(out.pbf.import(a.pbf, f, map_atom, false, memo));
    out.states.push_back(std::move(t));
  }
  out.initial = 0;
  for (int r : a.roots) out.roots.push_back(id[r]);
  return out;
}

Ata reduce_ata(const Ata& input) {
  Ata a = trim_ata(input);
  const int n = a.size();
  std::vector<int> cls(n);
  {
    std::map<int, int> by_color;
    for (int q = 0; q < n; ++q) cls[q] = by_color.emplace(a.states[q].color, by_color.size()).first->second;
  }
  for (;;) {
    PbfArena scratch;
    std::unordered_map<int, int> memo;
    auto map_atom = [&](int d, int q) { return scratch.atom(d, cls[q]); };
    std::map<std::vector<std::int64_t>, int> sig_ids;
    std::vector<int> next(n);
    for (int q = 0; q < n; ++q) {
      const AtaState& s = a.states[q];
      std::vector<std::int64_t> sig{cls[q], static_cast<std::int64_t>(s.support)};
      for (int f : s.delta) sig.push_back(scratch.import(a.pbf, f, map_atom, false, memo));
      next[q] = sig_ids.emplace(std::move(sig), sig_ids.size()).first->second;
    }
    bool stable = sig_ids.size() == static_cast<std::size_t>(*std::max_element(cls.begin(), cls.end()) + 1);
    cls = std::move(next);
    if (stable) break;
  }
  const int k = *std::max_element(cls.begin(), cls.end()) + 1;
  if (k == n) return a;
  Ata out;
  out.aps = a.aps;
  out.dirs = a.dirs;
  std::vector<int> rep(k, -1);
  for (int q = 0; q < n; ++q)
    if (rep[cls[q]] < 0) rep[cls[q]] = q;
  std::unordered_map<int, int> memo;
  auto map_atom = [&](int d, int q) { return out.pbf.atom(d, cls[q]); };
  for (int c = 0; c < k; ++c) {
    const AtaState& s = a.states[rep[c]];
    AtaState t;
    t.color = s.color;
    t.name = s.name;
    t.support = s.support;
    for (int f : s.delta) t.delta.push_back(out.pbf.import(a.pbf, f, map_atom, false, memo));
    out.states.push_back(std::move(t));
  }
  out.initial = cls[a.initial];
  for (int r : a.roots) out.roots.push_back(cls[r]);
  return out;
}

std::vector<std::vector<int>> state_graph(const Ata& a) {
  std::vector<std::vector<int>> g(a.size());
  std::vector<PbfAtom> atoms;
  for (int q = 0; q < a.size(); ++q) {
    for (int f : a.states[q].delta) {
      atoms.clear();
      a.pbf.atoms_of(f, atoms);
      for (auto [d, q2] : atoms) g[q].push_back(q2);
    }
    std::sort(g[q].begin(), g[q].end());
    g[q].erase(std::unique(g[q].begin(), g[q].end()), g[q].end());
  }
  return g;
}

std::vector<int> state_sccs(const std::vector<std::vector<int>>& g, std::vector<char>& cyclic) {
  // Iterative Tarjan.
  const int n = static_cast<int>(g.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on(n, 0);
  int counter = 0, ncomp = 0;
  cyclic.clear();
  std::vector<std::pair<int, std::size_t>> call;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on[v] = 1;
      }
      if (i < g[v].size()) {
        int w = g[v][i++];
        if (index[w] < 0) {
          call.push_back({w, 0});
        } else if (on[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        bool cyc = false;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on[w] = 0;
          comp[w] = ncomp;
          if (w != v) cyc = true;
        } while (w != v);
        if (std::binary_search(g[v].begin(), g[v].end(), v)) cyc = true;
        cyclic.push_back(cyc);
        ++ncomp;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

void normalize_colors(Ata& a) {
  std::vector<char> cyclic;
  std::vector<int> comp = state_sccs(state_graph(a), cyclic);
  std::vector<std::vector<int>> colors(cyclic.size());
  for (int q = 0; q < a.size(); ++q) colors[comp[q]].push_back(a.states[q].color);
  std::vector<std::map<int, int>> remap(cyclic.size());
  for (std::size_t c = 0; c < cyclic.size(); ++c) {
    auto& cs = colors[c];
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    int next = cs.front() % 2;
    for (int x : cs) {
      if ((next % 2) != (x % 2)) ++next;
      remap[c][x] = next;
    }
  }
  for (int q = 0; q < a.size(); ++q)
    a.states[q].color = cyclic[comp[q]] ? remap[comp[q]][a.states[q].color] : 0;
}

void compress_colors(Ata& a) {
  std::vector<int> colors;
  for (const auto& s : a.states) colors.push_back(s.color);
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  std::map<int, int> remap;
  int next = 0;
  for (int c : colors) {
    if ((next % 2) != (c % 2)) ++next;
    remap[c] = next;
  }
  for (auto& s : a.states) s.color = remap[s.color];
}

Ata constant_ata(bool accept, std::vector<std::string> aps, DirectionSpace dirs) {
  Ata a;
  a.aps = std::move(aps);
  a.dirs = std::move(dirs);
  int q = a.add_state(accept ? 0 : 1, accept ? "top" : "bot");
  a.set_constant_transition(q, accept ? PbfArena::kTrue : PbfArena::kFalse);
  return a;
}

std::string dump(const Ata& a) {
  std::ostringstream out;
  out << "ata states=" << a.size() << " initial=q" << a.initial;
  if (!a.roots.empty()) {
    out << " roots=";
    for (std::size_t i = 0; i < a.roots.size(); ++i) out << (i ? "," : "") << "q" << a.roots[i];
  }
  out << " dirs="
      << index_set_to_string(a.dirs.dims) << " |X|=" << a.dirs.size() << " aps={";
  for (std::size_t i = 0; i < a.aps.size(); ++i) out << (i ? "," : "") << a.aps[i];
  out << "}\n";
  auto dname = [&](int d) { return a.dirs.direction_name(d); };
  for (int q = 0; q < a.size(); ++q) {
    const AtaState& s = a.states[q];
    out << "  q" << q << " color=" << s.color;
    if (!s.name.empty()) out << " name=" << s.name;
    out << "\n";
    for (std::uint64_t i = 0; i < s.delta.size(); ++i) {
      std::uint64_t letter = expand_bits(i, s.support);
      out << "    {";
      bool first = true;
      for (std::size_t b = 0; b < a.aps.size(); ++b)
        if ((s.support >> b) & 1U) {
          out << (first ? "" : ",") << (((letter >> b) & 1U) ? "" : "!") << a.aps[b];
          first = false;
        }
      out << "} -> " << a.pbf.to_string(s.delta[i], dname) << "\n";
    }
  }
  return out.str();
}

}  // namespace hiersl
