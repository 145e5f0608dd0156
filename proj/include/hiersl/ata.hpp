#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hiersl/pbf.hpp"
#include "hiersl/tree.hpp"

namespace hiersl {

struct AtaState {
  int color = 0;
  std::uint64_t support = 0;  // letter bits the transition depends on
  std::vector<int> delta;     // indexed by the letter compressed to `support`
  std::string name;
};

/// Alternating parity tree automaton on (aps, dirs)-trees.  Letters are
/// bitmasks over `aps`.  Transitions are formulas of `pbf`; state q's
/// transition on letter a is delta[compress(a, support)].
struct Ata {
  std::vector<std::string> aps;
  DirectionSpace dirs;
  PbfArena pbf;
  std::vector<AtaState> states;
  int initial = 0;
  std::vector<int> roots;  // further entry states kept by trimming and reduction

  int size() const { return static_cast<int>(states.size()); }
  int add_state(int color, std::string name = {});
  /// Fills the transition table of q by evaluating `f` on every letter over `support`.
  void set_transition(int q, std::uint64_t support, const std::function<int(std::uint64_t)>& f);
  void set_constant_transition(int q, int formula) {
    set_transition(q, 0, [&](std::uint64_t) { return formula; });
  }
  int transition(int q, std::uint64_t letter) const;
  int ap_index(const std::string& p) const;  // -1 if absent
};

std::uint64_t compress_bits(std::uint64_t x, std::uint64_t mask);
std::uint64_t expand_bits(std::uint64_t x, std::uint64_t mask);

/// Largest transition table an automaton may build.
constexpr int kMaxSupportBits = 20;

/// Copies every state of `src` into `dst` (dualized if asked), mapping
/// directions through `dir_map` (identity if empty).  Returns the offset
/// of the copied states.  Both automata must share `aps`.
int embed_ata(Ata& dst, const Ata& src, bool dual, const std::vector<int>& dir_map = {});

/// Keeps the states reachable from the initial state and the roots.
Ata trim_ata(const Ata& a);

/// Quotient by the coarsest bisimulation respecting colors (trimmed first).
Ata reduce_ata(const Ata& a);

/// Recolors every strongly connected component of the state graph to the
/// fewest colors with the same order and parity within it; states on no
/// cycle get color 0.  The language is unchanged.
void normalize_colors(Ata& a);

/// Successors of every state over all letters, as a sorted list.
std::vector<std::vector<int>> state_graph(const Ata& a);

/// Component id per state in reverse topological order, and whether each
/// component contains a cycle.
std::vector<int> state_sccs(const std::vector<std::vector<int>>& graph, std::vector<char>& cyclic);

/// Renumbers colors to a dense range keeping order and parity.
void compress_colors(Ata& a);

/// Single-state automata accepting every or no tree.
Ata constant_ata(bool accept, std::vector<std::string> aps, DirectionSpace dirs);

std::string dump(const Ata& a);

}  // namespace hiersl
