#pragma once

#include <vector>

namespace hiersl {

enum Player : int { kEve = 0, kAdam = 1 };

/// Finite two-player max-even parity game: Eve wins a play iff the maximal
/// color seen infinitely often is even.  Every vertex needs a successor.
struct ParityGame {
  std::vector<int> owner;
  std::vector<int> color;
  std::vector<std::vector<int>> succ;

  int size() const { return static_cast<int>(owner.size()); }
  int add_vertex(int who, int col) {
    owner.push_back(who);
    color.push_back(col);
    succ.emplace_back();
    return size() - 1;
  }
  void add_edge(int from, int to) { succ[from].push_back(to); }
};

struct ParitySolution {
  std::vector<int> winner;    // kEve or kAdam per vertex
  std::vector<int> strategy;  // winning successor for the owner's won vertices, else -1
};

/// Zielonka's recursive algorithm.  Throws Error if some vertex has no successor.
ParitySolution solve_parity(const ParityGame& g);

}  // namespace hiersl
