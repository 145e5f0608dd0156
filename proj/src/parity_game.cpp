#include "hiersl/parity_game.hpp"

#include <algorithm>
#include <deque>

#include "hiersl/common.hpp"

namespace hiersl {

namespace {

class Zielonka {
 public:
  explicit Zielonka(const ParityGame& g) : g_(g), pred_(g.size()) {
    for (int v = 0; v < g.size(); ++v)
      for (int w : g.succ[v]) pred_[w].push_back(v);
  }

  ParitySolution run() {
    const int n = g_.size();
    sol_.winner.assign(n, kAdam);
    sol_.strategy.assign(n, -1);
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    std::vector<char> in(n, 1);
    solve(all, in);
    return sol_;
  }

 private:
  // Attractor of `target` for `who` inside the subgame `in`; writes
  // attractor strategies for `who` into sol_.strategy.
  std::vector<int> attract(const std::vector<int>& sub, const std::vector<char>& in,
                           const std::vector<int>& target, int who, std::vector<char>& mark) {
    std::vector<int> count(g_.size(), 0);
    for (int v : sub) {
      mark[v] = 0;
      int c = 0;
      for (int w : g_.succ[v])
        if (in[w]) ++c;
      count[v] = c;
    }
    std::deque<int> queue;
    std::vector<int> out;
    for (int v : target) {
      mark[v] = 1;
      out.push_back(v);
      queue.push_back(v);
    }
    while (!queue.empty()) {
      int w = queue.front();
      queue.pop_front();
      for (int v : pred_[w]) {
        if (!in[v] || mark[v]) continue;
        if (g_.owner[v] == who) {
          mark[v] = 1;
          sol_.strategy[v] = w;
          out.push_back(v);
          queue.push_back(v);
        } else if (--count[v] == 0) {
          mark[v] = 1;
          out.push_back(v);
          queue.push_back(v);
        }
      }
    }
    return out;
  }

  // Solves the subgame induced by `sub` (in = membership mask); sets
  // winner and strategy for its vertices.
  void solve(const std::vector<int>& sub, std::vector<char>& in) {
    if (sub.empty()) return;
    int d = -1;
    for (int v : sub) d = std::max(d, g_.color[v]);
    const int i = d % 2;
    std::vector<int> top;
    for (int v : sub)
      if (g_.color[v] == d) top.push_back(v);
    std::vector<char> mark(g_.size(), 0);
    std::vector<int> a = attract(sub, in, top, i, mark);
    for (int v : top)
      if (g_.owner[v] == i)
        for (int w : g_.succ[v])
          if (in[w]) {
            sol_.strategy[v] = w;
            break;
          }

    std::vector<int> rest;
    for (int v : sub)
      if (!mark[v]) rest.push_back(v);
    for (int v : a) in[v] = 0;
    solve(rest, in);
    for (int v : a) in[v] = 1;

    std::vector<int> opp;
    for (int v : rest)
      if (sol_.winner[v] != i) opp.push_back(v);
    if (opp.empty()) {
      for (int v : sub) sol_.winner[v] = i;
      return;
    }
    std::vector<char> mark2(g_.size(), 0);
    std::vector<int> b = attract(sub, in, opp, 1 - i, mark2);
    for (int v : b) sol_.winner[v] = 1 - i;
    std::vector<int> rest2;
    for (int v : sub)
      if (!mark2[v]) rest2.push_back(v);
    for (int v : b) in[v] = 0;
    solve(rest2, in);
    for (int v : b) in[v] = 1;
  }

  const ParityGame& g_;
  std::vector<std::vector<int>> pred_;
  ParitySolution sol_;
};

}  // namespace

ParitySolution solve_parity(const ParityGame& g) {
  for (int v = 0; v < g.size(); ++v)
    if (g.succ[v].empty()) throw Error("parity game vertex " + std::to_string(v) + " has no successor");
  ParitySolution sol = Zielonka(g).run();
  for (int v = 0; v < g.size(); ++v)
    if (g.owner[v] != sol.winner[v]) sol.strategy[v] = -1;
  return sol;
}

}  // namespace hiersl
