#include "doctest.h"

#include <algorithm>

#include "hiersl/oracles.hpp"
#include "hiersl/tree_automata.hpp"
#include "support.hpp"

using namespace hiersl;

namespace {

const std::vector<std::string> kAps{"p", "q"};

std::vector<TreeGen> sample_trees(test::Rng& rng, const DirectionSpace& d, int n) {
  std::vector<TreeGen> ts;
  for (int i = 0; i < n; ++i) ts.push_back(test::random_tree(rng, d, kAps, gen::uniform(rng, 1, 6)));
  return ts;
}

}  // namespace

TEST_CASE("direction spaces") {
  DirectionSpace d = test::grid({2, 3});
  CHECK(d.size() == 6);
  for (int id = 0; id < d.size(); ++id) CHECK(d.encode(d.decode(id)) == id);
  CHECK(d.decode(d.encode({1, 2})) == std::vector<int>{1, 2});
  DirectionSpace sub = d.restrict_to({2});
  CHECK(sub.size() == 3);
  std::vector<int> proj = d.projection_to(sub);
  for (int id = 0; id < d.size(); ++id) CHECK(proj[id] == d.decode(id)[1]);
  DirectionSpace blank = d.restrict_to({});
  CHECK(blank.size() == 1);
}

TEST_CASE("narrowing a widened tree gives it back") {
  test::Rng rng(21);
  DirectionSpace d = test::grid({2, 2});
  for (const TreeGen& t : sample_trees(rng, d.restrict_to({2}), 20)) {
    TreeGen wide = widen_tree(t, d, {1});
    CHECK(wide.complete());
    TreeGen back = narrow_tree(wide, {2});
    auto a = unroll(back, 3), b = unroll(t, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].word == b[i].word);
      CHECK(a[i].label == b[i].label);
    }
  }
}

TEST_CASE("reduction and color normalization preserve the language") {
  test::Rng rng(22);
  DirectionSpace d = test::grid({2});
  for (int i = 0; i < 40; ++i) {
    Ata a = test::random_ata(rng, kAps, d, gen::uniform(rng, 1, 5), 4, false);
    Ata r = reduce_ata(a);
    CHECK(r.size() <= a.size());
    Ata n = a;
    normalize_colors(n);
    for (const TreeGen& t : sample_trees(rng, d, 5)) {
      bool in = membership(a, t);
      CHECK(membership(r, t) == in);
      CHECK(membership(n, t) == in);
    }
  }
}

TEST_CASE("constant automata") {
  DirectionSpace d = test::grid({2});
  TreeGen t = complete_tree(d, kAps, 1, 0);
  CHECK(membership(constant_ata(true, kAps, d), t));
  CHECK_FALSE(membership(constant_ata(false, kAps, d), t));
  CHECK(emptiness(constant_ata(false, kAps, d)).empty);
  EmptinessResult full = emptiness(constant_ata(true, kAps, d));
  CHECK_FALSE(full.empty);
  CHECK(full.witness.has_value());
}

TEST_CASE("emptiness witnesses and empty-state pruning") {
  test::Rng rng(23);
  DirectionSpace d = test::grid({2, 2});
  int nonempty = 0;
  for (int i = 0; i < 40; ++i) {
    Ata n = test::random_ata(rng, kAps, d, gen::uniform(rng, 1, 5), 3, true);
    REQUIRE(is_nta(n));
    EmptinessResult e = emptiness(n);
    if (!e.empty) {
      ++nonempty;
      REQUIRE(e.witness);
      CHECK(membership(n, *e.witness));
    }
    Ata pruned = prune_empty_states(n);
    CHECK(is_nta(pruned));
    for (const TreeGen& t : sample_trees(rng, d, 4)) CHECK(membership(pruned, t) == membership(n, t));
    Ata sim = simulate(test::random_ata(rng, kAps, d, gen::uniform(rng, 1, 3), 3, false));
    EmptinessResult es = emptiness(sim);
    if (!es.empty) CHECK(membership(sim, *es.witness));
  }
  CHECK(nonempty > 0);
}

TEST_CASE("alternation removal honours its cap") {
  test::Rng rng(24);
  DirectionSpace d = test::grid({2, 2});
  Ata a = test::random_ata(rng, kAps, d, 5, 3, false);
  CHECK_THROWS_AS(simulate(a, 1, "probe"), ResourceError);
  try {
    simulate(a, 1, "probe");
  } catch (const ResourceError& e) {
    CHECK(e.subformula == "probe");
  }
}

TEST_CASE("zielonka against positional enumeration") {
  test::Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    ParityGame g = test::random_parity_game(rng, gen::uniform(rng, 1, 7), 5);
    ParitySolution s = solve_parity(g);
    std::vector<bool> eve = oracle::brute_force_parity(g.owner, g.color, g.succ);
    for (int v = 0; v < g.size(); ++v) {
      CHECK((s.winner[v] == kEve) == eve[v]);
      if (s.winner[v] == g.owner[v]) {
        const auto& out = g.succ[v];
        CHECK(std::find(out.begin(), out.end(), s.strategy[v]) != out.end());
        CHECK(s.winner[s.strategy[v]] == s.winner[v]);
      }
    }
  }
  ParityGame stuck;
  stuck.add_vertex(kEve, 0);
  CHECK_THROWS_AS(solve_parity(stuck), Error);
}
