#include "doctest.h"

#include "hiersl/oracles.hpp"
#include "support.hpp"

using namespace hiersl;
using namespace hiersl::oracle;

TEST_CASE("lasso indexing") {
  Lasso l{{7, 8}, {1, 2, 3}};
  CHECK(l.length() == 5);
  CHECK(l.at(0) == 7);
  CHECK(l.at(2) == 1);
  CHECK(l.at(5) == 1);
  CHECK(l.at(9) == 2);
}

TEST_CASE("outcome of a memoryless profile") {
  Cgsi g = test::load_fixture("coordination.json").game;
  Strategy zero{1, {{0, 0}}, {{0, 0}}, -1};
  Strategy one{1, {{1, 1}}, {{0, 0}}, -1};
  Lasso met = outcome({zero, zero}, {g.initial}, g);
  CHECK(met.at(1) == g.position_index("met"));
  Lasso apart = outcome({zero, one}, {g.initial}, g);
  for (int i = 0; i < 5; ++i) CHECK(apart.at(i) == g.initial);
  CHECK(eval_ltl_on_lasso(parse_sli("F met"), met, g));
  CHECK_FALSE(eval_ltl_on_lasso(parse_sli("F met"), apart, g));
}

TEST_CASE("outcome with memory alternates") {
  Cgsi g = test::load_fixture("coordination.json").game;
  Strategy flip{2, {{0, 0}, {1, 1}}, {{1, 1}, {0, 0}}, -1};
  Strategy zero{1, {{0, 0}}, {{0, 0}}, -1};
  Lasso l = outcome({flip, zero}, {g.initial}, g);
  CHECK(l.at(1) == g.initial);
  CHECK(l.at(2) == g.position_index("met"));
}

TEST_CASE("attractor games") {
  Cgsi g = test::load_fixture("coordination.json").game;
  std::vector<int> met{g.position_index("met")};
  CHECK(attractor_solve(g, {0, 1}, met, Objective::Reach));
  CHECK_FALSE(attractor_solve(g, {0}, met, Objective::Reach));
  std::vector<int> apart{g.position_index("apart")};
  CHECK_FALSE(attractor_solve(g, {0}, apart, Objective::Safe));
  CHECK(attractor_solve(g, {0, 1}, apart, Objective::Safe));
  CHECK(attractor_reach(g, {0, 1}, met));
}

TEST_CASE("knowledge games") {
  Cgsi g = test::load_fixture("blind_choice.json").game;
  std::vector<int> won = test::labelled(g, "won");
  CHECK_FALSE(knowledge_solve(g, "blind", 0, won, Objective::Reach));
  CHECK(knowledge_solve(g, "id", 0, won, Objective::Reach));
  std::vector<int> safe;
  for (int v = 0; v < g.num_positions(); ++v)
    if (g.positions[v] != "sink") safe.push_back(v);
  CHECK_FALSE(knowledge_solve(g, "blind", 0, safe, Objective::Safe));
  CHECK(knowledge_solve(g, "id", 0, safe, Objective::Safe));
}

TEST_CASE("bounded strategy enumeration") {
  Cgsi g = test::load_fixture("security_levels.json").game;
  CHECK(bounded_sli_eval(parse_sli(test::fixture_text("security_levels.sli")), g, 1) == Tri::True);
  Cgsi bc = test::load_fixture("blind_choice.json").game;
  CHECK(bounded_sli_eval(parse_sli(test::fixture_text("blind_choice_blind.sli")), bc, 2) == Tri::False);
  CHECK(bounded_sli_eval(parse_sli(test::fixture_text("blind_choice_id.sli")), bc, 1) == Tri::True);
  Cgsi c = test::load_fixture("coordination.json").game;
  CHECK(bounded_sli_eval(parse_sli("<<x:id>> (a1,x)(a2,x) G <<y:id>> (a1,y) F met"), c, 1) == Tri::Unknown);
  CHECK(bounded_sli_eval(parse_sli("<<x:id>> (a1,x) F met"), c, 1) == Tri::Unknown);
  CHECK(tri_name(Tri::Unknown) == "unknown");
}

TEST_CASE("classical CTL*") {
  Cks k = test::load_fixture("binary.json").cks;
  CHECK(ctl_star_holds(k, parse_qctl("A G (E X q & E X !q)"), 0));
  CHECK(ctl_star_holds(k, parse_qctl("E G F q & E F G !q"), 0));
  CHECK_FALSE(ctl_star_holds(k, parse_qctl("A F q"), 0));
  CHECK(ctl_star_holds(k, parse_qctl("A (G F q -> F q)"), 0));
  CHECK(ctl_star_states(k, parse_qctl("q")) == std::vector<bool>{false, true});
  CHECK_THROWS(ctl_star_holds(k, parse_qctl("exists p:{}. p"), 0));
}

TEST_CASE("positional parity enumeration") {
  CHECK(brute_force_parity({0}, {2}, {{0}}) == std::vector<bool>{true});
  CHECK(brute_force_parity({0}, {1}, {{0}}) == std::vector<bool>{false});
  CHECK(brute_force_parity({0, 1}, {1, 2}, {{0, 1}, {1}}) == std::vector<bool>{true, true});
  CHECK(brute_force_parity({1, 0}, {2, 1}, {{0, 1}, {1}}) == std::vector<bool>{false, false});
}
