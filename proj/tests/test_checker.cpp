#include "doctest.h"

#include "hiersl/oracles.hpp"
#include "hiersl/pipeline.hpp"
#include "hiersl/qctl_mc.hpp"
#include "support.hpp"

using namespace hiersl;

namespace {

bool holds(const Cks& k, const std::string& text) { return model_check_qctl(k, parse_qctl(text)); }

}  // namespace

TEST_CASE("quantifier-free formulas agree with the CTL* oracle") {
  test::Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    Cks k = gen::random_cks(rng, gen::uniform(rng, 2, 6), gen::uniform(rng, 1, 3), 2, {"p", "q"});
    Qctl phi = gen::random_ctl_star(rng, {"p", "q"}, gen::uniform(rng, 1, 3));
    CAPTURE(to_string(phi));
    CHECK(model_check_qctl(k, phi) == oracle::ctl_star_holds(k, phi, k.initial));
  }
}

TEST_CASE("every root of a shared automaton") {
  test::Rng rng(32);
  for (int i = 0; i < 20; ++i) {
    Cks k = gen::random_cks(rng, gen::uniform(rng, 2, 6), 2, 2, {"p", "q"});
    Qctl phi = gen::random_ctl_star(rng, {"p", "q"}, 2);
    QctlAutomata aut(k, phi);
    CHECK(aut.family(phi).roots.size() == static_cast<std::size_t>(k.num_states()));
    std::vector<bool> expected = oracle::ctl_star_states(k, phi);
    for (int s = 0; s < k.num_states(); ++s) {
      CAPTURE(to_string(phi));
      CHECK(aut.holds_at(s) == expected[s]);
    }
  }
}

TEST_CASE("observation-dependent labellings on the binary tree") {
  Cks k = test::load_fixture("binary.json").cks;
  CHECK(holds(k, "exists p:{1}. (E X p & E X !p)"));
  CHECK_FALSE(holds(k, "exists p:{}. (E X p & E X !p)"));
  CHECK(holds(k, "forall p:{}. (A X p | A X !p)"));
  CHECK(holds(k, "exists p:{1}. A G (p <-> q)"));
  CHECK_FALSE(holds(k, "exists p:{}. A G (p <-> q)"));
  CHECK(holds(k, "exists p:{}. (A F p & A G (p -> A X A G !p))"));
  CHECK_FALSE(holds(k, "exists p:{}. ((A F p & A G (p -> A X A G !p)) & E X p & E X !p)"));
  CHECK(holds(k, "!q & exists q:{1}. (E X q & E X !q)"));
}

TEST_CASE("non-hierarchical formulas are refused") {
  Cks k = test::load_fixture("binary.json").cks;
  Qctl phi = parse_qctl("exists p:{1}. A G exists r:{}. (p | r)");
  CHECK_THROWS_AS(model_check_qctl(k, phi), RefusedError);
  RunReport r = check_qctl(k, phi);
  CHECK(r.verdict == Verdict::Refused);
  CHECK(r.witness.find("p") != std::string::npos);
  CHECK(exit_code(r.verdict) == 2);
}

TEST_CASE("stage statistics and resource reports") {
  Cks k = test::load_fixture("binary.json").cks;
  McStats stats;
  CHECK(model_check_qctl(k, parse_qctl(test::fixture_text("ligne.qctl")), {}, &stats));
  REQUIRE_FALSE(stats.stages.empty());
  bool saw_exists = false;
  for (const StageStat& s : stats.stages) {
    saw_exists = saw_exists || s.stage == "exists";
    CHECK(s.millis >= 0);
  }
  CHECK(saw_exists);
  CHECK(stats.game_vertices > 0);
  RunOptions tight;
  tight.cap = 2;
  RunReport r = check_qctl(k, parse_qctl(test::fixture_text("ligne.qctl")), tight);
  CHECK(r.verdict == Verdict::Resource);
  CHECK(exit_code(r.verdict) == 3);
  CHECK_FALSE(r.resource_subformula.empty());
  CHECK(format_report(r, false).rfind("RESOURCE", 0) == 0);
}

TEST_CASE("dead-state pruning does not change verdicts") {
  Cgsi g = test::load_fixture("security_levels.json").game;
  Sli phi = parse_sli(test::fixture_text("security_levels.sli"));
  RunOptions off;
  off.prune_dead_states = false;
  CHECK(check_sli(g, phi).verdict == Verdict::True);
  CHECK(check_sli(g, phi, off).verdict == Verdict::True);
  test::Rng rng(33);
  for (int i = 0; i < 10; ++i) {
    Cgsi r = gen::random_game(rng, {});
    Sli f = test::controller_formula(r, {0}, "id", i % 2 ? oracle::Objective::Safe : oracle::Objective::Reach);
    CHECK(check_sli(r, f).verdict == check_sli(r, f, off).verdict);
  }
}

TEST_CASE("strategy logic verdicts") {
  Cgsi g = test::load_fixture("coordination.json").game;
  CHECK(check_sli(g, parse_sli("<<x:blind>> (a1,x)(a2,x) F met")).verdict == Verdict::True);
  CHECK(check_sli(g, parse_sli("<<x:blind>> [[y:id]] (a1,x)(a2,y) F met")).verdict == Verdict::False);
  CHECK(check_sli(g, parse_sli("[[y:blind]] <<x:id>> (a1,x)(a2,y) F met")).verdict == Verdict::True);
  CHECK(check_sli(g, parse_sli("<<x:blind>> (a1,x)(a2,x) X X !met")).verdict == Verdict::False);
  Cgsi p = test::load_fixture("pennies.json").game;
  CHECK(check_sli(p, parse_sli("[[x:id]] <<y:id>> (a1,x)(a2,y) F differ")).verdict == Verdict::True);
  CHECK(check_sli(p, parse_sli("<<y:id>> [[x:id]] (a1,x)(a2,y) F differ")).verdict == Verdict::False);
}
