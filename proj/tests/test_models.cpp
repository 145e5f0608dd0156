#include "doctest.h"

#include <string>

#include "hiersl/model_io.hpp"
#include "hiersl/sl_compiler.hpp"
#include "support.hpp"

using namespace hiersl;

namespace {

const char* kTwoPositions = R"({
  "type": "cgsi",
  "agents": ["a"],
  "actions": ["m0", "m1"],
  "positions": ["u", "w"],
  "initial": "u",
  "propositions": ["p"],
  "labels": {"w": ["p"]},
  "transitions": [
    {"from": "u", "actions": {"a": "m0"}, "to": "u"},
    {"from": "u", "actions": {"a": "m1"}, "to": "w"},
    {"from": "w", "actions": {}, "to": "w"}
  ],
  "observations": {"blind": [["u", "w"]], "id": [["u"], ["w"]]}
})";

std::vector<std::string> problems_of(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ModelError& e) {
    return e.problems;
  }
  return {};
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  s.replace(s.find(from), from.size(), to);
  return s;
}

}  // namespace

TEST_CASE("game parsing") {
  Model m = parse_model(kTwoPositions);
  REQUIRE(m.kind == Model::Kind::Game);
  const Cgsi& g = m.game;
  CHECK(g.num_positions() == 2);
  CHECK(g.succ(0, g.encode_joint({1})) == 1);
  CHECK(g.has_label(1, "p"));
  CHECK_FALSE(g.has_label(0, "p"));
  CHECK(g.finer("id", "blind"));
  CHECK_FALSE(g.finer("blind", "id"));
  CHECK(yields_hierarchical_observation(g));
  Model again = parse_model(cgsi_to_json(g));
  CHECK(again.game.delta == g.delta);
  CHECK(again.game.obs_class == g.obs_class);
}

TEST_CASE("game validation reports every problem") {
  std::string bad = replace(kTwoPositions, R"({"from": "u", "actions": {"a": "m0"}, "to": "u"},)", "");
  bad = replace(bad, R"("initial": "u")", R"("initial": "z")");
  std::vector<std::string> ps = problems_of(bad);
  CHECK(ps.size() >= 2);
  bool missing = false, initial = false;
  for (const std::string& p : ps) {
    missing = missing || p.find("missing transition from u") != std::string::npos;
    initial = initial || p.find("initial") != std::string::npos;
  }
  CHECK(missing);
  CHECK(initial);
  CHECK_FALSE(problems_of(replace(kTwoPositions, R"([["u"], ["w"]])", R"([["u", "w"], ["w"]])")).empty());
  CHECK_FALSE(problems_of(replace(kTwoPositions, R"({"a": "m1"})", R"({"b": "m1"})")).empty());
  CHECK_FALSE(problems_of(replace(kTwoPositions, R"({"a": "m1"}, "to": "w")", R"({"a": "m1"}, "to": "x")")).empty());
  CHECK_THROWS_AS(parse_model("{"), Error);
}

TEST_CASE("kripke parsing and validation") {
  Cks k = test::load_fixture("binary.json").cks;
  CHECK(k.n() == 1);
  CHECK(k.num_states() == 2);
  CHECK(validate_cks(k).empty());
  Cks dead = k;
  dead.succ[1].clear();
  CHECK_FALSE(validate_cks(dead).empty());
  Cks dup = k;
  dup.states[1] = dup.states[0];
  CHECK_FALSE(validate_cks(dup).empty());
  CHECK(parse_model(cks_to_json(k)).cks.succ == k.succ);
}

TEST_CASE("plays and observation equivalence") {
  Cgsi g = parse_model(kTwoPositions).game;
  CHECK(play_valid(g, {0, 0, 1, 1}));
  CHECK_FALSE(play_valid(g, {0, 1, 0}));
  CHECK(play_obs_equiv({0, 0, 1}, {0, 1, 1}, "blind", g));
  CHECK_FALSE(play_obs_equiv({0, 0, 1}, {0, 1, 1}, "id", g));
  CHECK_FALSE(play_obs_equiv({0, 0}, {0, 0, 0}, "blind", g));
}

TEST_CASE("compiled structure") {
  Cgsi g = test::load_fixture("security_levels.json").game;
  Cks k = build_cks(g);
  CHECK(k.n() == static_cast<int>(g.obs_names.size()) + 1);
  CHECK(k.num_states() == g.num_positions());
  CHECK(validate_cks(k).empty());
  CHECK(concrete_obs("o1", g) == IndexSet{1});
  CHECK(concrete_obs("o3", g) == IndexSet{1, 2, 3});
  CompiledInstance ci = compile(parse_sli(test::fixture_text("security_levels.sli")), g);
  CHECK(ci.hierarchy.hierarchical);
  CHECK(is_hierarchical_qctl(ci.formula));
  CHECK(quantifier_count(ci.formula) == 3 * g.actions.size());
  CHECK(ci.formula->state);
  CompiledInstance swapped = compile(parse_sli(test::fixture_text("security_levels_swapped.sli")), g);
  CHECK_FALSE(swapped.hierarchy.hierarchical);
  CHECK_FALSE(is_hierarchical_qctl(swapped.formula));
}

TEST_CASE("compiling a non-sentence is refused") {
  Cgsi g = test::load_fixture("coordination.json").game;
  CHECK_THROWS(compile(parse_sli("<<x:id>> (a1,x) F met"), g));
}
