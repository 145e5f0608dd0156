#include "doctest.h"

#include "hiersl/qctl.hpp"
#include "hiersl/sli.hpp"
#include "support.hpp"

using namespace hiersl;

TEST_CASE("sli parser desugars derived operators") {
  Sli f = parse_sli("<<x:o>> [[y:id]] (a,x)(b,y) (F p & G !q)");
  CHECK(f->kind == SliKind::Exists);
  CHECK(f->name == "x");
  CHECK(f->observation == "o");
  const Sli& forall = f->children[0];
  CHECK(forall->kind == SliKind::Not);
  CHECK(forall->children[0]->kind == SliKind::Exists);
  CHECK(forall->children[0]->observation == "id");
  CHECK(structurally_equal(parse_sli("F p"), sli_until(sli_true(), sli_atom("p"))));
  CHECK(structurally_equal(parse_sli("p -> q"), sli_or(sli_not(sli_atom("p")), sli_atom("q"))));
}

TEST_CASE("sli printing round-trips") {
  for (const char* text : {"<<x:o1>> (a,x) X (p U !q)", "[[x:o]] <<y:o>> (a,x)(b,y) G F p",
                           "!(p | q) & X X true", "<<x:o>> (a,x) ((a,x) F p -> G q)"}) {
    Sli f = parse_sli(text);
    CAPTURE(text);
    CHECK(structurally_equal(parse_sli(to_string(f)), f));
  }
}

TEST_CASE("sli parse errors carry positions") {
  try {
    parse_sli("<<x:o>> (a,x) F (p &");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.span.line == 1);
    CHECK(e.span.column == 21);
  }
  CHECK_THROWS_AS(parse_sli("<<x>> F p"), ParseError);
  SliSignature sig{{"p"}, {"a"}, {}, {"o"}};
  CHECK_THROWS_AS(parse_sli("<<x:o>> (a,x) F r", &sig), ParseError);
  CHECK_THROWS_AS(parse_sli("<<x:o>> (b,x) F p", &sig), ParseError);
  CHECK_THROWS_AS(parse_sli("<<x:o2>> (a,x) F p", &sig), ParseError);
}

TEST_CASE("free variables and agents") {
  const std::vector<std::string> agents{"a", "b"};
  CHECK(is_sentence(parse_sli("<<x:o>> (a,x)(b,x) F p"), agents));
  FreeSet fs = free_symbols(parse_sli("<<x:o>> (a,x)(b,y) F p"), agents);
  CHECK(fs.variables == std::set<std::string>{"y"});
  CHECK(fs.agents.empty());
  fs = free_symbols(parse_sli("<<x:o>> (a,x) F p"), agents);
  CHECK(fs.agents == std::set<std::string>{"b"});
  CHECK(free_symbols(parse_sli("p | !q"), agents).empty());
}

TEST_CASE("hierarchy check on a three-level game") {
  Cgsi g = test::load_fixture("security_levels.json").game;
  CHECK(is_hierarchical_instance(parse_sli(test::fixture_text("security_levels.sli")), g).hierarchical);
  HierarchyReport bad = is_hierarchical_instance(parse_sli(test::fixture_text("security_levels_swapped.sli")), g);
  REQUIRE_FALSE(bad.hierarchical);
  REQUIRE(bad.witness);
  CHECK(bad.witness->first.variable == "x3");
  CHECK(bad.witness->first.observation == "o3");
  CHECK(bad.witness->second.variable == "x2");
  CHECK(bad.witness->second.observation == "o2");
  CHECK(bad.witness->second.span.column == 21);
  CHECK(is_hierarchical_instance(parse_sli("<<x:o1>> (a1,x)(a2,x)(a3,x) F p"), g).hierarchical);
  CHECK_FALSE(is_hierarchical_instance(parse_sli("<<x:o2>> (a1,x) [[y:o1]] (a2,y)(a3,y) F p"), g).hierarchical);
  CHECK_THROWS(is_hierarchical_instance(parse_sli("<<x:nope>> (a1,x)(a2,x)(a3,x) F p"), g));
  std::vector<QuantifierRef> qs = quantifiers(parse_sli(test::fixture_text("security_levels.sli")));
  REQUIRE(qs.size() == 3);
  CHECK(qs[0].variable == "x1");
  CHECK(qs[2].observation == "o3");
}

TEST_CASE("nash formula shape") {
  Sli ne = build_nash_formula({"a", "b"}, {parse_sli("F p"), parse_sli("G q")}, {"o", "o"}, {"id", "id"});
  std::vector<QuantifierRef> qs = quantifiers(ne);
  REQUIRE(qs.size() == 4);
  CHECK(qs[0].variable == "x1");
  CHECK(qs[1].variable == "x2");
  CHECK(qs[2].observation == "id");
  CHECK(is_sentence(ne, {"a", "b"}));
}

TEST_CASE("qctl parser and printer") {
  Qctl f = parse_qctl("exists p:{1,2}. A G (p -> E X !p)");
  CHECK(f->kind == QKind::Exists);
  CHECK(f->obs == IndexSet{1, 2});
  CHECK(structurally_equal(parse_qctl(to_string(f)), f));
  CHECK(ap_quantified(f) == std::set<std::string>{"p"});
  CHECK(ap_free(f).empty());
  CHECK_THROWS_AS(parse_qctl("X p"), ParseError);
  QctlSignature sig{{"q"}, 2};
  CHECK_THROWS_AS(parse_qctl("exists p:{3}. q", &sig), ParseError);
  CHECK_THROWS_AS(parse_qctl("r", &sig), ParseError);
  CHECK_NOTHROW(parse_qctl("exists p:{2}. p & q", &sig));
}

TEST_CASE("qctl hierarchy and proposition splitting") {
  CHECK(is_hierarchical_qctl(parse_qctl("exists p:{1}. exists r:{1,2}. E G (p | r)")));
  QctlHierarchyReport bad = check_hierarchical_qctl(parse_qctl("exists p:{1,2}. A G exists r:{1}. (p | r)"));
  REQUIRE_FALSE(bad.hierarchical);
  CHECK(bad.witness->first->prop == "p");
  CHECK(bad.witness->second->prop == "r");
  Qctl shadow = parse_qctl("p & exists p:{}. (p & exists p:{1}. !p)");
  Qctl split = split_props(shadow, {"p_1"});
  CHECK(ap_free(split) == std::set<std::string>{"p"});
  CHECK(ap_quantified(split).size() == 2);
  CHECK(ap_quantified(split).count("p") == 0);
  CHECK(ap_quantified(split).count("p_1") == 0);
  CHECK(observation_index(parse_qctl("exists p:{1,2}. exists r:{2,3}. p"), 3) == IndexSet{2});
  CHECK(observation_index(parse_qctl("q"), 3) == IndexSet{1, 2, 3});
}

TEST_CASE("state subformulas of a path formula") {
  Qctl path = parse_qctl("E (p U (!E X q & r))")->children[0];
  std::vector<Qctl> maxs = max_state_subformulas(path);
  REQUIRE(maxs.size() == 2);
  CHECK(to_string(maxs[0]) == "p");
  std::vector<Qctl> leaves = leaf_state_subformulas(path);
  REQUIRE(leaves.size() == 3);
  CHECK(leaves[1]->kind == QKind::E);
}
