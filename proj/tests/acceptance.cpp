// Acceptance suite: one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hiersl/pipeline.hpp"
#include "hiersl/sl_compiler.hpp"
#include "hiersl/tree_automata.hpp"
#include "support.hpp"

using namespace hiersl;
using namespace hiersl::test;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

constexpr int kA2Games = 50;
constexpr int kA3Games = 30;
constexpr int kA4Structures = 50;
constexpr int kA5Cases = 30;

Sli load_formula(const Cgsi& g, const std::string& file) {
  SliSignature sig{g.propositions, g.agents, {}, g.obs_names};
  return parse_sli(fixture_text(file), &sig);
}

Outcome a1_security_levels() {
  Outcome o;
  Cgsi g = load_fixture("security_levels.json").game;
  RunReport ok = check_sli(g, load_formula(g, "security_levels.sli"));
  o.require(ok.verdict == Verdict::True, "hierarchical ordering gave " + verdict_name(ok.verdict));
  RunReport bad = check_sli(g, load_formula(g, "security_levels_swapped.sli"));
  o.require(bad.verdict == Verdict::Refused, "swapped ordering gave " + verdict_name(bad.verdict));
  const std::string& w = bad.witness;
  std::size_t outer = w.find("x3:o3"), inner = w.find("x2:o2");
  o.require(outer != std::string::npos && inner != std::string::npos,
            "witness does not name <<x3:o3>> and <<x2:o2>>: " + w);
  if (o.pass) o.detail = "TRUE in " + std::to_string(static_cast<int>(ok.millis)) + " ms; refused: " + w;
  return o;
}

Outcome a2_perfect_information() {
  Outcome o;
  Rng rng(2002);
  int agree = 0, holds = 0;
  for (int i = 0; i < kA2Games; ++i) {
    gen::GameShape shape;
    Cgsi g = gen::random_game(rng, shape);
    oracle::Objective mode = i % 2 ? oracle::Objective::Safe : oracle::Objective::Reach;
    std::vector<int> controllers = i % 3 == 2 ? std::vector<int>{0, 1} : std::vector<int>{0};
    Sli phi = controller_formula(g, controllers, "id", mode);
    bool expected = oracle::attractor_solve(g, controllers, labelled(g, "t"), mode);
    RunReport r = check_sli(g, phi);
    bool same = r.verdict == (expected ? Verdict::True : Verdict::False);
    o.require(same, "game " + std::to_string(i) + ": " + to_string(phi) + " gave " + verdict_name(r.verdict) +
                        ", attractor says " + (expected ? "TRUE" : "FALSE") + "\n" + cgsi_to_json(g));
    agree += same;
    holds += expected;
  }
  if (o.pass)
    o.detail = std::to_string(agree) + "/" + std::to_string(kA2Games) + " agree with the attractor (" +
               std::to_string(holds) + " TRUE)";
  return o;
}

Outcome a3_partial_observation() {
  Outcome o;
  Rng rng(3003);
  int agree = 0, holds = 0;
  for (int i = 0; i < kA3Games; ++i) {
    gen::GameShape shape;
    shape.partial_observation = true;
    Cgsi g = gen::random_game(rng, shape);
    oracle::Objective mode = i % 2 ? oracle::Objective::Safe : oracle::Objective::Reach;
    Sli phi = controller_formula(g, {0}, "o", mode);
    bool expected = oracle::knowledge_solve(g, "o", 0, labelled(g, "t"), mode);
    RunReport r = check_sli(g, phi);
    bool same = r.verdict == (expected ? Verdict::True : Verdict::False);
    o.require(same, "game " + std::to_string(i) + ": " + to_string(phi) + " gave " + verdict_name(r.verdict) +
                        ", knowledge game says " + (expected ? "TRUE" : "FALSE") + "\n" + cgsi_to_json(g));
    agree += same;
    holds += expected;
  }
  Cgsi bc = load_fixture("blind_choice.json").game;
  RunReport blind = check_sli(bc, load_formula(bc, "blind_choice_blind.sli"));
  RunReport seeing = check_sli(bc, load_formula(bc, "blind_choice_id.sli"));
  o.require(blind.verdict == Verdict::False, "blind choice under the blind observation gave " +
                                                 verdict_name(blind.verdict));
  o.require(seeing.verdict == Verdict::True, "blind choice under the identity gave " + verdict_name(seeing.verdict));
  if (o.pass)
    o.detail = std::to_string(agree) + "/" + std::to_string(kA3Games) + " agree with the knowledge game (" +
               std::to_string(holds) + " TRUE); blind choice FALSE blind, TRUE with identity";
  return o;
}

Outcome a4_qctl() {
  Outcome o;
  Cks bin = load_fixture("binary.json").cks;
  QctlSignature sig{{"q"}, bin.n()};
  RunReport ligne = check_qctl(bin, parse_qctl(fixture_text("ligne.qctl"), &sig));
  o.require(ligne.verdict == Verdict::True, "ligne gave " + verdict_name(ligne.verdict));
  Rng rng(4004);
  int agree = 0, holds = 0;
  for (int i = 0; i < kA4Structures; ++i) {
    Cks k = gen::random_cks(rng, gen::uniform(rng, 2, 5), 2, 2, {"p", "q"});
    Qctl phi = gen::random_ctl_star(rng, {"p", "q"}, 3);
    bool expected = oracle::ctl_star_holds(k, phi, k.initial);
    RunReport r = check_qctl(k, phi);
    bool same = r.verdict == (expected ? Verdict::True : Verdict::False);
    o.require(same, "structure " + std::to_string(i) + ": " + to_string(phi) + " gave " + verdict_name(r.verdict) +
                        ", CTL* oracle says " + (expected ? "TRUE" : "FALSE") + "\n" + cks_to_json(k));
    agree += same;
    holds += expected;
  }
  if (o.pass) o.detail = "ligne TRUE; " + std::to_string(agree) + "/" + std::to_string(kA4Structures) +
                         " agree with the CTL* oracle (" + std::to_string(holds) + " TRUE)";
  return o;
}

Outcome a5_automata() {
  Outcome o;
  Rng rng(5005);
  const std::vector<std::string> aps{"p", "q"};
  int cases = 0, accepted = 0, checked = 0;
  auto trees_for = [&](const DirectionSpace& d, const std::vector<std::string>& labels) {
    std::vector<TreeGen> ts;
    for (int i = 0; i < 4; ++i) ts.push_back(random_tree(rng, d, labels, gen::uniform(rng, 1, 5)));
    return ts;
  };
  for (int i = 0; i < kA5Cases; ++i) {
    DirectionSpace d = grid({2, 2});
    Ata a = random_ata(rng, aps, d, gen::uniform(rng, 1, 4), 3, false);
    Ata b = random_ata(rng, aps, d, gen::uniform(rng, 1, 4), 3, false);
    Ata na = dualize(a), un = union_initial(a, b), sim = simulate(a);
    o.require(is_nta(sim), "simulation " + std::to_string(i) + " is not nondeterministic");
    for (const TreeGen& t : trees_for(d, aps)) {
      bool in_a = membership(a, t), in_b = membership(b, t);
      accepted += in_a;
      ++checked;
      o.require(membership(na, t) != in_a, "dual " + std::to_string(i) + " agrees with its source\n" + dump(a));
      o.require(membership(un, t) == (in_a || in_b), "union " + std::to_string(i) + " differs\n" + dump(a));
      o.require(membership(sim, t) == in_a, "simulation " + std::to_string(i) + " differs\n" + dump(a));
    }
    Ata narrow = narrow_ata(a, {1});
    for (const TreeGen& t : trees_for(d.restrict_to({1}), aps)) {
      bool all = true;
      for (int fill = 0; fill < 2; ++fill) all = all && membership(a, widen_tree(t, d, {fill}));
      o.require(membership(narrow, t) == all, "narrowing " + std::to_string(i) + " differs\n" + dump(a));
    }
    Ata n = random_ata(rng, aps, d, gen::uniform(rng, 1, 4), 3, true);
    Ata proj = project(n, "p");
    for (const TreeGen& t : trees_for(d, aps)) {
      TreeGen stripped = t;
      stripped.label.assign(t.size(), 0);
      for (int v = 0; v < t.size(); ++v) stripped.label[v] = t.has_prop(v, "q") ? 2 : 0;
      if (membership(n, t))
        o.require(membership(proj, stripped), "projection " + std::to_string(i) + " loses a tree\n" + dump(n));
    }
    EmptinessResult en = emptiness(n), ep = emptiness(proj);
    o.require(en.empty == ep.empty, "projection " + std::to_string(i) + " changes emptiness\n" + dump(n));
    if (!en.empty) o.require(en.witness && membership(n, *en.witness), "emptiness witness rejected\n" + dump(n));
    ParityGame pg = random_parity_game(rng, gen::uniform(rng, 1, 6), 4);
    ParitySolution sol = solve_parity(pg);
    std::vector<bool> eve = oracle::brute_force_parity(pg.owner, pg.color, pg.succ);
    for (int v = 0; v < pg.size(); ++v)
      o.require((sol.winner[v] == kEve) == eve[v], "parity game " + std::to_string(i) + " differs at " +
                                                        std::to_string(v));
    ++cases;
  }
  Cks bin = load_fixture("binary.json").cks;
  const std::string ligne = "(A F p & A G (p -> A X A G !p))";
  RunReport blind = check_qctl(bin, parse_qctl("exists p:{}. (" + ligne + " & E X p & E X !p)"));
  RunReport seeing = check_qctl(bin, parse_qctl("exists p:{1}. (" + ligne + " & E X p & E X !p)"));
  o.require(blind.verdict == Verdict::False, "blind ligne probe gave " + verdict_name(blind.verdict));
  o.require(seeing.verdict == Verdict::True, "observed ligne probe gave " + verdict_name(seeing.verdict));
  if (o.pass)
    o.detail = std::to_string(cases) + " cases each of dual, union, narrowing, simulation, projection, parity; "
               "ligne probes FALSE blind, TRUE observed; " +
               std::to_string(accepted) + "/" + std::to_string(checked) + " sample trees accepted";
  return o;
}

Outcome a6_nash() {
  Outcome o;
  Cgsi g = load_fixture("coordination.json").game;
  o.require(yields_hierarchical_observation(g), "coordination observations are not totally ordered");
  std::vector<Sli> goals{sli_eventually(sli_atom("met")), sli_eventually(sli_atom("met"))};
  Sli ne = build_nash_formula(g.agents, goals, {"blind", "id"}, {"id", "id"});
  o.require(is_hierarchical_instance(ne, g).hierarchical, "Nash formula is not hierarchical");
  oracle::Tri expected = oracle::bounded_sli_eval(ne, g, 1);
  RunReport r = check_sli(g, ne);
  o.require(expected != oracle::Tri::Unknown, "bounded oracle cannot decide the Nash formula");
  o.require(r.verdict == (expected == oracle::Tri::True ? Verdict::True : Verdict::False),
            "coordination gave " + verdict_name(r.verdict) + ", bounded oracle says " + oracle::tri_name(expected));
  Cgsi pennies = load_fixture("pennies.json").game;
  std::vector<Sli> pgoals{sli_eventually(sli_atom("same")), sli_eventually(sli_atom("differ"))};
  Sli pne = build_nash_formula(pennies.agents, pgoals, {"blind", "blind"}, {"id", "id"});
  RunReport pr = check_sli(pennies, pne);
  oracle::Tri pexpected = oracle::bounded_sli_eval(pne, pennies, 1);
  o.require(pr.verdict == Verdict::False && pexpected == oracle::Tri::False,
            "matching pennies gave " + verdict_name(pr.verdict) + ", bounded oracle says " +
                oracle::tri_name(pexpected));
  if (o.pass)
    o.detail = "coordination " + verdict_name(r.verdict) + " in " + std::to_string(static_cast<int>(r.millis)) +
               " ms; matching pennies FALSE in " + std::to_string(static_cast<int>(pr.millis)) + " ms";
  return o;
}

void collect(const Qctl& f, std::set<std::string>& out) {
  out.insert(to_string(f));
  for (const Qctl& c : f->children) collect(c, out);
}

Outcome a7_resources() {
  Outcome o;
  Cgsi g = load_fixture("security_levels.json").game;
  Sli phi = load_formula(g, "security_levels.sli");
  CompiledInstance ci = compile(phi, g);
  std::set<std::string> names;
  collect(split_props(ci.formula, {ci.cks.propositions.begin(), ci.cks.propositions.end()}), names);
  RunOptions small;
  small.cap = 4;
  RunReport r = check_sli(g, phi, small);
  o.require(r.verdict == Verdict::Resource, "cap 4 gave " + verdict_name(r.verdict));
  o.require(names.count(r.resource_subformula) > 0, "unknown subformula in report: " + r.resource_subformula);
  o.require(!r.resource_stage.empty(), "resource report names no stage");
  int exhausted = 0;
  for (std::size_t cap = 1; cap <= 4096; cap *= 2) {
    RunOptions opts;
    opts.cap = cap;
    RunReport s = check_sli(g, phi, opts);
    o.require(s.verdict == Verdict::True || s.verdict == Verdict::Resource,
              "cap " + std::to_string(cap) + " gave " + verdict_name(s.verdict));
    exhausted += s.verdict == Verdict::Resource;
  }
  if (o.pass)
    o.detail = "cap 4 stops at " + r.resource_stage + " of " + r.resource_subformula + "; " +
               std::to_string(exhausted) + " of 13 caps exhausted, none wrong";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"A1", "security levels", 1, a1_security_levels},
      {"A2", "perfect-information games", 120, a2_perfect_information},
      {"A3", "partial-observation games", 300, a3_partial_observation},
      {"A4", "QCTL* on structures", 120, a4_qctl},
      {"A5", "automata operations", 300, a5_automata},
      {"A6", "Nash equilibria", 120, a6_nash},
      {"A7", "resource caps", 60, a7_resources},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.budget_seconds) {
      o.pass = false;
      o.detail = "over budget of " + std::to_string(static_cast<int>(c.budget_seconds)) + " s";
    }
    failed += !o.pass;
    std::printf("%s %s  %-28s %8.2f s  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
