#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include <CLI11.hpp>

#include "hiersl/generators.hpp"
#include "hiersl/model_io.hpp"
#include "hiersl/oracles.hpp"
#include "hiersl/pipeline.hpp"
#include "hiersl/qctl_mc.hpp"
#include "hiersl/sl_compiler.hpp"

using namespace hiersl;

namespace {

constexpr int kUsage = 4;

struct Flags {
  std::string model;
  std::string formula;
  std::string engine = "auto";
  std::string oracle = "none";
  std::string kind;
  std::string state;
  std::string output;
  std::size_t cap = 1000000;
  int jobs = 1;
  int memory = 1;
  std::uint64_t seed = 1;
  int positions = 4;
  int agents = 2;
  bool partial = false;
  bool stats = false;
  bool dump = false;
  bool no_prune = false;
};

// A formula argument names a file when one exists, otherwise it is the formula itself.
std::string formula_text(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_text_file(arg);
  return arg;
}

SliSignature signature_of(const Cgsi& g) {
  SliSignature s;
  s.propositions = g.propositions;
  s.agents = g.agents;
  s.observations = g.obs_names;
  return s;
}

Sli load_sli(const Cgsi& g, const std::string& arg) {
  SliSignature sig = signature_of(g);
  return parse_sli(formula_text(arg), &sig);
}

Qctl load_qctl(const Cks& k, const std::string& arg) {
  QctlSignature sig;
  sig.components = k.n();
  return parse_qctl(formula_text(arg), &sig);
}

// Engine choice: explicit, or by model kind.
bool use_qctl(const Flags& f, const Model& m) {
  if (f.engine == "qctl") {
    if (m.kind != Model::Kind::Kripke) throw Error("--engine qctl needs a CKS model");
    return true;
  }
  if (f.engine == "sli") {
    if (m.kind != Model::Kind::Game) throw Error("--engine sli needs a CGSi model");
    return false;
  }
  return m.kind == Model::Kind::Kripke;
}

RunOptions run_options(const Flags& f) {
  RunOptions o;
  o.cap = f.cap;
  o.keep_dumps = f.dump;
  o.prune_dead_states = !f.no_prune;
  return o;
}

std::string agreement(oracle::Tri o, Verdict v) {
  if (o == oracle::Tri::Unknown || (v != Verdict::True && v != Verdict::False)) return "inconclusive";
  return (o == oracle::Tri::True) == (v == Verdict::True) ? "agree" : "disagree";
}

oracle::Tri run_oracle(const std::string& kind, const Model& m, const std::string& formula, int memory) {
  if (kind == "bounded") {
    if (m.kind != Model::Kind::Game) throw Error("oracle bounded needs a CGSi model");
    return oracle::bounded_sli_eval(load_sli(m.game, formula), m.game, memory);
  }
  if (kind == "ctlstar") {
    const Cks k = m.kind == Model::Kind::Kripke ? m.cks : build_cks(m.game);
    Qctl phi = load_qctl(k, formula);
    if (quantifier_count(phi) > 0) return oracle::Tri::Unknown;
    return oracle::ctl_star_holds(k, phi, k.initial) ? oracle::Tri::True : oracle::Tri::False;
  }
  throw Error("unknown oracle " + kind);
}

int cmd_check(const Flags& f, bool force_qctl) {
  Model m = load_model(f.model);
  bool qctl = force_qctl || use_qctl(f, m);
  if (qctl && m.kind != Model::Kind::Kripke) throw Error("a QCTL*i formula needs a CKS model");
  std::future<oracle::Tri> side;
  auto oracle_job = [&] { return run_oracle(f.oracle, m, f.formula, f.memory); };
  bool with_oracle = f.oracle != "none";
  if (with_oracle && f.jobs > 1) side = std::async(std::launch::async, oracle_job);

  RunReport r = qctl ? check_qctl(m.cks, load_qctl(m.cks, f.formula), run_options(f))
                     : check_sli(m.game, load_sli(m.game, f.formula), run_options(f));
  std::cout << format_report(r, f.stats);
  if (f.dump)
    for (const auto& d : r.stats.dumps) std::cout << d;
  if (with_oracle) {
    oracle::Tri o = side.valid() ? side.get() : oracle_job();
    std::cout << "oracle kind=" << f.oracle << " value=" << oracle::tri_name(o)
              << " agreement=" << agreement(o, r.verdict) << "\n";
  }
  return exit_code(r.verdict);
}

int cmd_compile(const Flags& f) {
  Model m = load_model(f.model);
  if (m.kind != Model::Kind::Game) throw Error("compile needs a CGSi model");
  CompiledInstance ci = compile(load_sli(m.game, f.formula), m.game);
  std::string cks = cks_to_json(ci.cks), phi = to_string(ci.formula);
  if (f.output.empty()) {
    std::cout << cks << "\n" << phi << "\n";
  } else {
    std::ofstream(f.output + ".json") << cks << "\n";
    std::ofstream(f.output + ".qctl") << phi << "\n";
  }
  if (!ci.hierarchy.hierarchical) std::cerr << "warning: not hierarchical: " << ci.hierarchy.describe() << "\n";
  return 0;
}

int cmd_hierarchy(const Flags& f) {
  Model m = load_model(f.model);
  if (m.kind == Model::Kind::Kripke) {
    QctlHierarchyReport h = check_hierarchical_qctl(load_qctl(m.cks, f.formula));
    std::cout << (h.hierarchical ? "hierarchical" : "not hierarchical: " + h.describe()) << "\n";
    return h.hierarchical ? 0 : 2;
  }
  HierarchyReport h = is_hierarchical_instance(load_sli(m.game, f.formula), m.game);
  std::cout << (h.hierarchical ? "hierarchical" : "not hierarchical: " + h.describe()) << "\n";
  return h.hierarchical ? 0 : 2;
}

int cmd_oracle(const Flags& f) {
  Model m = load_model(f.model);
  oracle::Tri o = run_oracle(f.kind, m, f.formula, f.memory);
  std::cout << oracle::tri_name(o) << "\n";
  return o == oracle::Tri::True ? 0 : o == oracle::Tri::False ? 1 : 3;
}

int cmd_automaton(const Flags& f) {
  Model m = load_model(f.model);
  Cks k;
  Qctl phi;
  if (use_qctl(f, m)) {
    k = m.cks;
    phi = load_qctl(k, f.formula);
  } else {
    CompiledInstance ci = compile(load_sli(m.game, f.formula), m.game);
    k = ci.cks;
    phi = ci.formula;
  }
  if (!is_hierarchical_qctl(phi)) throw RefusedError("formula is not hierarchical");
  std::set<std::string> reserved(k.propositions.begin(), k.propositions.end());
  McOptions opts;
  opts.cap = f.cap;
  opts.prune_dead_states = !f.no_prune;
  QctlAutomata automata(k, split_props(phi, reserved), opts);
  int s = k.initial;
  if (!f.state.empty()) {
    s = -1;
    for (int i = 0; i < k.num_states(); ++i)
      if (k.state_name(i) == f.state) s = i;
    if (s < 0) throw Error("unknown state " + f.state);
  }
  std::cout << dump(automata.automaton(automata.formula(), s));
  return 0;
}

int cmd_generate(const Flags& f) {
  gen::Rng rng(f.seed);
  if (f.kind == "game") {
    gen::GameShape shape;
    shape.max_positions = f.positions;
    shape.min_positions = std::min(shape.min_positions, f.positions);
    shape.agents = f.agents;
    shape.partial_observation = f.partial;
    std::cout << cgsi_to_json(gen::random_game(rng, shape)) << "\n";
  } else if (f.kind == "cks") {
    std::cout << cks_to_json(gen::random_cks(rng, f.positions, 2, 2, {"p", "q"})) << "\n";
  } else {
    throw Error("unknown generator " + f.kind);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checker for Strategy Logic with imperfect information on hierarchical instances"};
  app.require_subcommand(1);
  Flags f;

  auto add_inputs = [&](CLI::App* c) {
    c->add_option("model", f.model, "model JSON (CGSi or CKS)")->required();
    c->add_option("formula", f.formula, "formula file or inline formula")->required();
  };
  auto add_engine = [&](CLI::App* c) {
    c->add_option("--cap", f.cap, "state budget per construction");
    c->add_flag("--no-prune", f.no_prune, "keep path-guessing states that cannot survive");
  };

  auto* check = app.add_subcommand("check", "decide an SLi sentence (or a QCTL*i formula on a CKS)");
  add_inputs(check);
  add_engine(check);
  check->add_option("--engine", f.engine, "auto, sli or qctl")->check(CLI::IsMember({"auto", "sli", "qctl"}));
  check->add_option("--oracle", f.oracle, "cross-check with none, bounded or ctlstar")
      ->check(CLI::IsMember({"none", "bounded", "ctlstar"}));
  check->add_option("--memory", f.memory, "memory states for the bounded oracle");
  check->add_option("--jobs", f.jobs, "threads; above 1 the oracle runs beside the engine");
  check->add_flag("--stats", f.stats, "per-stage automaton sizes and timings");
  check->add_flag("--dump-automata", f.dump, "print every subformula automaton");

  auto* qctl = app.add_subcommand("qctl", "decide a QCTL*i formula on a CKS");
  add_inputs(qctl);
  add_engine(qctl);
  qctl->add_option("--oracle", f.oracle, "cross-check with none or ctlstar")
      ->check(CLI::IsMember({"none", "ctlstar"}));
  qctl->add_option("--jobs", f.jobs, "threads; above 1 the oracle runs beside the engine");
  qctl->add_flag("--stats", f.stats, "per-stage automaton sizes and timings");
  qctl->add_flag("--dump-automata", f.dump, "print every subformula automaton");

  auto* comp = app.add_subcommand("compile", "print the CKS and QCTL*i formula of an SLi instance");
  add_inputs(comp);
  comp->add_option("-o,--output", f.output, "write <prefix>.json and <prefix>.qctl");

  auto* hier = app.add_subcommand("hierarchy", "check that an instance is hierarchical");
  add_inputs(hier);

  auto* orc = app.add_subcommand("oracle", "evaluate with an independent oracle");
  orc->add_option("kind", f.kind, "bounded or ctlstar")->required()->check(CLI::IsMember({"bounded", "ctlstar"}));
  add_inputs(orc);
  orc->add_option("--memory", f.memory, "memory states for the bounded oracle");

  auto* aut = app.add_subcommand("automaton", "dump the tree automaton of the whole formula");
  add_inputs(aut);
  add_engine(aut);
  aut->add_option("--engine", f.engine, "auto, sli or qctl")->check(CLI::IsMember({"auto", "sli", "qctl"}));
  aut->add_option("--state", f.state, "CKS state name (default: initial)");

  auto* gen = app.add_subcommand("generate", "print a random model");
  gen->add_option("kind", f.kind, "game or cks")->required()->check(CLI::IsMember({"game", "cks"}));
  gen->add_option("--seed", f.seed, "random seed");
  gen->add_option("--positions", f.positions, "maximal number of positions or states");
  gen->add_option("--agents", f.agents, "number of agents");
  gen->add_flag("--partial", f.partial, "add a random observation o");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*check) return cmd_check(f, false);
    if (*qctl) return cmd_check(f, true);
    if (*comp) return cmd_compile(f);
    if (*hier) return cmd_hierarchy(f);
    if (*orc) return cmd_oracle(f);
    if (*aut) return cmd_automaton(f);
    if (*gen) return cmd_generate(f);
  } catch (const RefusedError& e) {
    std::cerr << "REFUSED: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "RESOURCE: " << e.what() << "\n";
    return 3;
  } catch (const ModelError& e) {
    std::cerr << "model error:\n";
    for (const auto& p : e.problems) std::cerr << "  " << p << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
