#include "hiersl/pipeline.hpp"

#include <chrono>
#include <cstdio>

#include "hiersl/sl_compiler.hpp"

namespace hiersl {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::True: return "TRUE";
    case Verdict::False: return "FALSE";
    case Verdict::Refused: return "REFUSED";
    case Verdict::Resource: return "RESOURCE";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::True: return 0;
    case Verdict::False: return 1;
    case Verdict::Refused: return 2;
    case Verdict::Resource: return 3;
  }
  return 4;
}

namespace {

McOptions mc_options(const RunOptions& o) {
  McOptions m;
  m.cap = o.cap;
  m.keep_dumps = o.keep_dumps;
  m.prune_dead_states = o.prune_dead_states;
  return m;
}

void run_checker(RunReport& r, const Cks& k, const Qctl& phi, const RunOptions& opts) {
  try {
    McStats stats;
    bool res = model_check_qctl(k, phi, mc_options(opts), &stats);
    r.stats = std::move(stats);
    r.verdict = res ? Verdict::True : Verdict::False;
  } catch (const ResourceError& e) {
    r.verdict = Verdict::Resource;
    r.resource_stage = e.stage;
    r.resource_subformula = e.subformula;
    r.resource_states = e.states;
  } catch (const RefusedError& e) {
    r.verdict = Verdict::Refused;
    r.witness = e.what();
  }
}

}  // namespace

RunReport check_sli(const Cgsi& g, const Sli& phi, const RunOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  RunReport r;
  HierarchyReport h = is_hierarchical_instance(phi, g);
  if (!h.hierarchical) {
    r.verdict = Verdict::Refused;
    r.witness = h.describe();
  } else {
    CompiledInstance ci = compile(phi, g);
    r.compiled_size = formula_size(ci.formula);
    run_checker(r, ci.cks, ci.formula, opts);
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

RunReport check_qctl(const Cks& k, const Qctl& phi, const RunOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  RunReport r;
  QctlHierarchyReport h = check_hierarchical_qctl(phi);
  if (!h.hierarchical) {
    r.verdict = Verdict::Refused;
    r.witness = h.describe();
  } else {
    r.compiled_size = formula_size(phi);
    run_checker(r, k, phi, opts);
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string format_report(const RunReport& r, bool with_stats) {
  std::string out = verdict_name(r.verdict) + "\n";
  if (r.verdict == Verdict::Refused) out += "not hierarchical: " + r.witness + "\n";
  if (r.verdict == Verdict::Resource)
    out += "cap exceeded in stage " + r.resource_stage + " (" + std::to_string(r.resource_states) +
           " states) at subformula " + r.resource_subformula + "\n";
  if (with_stats) {
    char buf[64];
    for (const auto& s : r.stats.stages) {
      std::snprintf(buf, sizeof buf, "%.3f", s.millis);
      out += "stage " + s.stage + " size=" + std::to_string(s.states) +
             " ms=" + buf + " " + s.subformula + "\n";
    }
    out += "game_vertices " + std::to_string(r.stats.game_vertices) + "\n";
    out += "automata " + std::to_string(r.stats.table_entries) + "\n";
    std::snprintf(buf, sizeof buf, "%.3f", r.millis);
    out += "total_ms " + std::string(buf) + "\n";
  }
  return out;
}

}  // namespace hiersl
