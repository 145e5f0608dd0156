#include "hiersl/sl_compiler.hpp"

#include <algorithm>

namespace hiersl {

std::string position_prop(const std::string& v) { return "@pos:" + v; }

std::string action_prop(const std::string& m, const std::string& x) { return "@act:" + m + ":" + x; }

Cks build_cks(const Cgsi& g) {
  Cks k;
  const int n = static_cast<int>(g.obs_names.size());
  if (static_cast<int>(g.obs_class.size()) != n) throw Error("game is not finalized");
  for (int o = 0; o < n; ++o) {
    int classes = 0;
    for (int c : g.obs_class[o]) classes = std::max(classes, c + 1);
    std::vector<std::string> names(classes);
    for (int v = 0; v < g.num_positions(); ++v) {
      auto& s = names[g.obs_class[o][v]];
      s += s.empty() ? "[" : ",";
      s += g.positions[v];
    }
    for (auto& s : names) s += "]";
    k.components.push_back(std::move(names));
  }
  k.components.push_back(g.positions);
  std::set<std::string> props(g.propositions.begin(), g.propositions.end());
  for (int v = 0; v < g.num_positions(); ++v) {
    std::vector<int> tuple;
    for (int o = 0; o < n; ++o) tuple.push_back(g.obs_class[o][v]);
    tuple.push_back(v);
    k.states.push_back(std::move(tuple));
    std::vector<int> succ;
    for (int c = 0; c < g.joint_count(); ++c) succ.push_back(g.succ(v, c));
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    k.succ.push_back(std::move(succ));
    std::vector<std::string> lab = g.labels[v];
    lab.push_back(position_prop(g.positions[v]));
    std::sort(lab.begin(), lab.end());
    props.insert(lab.begin(), lab.end());
    k.labels.push_back(std::move(lab));
  }
  k.initial = g.initial;
  k.propositions.assign(props.begin(), props.end());
  return k;
}

IndexSet concrete_obs(const std::string& o, const Cgsi& g) {
  IndexSet out;
  for (std::size_t j = 0; j < g.obs_names.size(); ++j)
    if (g.finer(o, g.obs_names[j])) out.push_back(static_cast<int>(j) + 1);
  return out;
}

Qctl phi_strat(const std::string& x, const std::vector<std::string>& actions) {
  if (actions.empty()) throw Error("no actions");
  std::vector<Qctl> options;
  for (const auto& m : actions) {
    std::vector<Qctl> parts{q_atom(action_prop(m, x))};
    for (const auto& m2 : actions)
      if (m2 != m) parts.push_back(q_not(q_atom(action_prop(m2, x))));
    options.push_back(q_and_all(parts));
  }
  return q_A(q_globally(q_or_all(options)));
}

namespace {

std::vector<int> reachable_positions(const Cgsi& g) {
  std::vector<char> seen(g.num_positions(), 0);
  std::vector<int> order{g.initial};
  seen[g.initial] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c = 0; c < g.joint_count(); ++c) {
      int w = g.succ(order[i], c);
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
    }
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace

Qctl psi_out(const BindingContext& f, const Cgsi& g) {
  std::vector<std::string> vars;
  for (const auto& a : g.agents) {
    auto it = f.find(a);
    if (it == f.end()) throw Error("agent " + a + " is not bound to a strategy");
    vars.push_back(it->second);
  }
  std::vector<Qctl> terms;
  for (int v : reachable_positions(g))
    for (int c = 0; c < g.joint_count(); ++c) {
      std::vector<int> acts = g.decode_joint(c);
      std::vector<Qctl> pre{q_atom(position_prop(g.positions[v]))};
      for (std::size_t a = 0; a < vars.size(); ++a) pre.push_back(q_atom(action_prop(g.actions[acts[a]], vars[a])));
      terms.push_back(q_implies(q_and_all(pre), q_next(q_atom(position_prop(g.positions[g.succ(v, c)])))));
    }
  return q_globally(q_and_all(terms));
}

namespace {

Qctl tr(const Sli& phi, const BindingContext& f, const Cgsi& g) {
  switch (phi->kind) {
    case SliKind::True: return q_true(phi->span);
    case SliKind::Atom: return q_atom(phi->name, phi->span);
    case SliKind::Not: return q_not(tr(phi->children[0], f, g), phi->span);
    case SliKind::Or: return q_or(tr(phi->children[0], f, g), tr(phi->children[1], f, g), phi->span);
    case SliKind::Exists: {
      const std::string& x = phi->name;
      IndexSet o = concrete_obs(phi->observation, g);
      Qctl body = q_and(phi_strat(x, g.actions), tr(phi->children[0], f, g));
      for (auto it = g.actions.rbegin(); it != g.actions.rend(); ++it)
        body = q_exists(action_prop(*it, x), o, body, phi->span);
      return body;
    }
    case SliKind::Bind: {
      BindingContext f2 = f;
      f2[phi->agent] = phi->name;
      return tr(phi->children[0], f2, g);
    }
    case SliKind::Next:
    case SliKind::Until: {
      Qctl out;
      try {
        out = psi_out(f, g);
      } catch (const Error& e) {
        throw ParseError(std::string(e.what()) + " at temporal operator", phi->span);
      }
      Qctl path = phi->kind == SliKind::Next
                      ? q_next(tr(phi->children[0], f, g))
                      : q_until(tr(phi->children[0], f, g), tr(phi->children[1], f, g));
      return q_A(q_implies(out, path));
    }
  }
  throw Error("unknown formula kind");
}

}  // namespace

Qctl translate(const Sli& phi, const BindingContext& f, const Cgsi& g) { return tr(phi, f, g); }

CompiledInstance compile(const Sli& phi, const Cgsi& g) {
  if (!is_sentence(phi, g.agents)) {
    FreeSet fs = free_symbols(phi, g.agents);
    std::string what;
    for (const auto& x : fs.variables) what += " variable " + x;
    for (const auto& a : fs.agents) what += " agent " + a;
    throw Error("not a sentence; free:" + what);
  }
  for (const auto& p : g.propositions)
    if (p.rfind("@", 0) == 0) throw Error("game proposition " + p + " uses the reserved prefix @");
  CompiledInstance ci;
  ci.hierarchy = is_hierarchical_instance(phi, g);
  ci.cks = build_cks(g);
  ci.formula = translate(phi, {}, g);
  for (const auto& v : g.positions) ci.position_props[v] = position_prop(v);
  for (const auto& q : quantifiers(phi))
    for (const auto& m : g.actions) ci.action_props[m + ":" + q.variable] = action_prop(m, q.variable);
  for (const auto& o : g.obs_names) ci.observation_table[o] = concrete_obs(o, g);
  return ci;
}

}  // namespace hiersl
