#include "hiersl/qctl_mc.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <deque>
#include <unordered_map>

#include "hiersl/tree_automata.hpp"
#include "hiersl/word_automata.hpp"

namespace hiersl {

QctlAutomata::QctlAutomata(const Cks& k, Qctl phi, McOptions opts)
    : k_(k), phi_(std::move(phi)), opts_(opts) {
  auto q = ap_quantified(phi_);
  aps_.assign(q.begin(), q.end());
  if (aps_.size() > 64) throw Error("more than 64 quantified propositions");
  for (const auto& p : ap_free(phi_))
    if (q.count(p)) throw Error("proposition " + p + " is both free and quantified");
}

const std::string& QctlAutomata::key_of(const Qctl& sub) {
  auto it = keys_.find(sub.get());
  if (it == keys_.end()) it = keys_.emplace(sub.get(), to_string(sub)).first;
  return it->second;
}

IndexSet QctlAutomata::index_of(const Qctl& sub) {
  auto it = index_.find(sub.get());
  if (it == index_.end()) it = index_.emplace(sub.get(), observation_index(sub, k_.n())).first;
  return it->second;
}

void QctlAutomata::check_cap(const std::string& stage, const Qctl& sub, std::size_t n) const {
  if (n > opts_.cap) throw ResourceError(stage, to_string(sub), n);
}

const Ata& QctlAutomata::family(const Qctl& sub) {
  const std::string& key = key_of(sub);
  auto it = table_.find(key);
  if (it != table_.end()) return *it->second;
  auto start = std::chrono::steady_clock::now();
  const double outer_nested = nested_millis_;
  nested_millis_ = 0;
  Ata a = reduce_ata(build(sub));
  check_cap("construction", sub, static_cast<std::size_t>(a.size()));
  StageStat st;
  switch (sub->kind) {
    case QKind::True:
    case QKind::Atom: st.stage = "atom"; break;
    case QKind::Not: st.stage = "not"; break;
    case QKind::Or: st.stage = "or"; break;
    case QKind::E: st.stage = "E"; break;
    case QKind::Exists: st.stage = "exists"; break;
    default: st.stage = "?";
  }
  st.subformula = key;
  st.states = static_cast<std::size_t>(a.size());
  const double total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  st.millis = total - nested_millis_;
  nested_millis_ = outer_nested + total;
  stats_.stages.push_back(st);
  if (opts_.keep_dumps) stats_.dumps.push_back("A[" + key + "]\n" + dump(a));
  auto& slot = table_[key];
  slot = std::make_unique<Ata>(std::move(a));
  stats_.table_entries = table_.size();
  return *slot;
}

Ata QctlAutomata::automaton(const Qctl& sub, int s) {
  Ata a = family(sub);
  a.initial = a.roots.at(s);
  a.roots.clear();
  return trim_ata(a);
}

Ata QctlAutomata::narrowed(const Qctl& sub, const IndexSet& to) {
  const Ata& a = family(sub);
  if (a.dirs.dims == to) return a;
  return narrow_ata(a, to);
}

Ata QctlAutomata::build(const Qctl& sub) {
  switch (sub->kind) {
    case QKind::True:
    case QKind::Atom: return build_atom(sub);
    case QKind::Not: return dualize(family(sub->children[0]));
    case QKind::Or: return build_or(sub);
    case QKind::E: return build_E(sub);
    case QKind::Exists: return build_exists(sub);
    default: throw Error("path formula in state position: " + to_string(sub));
  }
}

Ata QctlAutomata::build_atom(const Qctl& sub) {
  Ata a;
  a.aps = aps_;
  a.dirs = direction_space(k_, index_range(k_.n()));
  const int idx = sub->kind == QKind::Atom ? a.ap_index(sub->prop) : -1;
  if (sub->kind == QKind::True || idx >= 0) {
    int q = a.add_state(0, key_of(sub));
    if (idx < 0) {
      a.set_constant_transition(q, PbfArena::kTrue);
    } else {
      const std::uint64_t bit = std::uint64_t{1} << idx;
      a.set_transition(q, bit, [&](std::uint64_t l) { return l & bit ? PbfArena::kTrue : PbfArena::kFalse; });
    }
    a.roots.assign(k_.num_states(), q);
  } else {
    int yes = a.add_state(0, key_of(sub));
    int no = a.add_state(0, "!" + key_of(sub));
    a.set_constant_transition(yes, PbfArena::kTrue);
    a.set_constant_transition(no, PbfArena::kFalse);
    for (int s = 0; s < k_.num_states(); ++s) a.roots.push_back(k_.has_label(s, sub->prop) ? yes : no);
  }
  a.initial = a.roots.empty() ? 0 : a.roots[0];
  return a;
}

Ata QctlAutomata::build_or(const Qctl& sub) {
  IndexSet i = index_of(sub);
  Ata a1 = narrowed(sub->children[0], i);
  Ata a2 = narrowed(sub->children[1], i);
  Ata out;
  out.aps = aps_;
  out.dirs = a1.dirs;
  const int o1 = embed_ata(out, a1, false);
  const int o2 = embed_ata(out, a2, false);
  std::map<std::pair<int, int>, int> made;
  for (int s = 0; s < k_.num_states(); ++s) {
    const int i1 = o1 + a1.roots[s], i2 = o2 + a2.roots[s];
    auto [it, fresh] = made.try_emplace({i1, i2}, -1);
    if (fresh) {
      it->second = out.add_state(0, "or");
      out.set_transition(it->second, out.states[i1].support | out.states[i2].support, [&](std::uint64_t l) {
        return out.pbf.disj(out.transition(i1, l), out.transition(i2, l));
      });
    }
    out.roots.push_back(it->second);
  }
  out.initial = out.roots.empty() ? 0 : out.roots[0];
  return trim_ata(out);
}

Ata QctlAutomata::build_exists(const Qctl& sub) {
  const Qctl& body = sub->children[0];
  Ata a = narrowed(body, index_of(sub));
  Ata n = simulate(a, opts_.cap, to_string(sub));
  return prune_empty_states(project(n, sub->prop));
}

// Product of the word automaton for ψ with the structure: state (q, s')
// guesses, along the path it follows in the structure, a run of the word
// automaton; each letter guess is checked by launching the automata of the
// positive (or the duals of the negative) maximal state subformulas.
Ata QctlAutomata::build_E(const Qctl& sub) {
  const Qctl& psi = sub->children[0];
  const std::vector<Qctl> atoms = leaf_state_subformulas(psi);
  LtlTableau tableau(psi, atoms);
  const IndexSet idx = index_of(sub);
  const DirectionSpace dirs = direction_space(k_, idx);

  // Atom kinds: free propositions are known at each state of the structure,
  // quantified ones are fixed by the letter, all others launch child automata.
  enum Kind { kFree, kQuantified, kGeneral };
  std::vector<Kind> kind(atoms.size(), kGeneral);
  std::vector<int> qbit(atoms.size(), -1);
  std::uint64_t qsupport = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i]->kind != QKind::Atom) continue;
    auto it = std::find(aps_.begin(), aps_.end(), atoms[i]->prop);
    if (it == aps_.end()) {
      kind[i] = kFree;
    } else {
      kind[i] = kQuantified;
      qbit[i] = static_cast<int>(it - aps_.begin());
      qsupport |= std::uint64_t{1} << qbit[i];
    }
  }
  if (std::popcount(qsupport) > kMaxSupportBits) throw ResourceError("E", key_of(sub), std::size_t{1} << kMaxSupportBits);
  std::vector<Cube> known_state(k_.num_states());
  for (int st = 0; st < k_.num_states(); ++st)
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (kind[i] == kFree)
        (k_.has_label(st, atoms[i]->prop) ? known_state[st].pos : known_state[st].neg) |= std::uint64_t{1} << i;
  const std::uint64_t letters = std::uint64_t{1} << std::popcount(qsupport);
  // Edges of tableau state q at structure state st on the letter whose
  // quantified part is `l` (compressed to qsupport); guards mention general atoms only.
  auto edges_at = [&](int q, int st, std::uint64_t l) -> const std::vector<NpwEdge>& {
    Cube known = known_state[st];
    const std::uint64_t letter = expand_bits(l, qsupport);
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (kind[i] == kQuantified) (((letter >> qbit[i]) & 1U) ? known.pos : known.neg) |= std::uint64_t{1} << i;
    return tableau.edges(q, known);
  };

  // Product states reachable from every (initial, s).
  std::unordered_map<std::uint64_t, int> id;
  std::vector<std::pair<int, int>> prod;
  auto pkey = [](int q, int st) { return (static_cast<std::uint64_t>(q) << 32) | static_cast<std::uint32_t>(st); };
  auto intern = [&](int q, int st) {
    auto [it, fresh] = id.try_emplace(pkey(q, st), static_cast<int>(prod.size()));
    if (fresh) {
      prod.push_back({q, st});
      check_cap("E", sub, prod.size());
    }
    return it->second;
  };
  for (int s = 0; s < k_.num_states(); ++s) intern(tableau.initial(), s);
  std::vector<std::vector<int>> next;
  for (std::size_t i = 0; i < prod.size(); ++i) {
    auto [q, st] = prod[i];
    std::vector<int> out;
    for (std::uint64_t l = 0; l < letters; ++l)
      for (const auto& e : edges_at(q, st, l))
        for (int s2 : k_.succ[st]) out.push_back(intern(e.to, s2));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    next.resize(prod.size());
    next[i] = std::move(out);
  }
  next.resize(prod.size());

  // Greatest fixpoint of states from which an infinite run can proceed.
  std::vector<char> viable(prod.size(), 1);
  if (opts_.prune_dead_states) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < prod.size(); ++i) {
        if (!viable[i]) continue;
        if (std::none_of(next[i].begin(), next[i].end(), [&](int j) { return viable[j]; })) {
          viable[i] = 0;
          changed = true;
        }
      }
    }
  }

  Ata out;
  out.aps = aps_;
  out.dirs = dirs;
  const int bottom = out.add_state(1, "dead");
  out.set_constant_transition(bottom, PbfArena::kFalse);
  std::vector<int> state_of(prod.size(), bottom);
  for (std::size_t i = 0; i < prod.size(); ++i)
    if (viable[i])
      state_of[i] = out.add_state(tableau.color(prod[i].first),
                                  "(" + std::to_string(prod[i].first) + "," + k_.state_name(prod[i].second) + ")");
  for (int s = 0; s < k_.num_states(); ++s) out.roots.push_back(state_of[s]);
  out.initial = out.roots.empty() ? bottom : out.roots[0];

  // Child automata are embedded once (plain or dual) and entered at their root for s'.
  std::map<std::pair<int, bool>, std::pair<int, const Ata*>> embedded;
  std::vector<Ata> keep(atoms.size() * 2);
  auto child = [&](int i, int st, bool dual) {
    auto key = std::make_pair(i, dual);
    auto it = embedded.find(key);
    if (it == embedded.end()) {
      Ata& c = keep[2 * i + (dual ? 1 : 0)];
      c = narrowed(atoms[i], idx);
      int off = embed_ata(out, c, dual);
      check_cap("E", sub, static_cast<std::size_t>(out.size()));
      it = embedded.emplace(key, std::make_pair(off, &c)).first;
    }
    return it->second.first + it->second.second->roots[st];
  };

  std::vector<int> dir_of_state(k_.num_states());
  for (int st = 0; st < k_.num_states(); ++st) dir_of_state[st] = dirs.encode(k_.project(st, idx));

  for (std::size_t i = 0; i < prod.size(); ++i) {
    if (!viable[i]) continue;
    auto [q, st] = prod[i];
    struct Live {
      std::vector<int> children;
      std::vector<int> moves;  // (direction, state) atoms into the product
    };
    std::vector<std::vector<Live>> live(letters);
    std::uint64_t support = qsupport;
    for (std::uint64_t l = 0; l < letters; ++l)
      for (const auto& e : edges_at(q, st, l)) {
        Live lv;
        for (int s2 : k_.succ[st]) {
          auto it = id.find(pkey(e.to, s2));
          if (it != id.end() && viable[it->second]) lv.moves.push_back(s2);
        }
        if (lv.moves.empty()) continue;
        for (std::size_t a = 0; a < atoms.size(); ++a) {
          bool p = (e.guard.pos >> a) & 1U, n = (e.guard.neg >> a) & 1U;
          if (!p && !n) continue;
          int c = child(static_cast<int>(a), st, n);
          lv.children.push_back(c);
          support |= out.states[c].support;
        }
        for (int& s2 : lv.moves) s2 = state_of[id.at(pkey(e.to, s2))] * k_.num_states() + s2;
        live[l].push_back(std::move(lv));
      }
    out.set_transition(state_of[i], support, [&](std::uint64_t letter) {
      std::vector<int> disj;
      for (const auto& lv : live[compress_bits(letter, qsupport)]) {
        std::vector<int> conj;
        for (int c : lv.children) conj.push_back(out.transition(c, letter));
        std::vector<int> moves;
        for (int m : lv.moves)
          moves.push_back(out.pbf.atom(dir_of_state[m % k_.num_states()], m / k_.num_states()));
        conj.push_back(out.pbf.disj(std::move(moves)));
        disj.push_back(out.pbf.conj(std::move(conj)));
      }
      return out.pbf.disj(std::move(disj));
    });
  }
  return trim_ata(out);
}

bool QctlAutomata::holds_at(int s) {
  Ata a = automaton(phi_, s);
  auto start = std::chrono::steady_clock::now();
  TreeGen t = complete_tree(a.dirs, aps_, 0, a.dirs.encode(k_.project(s, a.dirs.dims)));
  GameStats gs;
  bool res = membership(a, t, &gs);
  stats_.game_vertices = gs.vertices;
  StageStat st{"final", key_of(phi_), static_cast<std::size_t>(a.size()),
               std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()};
  stats_.stages.push_back(st);
  return res;
}

bool model_check_qctl(const Cks& k, const Qctl& phi, const McOptions& opts, McStats* stats) {
  if (!phi->state) throw Error("model checking requires a state formula");
  auto report = check_hierarchical_qctl(phi);
  if (!report.hierarchical) throw RefusedError("formula is not hierarchical: " + report.describe());
  for (const auto& o : [&] {
         std::vector<IndexSet> v;
         std::vector<Qctl> stack{phi};
         while (!stack.empty()) {
           Qctl f = stack.back();
           stack.pop_back();
           if (f->kind == QKind::Exists) v.push_back(f->obs);
           for (const auto& c : f->children) stack.push_back(c);
         }
         return v;
       }())
    for (int c : o)
      if (c < 1 || c > k.n())
        throw Error("observation component " + std::to_string(c) + " outside [1," + std::to_string(k.n()) + "]");
  std::set<std::string> reserved(k.propositions.begin(), k.propositions.end());
  Qctl f = split_props(phi, reserved);
  QctlAutomata m(k, f, opts);
  bool res = m.holds_at(k.initial);
  if (stats) *stats = m.stats();
  return res;
}

}  // namespace hiersl
