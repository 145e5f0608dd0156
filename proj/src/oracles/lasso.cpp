#include <map>

#include "hiersl/oracles.hpp"

namespace hiersl::oracle {

std::string tri_name(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

int Lasso::at(long i) const {
  if (i < static_cast<long>(stem.size())) return stem[i];
  return loop[(i - static_cast<long>(stem.size())) % static_cast<long>(loop.size())];
}

int class_of(const Cgsi& g, int observation, int v) { return observation < 0 ? v : g.obs_class[observation][v]; }

int class_count(const Cgsi& g, int observation) {
  if (observation < 0) return g.num_positions();
  int n = 0;
  for (int c : g.obs_class[observation]) n = std::max(n, c + 1);
  return n;
}

Lasso outcome(const std::vector<Strategy>& profile, const Play& rho, const Cgsi& g) {
  if (rho.empty()) throw Error("outcome of an empty history");
  if (static_cast<int>(profile.size()) != g.num_agents()) throw Error("profile does not cover every agent");
  std::vector<int> mem(profile.size(), 0);
  auto read = [&](int v) {
    for (std::size_t a = 0; a < profile.size(); ++a)
      mem[a] = profile[a].update[mem[a]][class_of(g, profile[a].observation, v)];
  };
  std::vector<int> pos;
  for (int v : rho) {
    read(v);
    pos.push_back(v);
  }
  std::map<std::pair<int, std::vector<int>>, int> seen;
  for (;;) {
    int k = static_cast<int>(pos.size()) - 1;
    auto [it, fresh] = seen.try_emplace({pos[k], mem}, k);
    if (!fresh) {
      int i = it->second;
      Lasso l;
      l.stem.assign(pos.begin(), pos.begin() + i + 1);
      l.loop.assign(pos.begin() + i + 1, pos.end());
      return l;
    }
    std::vector<int> acts(profile.size());
    for (std::size_t a = 0; a < profile.size(); ++a)
      acts[a] = profile[a].action[mem[a]][class_of(g, profile[a].observation, pos[k])];
    int next = g.succ(pos[k], g.encode_joint(acts));
    read(next);
    pos.push_back(next);
  }
}

namespace {

template <typename Leaf>
std::vector<bool> eval_positions(int kind_not, int kind_or, int kind_next, int kind_until, int kind_true,
                                 int len, int loop_start, int kind, const std::vector<std::vector<bool>>& kids,
                                 Leaf leaf) {
  std::vector<bool> out(len, false);
  auto succ = [&](int k) { return k + 1 < len ? k + 1 : loop_start; };
  if (kind == kind_true) {
    out.assign(len, true);
  } else if (kind == kind_not) {
    for (int k = 0; k < len; ++k) out[k] = !kids[0][k];
  } else if (kind == kind_or) {
    for (int k = 0; k < len; ++k) out[k] = kids[0][k] || kids[1][k];
  } else if (kind == kind_next) {
    for (int k = 0; k < len; ++k) out[k] = kids[0][succ(k)];
  } else if (kind == kind_until) {
    for (bool changed = true; changed;) {
      changed = false;
      for (int k = len - 1; k >= 0; --k) {
        bool v = kids[1][k] || (kids[0][k] && out[succ(k)]);
        if (v != out[k]) {
          out[k] = v;
          changed = true;
        }
      }
    }
  } else {
    for (int k = 0; k < len; ++k) out[k] = leaf(k);
  }
  return out;
}

std::vector<bool> eval_q(const Qctl& f, const Lasso& l, const std::function<bool(const Qctl&, int)>& atom) {
  const int len = l.length(), start = static_cast<int>(l.stem.size());
  if (f->state && f->kind != QKind::True && f->kind != QKind::Not && f->kind != QKind::Or) {
    std::vector<bool> out(len);
    for (int k = 0; k < len; ++k) out[k] = atom(f, k);
    return out;
  }
  std::vector<std::vector<bool>> kids;
  for (const auto& c : f->children) kids.push_back(eval_q(c, l, atom));
  return eval_positions(static_cast<int>(QKind::Not), static_cast<int>(QKind::Or), static_cast<int>(QKind::Next),
                        static_cast<int>(QKind::Until), static_cast<int>(QKind::True), len, start,
                        static_cast<int>(f->kind), kids, [&](int k) { return atom(f, k); });
}

std::vector<bool> eval_s(const Sli& f, const Lasso& l, const Cgsi& g) {
  const int len = l.length(), start = static_cast<int>(l.stem.size());
  if (f->kind == SliKind::Exists || f->kind == SliKind::Bind) throw Error("quantifier inside a lasso formula");
  std::vector<std::vector<bool>> kids;
  for (const auto& c : f->children) kids.push_back(eval_s(c, l, g));
  return eval_positions(static_cast<int>(SliKind::Not), static_cast<int>(SliKind::Or),
                        static_cast<int>(SliKind::Next), static_cast<int>(SliKind::Until),
                        static_cast<int>(SliKind::True), len, start, static_cast<int>(f->kind), kids,
                        [&](int k) { return g.has_label(l.at(k), f->name); });
}

}  // namespace

bool eval_ltl_on_lasso(const Qctl& path, const Lasso& l, const std::function<bool(const Qctl&, int)>& atom) {
  return eval_q(path, l, atom)[0];
}

bool eval_ltl_on_lasso(const Sli& path, const Lasso& positions, const Cgsi& g) {
  return eval_s(path, positions, g)[0];
}

}  // namespace hiersl::oracle
