#include <map>

#include "hiersl/oracles.hpp"

namespace hiersl::oracle {

namespace {

// Tableau for E ψ: nodes (s, m) where m fixes the truth of every X φ and
// X(φ U φ') in the closure of ψ.  A path satisfies ψ iff some node where ψ
// holds reaches a nontrivial SCC that fulfils every until.
class Tableau {
 public:
  Tableau(const Cks& k, const Qctl& path, const std::map<const QNode*, std::vector<bool>>& table)
      : k_(k), path_(path), table_(table) {
    collect(path);
    if (elems_.size() > 16) throw Error("tableau closure too large");
  }

  std::vector<bool> exists_path() {
    const int n = k_.num_states();
    const int masks = 1 << elems_.size();
    const int total = n * masks;
    std::vector<std::vector<int>> succ(total);
    for (int s = 0; s < n; ++s)
      for (int m = 0; m < masks; ++m)
        for (int s2 : k_.succ[s])
          for (int m2 = 0; m2 < masks; ++m2)
            if (consistent(m, s2, m2)) succ[s * masks + m].push_back(s2 * masks + m2);

    std::vector<int> comp = components(succ);
    int ncomp = 0;
    for (int c : comp) ncomp = std::max(ncomp, c + 1);
    std::vector<char> nontrivial(ncomp, 0);
    std::vector<std::uint32_t> fulfilled(ncomp, 0);
    std::vector<int> size(ncomp, 0);
    for (int x = 0; x < total; ++x) {
      ++size[comp[x]];
      for (int y : succ[x])
        if (comp[y] == comp[x]) nontrivial[comp[x]] = 1;
      for (std::size_t i = 0; i < elems_.size(); ++i) {
        const Qctl& u = elems_[i];
        if (u->kind != QKind::Until) continue;
        int s = x / masks, m = x % masks;
        if (eval(u->children[1], s, m) || !eval(u, s, m)) fulfilled[comp[x]] |= 1u << i;
      }
    }
    std::uint32_t untils = 0;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (elems_[i]->kind == QKind::Until) untils |= 1u << i;

    std::vector<std::vector<int>> pred(total);
    for (int x = 0; x < total; ++x)
      for (int y : succ[x]) pred[y].push_back(x);
    std::vector<char> good(total, 0);
    std::vector<int> stack;
    for (int x = 0; x < total; ++x)
      if (nontrivial[comp[x]] && (fulfilled[comp[x]] & untils) == untils) {
        good[x] = 1;
        stack.push_back(x);
      }
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int x : pred[y])
        if (!good[x]) {
          good[x] = 1;
          stack.push_back(x);
        }
    }
    std::vector<bool> out(n, false);
    for (int s = 0; s < n; ++s)
      for (int m = 0; m < masks && !out[s]; ++m)
        if (good[s * masks + m] && eval(path_, s, m)) out[s] = true;
    return out;
  }

 private:
  void collect(const Qctl& f) {
    if (f->state) return;
    for (const auto& c : f->children) collect(c);
    if (f->kind == QKind::Next || f->kind == QKind::Until) {
      index_[f.get()] = static_cast<int>(elems_.size());
      elems_.push_back(f);
    }
  }

  bool eval(const Qctl& f, int s, int m) const {
    if (f->state) return table_.at(f.get())[s];
    switch (f->kind) {
      case QKind::Not: return !eval(f->children[0], s, m);
      case QKind::Or: return eval(f->children[0], s, m) || eval(f->children[1], s, m);
      case QKind::Next: return (m >> index_.at(f.get())) & 1;
      case QKind::Until:
        return eval(f->children[1], s, m) || (eval(f->children[0], s, m) && ((m >> index_.at(f.get())) & 1));
      default: throw Error("unexpected path formula");
    }
  }

  bool consistent(int m, int s2, int m2) const {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      const Qctl& e = elems_[i];
      bool claimed = (m >> i) & 1;
      bool actual = e->kind == QKind::Next ? eval(e->children[0], s2, m2) : eval(e, s2, m2);
      if (claimed != actual) return false;
    }
    return true;
  }

  static std::vector<int> components(const std::vector<std::vector<int>>& succ) {
    const int n = static_cast<int>(succ.size());
    std::vector<std::vector<int>> pred(n);
    for (int x = 0; x < n; ++x)
      for (int y : succ[x]) pred[y].push_back(x);
    std::vector<char> seen(n, 0);
    std::vector<int> order;
    for (int r = 0; r < n; ++r) {
      if (seen[r]) continue;
      std::vector<std::pair<int, std::size_t>> st{{r, 0}};
      seen[r] = 1;
      while (!st.empty()) {
        auto& [x, i] = st.back();
        if (i < succ[x].size()) {
          int y = succ[x][i++];
          if (!seen[y]) {
            seen[y] = 1;
            st.push_back({y, 0});
          }
        } else {
          order.push_back(x);
          st.pop_back();
        }
      }
    }
    std::vector<int> comp(n, -1);
    int c = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (comp[*it] >= 0) continue;
      std::vector<int> st{*it};
      comp[*it] = c;
      while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int y : pred[x])
          if (comp[y] < 0) {
            comp[y] = c;
            st.push_back(y);
          }
      }
      ++c;
    }
    return comp;
  }

  const Cks& k_;
  Qctl path_;
  const std::map<const QNode*, std::vector<bool>>& table_;
  std::vector<Qctl> elems_;
  std::map<const QNode*, int> index_;
};

class Evaluator {
 public:
  explicit Evaluator(const Cks& k) : k_(k) {}

  const std::vector<bool>& states(const Qctl& f) {
    auto it = table_.find(f.get());
    if (it != table_.end()) return it->second;
    const int n = k_.num_states();
    std::vector<bool> out(n, false);
    switch (f->kind) {
      case QKind::True: out.assign(n, true); break;
      case QKind::Atom:
        for (int s = 0; s < n; ++s) out[s] = k_.has_label(s, f->prop);
        break;
      case QKind::Not: {
        const auto& a = states(f->children[0]);
        for (int s = 0; s < n; ++s) out[s] = !a[s];
        break;
      }
      case QKind::Or: {
        const auto a = states(f->children[0]);
        const auto& b = states(f->children[1]);
        for (int s = 0; s < n; ++s) out[s] = a[s] || b[s];
        break;
      }
      case QKind::E: {
        const Qctl& path = f->children[0];
        if (path->state) {
          out = states(path);
        } else {
          mark_state_nodes(path);
          out = Tableau(k_, path, table_).exists_path();
        }
        break;
      }
      case QKind::Exists: throw Error("propositional quantifier in a CTL* formula");
      default: throw Error("path formula where a state formula is expected");
    }
    return table_[f.get()] = std::move(out);
  }

 private:
  void mark_state_nodes(const Qctl& f) {
    if (f->state) {
      states(f);
      return;
    }
    for (const auto& c : f->children) mark_state_nodes(c);
  }

  const Cks& k_;
  std::map<const QNode*, std::vector<bool>> table_;
};

}  // namespace

std::vector<bool> ctl_star_states(const Cks& k, const Qctl& phi) {
  if (!phi->state) throw Error("CTL* oracle expects a state formula");
  Evaluator e(k);
  return e.states(phi);
}

bool ctl_star_holds(const Cks& k, const Qctl& phi, int state) { return ctl_star_states(k, phi)[state]; }

}  // namespace hiersl::oracle
