#include "hiersl/safra.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace hiersl {

ParityLayers::ParityLayers(std::vector<int> colors) : colors_(std::move(colors)) {
  for (int c : colors_)
    if (c % 2 == 0) evens_.push_back(c);
  std::sort(evens_.begin(), evens_.end());
  evens_.erase(std::unique(evens_.begin(), evens_.end()), evens_.end());
}

bool ParityLayers::accepting(int nbw) const {
  int mode = nbw % modes();
  return mode > 0 && colors_[state_of(nbw)] == evens_[mode - 1];
}

void ParityLayers::enter(int q, std::vector<int>& out) const {
  out.push_back(q * modes());
  for (std::size_t k = 0; k < evens_.size(); ++k)
    if (evens_[k] >= colors_[q]) out.push_back(q * modes() + static_cast<int>(k) + 1);
}

void ParityLayers::lift(int nbw, const std::vector<int>& succ, std::vector<int>& out) const {
  int mode = nbw % modes();
  for (int q : succ) {
    if (mode == 0) enter(q, out);
    else if (colors_[q] <= evens_[mode - 1]) out.push_back(q * modes() + mode);
  }
}

const std::vector<int>& SafraTree::root_label() const {
  static const std::vector<int> kEmpty;
  return nodes.empty() ? kEmpty : nodes[0].label;
}

std::string SafraTree::key() const {
  std::string out;
  for (const auto& n : nodes) {
    out += std::to_string(n.name) + "[";
    for (int q : n.label) out += std::to_string(q) + ",";
    out += "]{";
    for (int c : n.children) out += std::to_string(c) + ",";
    out += "}";
  }
  return out;
}

SafraTree safra_initial(std::vector<int> states) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  SafraTree t;
  if (!states.empty()) t.nodes.push_back({1, std::move(states), {}});
  return t;
}

namespace {

struct WorkNode {
  int name;
  bool fresh;
  bool alive = true;
  bool green = false;
  std::vector<int> label;
  std::vector<int> children;  // indices into the work vector, oldest first
};

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_inter(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SafraTree safra_step(const SafraTree& t, const std::function<void(int, std::vector<int>&)>& succ,
                     const std::function<bool(int)>& accepting, int max_names, int& priority) {
  priority = 2 * max_names + 1;
  if (t.empty()) return t;

  std::vector<WorkNode> w;
  int next_name = 0;
  for (const auto& n : t.nodes) {
    w.push_back({n.name, false, true, false, n.label, n.children});
    next_name = std::max(next_name, n.name + 1);
  }

  // Branch: accepting states spawn a youngest child.
  const std::size_t existing = w.size();
  for (std::size_t i = 0; i < existing; ++i) {
    std::vector<int> acc;
    for (int q : w[i].label)
      if (accepting(q)) acc.push_back(q);
    if (acc.empty()) continue;
    w.push_back({next_name++, true, true, false, std::move(acc), {}});
    w[i].children.push_back(static_cast<int>(w.size()) - 1);
  }

  // Update labels along the letter.
  std::map<int, std::vector<int>> cache;
  for (auto& n : w) {
    std::vector<int> out;
    for (int q : n.label) {
      auto it = cache.find(q);
      if (it == cache.end()) {
        std::vector<int> s;
        succ(q, s);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        it = cache.emplace(q, std::move(s)).first;
      }
      out.insert(out.end(), it->second.begin(), it->second.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    n.label = std::move(out);
  }

  // Horizontal merge: a state stays only in the oldest branch holding it.
  std::function<void(int, const std::vector<int>&)> trim = [&](int v, const std::vector<int>& allowed) {
    w[v].label = set_inter(w[v].label, allowed);
    std::vector<int> rem = w[v].label;
    for (int c : w[v].children) {
      trim(c, rem);
      rem = set_minus(rem, w[c].label);
    }
  };
  trim(0, w[0].label);

  int min_removed = INT_MAX, min_green = INT_MAX;
  std::function<void(int)> kill = [&](int v) {
    w[v].alive = false;
    if (!w[v].fresh) min_removed = std::min(min_removed, w[v].name);
    for (int c : w[v].children) kill(c);
  };

  // Remove empty nodes.
  for (std::size_t v = 0; v < w.size(); ++v)
    if (w[v].alive && w[v].label.empty()) kill(static_cast<int>(v));

  // Vertical merge.
  std::function<void(int)> vertical = [&](int v) {
    if (!w[v].alive) return;
    std::vector<int> below;
    bool any = false;
    for (int c : w[v].children)
      if (w[c].alive) {
        any = true;
        below.insert(below.end(), w[c].label.begin(), w[c].label.end());
      }
    std::sort(below.begin(), below.end());
    if (any && below == w[v].label) {
      for (int c : w[v].children)
        if (w[c].alive) kill(c);
      w[v].green = true;
      min_green = std::min(min_green, w[v].name);
      return;
    }
    for (int c : w[v].children) vertical(c);
  };
  if (w[0].alive) vertical(0);

  if (min_removed != INT_MAX && min_removed <= min_green) priority = 2 * min_removed - 1;
  else if (min_green != INT_MAX) priority = 2 * min_green;

  SafraTree out;
  if (!w[0].alive) return out;
  std::vector<int> names;
  for (const auto& n : w)
    if (n.alive) names.push_back(n.name);
  std::sort(names.begin(), names.end());
  auto rename = [&](int name) {
    return static_cast<int>(std::lower_bound(names.begin(), names.end(), name) - names.begin()) + 1;
  };
  std::function<int(int)> emit = [&](int v) {
    int id = static_cast<int>(out.nodes.size());
    out.nodes.push_back({rename(w[v].name), w[v].label, {}});
    std::vector<int> kids;
    for (int c : w[v].children)
      if (w[c].alive) kids.push_back(c);
    std::sort(kids.begin(), kids.end(), [&](int a, int b) { return w[a].name < w[b].name; });
    for (int c : kids) {
      int cid = emit(c);
      out.nodes[id].children.push_back(cid);
    }
    return id;
  };
  emit(0);
  return out;
}

}  // namespace hiersl
