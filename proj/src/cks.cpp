#include "hiersl/cks.hpp"

#include <algorithm>
#include <set>

namespace hiersl {

bool Cks::has_label(int s, const std::string& p) const {
  return std::binary_search(labels[s].begin(), labels[s].end(), p);
}

std::vector<int> Cks::project(int s, const IndexSet& dims) const {
  std::vector<int> out;
  out.reserve(dims.size());
  for (int i : dims) out.push_back(states[s][i - 1]);
  return out;
}

std::string Cks::state_name(int s) const {
  std::string out = "(";
  for (int i = 0; i < n(); ++i) {
    if (i) out += ",";
    out += components[i][states[s][i]];
  }
  return out + ")";
}

std::vector<std::string> validate_cks(const Cks& k) {
  std::vector<std::string> errs;
  if (k.states.empty()) return {"no states declared"};
  if (k.initial < 0 || k.initial >= k.num_states()) errs.push_back("initial state out of range");
  std::set<std::vector<int>> seen;
  for (int s = 0; s < k.num_states(); ++s) {
    const auto& t = k.states[s];
    if (static_cast<int>(t.size()) != k.n()) {
      errs.push_back("state " + std::to_string(s) + " has arity " + std::to_string(t.size()) +
                     ", expected " + std::to_string(k.n()));
      continue;
    }
    for (int i = 0; i < k.n(); ++i)
      if (t[i] < 0 || t[i] >= static_cast<int>(k.components[i].size()))
        errs.push_back("state " + std::to_string(s) + " component " + std::to_string(i + 1) +
                       " out of range");
    if (!seen.insert(t).second) errs.push_back("duplicate state tuple at " + std::to_string(s));
  }
  if (static_cast<int>(k.succ.size()) != k.num_states()) {
    errs.push_back("edge table does not cover all states");
  } else {
    for (int s = 0; s < k.num_states(); ++s) {
      if (k.succ[s].empty())
        errs.push_back("state " + std::to_string(s) + " has no successor (R must be left-total)");
      for (int t : k.succ[s])
        if (t < 0 || t >= k.num_states())
          errs.push_back("edge from " + std::to_string(s) + " to unknown state");
    }
  }
  if (static_cast<int>(k.labels.size()) != k.num_states())
    errs.push_back("labels do not cover all states");
  for (std::size_t i = 0; i < k.components.size(); ++i)
    if (k.components[i].empty())
      errs.push_back("component " + std::to_string(i + 1) + " has no local states");
  return errs;
}

}  // namespace hiersl
