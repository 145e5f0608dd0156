#include "hiersl/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hiersl {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const char* key, std::vector<std::string>& errs,
                                     bool required = true) {
  std::vector<std::string> out;
  if (!j.contains(key)) {
    if (required) errs.push_back(std::string("missing field '") + key + "'");
    return out;
  }
  if (!j[key].is_array()) {
    errs.push_back(std::string("field '") + key + "' must be a list of strings");
    return out;
  }
  for (const auto& x : j[key]) {
    if (!x.is_string()) errs.push_back(std::string("field '") + key + "' must contain strings");
    else out.push_back(x.get<std::string>());
  }
  return out;
}

int lookup(const std::vector<std::string>& names, const std::string& x) {
  auto it = std::find(names.begin(), names.end(), x);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

Cgsi cgsi_from_json(const json& j) {
  std::vector<std::string> errs;
  Cgsi g;
  g.agents = string_list(j, "agents", errs);
  g.actions = string_list(j, "actions", errs);
  g.positions = string_list(j, "positions", errs);
  g.propositions = string_list(j, "propositions", errs, false);
  g.variables = string_list(j, "variables", errs, false);
  if (!errs.empty()) throw ModelError(errs);
  const int nv = g.num_positions();

  if (!j.contains("initial") || !j["initial"].is_string()) {
    errs.push_back("missing field 'initial' (position name)");
  } else {
    g.initial = lookup(g.positions, j["initial"].get<std::string>());
    if (g.initial < 0) errs.push_back("initial position '" + j["initial"].get<std::string>() + "' undeclared");
  }

  g.labels.assign(nv, {});
  if (j.contains("labels")) {
    for (auto& [pos, props] : j["labels"].items()) {
      int v = lookup(g.positions, pos);
      if (v < 0) {
        errs.push_back("labels for undeclared position '" + pos + "'");
        continue;
      }
      for (const auto& p : props) g.labels[v].push_back(p.get<std::string>());
      std::sort(g.labels[v].begin(), g.labels[v].end());
    }
  }

  g.delta.assign(nv, std::vector<int>(g.num_agents() && !g.actions.empty() ? g.joint_count() : 0, -1));
  if (j.contains("transitions")) {
    for (const auto& tr : j["transitions"]) {
      int from = lookup(g.positions, tr.value("from", std::string()));
      int to = lookup(g.positions, tr.value("to", std::string()));
      if (from < 0 || to < 0) {
        errs.push_back("transition with undeclared endpoint: " + tr.dump());
        continue;
      }
      std::vector<int> fixed(g.agents.size(), -1);
      bool ok = true;
      if (tr.contains("actions")) {
        for (auto& [agent, act] : tr["actions"].items()) {
          int a = g.agent_index(agent);
          int m = act.is_string() ? g.action_index(act.get<std::string>()) : -1;
          if (a < 0 || m < 0) {
            errs.push_back("transition with unknown agent or action: " + tr.dump());
            ok = false;
            break;
          }
          fixed[a] = m;
        }
      }
      if (!ok) continue;
      for (int c = 0; c < g.joint_count(); ++c) {
        auto acts = g.decode_joint(c);
        bool match = true;
        for (int a = 0; a < g.num_agents(); ++a)
          if (fixed[a] >= 0 && fixed[a] != acts[a]) match = false;
        if (!match) continue;
        int& slot = g.delta[from][c];
        if (slot >= 0 && slot != to) {
          errs.push_back("conflicting transitions from " + g.positions[from] + " to " +
                         g.positions[slot] + " and " + g.positions[to]);
        }
        slot = to;
      }
    }
  }

  if (j.contains("observations")) {
    for (auto& [name, blocks] : j["observations"].items()) {
      std::vector<std::vector<int>> bs;
      std::vector<int> seen(nv, 0);
      for (const auto& b : blocks) {
        std::vector<int> block;
        for (const auto& x : b) {
          int v = lookup(g.positions, x.get<std::string>());
          if (v < 0) {
            errs.push_back("observation " + name + " mentions undeclared position");
          } else {
            if (seen[v]++ == 1) errs.push_back("observation " + name + " puts " + g.positions[v] + " in two blocks");
            block.push_back(v);
          }
        }
        bs.push_back(block);
      }
      set_observation_blocks(g, name, bs);
    }
  }
  for (std::string& e : validate_cgsi(g))
    if (std::find(errs.begin(), errs.end(), e) == errs.end()) errs.push_back(std::move(e));
  if (!errs.empty()) throw ModelError(errs);
  g.finalize();
  return g;
}

Cks cks_from_json(const json& j) {
  std::vector<std::string> errs;
  Cks k;
  if (!j.contains("components") || !j["components"].is_array()) throw ModelError({"missing field 'components'"});
  for (const auto& c : j["components"]) {
    std::vector<std::string> vals;
    for (const auto& x : c) vals.push_back(x.get<std::string>());
    k.components.push_back(vals);
  }
  k.propositions = string_list(j, "propositions", errs, false);
  if (!j.contains("states")) throw ModelError({"missing field 'states'"});
  for (const auto& st : j["states"]) {
    std::vector<int> tuple;
    for (std::size_t i = 0; i < st.size(); ++i) {
      if (i >= k.components.size()) break;
      int v = st[i].is_number() ? st[i].get<int>() : lookup(k.components[i], st[i].get<std::string>());
      if (v < 0) errs.push_back("state " + st.dump() + " uses an undeclared local state");
      tuple.push_back(v);
    }
    if (st.size() != k.components.size())
      errs.push_back("state " + st.dump() + " has wrong arity");
    k.states.push_back(tuple);
  }
  k.initial = j.value("initial", 0);
  k.succ.assign(k.states.size(), {});
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      int a = e[0].get<int>(), b = e[1].get<int>();
      if (a < 0 || b < 0 || a >= k.num_states() || b >= k.num_states()) {
        errs.push_back("edge " + e.dump() + " out of range");
        continue;
      }
      k.succ[a].push_back(b);
    }
  }
  for (auto& s : k.succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  k.labels.assign(k.states.size(), {});
  if (j.contains("labels")) {
    std::size_t i = 0;
    for (const auto& l : j["labels"]) {
      if (i >= k.labels.size()) {
        errs.push_back("more label lists than states");
        break;
      }
      for (const auto& p : l) k.labels[i].push_back(p.get<std::string>());
      std::sort(k.labels[i].begin(), k.labels[i].end());
      ++i;
    }
  }
  if (k.propositions.empty()) {
    std::set<std::string> ps;
    for (const auto& l : k.labels) ps.insert(l.begin(), l.end());
    k.propositions.assign(ps.begin(), ps.end());
  }
  if (!errs.empty()) throw ModelError(errs);
  auto problems = validate_cks(k);
  if (!problems.empty()) throw ModelError(problems);
  return k;
}

}  // namespace

Model parse_model(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ModelError({std::string("malformed JSON: ") + e.what()});
  }
  Model m;
  std::string type = j.value("type", std::string("cgsi"));
  try {
    if (type == "cgsi") {
      m.kind = Model::Kind::Game;
      m.game = cgsi_from_json(j);
    } else if (type == "cks") {
      m.kind = Model::Kind::Kripke;
      m.cks = cks_from_json(j);
    } else {
      throw ModelError({"unknown model type '" + type + "'"});
    }
  } catch (const json::exception& e) {
    throw ModelError({std::string("ill-typed field: ") + e.what()});
  }
  return m;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Model load_model(const std::string& path) { return parse_model(read_text_file(path)); }

std::string cgsi_to_json(const Cgsi& g) {
  json j;
  j["type"] = "cgsi";
  j["agents"] = g.agents;
  j["actions"] = g.actions;
  j["positions"] = g.positions;
  j["initial"] = g.positions[g.initial];
  j["propositions"] = g.propositions;
  json labels = json::object();
  for (int v = 0; v < g.num_positions(); ++v) labels[g.positions[v]] = g.labels[v];
  j["labels"] = labels;
  json trs = json::array();
  for (int v = 0; v < g.num_positions(); ++v)
    for (int c = 0; c < g.joint_count(); ++c) {
      json acts = json::object();
      auto dec = g.decode_joint(c);
      for (int a = 0; a < g.num_agents(); ++a) acts[g.agents[a]] = g.actions[dec[a]];
      trs.push_back({{"from", g.positions[v]}, {"actions", acts}, {"to", g.positions[g.delta[v][c]]}});
    }
  j["transitions"] = trs;
  json obs = json::object();
  for (std::size_t o = 0; o < g.obs_names.size(); ++o) {
    std::map<int, std::vector<std::string>> blocks;
    for (int v = 0; v < g.num_positions(); ++v) blocks[g.obs_class[o][v]].push_back(g.positions[v]);
    json bs = json::array();
    for (auto& [c, b] : blocks) bs.push_back(b);
    obs[g.obs_names[o]] = bs;
  }
  j["observations"] = obs;
  return j.dump(2);
}

std::string cks_to_json(const Cks& k) {
  json j;
  j["type"] = "cks";
  j["components"] = k.components;
  json states = json::array();
  for (const auto& t : k.states) {
    json tuple = json::array();
    for (int i = 0; i < k.n(); ++i) tuple.push_back(k.components[i][t[i]]);
    states.push_back(tuple);
  }
  j["states"] = states;
  j["initial"] = k.initial;
  json edges = json::array();
  for (int s = 0; s < k.num_states(); ++s)
    for (int t : k.succ[s]) edges.push_back({s, t});
  j["edges"] = edges;
  j["labels"] = k.labels;
  j["propositions"] = k.propositions;
  return j.dump(2);
}

}  // namespace hiersl
