#include "hiersl/pbf.hpp"

#include <algorithm>
#include <map>

#include "hiersl/common.hpp"

namespace hiersl {

std::size_t PbfArena::KeyHash::operator()(const std::vector<int>& v) const {
  std::size_t h = 1469598103934665603ULL;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

PbfArena::PbfArena() {
  nodes_.push_back({PbfKind::False, -1, -1, {}});
  nodes_.push_back({PbfKind::True, -1, -1, {}});
}

int PbfArena::intern(PbfNode n) {
  std::vector<int> key;
  key.reserve(n.kids.size() + 3);
  key.push_back(static_cast<int>(n.kind));
  key.push_back(n.dir);
  key.push_back(n.state);
  key.insert(key.end(), n.kids.begin(), n.kids.end());
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  int id = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(n));
  ids_.emplace(std::move(key), id);
  return id;
}

int PbfArena::atom(int dir, int state) { return intern({PbfKind::Atom, dir, state, {}}); }

int PbfArena::conj(std::vector<int> kids) {
  std::vector<int> flat;
  for (int k : kids) {
    if (k == kFalse) return kFalse;
    if (k == kTrue) continue;
    if (nodes_[k].kind == PbfKind::And) {
      flat.insert(flat.end(), nodes_[k].kids.begin(), nodes_[k].kids.end());
    } else {
      flat.push_back(k);
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return kTrue;
  if (flat.size() == 1) return flat[0];
  return intern({PbfKind::And, -1, -1, std::move(flat)});
}

int PbfArena::disj(std::vector<int> kids) {
  std::vector<int> flat;
  for (int k : kids) {
    if (k == kTrue) return kTrue;
    if (k == kFalse) continue;
    if (nodes_[k].kind == PbfKind::Or) {
      flat.insert(flat.end(), nodes_[k].kids.begin(), nodes_[k].kids.end());
    } else {
      flat.push_back(k);
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return kFalse;
  if (flat.size() == 1) return flat[0];
  return intern({PbfKind::Or, -1, -1, std::move(flat)});
}

int PbfArena::import(const PbfArena& src, int id, const std::function<int(int, int)>& map_atom,
                     bool dual, std::unordered_map<int, int>& memo) {
  auto it = memo.find(id);
  if (it != memo.end()) return it->second;
  const PbfNode& n = src.node(id);
  int out = kFalse;
  switch (n.kind) {
    case PbfKind::False:
      out = dual ? kTrue : kFalse;
      break;
    case PbfKind::True:
      out = dual ? kFalse : kTrue;
      break;
    case PbfKind::Atom:
      out = map_atom(n.dir, n.state);
      break;
    case PbfKind::And:
    case PbfKind::Or: {
      std::vector<int> kids;
      kids.reserve(n.kids.size());
      for (int k : n.kids) kids.push_back(import(src, k, map_atom, dual, memo));
      bool as_and = (n.kind == PbfKind::And) != dual;
      out = as_and ? conj(std::move(kids)) : disj(std::move(kids));
      break;
    }
  }
  memo.emplace(id, out);
  return out;
}

void keep_minimal(std::vector<PbfModel>& sets) {
  std::sort(sets.begin(), sets.end(), [](const PbfModel& a, const PbfModel& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<PbfModel> kept;
  for (auto& s : sets) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.size() < s.size() && std::includes(s.begin(), s.end(), k.begin(), k.end())) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(std::move(s));
  }
  sets = std::move(kept);
}

std::vector<PbfModel> PbfArena::minimal_models(int id, std::size_t cap) const {
  std::map<int, std::vector<PbfModel>> memo;
  std::function<const std::vector<PbfModel>&(int)> rec = [&](int f) -> const std::vector<PbfModel>& {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    const PbfNode& n = nodes_[f];
    std::vector<PbfModel> out;
    switch (n.kind) {
      case PbfKind::False:
        break;
      case PbfKind::True:
        out.push_back({});
        break;
      case PbfKind::Atom:
        out.push_back({{n.dir, n.state}});
        break;
      case PbfKind::Or:
        for (int k : n.kids) {
          const auto& sub = rec(k);
          out.insert(out.end(), sub.begin(), sub.end());
        }
        keep_minimal(out);
        break;
      case PbfKind::And: {
        out.push_back({});
        for (int k : n.kids) {
          const auto& sub = rec(k);
          std::vector<PbfModel> next;
          for (const auto& a : out)
            for (const auto& b : sub) {
              PbfModel m;
              std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
              next.push_back(std::move(m));
              if (next.size() > cap) throw Error("positive boolean formula has too many models");
            }
          keep_minimal(next);
          out = std::move(next);
          if (out.empty()) break;
        }
        break;
      }
    }
    if (out.size() > cap) throw Error("positive boolean formula has too many models");
    return memo.emplace(f, std::move(out)).first->second;
  };
  return rec(id);
}

void PbfArena::atoms_of(int id, std::vector<PbfAtom>& out) const {
  const PbfNode& n = nodes_[id];
  if (n.kind == PbfKind::Atom) out.push_back({n.dir, n.state});
  for (int k : n.kids) atoms_of(k, out);
}

std::string PbfArena::to_string(int id, const std::function<std::string(int)>& dir_name) const {
  const PbfNode& n = nodes_[id];
  switch (n.kind) {
    case PbfKind::False:
      return "false";
    case PbfKind::True:
      return "true";
    case PbfKind::Atom:
      return "[" + (dir_name ? dir_name(n.dir) : std::to_string(n.dir)) + ", q" +
             std::to_string(n.state) + "]";
    case PbfKind::And:
    case PbfKind::Or: {
      std::string sep = n.kind == PbfKind::And ? " & " : " | ";
      std::string out = "(";
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        if (i) out += sep;
        out += to_string(n.kids[i], dir_name);
      }
      return out + ")";
    }
  }
  return "?";
}

}  // namespace hiersl
