#include "hiersl/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "hiersl/cks.hpp"

namespace hiersl {

int DirectionSpace::size() const {
  long long s = 1;
  for (int r : radices) {
    s *= r;
    if (s > (1LL << 30)) throw Error("direction alphabet too large");
  }
  return static_cast<int>(s);
}

int DirectionSpace::encode(const std::vector<int>& values) const {
  int id = 0;
  for (int i = static_cast<int>(radices.size()) - 1; i >= 0; --i) id = id * radices[i] + values[i];
  return id;
}

std::vector<int> DirectionSpace::decode(int id) const {
  std::vector<int> out(radices.size());
  for (std::size_t i = 0; i < radices.size(); ++i) {
    out[i] = id % radices[i];
    id /= radices[i];
  }
  return out;
}

std::vector<int> DirectionSpace::projection_to(const DirectionSpace& sub) const {
  if (!index_subset(sub.dims, dims))
    throw Error("cannot narrow " + index_set_to_string(dims) + " to " +
                index_set_to_string(sub.dims));
  std::vector<int> table(size());
  for (int d = 0; d < size(); ++d)
    table[d] = sub.encode(narrow_tuple(decode(d), dims, sub.dims));
  return table;
}

DirectionSpace DirectionSpace::restrict_to(const IndexSet& keep) const {
  if (!index_subset(keep, dims))
    throw Error("cannot narrow " + index_set_to_string(dims) + " to " + index_set_to_string(keep));
  DirectionSpace out;
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (std::binary_search(keep.begin(), keep.end(), dims[i])) {
      out.dims.push_back(dims[i]);
      out.radices.push_back(radices[i]);
    }
  return out;
}

std::string DirectionSpace::direction_name(int id) const {
  if (dims.empty()) return "<>";
  auto vals = decode(id);
  std::string out = "<";
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dims[i]) + ":" + std::to_string(vals[i]);
  }
  return out + ">";
}

DirectionSpace direction_space(const Cks& k, const IndexSet& dims) {
  DirectionSpace d;
  d.dims = dims;
  for (int i : dims) {
    if (i < 1 || i > k.n()) throw Error("component index " + std::to_string(i) + " outside [n]");
    d.radices.push_back(static_cast<int>(k.components[i - 1].size()));
  }
  return d;
}

std::vector<int> narrow_tuple(const std::vector<int>& tuple, const IndexSet& from,
                              const IndexSet& to) {
  if (!index_subset(to, from))
    throw Error("cannot narrow " + index_set_to_string(from) + " to " + index_set_to_string(to));
  std::vector<int> out;
  out.reserve(to.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < from.size() && j < to.size(); ++i)
    if (from[i] == to[j]) {
      out.push_back(tuple[i]);
      ++j;
    }
  return out;
}

int TreeGen::add_vertex(int dir, std::uint64_t lab) {
  vdir.push_back(dir);
  label.push_back(lab);
  edges.emplace_back();
  return size() - 1;
}

void TreeGen::add_edge(int from, int dir, int to) {
  auto& es = edges[from];
  auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(dir, -1));
  if (it != es.end() && it->first == dir) {
    if (it->second != to) throw Error("generator vertex has two children in one direction");
    return;
  }
  es.insert(it, {dir, to});
}

int TreeGen::child(int v, int dir) const {
  const auto& es = edges[v];
  auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(dir, -1));
  return (it != es.end() && it->first == dir) ? it->second : -1;
}

bool TreeGen::complete() const {
  int n = dirs.size();
  for (const auto& es : edges)
    if (static_cast<int>(es.size()) != n) return false;
  return true;
}

bool TreeGen::has_prop(int v, const std::string& p) const {
  for (std::size_t i = 0; i < aps.size(); ++i)
    if (aps[i] == p) return (label[v] >> i) & 1U;
  return false;
}

TreeGen unfold_generator(const Cks& k, int s) {
  if (k.propositions.size() > 64) throw Error("more than 64 propositions");
  TreeGen t;
  t.dirs = direction_space(k, index_range(k.n()));
  t.aps = k.propositions;
  for (int q = 0; q < k.num_states(); ++q) {
    std::uint64_t lab = 0;
    for (std::size_t i = 0; i < t.aps.size(); ++i)
      if (k.has_label(q, t.aps[i])) lab |= std::uint64_t{1} << i;
    t.add_vertex(t.dirs.encode(k.states[q]), lab);
  }
  for (int q = 0; q < k.num_states(); ++q)
    for (int r : k.succ[q]) t.add_edge(q, t.vdir[r], r);
  t.root = s;
  return trim(t);
}

TreeGen complete_tree(const DirectionSpace& dirs, std::vector<std::string> aps, std::uint64_t lab,
                      int root_dir) {
  TreeGen t;
  t.dirs = dirs;
  t.aps = std::move(aps);
  int n = dirs.size();
  for (int d = 0; d < n; ++d) t.add_vertex(d, lab);
  for (int v = 0; v < n; ++v)
    for (int d = 0; d < n; ++d) t.edges[v].push_back({d, d});
  t.root = root_dir;
  return t;
}

TreeGen trim(const TreeGen& t) {
  std::vector<int> id(t.size(), -1);
  std::vector<int> order{t.root};
  id[t.root] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto [d, w] : t.edges[order[i]])
      if (id[w] < 0) {
        id[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
  TreeGen out;
  out.dirs = t.dirs;
  out.aps = t.aps;
  for (int v : order) out.add_vertex(t.vdir[v], t.label[v]);
  for (int v : order)
    for (auto [d, w] : t.edges[v]) out.edges[id[v]].push_back({d, id[w]});
  out.root = 0;
  return out;
}

TreeGen narrow_tree(const TreeGen& t, const IndexSet& J) {
  DirectionSpace sub = t.dirs.restrict_to(J);
  std::vector<int> proj = t.dirs.projection_to(sub);
  TreeGen out;
  out.dirs = sub;
  out.aps = t.aps;
  std::map<std::vector<int>, int> ids;
  std::deque<std::vector<int>> work;
  auto intern = [&](std::vector<int> set, int dir) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    auto it = ids.find(set);
    if (it != ids.end()) return it->second;
    std::uint64_t lab = t.label[set[0]];
    for (int v : set)
      if (t.label[v] != lab) throw Error("narrowing undefined: merged nodes carry different labels");
    int id = out.add_vertex(dir, lab);
    ids.emplace(set, id);
    work.push_back(set);
    return id;
  };
  out.root = intern({t.root}, proj[t.vdir[t.root]]);
  while (!work.empty()) {
    std::vector<int> set = work.front();
    work.pop_front();
    int from = ids[set];
    std::map<int, std::vector<int>> by_dir;
    for (int v : set)
      for (auto [d, w] : t.edges[v]) by_dir[proj[d]].push_back(w);
    for (auto& [d, targets] : by_dir) out.add_edge(from, d, intern(targets, d));
  }
  return out;
}

TreeGen widen_tree(const TreeGen& t, const DirectionSpace& target, const std::vector<int>& fill) {
  if (!index_subset(t.dirs.dims, target.dims)) throw Error("widening target does not contain tree directions");
  IndexSet extra;
  std::set_difference(target.dims.begin(), target.dims.end(), t.dirs.dims.begin(),
                      t.dirs.dims.end(), std::back_inserter(extra));
  if (fill.size() != extra.size()) throw Error("widening fill has wrong dimension");
  DirectionSpace ext = target.restrict_to(extra);
  auto combine = [&](int d, int y) {
    std::vector<int> a = t.dirs.decode(d), b = ext.decode(y), vals;
    std::size_t i = 0, j = 0;
    for (int c : target.dims) {
      if (i < t.dirs.dims.size() && t.dirs.dims[i] == c) vals.push_back(a[i++]);
      else vals.push_back(b[j++]);
    }
    return target.encode(vals);
  };
  int ny = ext.size();
  TreeGen out;
  out.dirs = target;
  out.aps = t.aps;
  for (int v = 0; v < t.size(); ++v)
    for (int y = 0; y < ny; ++y) out.add_vertex(combine(t.vdir[v], y), t.label[v]);
  for (int v = 0; v < t.size(); ++v)
    for (int y = 0; y < ny; ++y)
      for (auto [d, w] : t.edges[v])
        for (int y2 = 0; y2 < ny; ++y2) out.add_edge(v * ny + y, combine(d, y2), w * ny + y2);
  out.root = t.root * ny + ext.encode(fill);
  return trim(out);
}

TreeGen merge_trees(const TreeGen& t, const TreeGen& t2) {
  if (!(t.dirs == t2.dirs)) throw Error("merge requires equal direction alphabets");
  for (const auto& p : t.aps)
    if (std::find(t2.aps.begin(), t2.aps.end(), p) != t2.aps.end())
      throw Error("merge requires disjoint propositions (shared: " + p + ")");
  if (t.aps.size() + t2.aps.size() > 64) throw Error("more than 64 propositions");
  TreeGen out;
  out.dirs = t.dirs;
  out.aps = t.aps;
  out.aps.insert(out.aps.end(), t2.aps.begin(), t2.aps.end());
  std::map<std::pair<int, int>, int> ids;
  std::deque<std::pair<int, int>> work;
  auto intern = [&](int a, int b) {
    auto it = ids.find({a, b});
    if (it != ids.end()) return it->second;
    int id = out.add_vertex(t2.vdir[b], t.label[a] | (t2.label[b] << t.aps.size()));
    ids.emplace(std::make_pair(a, b), id);
    work.push_back({a, b});
    return id;
  };
  out.root = intern(t.root, t2.root);
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    int from = ids[{a, b}];
    for (auto [d, w] : t2.edges[b]) {
      int ca = t.child(a, d);
      if (ca < 0) throw Error("merge requires the first tree to be complete");
      out.add_edge(from, d, intern(ca, w));
    }
  }
  return out;
}

std::vector<UnrolledNode> unroll(const TreeGen& t, int depth) {
  std::vector<UnrolledNode> out;
  std::vector<std::pair<std::vector<int>, int>> frontier{{{t.vdir[t.root]}, t.root}};
  for (int k = 0; k <= depth; ++k) {
    std::vector<std::pair<std::vector<int>, int>> next;
    for (auto& [word, v] : frontier) {
      out.push_back({word, t.label[v]});
      if (k == depth) continue;
      for (auto [d, w] : t.edges[v]) {
        auto w2 = word;
        w2.push_back(d);
        next.push_back({std::move(w2), w});
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const UnrolledNode& a, const UnrolledNode& b) {
    return a.word < b.word;
  });
  return out;
}

}  // namespace hiersl
