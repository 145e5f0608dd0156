#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hiersl/common.hpp"

namespace hiersl {

struct Cks;

/// Direction alphabet L_I = product of the local-state sets of the
/// components in `dims`.  Directions are mixed-radix ids; the first
/// component of `dims` is the least significant digit.  The empty
/// product has the single direction 0 (the blank symbol).
struct DirectionSpace {
  IndexSet dims;
  std::vector<int> radices;

  int size() const;
  int encode(const std::vector<int>& values) const;
  std::vector<int> decode(int id) const;
  /// Table mapping every direction of this space to its narrowing onto
  /// `sub`; `sub.dims` must be a subset of `dims`.
  std::vector<int> projection_to(const DirectionSpace& sub) const;
  /// Sub-space restricted to `keep` (a subset of dims).
  DirectionSpace restrict_to(const IndexSet& keep) const;
  std::string direction_name(int id) const;
  bool operator==(const DirectionSpace&) const = default;
};

DirectionSpace direction_space(const Cks& k, const IndexSet& dims);

/// Finite generator of a regular tree.  Each vertex carries the direction
/// of the nodes it generates and a label; its out-edges are indexed by
/// pairwise distinct child directions.  The tree is the unfolding from
/// `root`.
struct TreeGen {
  DirectionSpace dirs;
  std::vector<std::string> aps;  // label bit i = aps[i]
  int root = 0;
  std::vector<int> vdir;
  std::vector<std::uint64_t> label;
  std::vector<std::vector<std::pair<int, int>>> edges;  // (direction, target), sorted

  int size() const { return static_cast<int>(vdir.size()); }
  int add_vertex(int dir, std::uint64_t lab);
  void add_edge(int from, int dir, int to);
  int child(int v, int dir) const;  // -1 if absent
  bool complete() const;
  bool has_prop(int v, const std::string& p) const;
};

/// Unfolding of `k` from `s` as a generator over L_[n] labelled by k's propositions.
TreeGen unfold_generator(const Cks& k, int s);

/// The complete X-tree with one constant label, rooted in `root_dir`.
TreeGen complete_tree(const DirectionSpace& dirs, std::vector<std::string> aps,
                      std::uint64_t lab, int root_dir);

/// Keeps only vertices reachable from the root, renumbered in BFS order.
TreeGen trim(const TreeGen& t);

/// Narrowing onto J ⊆ dims.  Nodes with equal narrowing are merged; throws
/// if merged nodes disagree on their label (the narrowing is then undefined).
TreeGen narrow_tree(const TreeGen& t, const IndexSet& J);

/// Widening of an L_J-tree to L_I (I ⊇ J): every direction is extended with
/// every local state of I∖J, labels are inherited from the narrowing, and
/// the root's missing components are `fill` (ordered as I∖J).
TreeGen widen_tree(const TreeGen& t, const DirectionSpace& target, const std::vector<int>& fill);

/// Merge of a complete tree `t` and `t2` over the same directions with
/// disjoint propositions: domain of `t2`, union of labels.
TreeGen merge_trees(const TreeGen& t, const TreeGen& t2);

/// Pointwise projection of a tuple over `from` onto `to` ⊆ from.
std::vector<int> narrow_tuple(const std::vector<int>& tuple, const IndexSet& from, const IndexSet& to);

/// Nodes up to depth d of the unfolding, each given as its direction word and label.
struct UnrolledNode {
  std::vector<int> word;
  std::uint64_t label;
};
std::vector<UnrolledNode> unroll(const TreeGen& t, int depth);

}  // namespace hiersl
