#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hiersl {

enum class PbfKind : std::uint8_t { False, True, Atom, And, Or };

struct PbfNode {
  PbfKind kind;
  int dir = -1;    // Atom
  int state = -1;  // Atom
  std::vector<int> kids;
};

using PbfAtom = std::pair<int, int>;  // (direction, state)
using PbfModel = std::vector<PbfAtom>;  // sorted

/// Hash-consed negation-free boolean formulas over (direction, state)
/// atoms.  Ids 0 and 1 are false and true.  And/Or nodes are flattened,
/// sorted and deduplicated, then constant-folded on construction.
class PbfArena {
 public:
  static constexpr int kFalse = 0;
  static constexpr int kTrue = 1;

  PbfArena();

  int atom(int dir, int state);
  int conj(std::vector<int> kids);
  int disj(std::vector<int> kids);
  int conj(int a, int b) { return conj(std::vector<int>{a, b}); }
  int disj(int a, int b) { return disj(std::vector<int>{a, b}); }

  const PbfNode& node(int id) const { return nodes_[id]; }
  int size() const { return static_cast<int>(nodes_.size()); }

  /// Rebuilds formula `id` of `src` in this arena, atoms mapped through `map_atom`
  /// (which returns a formula id of this arena).  Swaps ∧/∨ and ⊤/⊥ if `dual`.
  int import(const PbfArena& src, int id, const std::function<int(int, int)>& map_atom, bool dual,
             std::unordered_map<int, int>& memo);

  /// Subset-minimal satisfying sets of atoms.  Throws Error beyond `cap` models.
  std::vector<PbfModel> minimal_models(int id, std::size_t cap = 100000) const;

  /// All atoms occurring in `id`.
  void atoms_of(int id, std::vector<PbfAtom>& out) const;

  std::string to_string(int id, const std::function<std::string(int)>& dir_name = nullptr) const;

 private:
  int intern(PbfNode n);

  struct KeyHash {
    std::size_t operator()(const std::vector<int>& v) const;
  };
  std::vector<PbfNode> nodes_;
  std::unordered_map<std::vector<int>, int, KeyHash> ids_;
};

/// Removes duplicates and every set that strictly contains another one.
void keep_minimal(std::vector<PbfModel>& sets);

}  // namespace hiersl
