#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hiersl {

/// Büchi layering of a max-even parity automaton.  NBW state
/// (q, mode) is encoded as q * modes + mode, where mode 0 is the guessing
/// phase and mode k+1 commits to the k-th even color: from then on no color
/// above it may occur, and visiting it is accepting.
class ParityLayers {
 public:
  explicit ParityLayers(std::vector<int> colors);

  int modes() const { return static_cast<int>(evens_.size()) + 1; }
  int size() const { return static_cast<int>(colors_.size()) * modes(); }
  int state_of(int nbw) const { return nbw / modes(); }
  bool accepting(int nbw) const;
  /// NBW states entered when the parity run enters q from the guessing phase.
  void enter(int q, std::vector<int>& out) const;
  /// Successors of `nbw` given the parity successors of its state.
  void lift(int nbw, const std::vector<int>& succ, std::vector<int>& out) const;

 private:
  std::vector<int> colors_;
  std::vector<int> evens_;
};

/// Compact Safra tree (Piterman).  Nodes are stored in preorder; children
/// are ordered oldest first, which coincides with increasing names.
struct SafraTree {
  struct Node {
    int name;
    std::vector<int> label;  // sorted NBW states
    std::vector<int> children;
  };
  std::vector<Node> nodes;  // nodes[0] is the root when nonempty

  bool empty() const { return nodes.empty(); }
  /// Set of NBW states at the root.
  const std::vector<int>& root_label() const;
  std::string key() const;
};

SafraTree safra_initial(std::vector<int> states);

/// One determinization step.  `succ(q, out)` appends the NBW successors of
/// q on the current letter.  Returns the next tree and sets `priority` to
/// the min-parity value (odd = some node removed first, even = some node
/// turned green first, 2N+1 when nothing happened), with N = `max_names`.
SafraTree safra_step(const SafraTree& t, const std::function<void(int, std::vector<int>&)>& succ,
                     const std::function<bool(int)>& accepting, int max_names, int& priority);

/// Max-even color of a transition with min-parity value p.
inline int safra_color(int p, int max_names) { return 2 * max_names + 2 - p; }

}  // namespace hiersl
