#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hiersl/qctl.hpp"

namespace hiersl {

// Parity convention for every automaton in this library: a run is
// accepting iff the maximal color seen infinitely often is even.

/// Conjunction of literals over letter bits.
struct Cube {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
  bool admits(std::uint64_t letter) const { return (letter & pos) == pos && (letter & neg) == 0; }
  bool operator==(const Cube&) const = default;
};

struct NpwEdge {
  Cube guard;
  int to;
};

/// Nondeterministic parity word automaton over letters 2^{atoms}; edges
/// carry cube guards, Δ(q,a) = { to | guard admits a }.
struct Npw {
  std::vector<std::string> atom_names;
  int initial = 0;
  std::vector<int> color;
  std::vector<std::vector<NpwEdge>> edges;

  int size() const { return static_cast<int>(color.size()); }
  int num_atoms() const { return static_cast<int>(atom_names.size()); }
  std::vector<int> successors(int q, std::uint64_t letter) const;
};

/// Deterministic complete parity word automaton; `next[q][letter]`.
struct Dpw {
  int num_atoms = 0;
  int initial = 0;
  std::vector<int> color;
  std::vector<std::vector<int>> next;

  int size() const { return static_cast<int>(color.size()); }
};

using Word = std::vector<std::uint64_t>;

/// Acceptance of stem·loop^ω by product-graph cycle analysis.
bool lasso_accepts(const Npw& a, const Word& stem, const Word& loop);
bool lasso_accepts(const Dpw& a, const Word& stem, const Word& loop);

/// Tableau translation of a path formula.  Every maximal state subformula
/// is a pseudo-atom whose letter bit is its index in `atoms` (matched up to
/// structural equality; the bare `true` leaf is a constant, not an atom).
/// Colors are {1,2}: a degeneralized Büchi condition.
Npw ltl_to_npw(const Qctl& path, const std::vector<Qctl>& atoms);

/// The same tableau built on demand.  Edges may be asked under a partial
/// assignment `known` of the atoms: subformulas are simplified by it
/// before branching, and guards then mention only the other atoms.
class LtlTableau {
 public:
  LtlTableau(const Qctl& path, const std::vector<Qctl>& atoms);
  ~LtlTableau();
  LtlTableau(const LtlTableau&) = delete;
  LtlTableau& operator=(const LtlTableau&) = delete;

  int initial() const;
  int size() const;
  int color(int q) const;
  const std::vector<NpwEdge>& edges(int q, const Cube& known = {});

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience: atoms are the maximal state subformulas in discovery order.
Npw ltl_to_npw(const Qctl& path);

/// Safra–Piterman determinization of the Büchi layering of `a`.
/// Throws ResourceError when more than `cap` states are built.
Dpw determinize(const Npw& a, std::size_t cap = 1000000);

/// Wraps a DPW as an NPW with one edge per letter (minterm guards).
Npw dpw_as_npw(const Dpw& d);

std::string dump(const Npw& a);
std::string dump(const Dpw& a);

}  // namespace hiersl
