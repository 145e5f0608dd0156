#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hiersl/cgsi.hpp"
#include "hiersl/cks.hpp"
#include "hiersl/qctl.hpp"

// Seeded random models and formulas for cross-checking.
namespace hiersl::gen {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);  // inclusive

struct GameShape {
  int min_positions = 2;
  int max_positions = 4;
  int agents = 2;
  int actions = 2;
  std::vector<std::string> propositions{"t"};
  /// Adds a random partition named "o" next to the identity "id".
  bool partial_observation = false;
};

/// Agents a1.., actions m0.., positions v0.., initial v0.
Cgsi random_game(Rng& rng, const GameShape& shape);

/// Total structure whose states are distinct tuples over `components`
/// components of at most `locals` local states each.
Cks random_cks(Rng& rng, int states, int components, int locals, const std::vector<std::string>& props);

/// Quantifier-free CTL* state formula over `props`.
Qctl random_ctl_star(Rng& rng, const std::vector<std::string>& props, int depth);

}  // namespace hiersl::gen
