#pragma once

#include <string>
#include <vector>

#include "hiersl/ata.hpp"
#include "hiersl/generators.hpp"
#include "hiersl/model_io.hpp"
#include "hiersl/oracles.hpp"
#include "hiersl/parity_game.hpp"
#include "hiersl/qctl.hpp"
#include "hiersl/sli.hpp"
#include "hiersl/tree.hpp"

namespace hiersl::test {

using gen::Rng;

std::string model_path(const std::string& name);
Model load_fixture(const std::string& name);
std::string fixture_text(const std::string& name);

DirectionSpace grid(std::vector<int> radices);

/// Random automaton over `aps`: transitions are random positive formulas,
/// or DNFs with at most one atom per direction when `nta`.
Ata random_ata(Rng& rng, const std::vector<std::string>& aps, const DirectionSpace& dirs, int states,
               int max_color, bool nta);

/// Random complete regular tree with `vertices` generator vertices.
TreeGen random_tree(Rng& rng, const DirectionSpace& dirs, const std::vector<std::string>& aps, int vertices);

/// Random game in which every vertex has a successor.
ParityGame random_parity_game(Rng& rng, int vertices, int max_color);

/// Random LTL path formula over atomic propositions.
Qctl random_ltl(Rng& rng, const std::vector<std::string>& props, int depth);

/// <<x_i:obs>> for the controllers, [[y_i:id]] for the others, every
/// agent bound to its variable, then F t or G t.
Sli controller_formula(const Cgsi& g, const std::vector<int>& controllers, const std::string& controller_obs,
                       oracle::Objective mode, const std::string& target = "t");

std::vector<int> labelled(const Cgsi& g, const std::string& p);

}  // namespace hiersl::test
