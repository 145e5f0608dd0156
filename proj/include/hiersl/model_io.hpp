#pragma once

#include <string>

#include "hiersl/cgsi.hpp"
#include "hiersl/cks.hpp"

namespace hiersl {

/// A model file holds either a CGSi (`"type": "cgsi"`) or a CKS (`"type": "cks"`).
struct Model {
  enum class Kind { Game, Kripke };
  Kind kind = Kind::Game;
  Cgsi game;
  Cks cks;
};

/// Parses and validates; throws ModelError listing every problem found.
Model parse_model(const std::string& json_text);
Model load_model(const std::string& path);

std::string cgsi_to_json(const Cgsi& g);
std::string cks_to_json(const Cks& k);

std::string read_text_file(const std::string& path);

}  // namespace hiersl
