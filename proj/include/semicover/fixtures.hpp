#pragma once

#include "semicover/cone_set.hpp"
#include "semicover/order_engine.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace semicover {

/// $SEMICOVER_DATA if set, else the data directory configured at build time.
std::filesystem::path data_dir();

/// Cayley-table fixture data/groups/<name>.tbl as a finite model named
/// "fixture:<name>". Throws ParseError for unknown names.
ModelPtr load_fixture_model(std::string_view name);
FiniteGroup load_fixture_group(std::string_view name);
/// Table fixtures sorted by group order, then name.
std::vector<std::string> fixture_names();

struct FixtureCover {
  std::string name;
  ModelPtr model;
  ConeSet a;
  ConeSet b;
  /// A ∩ B = {1} and B's maximal subgroup is normal.
  bool normalized = false;
};

/// Covers of the infinite models built into the library.
std::vector<FixtureCover> bundled_covers();
FixtureCover bundled_cover(std::string_view name);

struct FixtureWitness {
  std::string name;
  LeftOrderWitness witness;
  /// The quotient map the order is pulled back along.
  Homomorphism hom;
};

std::vector<FixtureWitness> bundled_witnesses();

}  // namespace semicover
