#pragma once

#include "semicover/cover_pair.hpp"
#include "semicover/smith.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semicover {

/// A finite presentation: `gens: a b` then `rel: <word>` lines, uppercase
/// letters for inverses, optional `^k` exponents, `#` comments.
struct Presentation {
  std::vector<char> generators;
  std::vector<Word> relators;
  std::vector<std::string> relator_text;
};

/// Throws ParseError.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation_file(const std::filesystem::path& path);

/// Relators x generators matrix of exponent sums.
IntMatrix exponent_matrix(const Presentation& p);

struct PresentationData {
  Presentation presentation;
  IntMatrix exponents;
  SmithForm snf;
  int free_rank = 0;
  /// Diagonal entries greater than 1.
  std::vector<BigInt> torsion;
  /// Row i: image of generator i in Z^r (row i of R on the free columns).
  std::vector<std::vector<Coord>> z_surjection;
  /// A bundled model this presentation defines, when one matches.
  ModelPtr model;
  std::optional<CoverPair> cover;
  int radius = 0;

  bool has_abelian_witness() const { return free_rank > 0; }
  /// "abelian witness found" or "inconclusive by abelian test".
  std::string verdict() const;
  /// "Z^1 + Z/2" style description.
  std::string abelianization() const;
};

/// Presentation -> SNF -> abelianization; with positive free rank and a bound
/// model, also the pullback cover of the lex order on Z^r checked at `radius`.
PresentationData analyze_presentation(const Presentation& p, int radius = 6);
PresentationData analyze_presentation(std::string_view text, int radius = 6);

/// The bundled model defined by the presentation, if any: every relator
/// holds in the model and each model relator occurs among the given ones up
/// to cyclic permutation and inversion.
ModelPtr bind_model(const Presentation& p);

}  // namespace semicover
