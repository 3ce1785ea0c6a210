#include "semicover/presentation.hpp"

#include "semicover/errors.hpp"
#include "semicover/order_engine.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace semicover {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

Word parse_relator(const std::string& text, const std::vector<char>& gens, int line) {
  Word w;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const auto it = std::find(gens.begin(), gens.end(), static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (!std::isalpha(static_cast<unsigned char>(c)) || it == gens.end()) fail("unknown letter '" + std::string(1, c) + "'");
    Coord e = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
    ++i;
    if (i < text.size() && text[i] == '^') {
      std::size_t j = i + 1;
      if (j < text.size() && text[j] == '-') ++j;
      const std::size_t digits = j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == digits) fail("missing exponent");
      e *= std::stoll(text.substr(i + 1, j - i - 1));
      i = j;
    }
    w.push_back({static_cast<int>(it - gens.begin()), e});
  }
  return w;
}

// Letters as signed generator numbers (+(i+1) / -(i+1)), freely reduced.
std::vector<int> letters(const Word& w) {
  std::vector<int> out;
  for (const auto& s : w) {
    const int l = s.exponent > 0 ? s.generator + 1 : -(s.generator + 1);
    for (Coord k = 0; k < (s.exponent > 0 ? s.exponent : -s.exponent); ++k) {
      if (!out.empty() && out.back() == -l) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
  }
  return out;
}

bool same_up_to_rotation(std::vector<int> a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size() || k == 0; ++k) {
    if (a == b) return true;
    if (a.empty()) return false;
    std::rotate(a.begin(), a.begin() + 1, a.end());
  }
  return false;
}

bool occurs(const std::vector<int>& rel, const std::vector<std::vector<int>>& given) {
  std::vector<int> inv(rel.rbegin(), rel.rend());
  for (auto& l : inv) l = -l;
  return std::any_of(given.begin(), given.end(), [&](const std::vector<int>& g) {
    return same_up_to_rotation(rel, g) || same_up_to_rotation(inv, g);
  });
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool have_gens = false;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected 'key: value'");
    const std::string key = trim(std::string_view(s).substr(0, colon));
    const std::string value = trim(std::string_view(s).substr(colon + 1));
    if (key == "gens") {
      if (have_gens) throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": duplicate gens");
      std::istringstream names(value);
      std::string g;
      while (names >> g) {
        if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0]))) {
          throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": generator '" + g + "' is not a lowercase letter");
        }
        if (std::find(p.generators.begin(), p.generators.end(), g[0]) != p.generators.end()) {
          throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": repeated generator '" + g + "'");
        }
        p.generators.push_back(g[0]);
      }
      have_gens = true;
    } else if (key == "rel") {
      if (!have_gens) throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": rel before gens");
      p.relators.push_back(parse_relator(value, p.generators, line));
      p.relator_text.push_back(value);
    } else {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  if (!have_gens) throw Error(ErrorCode::ParseError, "missing 'gens:' line");
  return p;
}

Presentation load_presentation_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open presentation file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m;
  for (const auto& w : p.relators) {
    std::vector<BigInt> row(p.generators.size(), 0);
    for (const auto& s : w) row[static_cast<std::size_t>(s.generator)] += s.exponent;
    m.push_back(std::move(row));
  }
  return m;
}

std::string PresentationData::verdict() const {
  return has_abelian_witness() ? "abelian witness found" : "inconclusive by abelian test";
}

std::string PresentationData::abelianization() const {
  std::vector<std::string> parts;
  if (free_rank > 0) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

ModelPtr bind_model(const Presentation& p) {
  const int k = static_cast<int>(p.generators.size());
  std::vector<ModelPtr> candidates;
  if (p.relators.empty()) candidates.push_back(GroupModel::free_group(k));
  if (k == 2) {
    candidates.push_back(GroupModel::klein_bottle());
    candidates.push_back(GroupModel::heisenberg());
  }
  if (k > 0) candidates.push_back(GroupModel::zr(k));
  std::vector<std::vector<int>> given;
  for (const auto& r : p.relators) given.push_back(letters(r));
  for (const auto& m : candidates) {
    if (m->generator_count() != static_cast<std::size_t>(k)) continue;
    const bool holds = std::all_of(p.relators.begin(), p.relators.end(),
                                   [&](const Word& r) { return m->is_identity(m->evaluate(r)); });
    if (!holds) continue;
    const auto rels = m->relators();
    const bool defines =
        std::all_of(rels.begin(), rels.end(), [&](const Word& r) { return occurs(letters(r), given); });
    if (defines) return m;
  }
  return nullptr;
}

PresentationData analyze_presentation(const Presentation& p, int radius) {
  PresentationData d;
  d.presentation = p;
  d.radius = radius;
  d.exponents = exponent_matrix(p);
  const std::size_t n = p.generators.size();
  d.snf = smith_normal_form(d.exponents, n);
  const std::size_t k = d.snf.nonzero_count();
  d.free_rank = static_cast<int>(n - k);
  for (const auto& x : d.snf.diagonal)
    if (x > 1) d.torsion.push_back(x);
  if (d.free_rank > 0) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Coord> row;
      for (std::size_t j = k; j < n; ++j) row.push_back(static_cast<Coord>(d.snf.right[i][j]));
      d.z_surjection.push_back(std::move(row));
    }
  }
  d.model = bind_model(p);
  if (d.model && d.free_rank > 0) {
    const Homomorphism hom = Homomorphism::to_zr(d.model, d.z_surjection);
    std::vector<int> all(static_cast<std::size_t>(d.free_rank));
    for (int i = 0; i < d.free_rank; ++i) all[static_cast<std::size_t>(i)] = i;
    const ConeSet lex = ConeSet::coordinates(hom.target_ptr(), all, Region::lex_nonneg);
    d.cover = pullback_cover(d.model, hom, lex, radius);
  }
  return d;
}

PresentationData analyze_presentation(std::string_view text, int radius) {
  return analyze_presentation(parse_presentation(text), radius);
}

}  // namespace semicover
