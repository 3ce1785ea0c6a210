#include "semicover/fixtures.hpp"

#include "semicover/errors.hpp"

#include <algorithm>
#include <cstdlib>

#ifndef SEMICOVER_DATA_DIR
#define SEMICOVER_DATA_DIR "data"
#endif

namespace semicover {

namespace {

FixtureCover pulled(std::string name, const Homomorphism& hom) {
  ConeSet b = ConeSet::pullback(hom, Region::lex_nonneg);
  ConeSet a = ~b | ConeSet::identity(hom.source_ptr());
  return FixtureCover{std::move(name), hom.source_ptr(), std::move(a), std::move(b), true};
}

FixtureWitness witness(std::string name, Homomorphism hom) {
  LeftOrderWitness w{hom.source_ptr(), ConeSet::pullback(hom, Region::lex_zero),
                     ConeSet::pullback(hom, Region::lex_nonneg)};
  return FixtureWitness{std::move(name), std::move(w), std::move(hom)};
}

}  // namespace

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("SEMICOVER_DATA"); env && *env) return env;
  return SEMICOVER_DATA_DIR;
}

FiniteGroup load_fixture_group(std::string_view name) {
  const auto path = data_dir() / "groups" / (std::string(name) + ".tbl");
  if (name.empty() || name.find('/') != std::string_view::npos || !std::filesystem::exists(path)) {
    throw Error(ErrorCode::ParseError, "unknown fixture '" + std::string(name) + "'");
  }
  return load_finite_group_file(path);
}

ModelPtr load_fixture_model(std::string_view name) {
  return GroupModel::finite(load_fixture_group(name), "fixture:" + std::string(name));
}

std::vector<std::string> fixture_names() {
  std::vector<std::pair<int, std::string>> found;
  const auto dir = data_dir() / "groups";
  if (!std::filesystem::is_directory(dir)) return {};
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".tbl") continue;
    const std::string name = entry.path().stem().string();
    found.emplace_back(load_fixture_group(name).order(), name);
  }
  std::sort(found.begin(), found.end());
  std::vector<std::string> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::vector<FixtureCover> bundled_covers() {
  const ModelPtr z = GroupModel::zr(1);
  const ModelPtr zc2 = GroupModel::zr(1, {2});
  const ModelPtr z2 = GroupModel::zr(2);
  const ModelPtr heis = GroupModel::heisenberg();
  const ModelPtr klein = GroupModel::klein_bottle();
  const ModelPtr f2 = GroupModel::free_group(2);
  std::vector<FixtureCover> out;

  const Homomorphism z_id = Homomorphism::to_zr(z, {{1}});
  out.push_back(FixtureCover{"z_split", z, ConeSet::pullback(z_id, Region::lex_nonneg),
                             ConeSet::pullback(z_id, Region::lex_nonpos), false});
  out.push_back(pulled("z_order", z_id));

  const Homomorphism zc2_proj = Homomorphism::to_zr(zc2, {{1}, {0}});
  out.push_back(FixtureCover{"zxc2_overlap", zc2, ConeSet::pullback(zc2_proj, Region::lex_nonneg),
                             ConeSet::pullback(zc2_proj, Region::lex_nonpos), false});
  out.push_back(pulled("zxc2_order", zc2_proj));

  out.push_back(pulled("z2_first", Homomorphism::to_zr(z2, {{1}, {0}})));
  out.push_back(pulled("z2_second", Homomorphism::to_zr(z2, {{0}, {1}})));
  out.push_back(pulled("z2_lex", Homomorphism::to_zr(z2, {{1, 0}, {0, 1}})));

  out.push_back(pulled("heisenberg_xy", Homomorphism::to_zr(heis, {{1, 0}, {0, 1}})));
  // B = {(y, z) >= 0 lexicographically}: its maximal subgroup <x> is not normal
  {
    ConeSet b = ConeSet::coordinates(heis, {1, 2}, Region::lex_nonneg);
    ConeSet a = ~b | ConeSet::identity(heis);
    out.push_back(FixtureCover{"heisenberg_nonnormal", heis, std::move(a), std::move(b), false});
  }

  out.push_back(pulled("klein_b", Homomorphism::to_zr(klein, {{0}, {1}})));
  out.push_back(pulled("free2_a", Homomorphism::to_zr(f2, {{1}, {0}})));
  out.push_back(pulled("free2_b", Homomorphism::to_zr(f2, {{0}, {1}})));
  return out;
}

FixtureCover bundled_cover(std::string_view name) {
  for (auto& c : bundled_covers())
    if (c.name == name) return c;
  throw Error(ErrorCode::ParseError, "unknown bundled cover '" + std::string(name) + "'");
}

std::vector<FixtureWitness> bundled_witnesses() {
  const ModelPtr z = GroupModel::zr(1);
  const ModelPtr zc2 = GroupModel::zr(1, {2});
  const ModelPtr z2 = GroupModel::zr(2);
  const ModelPtr heis = GroupModel::heisenberg();
  const ModelPtr klein = GroupModel::klein_bottle();
  const ModelPtr f2 = GroupModel::free_group(2);
  std::vector<FixtureWitness> out;
  out.push_back(witness("z_order", Homomorphism::to_zr(z, {{1}})));
  out.push_back(witness("zxc2_order", Homomorphism::to_zr(zc2, {{1}, {0}})));
  out.push_back(witness("z2_first", Homomorphism::to_zr(z2, {{1}, {0}})));
  out.push_back(witness("z2_second", Homomorphism::to_zr(z2, {{0}, {1}})));
  out.push_back(witness("z2_lex", Homomorphism::to_zr(z2, {{1, 0}, {0, 1}})));
  out.push_back(witness("heisenberg_xy", Homomorphism::to_zr(heis, {{1, 0}, {0, 1}})));
  out.push_back(witness("klein_b", Homomorphism::to_zr(klein, {{0}, {1}})));
  out.push_back(witness("free2_a", Homomorphism::to_zr(f2, {{1}, {0}})));
  out.push_back(witness("free2_b", Homomorphism::to_zr(f2, {{0}, {1}})));
  return out;
}

}  // namespace semicover
