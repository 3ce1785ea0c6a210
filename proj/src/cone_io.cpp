#include "semicover/cone_io.hpp"

#include "semicover/errors.hpp"

#include <fstream>

namespace semicover {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorCode::ParseError, std::string("cone document is missing '") + key + "'");
  return doc.at(key);
}

ExplicitMode parse_mode(const Json& doc) {
  if (!doc.contains("mode")) return ExplicitMode::include;
  const auto m = doc.at("mode").get<std::string>();
  if (m == "include") return ExplicitMode::include;
  if (m == "exclude") return ExplicitMode::exclude;
  throw Error(ErrorCode::ParseError, "unknown explicit mode '" + m + "'");
}

Element parse_listed(const Json& e, const GroupModel& model) {
  if (e.is_number_integer()) return model.parse_element(std::to_string(e.get<Coord>()));
  if (e.is_string()) return model.parse_element(e.get<std::string>());
  throw Error(ErrorCode::ParseError, "elements must be strings or integers");
}

}  // namespace

ConeSet cone_from_json(const Json& doc, const ModelPtr& model) {
  try {
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "cone document must be a JSON object");
    const std::string op = field(doc, "op").get<std::string>();
    if (op == "identity") return ConeSet::identity(model);
    if (op == "pullback") {
      std::vector<std::vector<Coord>> images;
      for (const auto& row : field(doc, "images")) images.push_back(row.get<std::vector<Coord>>());
      const Region region = parse_region(field(doc, "region").get<std::string>());
      return ConeSet::pullback(Homomorphism::to_zr(model, images), region);
    }
    if (op == "union" || op == "intersection") {
      std::vector<ConeSet> parts;
      for (const auto& a : field(doc, "args")) parts.push_back(cone_from_json(a, model));
      return op == "union" ? ConeSet::unite(std::move(parts)) : ConeSet::intersect(std::move(parts));
    }
    if (op == "complement") return ConeSet::complement(cone_from_json(field(doc, "arg"), model));
    if (op == "explicit") {
      std::vector<Element> elements;
      for (const auto& e : field(doc, "elements")) elements.push_back(parse_listed(e, *model));
      return ConeSet::explicit_set(model, std::move(elements), parse_mode(doc));
    }
    if (op == "bits") {
      const FiniteGroup* g = model->finite_group();
      if (!g) throw Error(ErrorCode::UnsupportedCone, "bits cones need a finite model");
      Subset s = g->empty();
      for (const auto& e : field(doc, "elements")) s.set(static_cast<std::size_t>(parse_listed(e, *model)[0]));
      return ConeSet::bits(model, std::move(s));
    }
    if (op == "coordinates") {
      const bool on_inverse = doc.contains("on_inverse") && doc.at("on_inverse").get<bool>();
      return ConeSet::coordinates(model, field(doc, "coords").get<std::vector<int>>(),
                                  parse_region(field(doc, "region").get<std::string>()), on_inverse);
    }
    if (op == "conjugate") {
      return ConeSet::conjugate(cone_from_json(field(doc, "arg"), model),
                                parse_listed(field(doc, "by"), *model));
    }
    throw Error(ErrorCode::ParseError, "unknown cone op '" + op + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed cone document: ") + e.what());
  }
}

Json cone_to_json(const ConeSet& cone) {
  const ConeNode& n = cone.node();
  const GroupModel& m = cone.model();
  Json out;
  switch (n.kind) {
    case ConeSet::Kind::identity: out["op"] = "identity"; break;
    case ConeSet::Kind::bits: {
      out["op"] = "bits";
      Json list = Json::array();
      for (auto i = n.bits.find_first(); i != Subset::npos; i = n.bits.find_next(i)) list.push_back(i);
      out["elements"] = list;
      break;
    }
    case ConeSet::Kind::pullback: {
      out["op"] = "pullback";
      Json images = Json::array();
      for (const auto& e : n.hom->images()) images.push_back(std::vector<Coord>(e.coords.begin(), e.coords.end()));
      out["images"] = images;
      out["region"] = to_string(n.region);
      break;
    }
    case ConeSet::Kind::coordinates:
      out["op"] = "coordinates";
      out["coords"] = n.coords;
      out["region"] = to_string(n.region);
      if (n.on_inverse) out["on_inverse"] = true;
      break;
    case ConeSet::Kind::explicit_set: {
      out["op"] = "explicit";
      out["mode"] = n.mode == ExplicitMode::include ? "include" : "exclude";
      Json list = Json::array();
      for (const auto& e : n.elements) list.push_back(m.format(e));
      out["elements"] = list;
      break;
    }
    case ConeSet::Kind::union_of:
    case ConeSet::Kind::intersection: {
      out["op"] = n.kind == ConeSet::Kind::union_of ? "union" : "intersection";
      Json args = Json::array();
      for (const auto& c : n.children) args.push_back(cone_to_json(c));
      out["args"] = args;
      break;
    }
    case ConeSet::Kind::complement:
      out["op"] = "complement";
      out["arg"] = cone_to_json(n.children.front());
      break;
    case ConeSet::Kind::conjugate:
      out["op"] = "conjugate";
      out["by"] = m.format(n.by);
      out["arg"] = cone_to_json(n.children.front());
      break;
  }
  return out;
}

ConeSet load_cone_file(const std::filesystem::path& path, const ModelPtr& model) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open cone file " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return cone_from_json(doc, model);
}

}  // namespace semicover
