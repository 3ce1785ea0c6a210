#pragma once

#include "semicover/cone_set.hpp"

#include <json.hpp>

#include <filesystem>

namespace semicover {

using Json = nlohmann::ordered_json;

/// Cone documents:
///   {"op":"pullback","images":[[1],[0]],"region":"lex_nonneg"}
///   {"op":"union"|"intersection","args":[...]}
///   {"op":"complement","arg":...}
///   {"op":"explicit","mode":"include"|"exclude","elements":["b^2a^-1","(3,1)"]}
///   {"op":"identity"}
///   {"op":"bits","elements":[0,3]}                       finite models
///   {"op":"coordinates","coords":[1,2],"region":"lex_nonneg","on_inverse":false}
///   {"op":"conjugate","by":"b","arg":...}                g^-1 S g
/// Throws ParseError (or the errors of the underlying constructors).
ConeSet cone_from_json(const Json& doc, const ModelPtr& model);
Json cone_to_json(const ConeSet& cone);
ConeSet load_cone_file(const std::filesystem::path& path, const ModelPtr& model);

}  // namespace semicover
