#pragma once

#include <json.hpp>

#include "graydbl/functor.hpp"

namespace gd {

inline constexpr int kSchemaVersion = 1;

// Cells are referred to by name when names are unique within their kind,
// by index otherwise; the reader accepts both.  If "hIdentity" is absent
// the reader adds identity cells and all unit compositions itself.
nlohmann::json doubleToJson(const DoubleCategory& d);
// Throws StructuralError on malformed input.
DoubleCategory doubleFromJson(const nlohmann::json& j);

// Four arrays of [domain cell, codomain cell] pairs plus both names.
nlohmann::json functorToJson(const DoubleFunctor& f);
DoubleFunctor functorFromJson(const nlohmann::json& j, CatPtr dom, CatPtr cod);

nlohmann::json reportToJson(const Report& r);

// Reference to cell i of kind k in d, as written by doubleToJson.
nlohmann::json cellRef(const DoubleCategory& d, CellKind k, int i);
// Throws StructuralError for unknown names or indices.
int readCellRef(const DoubleCategory& d, CellKind k, const nlohmann::json& r);

}  // namespace gd
