#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadlin/characters.hpp"
#include "quadlin/witt.hpp"

namespace quadlin {

using Json = nlohmann::ordered_json;

// Scalars are always strings in the cyclotomic grammar; `where` is a
// JSON-pointer-like location used in Schema/Parse error messages.
Json to_json(const Cyclo& c);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const ExtVector& v);
Json to_json(const ClassFunction& chi);

Cyclo cyclo_from_json(const Json& j, const std::string& where);
Vector vector_from_json(const Json& j, const std::string& where);
Matrix matrix_from_json(const Json& j, const std::string& where);
ExtVector ext_vector_from_json(const Json& j, const std::string& where);

/// {"generators": [...], "gram": [...]?} or {"catalog": name, "params": {...}?}
struct GroupSpec {
  std::vector<Matrix> generators;
  std::optional<Matrix> gram;
  std::string name;  // catalog name, when built from the catalog
};

/// Throws Parse (with byte offset) on malformed text and Schema on bad shape.
Json parse_json_text(const std::string& text);
GroupSpec group_spec_from_json(const Json& j);
Json group_spec_to_json(const GroupSpec& spec);

Json character_table_json(const CharacterTable& table);
Json witt_json(const QuadraticSpace& qs, const CharacterTable& table, const WittDecomposition& wd);

}  // namespace quadlin
