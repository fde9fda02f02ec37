#include "quadlin/json_io.hpp"

#include "quadlin/catalog.hpp"
#include "quadlin/error.hpp"

namespace quadlin {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(Error::Kind::Schema, (where.empty() ? std::string("/") : where) + ": " + what);
}

}  // namespace

Json to_json(const Cyclo& c) { return to_string(c); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const ExtVector& v) {
  if (v.is_plain()) return to_json(v.a);
  Json out = Json::object();
  out["radicand"] = to_json(v.radicand);
  out["a"] = to_json(v.a);
  out["b"] = to_json(v.b);
  return out;
}

Json to_json(const ClassFunction& chi) { return to_json(chi.values()); }

Cyclo cyclo_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Cyclo(j.get<long>());
  if (!j.is_string()) schema(where, "expected a scalar string");
  try {
    return parse_cyclo(j.get<std::string>());
  } catch (const Error& e) {
    if (e.kind() == Error::Kind::Parse) throw Error(Error::Kind::Parse, where + ": " + e.what());
    throw;
  }
}

Vector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of scalars");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(cyclo_from_json(j[i], where + "/" + std::to_string(i)));
  return v;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) schema(where, "expected a non-empty array of rows");
  std::vector<std::vector<Cyclo>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(vector_from_json(j[i], where + "/" + std::to_string(i)));
    if (rows.back().size() != rows.front().size()) schema(where + "/" + std::to_string(i), "ragged matrix");
  }
  if (rows.front().empty()) schema(where, "empty rows");
  return Matrix::from_rows(rows);
}

ExtVector ext_vector_from_json(const Json& j, const std::string& where) {
  if (j.is_array()) return ExtVector::plain(vector_from_json(j, where));
  if (!j.is_object() || !j.contains("radicand") || !j.contains("a") || !j.contains("b"))
    schema(where, "expected a vector or {radicand, a, b}");
  ExtVector v{cyclo_from_json(j["radicand"], where + "/radicand"), vector_from_json(j["a"], where + "/a"),
              vector_from_json(j["b"], where + "/b")};
  if (v.a.size() != v.b.size()) schema(where, "parts of different lengths");
  return v;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Error::Kind::Parse, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

GroupSpec group_spec_from_json(const Json& j) {
  if (!j.is_object()) schema("", "expected an object");
  GroupSpec spec;
  if (j.contains("catalog")) {
    if (!j["catalog"].is_string()) schema("/catalog", "expected a string");
    std::map<std::string, long> params;
    if (j.contains("params")) {
      if (!j["params"].is_object()) schema("/params", "expected an object");
      for (const auto& [k, v] : j["params"].items()) {
        if (!v.is_number_integer()) schema("/params/" + k, "expected an integer");
        params[k] = v.get<long>();
      }
    }
    auto entry = build(j["catalog"].get<std::string>(), params);
    spec.generators = entry.generators;
    spec.gram = entry.gram;
    spec.name = entry.name;
  } else {
    if (!j.contains("generators")) schema("", "missing \"generators\" (or \"catalog\")");
    const Json& gens = j["generators"];
    if (!gens.is_array() || gens.empty()) schema("/generators", "expected a non-empty array of matrices");
    for (std::size_t i = 0; i < gens.size(); ++i)
      spec.generators.push_back(matrix_from_json(gens[i], "/generators/" + std::to_string(i)));
  }
  if (j.contains("gram") && !j["gram"].is_null()) spec.gram = matrix_from_json(j["gram"], "/gram");
  const std::size_t d = spec.generators.front().rows();
  for (std::size_t i = 0; i < spec.generators.size(); ++i)
    if (!spec.generators[i].square() || spec.generators[i].rows() != d)
      schema("/generators/" + std::to_string(i), "generators must be square of one size");
  if (spec.gram && (!spec.gram->square() || spec.gram->rows() != d))
    schema("/gram", "gram matrix must match the generator size");
  return spec;
}

Json group_spec_to_json(const GroupSpec& spec) {
  Json out = Json::object();
  if (!spec.name.empty()) out["name"] = spec.name;
  Json gens = Json::array();
  for (const auto& g : spec.generators) gens.push_back(to_json(g));
  out["generators"] = gens;
  if (spec.gram) out["gram"] = to_json(*spec.gram);
  return out;
}

Json character_table_json(const CharacterTable& table) {
  const FiniteGroup& g = *table.group;
  Json out = Json::object();
  out["order"] = g.order();
  out["prime"] = table.prime;
  Json classes = Json::array();
  for (const auto& cls : g.classes()) {
    Json c = Json::object();
    c["representative"] = to_json(g.element(cls.representative));
    c["size"] = cls.size();
    c["element_order"] = g.element_order(cls.representative);
    classes.push_back(c);
  }
  out["classes"] = classes;
  Json irr = Json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    Json r = Json::object();
    r["degree"] = table.degrees[i];
    r["indicator"] = table.indicators[i];
    r["dual"] = table.dual[i];
    r["values"] = to_json(table.irreducibles[i]);
    irr.push_back(r);
  }
  out["irreducibles"] = irr;
  return out;
}

Json witt_json(const QuadraticSpace& qs, const CharacterTable& table, const WittDecomposition& wd) {
  Json out = Json::object();
  out["dimension"] = qs.dim();
  out["multiplicities"] = wd.multiplicities;
  out["witt_index"] = wd.witt_index();
  Json pairs = Json::array();
  for (const auto& p : wd.pairs) {
    Json j = Json::object();
    j["kind"] = to_string(p.kind);
    j["character"] = p.character;
    j["dual_character"] = p.dual_character;
    j["dimension"] = p.w.size();
    if (!p.radicand.is_zero()) j["radicand"] = to_json(p.radicand);
    Json w = Json::array(), wd2 = Json::array();
    for (const auto& v : p.w) w.push_back(to_json(v));
    for (const auto& v : p.w_dual) wd2.push_back(to_json(v));
    j["w"] = w;
    j["w_dual"] = wd2;
    pairs.push_back(j);
  }
  out["hyperbolic_pairs"] = pairs;
  Json comps = Json::array(), basis = Json::array();
  std::size_t kernel = 0;
  for (const auto& an : wd.anisotropic) {
    Json c = Json::object();
    c["character"] = an.character;
    c["values"] = to_json(table.irreducibles[an.character]);
    c["dimension"] = an.basis.size();
    comps.push_back(c);
    for (const auto& v : an.basis) basis.push_back(to_json(v));
    kernel += an.basis.size();
  }
  out["anisotropic_dimension"] = kernel;
  out["anisotropic_components"] = comps;
  out["anisotropic_basis"] = basis;
  return out;
}

}  // namespace quadlin
