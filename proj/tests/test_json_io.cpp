#include <doctest.h>

#include "support.hpp"

using namespace quadlin;
using namespace testing;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("scalars, vectors and matrices round trip") {
  for (const char* s : {"0", "-3/7", "E(8)-E(8)^3", "2*E(4)+1/2", "E(5)^2+E(5)^3"}) {
    Cyclo c = parse_cyclo(s);
    CHECK(cyclo_from_json(to_json(c), "") == c);
  }
  CHECK(cyclo_from_json(Json(-4), "") == Cyclo(-4L));
  Matrix m = build("sd16_in_wd5").generators.front();
  CHECK(matrix_from_json(to_json(m), "") == m);

  ExtVector e{Cyclo(2L), Vector{Cyclo(1L), Cyclo(0L)}, Vector{Cyclo(0L), Cyclo(1L)}};
  ExtVector back = ext_vector_from_json(to_json(e), "");
  CHECK(back.radicand == e.radicand);
  CHECK(back.a == e.a);
  CHECK(back.b == e.b);
  CHECK(ext_vector_from_json(Json::array({"1", "E(3)"}), "").is_plain());
}

TEST_CASE("errors carry their location") {
  auto j = parse_json_text(R"({"generators": [[["1", "0"], ["0", "E(4"]]]})");
  CHECK(error_kind([&] { group_spec_from_json(j); }) == Error::Kind::Parse);
  CHECK(message_of([&] { group_spec_from_json(j); }).rfind("/generators/0/1/1", 0) == 0);

  auto ragged = parse_json_text(R"({"generators": [[["1", "0"], ["0"]]]})");
  CHECK(error_kind([&] { group_spec_from_json(ragged); }) == Error::Kind::Schema);
  CHECK(message_of([&] { group_spec_from_json(ragged); }).find("/generators/0/1") != std::string::npos);

  auto mixed = parse_json_text(R"({"generators": [[["1"]], [["1", "0"], ["0", "1"]]]})");
  CHECK(error_kind([&] { group_spec_from_json(mixed); }) == Error::Kind::Schema);

  auto gram = parse_json_text(R"({"generators": [[["1", "0"], ["0", "1"]]], "gram": [["1"]]})");
  CHECK(message_of([&] { group_spec_from_json(gram); }).rfind("/gram", 0) == 0);

  CHECK(error_kind([] { group_spec_from_json(Json::array()); }) == Error::Kind::Schema);
  CHECK(error_kind([] { group_spec_from_json(Json::object()); }) == Error::Kind::Schema);
  CHECK(error_kind([] { group_spec_from_json(parse_json_text(R"({"generators": [[[true]]]})")); }) ==
        Error::Kind::Schema);
}

TEST_CASE("malformed text reports a byte offset") {
  CHECK(error_kind([] { parse_json_text("{\"generators\": [,]}"); }) == Error::Kind::Parse);
  CHECK(message_of([] { parse_json_text("{\"generators\": [,]}"); }).find("at byte 17") != std::string::npos);
}

TEST_CASE("catalog specs") {
  auto spec = group_spec_from_json(parse_json_text(R"({"catalog": "dihedral", "params": {"n": 3}})"));
  CHECK(spec.name == "dihedral");
  CHECK(spec.generators.size() == build("dihedral", {{"n", 3}}).generators.size());

  CHECK(error_kind([] { group_spec_from_json(parse_json_text(R"({"catalog": "nope"})")); }) ==
        Error::Kind::UnknownEntry);
  CHECK(error_kind([] { group_spec_from_json(parse_json_text(R"({"catalog": "dihedral", "params": {"n": "3"}})")); }) ==
        Error::Kind::Schema);
  CHECK(error_kind([] { group_spec_from_json(parse_json_text(R"({"catalog": "dihedral", "params": {"n": 0}})")); }) ==
        Error::Kind::BadParams);
}

TEST_CASE("group specs round trip") {
  for (const auto& name : catalog_names()) {
    auto e = build(name);
    GroupSpec spec{e.generators, e.gram, ""};
    auto back = group_spec_from_json(parse_json_text(group_spec_to_json(spec).dump()));
    CAPTURE(name);
    CHECK(back.generators == spec.generators);
    CHECK(back.gram.has_value() == spec.gram.has_value());
    if (spec.gram) CHECK(*back.gram == *spec.gram);
  }
}

TEST_CASE("table and decomposition documents") {
  auto g = group_of("d4_sylow_restriction");
  auto t = character_table(g);
  Json tj = character_table_json(t);
  CHECK(tj["order"] == 8);
  CHECK(tj["classes"].size() == t.size());
  CHECK(tj["irreducibles"].size() == t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    CHECK(vector_from_json(tj["irreducibles"][i]["values"], "") == t.irreducibles[i].values());

  auto e = build("d4_sylow_restriction");
  QuadraticSpace qs{g, gram_for(e)};
  Json wj = witt_json(qs, t, witt_decompose(qs, t));
  CHECK(wj["witt_index"] == 2);
  CHECK(wj["hyperbolic_pairs"].size() == 1);
  CHECK(wj["anisotropic_dimension"] == 1);
  CHECK(wj.dump() == witt_json(qs, t, witt_decompose(qs, t)).dump());
}
