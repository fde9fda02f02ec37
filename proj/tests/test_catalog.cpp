#include <doctest.h>

#include "support.hpp"

using namespace quadlin;
using namespace testing;

namespace {

std::string outcome(const CatalogEntry& e) {
  try {
    return to_string(analyze(e.generators, gram_for(e)).verdict);
  } catch (const Error& err) {
    return to_string(err.kind());
  }
}

bool is_signed_permutation(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int nonzero = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      if (m(i, j) != Cyclo(1L) && m(i, j) != Cyclo(-1L)) return false;
      ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

// The constituents of V of degree two, in both orders, with V itself first.
std::vector<std::vector<std::vector<Cyclo>>> planes_of(const GroupPtr& g) {
  auto t = character_table(g);
  auto mult = decompose(character_of(g), t);
  std::vector<std::size_t> planes;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] && t.degrees[i] == 2) planes.push_back(i);
  std::vector<std::vector<std::vector<Cyclo>>> out;
  if (planes.size() != 2) return out;
  for (int flip = 0; flip < 2; ++flip) {
    const auto& a = t.irreducibles[planes[static_cast<std::size_t>(flip)]];
    const auto& b = t.irreducibles[planes[static_cast<std::size_t>(1 - flip)]];
    out.push_back({character_of(g).values(), a.values(), b.values()});
  }
  return out;
}

}  // namespace

TEST_CASE("W(D5) entry") {
  auto e = build("weyl_d5");
  CHECK(e.order == 1920);
  CHECK(e.generators.front().rows() == 5);
  for (const auto& m : e.generators) CHECK(is_signed_permutation(m));
}

TEST_CASE("SD16 entry and its printed tuple") {
  auto e = build("sd16_in_wd5");
  CHECK(e.order == 16);
  CHECK(same_columns({character_of(FiniteGroup::closure(e.generators)).values()}, {cyclos(e.character_tuple)}));
  CHECK(e.character_tuple == std::vector<std::string>{"5", "-3", "-1", "1", "1", "-1", "-1"});
}

TEST_CASE("dihedral convention: D_n has order 2n") {
  auto e = build("dihedral", {{"n", 2}});
  CHECK(e.order == 4);
  auto g = FiniteGroup::closure(e.generators);
  CHECK(g->is_abelian());
  for (std::size_t i = 1; i < g->order(); ++i) CHECK(g->element_order(i) == 2);
}

TEST_CASE("unknown entries and bad parameters") {
  CHECK(error_kind([] { build("no_such_group"); }) == Error::Kind::UnknownEntry);
  CHECK(error_kind([] { build("weyl_d5", {{"n", 3}}); }) == Error::Kind::BadParams);
  CHECK(error_kind([] { build("dihedral"); }) == Error::Kind::BadParams);
  CHECK(error_kind([] { build("dihedral", {{"n", 1}}); }) == Error::Kind::BadParams);
  CHECK(error_kind([] { build("cyclic", {{"m", 3}}); }) == Error::Kind::BadParams);
  CHECK(error_kind([] { build("semidihedral", {{"k", 3}}); }) == Error::Kind::BadParams);
}

TEST_CASE("printed tuples of the three 2-groups, with their planes") {
  using testing::cyclos;
  // C4 wr C2: V together with V2 and V2'
  {
    auto g = group_of("c4wrc2_in_wd5");
    const std::vector<std::vector<Cyclo>> printed{
        cyclos({"5", "-3", "1", "1", "1", "1", "1", "-3", "1", "1", "-3", "1", "-1", "-1"}),
        cyclos({"2", "-2", "0", "0", "2*E(4)", "-2*E(4)", "1-E(4)", "0", "1+E(4)", "-1-E(4)", "-1+E(4)", "0", "0",
                "0"}),
        cyclos({"2", "-2", "0", "0", "-2*E(4)", "2*E(4)", "1+E(4)", "0", "1-E(4)", "-1+E(4)", "-1-E(4)", "0", "0",
                "0"})};
    // The two printed plane rows list the classes in another order than the
    // row of V (their sum with V is not a character), so they are matched as
    // a pair and V on its own.
    CHECK(same_columns({character_of(g).values()}, {printed[0]}));
    bool ok = false;
    for (const auto& ours : planes_of(g)) ok |= same_columns({ours[1], ours[2]}, {printed[1], printed[2]});
    CHECK(ok);
  }
  // D8: V with V2, V2' and the remaining line
  {
    auto g = group_of("d8_in_wd5");
    const std::string r2 = "E(8)-E(8)^3", m2 = "-E(8)+E(8)^3";
    const std::vector<std::vector<Cyclo>> printed{cyclos({"5", "-3", "-1", "1", "1", "-1", "-1"}),
                                                  cyclos({"2", "-2", "0", "0", "0", r2, m2}),
                                                  cyclos({"2", "-2", "0", "0", "0", m2, r2})};
    bool ok = false;
    for (const auto& ours : planes_of(g)) ok |= same_columns(ours, printed);
    CHECK(ok);
    auto chi = character_of(g);
    auto t = character_table(g);
    auto mult = decompose(chi, t);
    for (std::size_t i = 0; i < mult.size(); ++i)
      if (mult[i] && t.degrees[i] == 1) {
        std::vector<std::vector<Cyclo>> ours{chi.values(), t.irreducibles[i].values()};
        CHECK(same_columns(ours, {printed[0], cyclos({"1", "1", "-1", "1", "1", "-1", "-1"})}));
      }
  }
}

TEST_CASE("every entry reaches its expected outcome") {
  for (const auto& name : catalog_names()) {
    auto e = build(name);
    CAPTURE(name);
    REQUIRE_FALSE(e.expected.empty());
    CHECK(outcome(e) == e.expected);
    CHECK(FiniteGroup::closure(e.generators)->order() == e.order);
  }
}

TEST_CASE("family instances reach their expected outcome") {
  const std::vector<std::pair<std::string, std::vector<long>>> families{
      {"cyclic", {1, 2, 3, 7, 12}},  {"dihedral", {2, 3, 4, 5, 6}}, {"semidihedral", {4, 5}},
      {"wreath", {2, 3, 4}},        {"symmetric", {3, 4, 5}}};
  for (const auto& [family, ns] : families)
    for (long n : ns) {
      auto e = build(family, {{family == "semidihedral" ? "k" : "n", n}});
      CAPTURE(family);
      CAPTURE(n);
      REQUIRE_FALSE(e.expected.empty());
      CHECK(outcome(e) == e.expected);
    }
  CHECK(catalog_families().size() == families.size());
}

TEST_CASE("matrix helpers") {
  Matrix p = permutation_matrix({1, 2, 0});
  CHECK(p * Vector{Cyclo(1L), Cyclo(0L), Cyclo(0L)} == Vector{Cyclo(0L), Cyclo(1L), Cyclo(0L)});
  Matrix s = signed_permutation_matrix({-2, 1, 3});
  CHECK(s * Vector{Cyclo(1L), Cyclo(0L), Cyclo(0L)} == Vector{Cyclo(0L), Cyclo(-1L), Cyclo(0L)});
  CHECK(parity_twist(s) == Cyclo(-1L) * s);
  CHECK(parity_twist(p) == p);
  CHECK(block_diagonal({Matrix::identity(2), Matrix::scalar(1, Cyclo(3L))}) == diagonal({1L, 1L, 3L}));

  // exterior square is multiplicative, and the wedge pairing scales by the determinant
  Matrix a = ints({{1, 2, 0, 0}, {0, 1, 0, 3}, {1, 0, 1, 0}, {0, 0, 2, 1}});
  Matrix b = standard_rep({1, 2, 3, 4, 0});
  CHECK(exterior_square(a * b) == exterior_square(a) * exterior_square(b));
  Matrix w = wedge_pairing_gram();
  CHECK(w.is_symmetric());
  CHECK_FALSE(determinant(w).is_zero());
  for (const Matrix& m : {a, b}) {
    Matrix e = exterior_square(m);
    CHECK(e.transpose() * w * e == determinant(m) * w);
  }
}
