#include <doctest.h>

#include <numeric>

#include "support.hpp"

using namespace quadlin;
using namespace testing;

namespace {

Cyclo z(long n, long k) { return Cyclo::root(n, k); }

GroupPtr d4() { return FiniteGroup::closure({diagonal({z(4, 1), z(4, 3)}), ints({{0, 1}, {1, 0}})}); }

GroupPtr s5_standard() { return FiniteGroup::closure({standard_rep({1, 0, 2, 3, 4}), standard_rep({1, 2, 3, 4, 0})}); }

std::vector<long> degrees_of(const CharacterTable& t) { return t.degrees; }

// Explicit value of f on every class representative.
ClassFunction on_classes(const GroupPtr& g, const std::function<Cyclo(const Matrix&)>& f) {
  std::vector<Cyclo> v;
  for (const auto& c : g->classes()) v.push_back(f(g->element(c.representative)));
  return ClassFunction(g, v);
}

std::size_t find_irreducible(const CharacterTable& t, const std::vector<long>& mult, long degree, std::size_t skip) {
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] && t.degrees[i] == degree && i != skip) return i;
  return mult.size();
}

}  // namespace

TEST_CASE("character of SD16 inside W(D5)") {
  auto g = group_of("sd16_in_wd5");
  CHECK(same_columns({character_of(g).values()}, {cyclos({"5", "-3", "-1", "1", "1", "-1", "-1"})}));
}

TEST_CASE("trivial representation") {
  auto g = group_of("sd16_in_wd5");
  auto one = FiniteGroup::closure({Matrix::identity(1)});
  CHECK(character_of(one).values() == cyclos({"1"}));
  auto triv = trivial_character(g);
  for (const auto& v : triv.values()) CHECK(v.is_one());
}

TEST_CASE("D8 constituents carry sqrt 2 exactly") {
  auto g = group_of("d8_in_wd5");
  auto t = character_table(g);
  auto mult = decompose(character_of(g), t);
  long total = 0, twos = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    CHECK(mult[i] <= 1);
    total += mult[i];
    if (mult[i]) twos += t.degrees[i] == 2;
  }
  CHECK(total == 3);
  CHECK(twos == 2);
  const Cyclo root2 = z(8, 1) - z(8, 3);
  std::size_t v2 = find_irreducible(t, mult, 2, mult.size());
  REQUIRE(v2 < mult.size());
  const auto& vals = t.irreducibles[v2].values();
  CHECK(std::find(vals.begin(), vals.end(), root2) != vals.end());
  CHECK(std::find(vals.begin(), vals.end(), -root2) != vals.end());
}

TEST_CASE("table shapes") {
  auto s3 = FiniteGroup::closure(build("symmetric", {{"n", 3}}).generators);
  CHECK(degrees_of(character_table(s3)) == std::vector<long>{1, 1, 2});
  CHECK(degrees_of(character_table(d4())) == std::vector<long>{1, 1, 1, 1, 2});
  CHECK(character_table(group_of("c4wrc2_in_wd5")).size() == 14);
}

TEST_CASE("trivial character first, then by degree") {
  for (const char* name : {"s5_in_wd5", "c4wrc2_in_wd5", "d12_split_quadric"}) {
    auto t = character_table(group_of(name));
    for (const auto& v : t.irreducibles.front().values()) CHECK(v.is_one());
    CHECK(std::is_sorted(t.degrees.begin(), t.degrees.end()));
  }
}

TEST_CASE("decomposition of the Sylow restriction and of the regular character") {
  auto g = group_of("d4_sylow_restriction");
  auto t = character_table(g);
  auto mult = decompose(character_of(g), t);
  CHECK(mult[0] == 1);
  std::size_t v2 = find_irreducible(t, mult, 2, mult.size());
  REQUIRE(v2 < mult.size());
  CHECK(mult[v2] == 2);

  // regular representation of S3 from its multiplication table
  auto s3 = FiniteGroup::closure(build("symmetric", {{"n", 3}}).generators);
  std::vector<Matrix> regular;
  for (std::size_t gen : s3->generator_indices()) {
    Matrix m(6, 6);
    for (std::size_t x = 0; x < 6; ++x) m(s3->mul(gen, x), x) = Cyclo(1L);
    regular.push_back(m);
  }
  auto reg = FiniteGroup::closure(regular);
  auto rt = character_table(reg);
  CHECK(decompose(character_of(reg), rt) == std::vector<long>{1, 1, 2});
}

TEST_CASE("decompose rejects virtual characters") {
  auto g = group_of("d4_open_case");
  auto t = character_table(g);
  auto virt = character_of(g) - Cyclo(6L) * trivial_character(g);
  CHECK(error_kind([&] { decompose(virt, t); }) == Error::Kind::NotACharacter);
  auto half = Cyclo(mpq_class(1, 2)) * character_of(g);
  CHECK(error_kind([&] { decompose(half, t); }) == Error::Kind::NotACharacter);
}

TEST_CASE("Frobenius-Schur indicators") {
  auto g = d4();
  auto t = character_table(g);
  CHECK(frobenius_schur(t.irreducibles[0]) == 1);
  // (1/|G|) sum of traces of squares of the defining 2-dimensional matrices
  Cyclo sum;
  for (std::size_t i = 0; i < g->order(); ++i) sum += (g->element(i) * g->element(i)).trace();
  const Cyclo oracle = sum * Cyclo(mpq_class(1, 8));
  CHECK(oracle == Cyclo(1L));
  CHECK(frobenius_schur(character_of(g)) == 1);

  auto c4 = group_of("c4wrc2_in_wd5");
  auto ct = character_table(c4);
  auto mult = decompose(character_of(c4), ct);
  std::size_t v2 = find_irreducible(ct, mult, 2, mult.size());
  REQUIRE(v2 < mult.size());
  CHECK(frobenius_schur(ct.irreducibles[v2]) == 0);
  CHECK(ct.dual[v2] != v2);
  CHECK(error_kind([&] { frobenius_schur(character_of(c4)); }) == Error::Kind::NotIrreducible);
}

TEST_CASE("exterior powers") {
  auto s5 = s5_standard();
  auto std4 = character_of(s5);
  CHECK(exterior_power(std4, 2).degree() == Cyclo(6L));
  CHECK(exterior_power(std4, 0).values() == trivial_character(s5).values());

  auto g = d4();
  CHECK(exterior_power(character_of(g), 2) == on_classes(g, [](const Matrix& m) { return determinant(m); }));

  // The determinant of the standard representation is the sign character,
  // so its fourth exterior power is not trivial.
  auto det = on_classes(s5, [](const Matrix& m) { return determinant(m); });
  CHECK(exterior_power(std4, 4) == det);
  CHECK_FALSE(exterior_power(std4, 4) == trivial_character(s5));
  bool has_minus = false;
  for (const auto& v : det.values()) has_minus |= v == Cyclo(-1L);
  CHECK(has_minus);
  CHECK(exterior_power(std4, 5).degree().is_zero());
}

TEST_CASE("restriction") {
  auto w = FiniteGroup::closure(weyl_d5_generators());
  auto chi = character_of(w);
  auto s5 = FiniteGroup::closure(build("symmetric", {{"n", 5}}).generators);
  // fixed-point count of each permutation matrix
  auto fixed = on_classes(s5, [](const Matrix& m) { return m.trace(); });
  auto r = restrict(chi, s5);
  CHECK(r == fixed);
  auto t = character_table(s5);
  auto mult = decompose(r, t);
  CHECK(mult[0] == 1);
  CHECK(std::accumulate(mult.begin(), mult.end(), 0L) == 2);

  auto one = FiniteGroup::closure({Matrix::identity(5)});
  CHECK(restrict(chi, one).values() == cyclos({"5"}));

  auto c4 = group_of("c4wrc2_in_wd5");
  CHECK(same_columns({restrict(chi, c4).values()},
                     {cyclos({"5", "-3", "1", "1", "1", "1", "1", "-3", "1", "1", "-3", "1", "-1", "-1"})}));

  auto odd = FiniteGroup::closure({diagonal({Cyclo(-1L), Cyclo(1L), Cyclo(1L), Cyclo(1L), Cyclo(1L)})});
  CHECK(error_kind([&] { restrict(chi, odd); }) == Error::Kind::NotASubgroup);
}

TEST_CASE("table properties on catalog groups") {
  std::vector<GroupPtr> groups;
  for (const auto& name : catalog_names()) groups.push_back(group_of(name));
  for (long n : {2, 3, 5}) groups.push_back(FiniteGroup::closure(build("dihedral", {{"n", n}}).generators));
  for (auto& g : groups) {
    CAPTURE(g->order());
    auto t = character_table(g);
    CHECK(verify_table(t));
    CHECK(t.size() == g->class_count());
    long sum = 0;
    for (long d : t.degrees) sum += d * d;
    CHECK(static_cast<std::size_t>(sum) == g->order());

    auto chi = character_of(g);
    CHECK(compose(decompose(chi, t), t) == chi);

    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto& x = t.irreducibles[i];
      Cyclo fs = inner_product(symmetric_square(x), trivial_character(g)) -
                 inner_product(exterior_power(x, 2), trivial_character(g));
      CHECK(fs == Cyclo(static_cast<long>(t.indicators[i])));
      CHECK(t.indicators[i] >= -1);
      CHECK(t.indicators[i] <= 1);
      CHECK((x.conjugate() == x) == (t.indicators[i] != 0));
    }

    if (g->degree() <= 6)
      CHECK(exterior_power(chi, 2) == on_classes(g, [](const Matrix& m) { return exterior_square(m).trace(); }));
  }
}
