#pragma once

#include <memory>
#include <string>
#include <vector>

#include "quadlin/group.hpp"

namespace quadlin {

/// A function on the conjugacy classes of a group, in the group's class order.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<Cyclo> values);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Cyclo>& values() const noexcept { return values_; }
  const Cyclo& operator[](std::size_t c) const { return values_[c]; }
  std::size_t size() const noexcept { return values_.size(); }
  /// Value at the identity.
  const Cyclo& degree() const { return values_.front(); }

  ClassFunction conjugate() const;
  /// k-th Adams operation: g -> chi(g^k).
  ClassFunction adams(long k) const;

  ClassFunction& operator+=(const ClassFunction& rhs);
  ClassFunction& operator-=(const ClassFunction& rhs);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const Cyclo& c, const ClassFunction& a);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

  std::vector<std::string> keys() const;

 private:
  void check_same_group(const ClassFunction& rhs) const;

  GroupPtr group_;
  std::vector<Cyclo> values_;
};

ClassFunction trivial_character(const GroupPtr& g);
/// Character of the defining matrix representation (traces of class
/// representatives). Throws InconsistentRep if traces are not class functions.
ClassFunction character_of(const GroupPtr& g);
Cyclo inner_product(const ClassFunction& a, const ClassFunction& b);

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;  // sorted by degree, trivial first
  std::vector<long> degrees;
  std::vector<std::size_t> dual;            // index of the complex conjugate
  std::vector<int> indicators;              // Frobenius-Schur indicators
  long prime = 0;                           // modulus used by the computation

  std::size_t size() const noexcept { return irreducibles.size(); }
  /// Indices of the degree-one characters, in table order.
  std::vector<std::size_t> linear() const;
  std::size_t index_of(const ClassFunction& chi) const;  // throws NotIrreducible
};

/// Dixon-Schneider: joint eigenvectors of the class matrices over F_p,
/// lifted to exact cyclotomic values through eigenvalue multiplicities.
CharacterTable character_table(const GroupPtr& g);

/// Multiplicities of the irreducibles in chi; throws NotACharacter unless
/// every multiplicity is a non-negative integer.
std::vector<long> decompose(const ClassFunction& chi, const CharacterTable& table);
/// Sum of mult[i] * irreducible[i].
ClassFunction compose(const std::vector<long>& mult, const CharacterTable& table);

/// Frobenius-Schur indicator in {-1, 0, 1}; throws NotIrreducible.
int frobenius_schur(const ClassFunction& chi);

/// Character of the n-th exterior power, via Newton's identities.
ClassFunction exterior_power(const ClassFunction& chi, int n);
ClassFunction symmetric_square(const ClassFunction& chi);

/// Restriction to a subgroup given as its own matrix group.
ClassFunction restrict(const ClassFunction& chi, const GroupPtr& h);

/// Orthogonality relations and degree sum; false on any violation.
bool verify_table(const CharacterTable& table);

}  // namespace quadlin
