#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadlin/matrix.hpp"

namespace quadlin {

/// A named group action on a quadric, with the outcome the engine is
/// expected to reach on it.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::map<std::string, long> params;
  std::vector<Matrix> generators;
  Matrix gram;                  // empty: average an invariant form
  std::size_t order = 0;        // documented group order
  std::string expected;         // verdict, error kind, or empty if not recorded
  std::string anchor;           // which construction the entry exercises
  std::string literature;       // display only
  std::vector<std::string> character_tuple;  // printed character of V, if any
};

/// Names of the fixed entries, in display order.
std::vector<std::string> catalog_names();
/// Names of the parametrised families ("cyclic", "dihedral", ...).
std::vector<std::string> catalog_families();

/// Build an entry and check its documented order. Families read
/// params["n"] (or params["k"] for semidihedral of order 2^k).
/// Throws UnknownEntry or BadParams.
CatalogEntry build(const std::string& name, const std::map<std::string, long>& params = {});

/// Generators of W(D5) acting on C^5 by signed permutations.
std::vector<Matrix> weyl_d5_generators();

/// Matrix of the permutation i -> perm[i] (0-based) acting on basis vectors.
Matrix permutation_matrix(const std::vector<int>& perm);
/// e_i -> sign * e_j for image[i] = sign * (j + 1).
Matrix signed_permutation_matrix(const std::vector<int>& image);
Matrix diagonal(const std::vector<Cyclo>& entries);
Matrix block_diagonal(const std::vector<Matrix>& blocks);
/// g -> (-1)^(number of negative entries) g, which moves a signed
/// permutation into the even-sign-change subgroup without changing its
/// action on projective space.
Matrix parity_twist(const Matrix& signed_perm);
/// Induced action on the second exterior power, basis e_i ^ e_j (i < j).
Matrix exterior_square(const Matrix& m);
/// Gram matrix of the wedge pairing on the second exterior power of a
/// 4-dimensional space: B(x, y) with x ^ y = B(x, y) e_1 ^ e_2 ^ e_3 ^ e_4.
Matrix wedge_pairing_gram();

}  // namespace quadlin
