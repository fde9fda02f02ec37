#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "quadlin/matrix.hpp"

namespace quadlin {

inline constexpr std::size_t kDefaultClosureCap = 100'000;

/// Wall-clock budget shared by the bounded searches.
class Deadline {
 public:
  Deadline() = default;  // unlimited
  explicit Deadline(long milliseconds);
  bool expired() const;
  /// Throws BudgetExceeded once expired; `what` names the interrupted search.
  void check(const std::string& what) const;

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

struct ConjugacyClass {
  std::size_t representative;
  std::vector<std::size_t> elements;
  std::size_t size() const noexcept { return elements.size(); }
};

/**
 * A finite matrix group, stored as the list of its elements.
 *
 * Elements are numbered in breadth-first order from the identity (index 0);
 * within each layer they are sorted by canonical key, so the numbering does
 * not depend on the order in which generators were supplied. Classes are
 * ordered by their first element in that numbering.
 */
class FiniteGroup {
 public:
  static std::shared_ptr<const FiniteGroup> closure(const std::vector<Matrix>& generators,
                                                    std::size_t cap = kDefaultClosureCap);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const Matrix& element(std::size_t i) const { return elements_[i]; }
  const std::string& key(std::size_t i) const { return keys_[i]; }
  const std::vector<Matrix>& generator_matrices() const noexcept { return generators_; }
  const std::vector<std::size_t>& generator_indices() const noexcept { return generator_index_; }
  std::optional<std::size_t> find(const Matrix& m) const;
  std::optional<std::size_t> find_key(const std::string& key) const;

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, long k) const;
  std::size_t conjugate(std::size_t x, std::size_t g) const;  // g^-1 x g
  std::size_t element_order(std::size_t a) const { return element_order_[a]; }
  std::size_t exponent() const noexcept { return exponent_; }

  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  /// Class of rep^k for the representative of class c.
  std::size_t class_power(std::size_t c, long k) const;

  /// Elements acting as scalar matrices.
  const std::vector<std::size_t>& scalar_kernel() const noexcept { return scalar_kernel_; }
  bool is_abelian() const;

 private:
  FiniteGroup() = default;
  void build_tables();

  std::size_t degree_ = 0;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::uint32_t>> right_gen_;  // element * generator
  std::vector<std::uint32_t> parent_;                  // element = parent * gen
  std::vector<std::uint32_t> parent_gen_;
  std::vector<std::uint32_t> table_;                   // full Cayley table when small
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> element_order_;
  std::size_t exponent_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> power_classes_;
  std::vector<std::size_t> scalar_kernel_;
  std::vector<std::size_t> generator_index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup of a parent group, by element indices of the parent.
struct Subgroup {
  std::vector<std::size_t> generators;
  std::vector<std::size_t> elements;  // sorted
};

/// Closure inside the parent, by index arithmetic.
Subgroup generate(const FiniteGroup& g, const std::vector<std::size_t>& generators);
/// The subgroup as a stand-alone matrix group.
GroupPtr realize(const FiniteGroup& g, const Subgroup& h);
/// Sorted element sets of the conjugates of h, one per distinct conjugate.
std::vector<std::vector<std::size_t>> conjugates(const FiniteGroup& g,
                                                 const std::vector<std::size_t>& elements);

/// A Sylow 2-subgroup, grown one normalizing involution coset at a time.
Subgroup sylow2(const FiniteGroup& g);

/// One representative of every conjugacy class of abelian subgroups,
/// ordered by (order, elements).
std::vector<Subgroup> abelian_subgroups(const FiniteGroup& g, const Deadline& deadline = {});

/// One representative per conjugacy class of dihedral subgroups of order 2n
/// (a rotation of order n and a reflection inverting it).
std::vector<Subgroup> dihedral_subgroups(const FiniteGroup& g, std::size_t n,
                                         const Deadline& deadline = {});

/// Element indices of h inside g; throws NotASubgroup if some element is missing.
std::vector<std::size_t> embed(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace quadlin
