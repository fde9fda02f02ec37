#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadlin/characters.hpp"

namespace quadlin {

/// A vector a + sqrt(radicand) * b. With radicand zero, b is empty and the
/// vector is plain. Identities are checked in F[x]/(x^2 - radicand), so they
/// hold for either choice of square root.
struct ExtVector {
  Cyclo radicand;
  Vector a;
  Vector b;

  static ExtVector plain(Vector v) { return {Cyclo(), std::move(v), {}}; }
  bool is_plain() const { return radicand.is_zero(); }
  std::size_t size() const { return a.size(); }
  /// The Galois partner a - sqrt(radicand) * b.
  ExtVector bar() const;
};

/// s = a + sqrt(r) * b
struct ExtScalar {
  Cyclo a;
  Cyclo b;
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

ExtScalar ext_bilinear(const ExtVector& x, const Matrix& q, const ExtVector& y);
/// Nonzero for both square roots: the norm a^2 - r b^2 does not vanish.
bool ext_nonzero(const ExtScalar& s, const Cyclo& radicand);
ExtVector ext_apply(const Matrix& m, const ExtVector& v);
/// a and b stacked, so that F-linear statements about F(sqrt r)-vectors
/// with F-coefficients can be checked with ordinary linear algebra.
Vector stacked(const ExtVector& v);
/// Whether span(vs) is stable under every generator of the group.
bool ext_span_invariant(const std::vector<ExtVector>& vs, const FiniteGroup& g);
/// Character of the group on span(vs), which must be invariant and
/// independent over F; nullopt if some image leaves the span.
std::optional<ClassFunction> span_character(const std::vector<ExtVector>& vs, const GroupPtr& g);
/// Whether v and w are proportional over F(sqrt r) (or both zero).
bool ext_proportional(const ExtVector& v, const ExtVector& w);

/// A finite group acting on V with an invariant symmetric bilinear form.
struct QuadraticSpace {
  GroupPtr group;
  Matrix gram;
  std::size_t dim() const { return gram.rows(); }
  Cyclo q(const Vector& v) const { return bilinear(v, gram, v); }
};

/// Average of seed forms over the group: g^T S g summed, first
/// nondegenerate result wins. Throws NoInvariantForm.
Matrix invariant_form(const FiniteGroup& g);
bool is_invariant(const Matrix& gram, const FiniteGroup& g);

/// Sum of the group elements in each conjugacy class.
std::vector<Matrix> class_sums(const FiniteGroup& g);
/// (deg/|G|) * sum over g of conj(chi(g)) * g
Matrix isotypic_projector(const ClassFunction& chi, const std::vector<Matrix>& sums);

enum class PairKind { NonSelfDual, Symplectic, Orthogonal };
const char* to_string(PairKind kind);

/// W and its dual W' with B(w_i, w'_j) = delta_ij, both totally isotropic.
struct HyperbolicPair {
  PairKind kind;
  std::size_t character;       // irreducible index of W
  std::size_t dual_character;  // irreducible index of W'
  Cyclo radicand;
  std::vector<ExtVector> w;
  std::vector<ExtVector> w_dual;
};

struct AnisotropicComponent {
  std::size_t character;
  std::vector<Vector> basis;
};

struct WittDecomposition {
  std::vector<long> multiplicities;
  std::vector<HyperbolicPair> pairs;  // peeling order
  std::vector<AnisotropicComponent> anisotropic;
  std::size_t witt_index() const;
};

/// Equivariant Witt decomposition V = (+) H(W) (+) V_an at the granularity
/// of irreducible summands. Throws Degenerate on a singular gram matrix.
WittDecomposition witt_decompose(const QuadraticSpace& qs, const CharacterTable& table);

/// Problems found when re-checking a decomposition from scratch; empty if sound.
std::vector<std::string> check_witt(const QuadraticSpace& qs, const CharacterTable& table,
                                    const WittDecomposition& wd);

/// An H-eigenline on the quadric: v with h v = psi(h) v and q(v) = 0.
struct FixedLine {
  std::size_t linear_character;  // index in H's character table
  std::size_t eigenspace_dim;
  ExtVector point;
};

/// Isotropic eigenlines of H, one per linear character where one exists.
/// H must consist of elements of the group of qs.
std::vector<FixedLine> fixed_lines_on_quadric(const QuadraticSpace& qs, const GroupPtr& h,
                                              const CharacterTable& h_table);

/// An isotropic vector in span(basis), completing the square if needed.
std::optional<ExtVector> find_isotropic(const std::vector<Vector>& basis, const Matrix& gram);

}  // namespace quadlin
