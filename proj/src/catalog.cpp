#include "quadlin/catalog.hpp"

#include <algorithm>
#include <functional>

#include "quadlin/error.hpp"
#include "quadlin/group.hpp"
#include "quadlin/witt.hpp"

namespace quadlin {

Matrix permutation_matrix(const std::vector<int>& perm) {
  Matrix m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(static_cast<std::size_t>(perm[i]), i) = Cyclo(1L);
  return m;
}

Matrix signed_permutation_matrix(const std::vector<int>& image) {
  Matrix m(image.size(), image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    int j = std::abs(image[i]) - 1;
    m(static_cast<std::size_t>(j), i) = Cyclo(image[i] > 0 ? 1L : -1L);
  }
  return m;
}

Matrix diagonal(const std::vector<Cyclo>& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

Matrix parity_twist(const Matrix& signed_perm) {
  long negatives = 0;
  for (std::size_t i = 0; i < signed_perm.rows(); ++i)
    for (std::size_t j = 0; j < signed_perm.cols(); ++j)
      if (signed_perm(i, j) == Cyclo(-1L)) ++negatives;
  return negatives % 2 ? Cyclo(-1L) * signed_perm : signed_perm;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> wedge_basis(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.emplace_back(i, j);
  return b;
}

}  // namespace

Matrix exterior_square(const Matrix& m) {
  const auto basis = wedge_basis(m.rows());
  Matrix out(basis.size(), basis.size());
  // column (i, j) is m e_i ^ m e_j expanded in e_k ^ e_l
  for (std::size_t c = 0; c < basis.size(); ++c) {
    auto [i, j] = basis[c];
    for (std::size_t r = 0; r < basis.size(); ++r) {
      auto [k, l] = basis[r];
      out(r, c) = m(k, i) * m(l, j) - m(l, i) * m(k, j);
    }
  }
  return out;
}

Matrix wedge_pairing_gram() {
  const auto basis = wedge_basis(4);
  Matrix g(6, 6);
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) {
      auto [i, j] = basis[x];
      auto [k, l] = basis[y];
      std::vector<std::size_t> idx{i, j, k, l};
      auto sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      int inversions = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (idx[a] > idx[b]) ++inversions;
      g(x, y) = Cyclo(inversions % 2 ? -1L : 1L);
    }
  return g;
}

std::vector<Matrix> weyl_d5_generators() {
  return {signed_permutation_matrix({2, 1, 3, 4, 5}), signed_permutation_matrix({1, 3, 2, 4, 5}),
          signed_permutation_matrix({1, 2, 4, 3, 5}), signed_permutation_matrix({1, 2, 3, 5, 4}),
          signed_permutation_matrix({-2, -1, 3, 4, 5})};
}

namespace {

Cyclo z(long n, long k) { return Cyclo::root(n, k); }
Cyclo num(long v) { return Cyclo(v); }

Matrix from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Cyclo>> r;
  for (const auto& row : rows) {
    std::vector<Cyclo> cr;
    for (long v : row) cr.emplace_back(v);
    r.push_back(std::move(cr));
  }
  return Matrix::from_rows(r);
}

Matrix one() { return Matrix::identity(1); }
Matrix minus_one() { return Matrix::scalar(1, Cyclo(-1L)); }
Matrix swap2() { return from_ints({{0, 1}, {1, 0}}); }
Matrix hyperbolic2() { return swap2(); }

// Quadric x1 x2 = x3 x4 + x5^2, scaled to integral gram entries.
Matrix split_quadric_gram() {
  return block_diagonal({hyperbolic2(), Cyclo(-1L) * hyperbolic2(), Matrix::scalar(1, Cyclo(-2L))});
}

// Action of sigma = diag(l^-3, l^3, l^-1, l, 1) and the swap tau on the split
// quadric, with l = zeta_n.
std::vector<Matrix> cubic_model(long n) {
  return {diagonal({z(n, -3), z(n, 3), z(n, -1), z(n, 1), num(1)}),
          block_diagonal({swap2(), swap2(), one()})};
}

Matrix dual_rep(const Matrix& m) { return inverse(m)->transpose(); }

// rho + rho^dual + 1 with the hyperbolic pairing between the first two
// summands; valid for any representation.
void hyperbolic_extension(CatalogEntry& e, const std::vector<Matrix>& rho) {
  const std::size_t d = rho.front().rows();
  e.generators.clear();
  for (const auto& m : rho) e.generators.push_back(block_diagonal({m, dual_rep(m), one()}));
  Matrix g(2 * d + 1, 2 * d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    g(i, d + i) = Cyclo(1L);
    g(d + i, i) = Cyclo(1L);
  }
  g(2 * d, 2 * d) = Cyclo(1L);
  e.gram = g;
}

long param(const std::map<std::string, long>& params, const std::string& key, long lo, long hi) {
  auto it = params.find(key);
  if (it == params.end()) throw Error(Error::Kind::BadParams, "missing parameter '" + key + "'");
  if (it->second < lo || it->second > hi)
    throw Error(Error::Kind::BadParams, "parameter '" + key + "' must lie in [" + std::to_string(lo) +
                                            ", " + std::to_string(hi) + "]");
  return it->second;
}

CatalogEntry make(std::string name, std::string description) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(description);
  return e;
}

std::vector<Matrix> twisted(std::vector<Matrix> gens) {
  for (auto& g : gens) g = parity_twist(g);
  return gens;
}

const Matrix kIdentity5 = Matrix::identity(5);

// S5 on f_i = e_i - e_5 (i = 1..4): the 4-dimensional standard representation.
Matrix standard(const std::vector<int>& perm) {
  Matrix m(4, 4);
  const int k = perm[4];
  for (std::size_t i = 0; i < 4; ++i) {
    const int j = perm[i];
    if (j < 4) m(static_cast<std::size_t>(j), i) += Cyclo(1L);
    if (k < 4) m(static_cast<std::size_t>(k), i) -= Cyclo(1L);
  }
  return m;
}

using Builder = std::function<CatalogEntry(const std::map<std::string, long>&)>;

const std::vector<std::pair<std::string, Builder>>& fixed_entries() {
  static const std::vector<std::pair<std::string, Builder>> entries = {
      {"weyl_d5",
       [](const auto&) {
         auto e = make("weyl_d5", "W(D5) by even signed permutations on the diagonal quadric in P^4");
         e.generators = weyl_d5_generators();
         e.gram = kIdentity5;
         e.order = 1920;
         e.expected = "UNKNOWN";
         e.anchor = "ambient group of the signed-permutation family";
         e.literature = "The diagonal sign changes form an abelian subgroup without fixed points, so no criterion can fire.";
         return e;
       }},
      {"c4wrc2_in_wd5",
       [](const auto&) {
         auto e = make("c4wrc2_in_wd5", "C4 wr C2 inside W(D5), diagonal quadric");
         std::vector<Matrix> gens = {
             block_diagonal({from_ints({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}), minus_one()}),
             block_diagonal({from_ints({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), one()}),
             block_diagonal({from_ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}), one()}),
             diagonal({num(-1), num(-1), num(1), num(1), num(1)}),
             diagonal({num(1), num(1), num(-1), num(-1), num(1)})};
         e.generators = twisted(gens);
         e.gram = kIdentity5;
         e.order = 32;
         e.expected = "LINEARIZABLE";
         e.anchor = "hyperbolic pair V2 + V2 dual";
         e.character_tuple = {"5", "-3", "1", "1", "1", "1", "1", "-3", "1", "1", "-3", "1", "-1", "-1"};
         return e;
       }},
      {"sd16_in_wd5",
       [](const auto&) {
         auto e = make("sd16_in_wd5", "semidihedral group of order 16 inside W(D5), diagonal quadric");
         e.generators = {
             block_diagonal({from_ints({{1, 0, 0, 0}, {0, 0, -1, 0}, {0, -1, 0, 0}, {0, 0, 0, -1}}), minus_one()}),
             block_diagonal({from_ints({{0, 1, 0, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 0, 1, 0}}), minus_one()}),
             block_diagonal({from_ints({{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}), one()}),
             diagonal({num(-1), num(-1), num(-1), num(-1), num(1)})};
         e.gram = kIdentity5;
         e.order = 16;
         e.expected = "LINEARIZABLE";
         e.anchor = "hyperbolic pair V2 + V2 dual";
         e.character_tuple = {"5", "-3", "-1", "1", "1", "-1", "-1"};
         return e;
       }},
      {"d8_in_wd5",
       [](const auto&) {
         auto e = make("d8_in_wd5", "dihedral group of order 16 inside W(D5), diagonal quadric");
         e.generators = {signed_permutation_matrix({2, 3, 4, -1, -5}),
                         signed_permutation_matrix({4, 3, 2, 1, 5})};
         e.gram = kIdentity5;
         e.order = 16;
         e.expected = "LINEARIZABLE";
         e.anchor = "twisted cubic weight pattern";
         e.character_tuple = {"5", "-3", "-1", "1", "1", "-1", "-1"};
         return e;
       }},
      {"s5_in_wd5",
       [](const auto&) {
         auto e = make("s5_in_wd5", "S5 permuting coordinates of the diagonal quadric in P^4");
         e.generators = {permutation_matrix({1, 0, 2, 3, 4}), permutation_matrix({1, 2, 3, 4, 0})};
         e.gram = kIdentity5;
         e.order = 120;
         e.expected = "STABLY_LINEARIZABLE";
         e.anchor = "Sylow 2-subgroup fixed point";
         e.literature = "Known to be non-linearizable; that proof lies outside these criteria.";
         return e;
       }},
      {"s4_in_wd5",
       [](const auto&) {
         auto e = make("s4_in_wd5", "S4 permuting x1..x4 of the diagonal quadric, twisted into W(D5)");
         e.generators = twisted({permutation_matrix({1, 0, 2, 3, 4}), permutation_matrix({1, 2, 3, 0, 4})});
         e.gram = kIdentity5;
         e.order = 24;
         e.expected = "LINEARIZABLE";
         e.anchor = "S4 permutation subgroup of W(D5)";
         e.literature = "This embedding fixes the point (1:1:1:1:2i); it is not the fixed-point-free S4 of the classification.";
         return e;
       }},
      {"s3xd4_in_wd5",
       [](const auto&) {
         auto e = make("s3xd4_in_wd5", "S3 on x1..x3 times D4 on x4, x5, twisted into W(D5)");
         e.generators = twisted({permutation_matrix({1, 0, 2, 3, 4}), permutation_matrix({1, 2, 0, 3, 4}),
                                 signed_permutation_matrix({1, 2, 3, 5, -4}),
                                 signed_permutation_matrix({1, 2, 3, 5, 4})});
         e.gram = kIdentity5;
         e.order = 48;
         e.expected = "STABLY_LINEARIZABLE";
         e.anchor = "S3 x D4 subgroup of W(D5)";
         return e;
       }},
      {"s3xc2c2",
       [](const auto&) {
         auto e = make("s3xc2c2", "S3 on x1..x3 with independent sign changes of x4 and x5");
         e.generators = {permutation_matrix({1, 0, 2, 3, 4}), permutation_matrix({1, 2, 0, 3, 4}),
                         diagonal({num(1), num(1), num(1), num(-1), num(1)}),
                         diagonal({num(1), num(1), num(1), num(1), num(-1)})};
         e.gram = kIdentity5;
         e.order = 24;
         e.expected = "STABLY_LINEARIZABLE";
         e.anchor = "Sylow 2-subgroup fixed point";
         e.literature = "Known to be non-linearizable, by an equivariant Burnside class argument.";
         return e;
       }},
      {"s3xc2c2_in_wd5",
       [](const auto&) {
         auto e = make("s3xc2c2_in_wd5", "the same projective action twisted into W(D5)");
         e.generators = twisted({permutation_matrix({1, 0, 2, 3, 4}), permutation_matrix({1, 2, 0, 3, 4}),
                                 diagonal({num(1), num(1), num(1), num(-1), num(1)}),
                                 diagonal({num(1), num(1), num(1), num(1), num(-1)})});
         e.gram = kIdentity5;
         e.order = 24;
         e.expected = "STABLY_LINEARIZABLE";
         e.anchor = "Sylow 2-subgroup fixed point";
         return e;
       }},
      {"d12_split_quadric",
       [](const auto&) {
         auto e = make("d12_split_quadric",
                       "dihedral group of order 24 on x1 x2 = x3 x4 + x5^2 via two faithful planes");
         e.generators = {diagonal({z(12, 1), z(12, 11), z(12, 7), z(12, 5), num(1)}),
                         block_diagonal({swap2(), swap2(), one()})};
         e.gram = split_quadric_gram();
         e.order = 24;
         e.expected = "STABLY_LINEARIZABLE";
         e.anchor = "Sylow reduction to a dihedral group of order 8";
         return e;
       }},
      {"d4_sylow_restriction",
       [](const auto&) {
         auto e = make("d4_sylow_restriction",
                       "Sylow 2-subgroup of d12_split_quadric: 2 V2 + 1 on the same quadric");
         e.generators = {diagonal({z(4, 1), z(4, 3), z(4, 3), z(4, 1), num(1)}),
                         block_diagonal({swap2(), swap2(), one()})};
         e.gram = split_quadric_gram();
         e.order = 8;
         e.expected = "LINEARIZABLE";
         e.anchor = "hyperbolic pair from a multiplicity-two component";
         return e;
       }},
      {"s3_twisted_cubic",
       [](const auto&) {
         auto e = make("s3_twisted_cubic", "S3 on the twisted cubic model with l = E(3)");
         e.generators = cubic_model(3);
         e.gram = split_quadric_gram();
         e.order = 6;
         e.expected = "LINEARIZABLE";
         e.anchor = "twisted cubic weight pattern";
         return e;
       }},
      {"d8_twisted_cubic",
       [](const auto&) {
         auto e = make("d8_twisted_cubic", "dihedral group of order 16 on the twisted cubic model with l = E(8)");
         e.generators = cubic_model(8);
         e.gram = split_quadric_gram();
         e.order = 16;
         e.expected = "LINEARIZABLE";
         e.anchor = "twisted cubic weight pattern";
         return e;
       }},
      {"d4_open_case",
       [](const auto&) {
         auto e = make("d4_open_case", "dihedral group of order 8 on V2 + three distinct nontrivial characters");
         e.generators = {block_diagonal({from_ints({{0, -1}, {1, 0}}), one(), minus_one(), minus_one()}),
                         block_diagonal({from_ints({{1, 0}, {0, -1}}), minus_one(), one(), minus_one()})};
         e.gram = kIdentity5;
         e.order = 8;
         e.expected = "UNKNOWN";
         e.anchor = "open case: no criterion applies";
         return e;
       }},
      {"d8_open_case",
       [](const auto&) {
         auto e = make("d8_open_case", "dihedral group of order 16 on non-faithful V2 + faithful V2' + 1");
         e.generators = {diagonal({z(8, 2), z(8, 6), z(8, 1), z(8, 7), num(1)}),
                         block_diagonal({swap2(), swap2(), one()})};
         e.gram = block_diagonal({hyperbolic2(), hyperbolic2(), one()});
         e.order = 16;
         e.expected = "UNKNOWN";
         e.anchor = "open case: no criterion applies";
         return e;
       }},
      {"s5_wedge_quadric",
       [](const auto&) {
         auto e = make("s5_wedge_quadric",
                       "S5 on the exterior square of its 4-dimensional standard representation, Pluecker quadric");
         e.generators = {exterior_square(standard({1, 0, 2, 3, 4})),
                         exterior_square(standard({1, 2, 3, 4, 0}))};
         e.gram = wedge_pairing_gram();
         e.order = 120;
         e.expected = "STABLY_LINEARIZABLE";
         e.anchor = "Grassmannian of lines in the standard representation";
         return e;
       }},
      {"a5_wedge_quadric",
       [](const auto&) {
         auto e = make("a5_wedge_quadric", "A5 on the same Pluecker quadric (wedge pairing invariant)");
         e.generators = {exterior_square(standard({1, 2, 0, 3, 4})),
                         exterior_square(standard({1, 2, 3, 4, 0}))};
         e.gram = wedge_pairing_gram();
         e.order = 60;
         e.expected = "STABLY_LINEARIZABLE";
         e.anchor = "Grassmannian of lines in the standard representation";
         return e;
       }},
      {"s3xc2_quadric_surface",
       [](const auto&) {
         auto e = make("s3xc2_quadric_surface",
                       "S3 on x1..x3 and a sign change of x4, on the diagonal quadric surface in P^3");
         e.generators = {permutation_matrix({1, 0, 2, 3}), permutation_matrix({1, 2, 0, 3}),
                         diagonal({num(1), num(1), num(1), num(-1)})};
         e.gram = Matrix::identity(4);
         e.order = 12;
         e.expected = "STABLY_LINEARIZABLE";
         e.anchor = "Sylow 2-subgroup fixed point";
         return e;
       }},
      {"q8_symplectic",
       [](const auto&) {
         auto e = make("q8_symplectic", "quaternion group on two copies of its symplectic plane plus a line");
         Matrix qi = diagonal({z(4, 1), z(4, 3)});
         Matrix qj = from_ints({{0, 1}, {-1, 0}});
         e.generators = {block_diagonal({qi, qi, one()}), block_diagonal({qj, qj, one()})};
         Matrix j = from_ints({{0, 1}, {-1, 0}});
         Matrix g(5, 5);
         for (std::size_t a = 0; a < 2; ++a)
           for (std::size_t b = 0; b < 2; ++b) {
             g(a, 2 + b) = j(a, b);
             g(2 + a, b) = -j(a, b);
           }
         g(4, 4) = Cyclo(1L);
         e.gram = g;
         e.order = 8;
         e.expected = "LINEARIZABLE";
         e.anchor = "hyperbolic pair from a symplectic component";
         return e;
       }},
      {"trivial_in_wd5",
       [](const auto&) {
         auto e = make("trivial_in_wd5", "trivial subgroup of W(D5)");
         e.generators = {kIdentity5};
         e.gram = kIdentity5;
         e.order = 1;
         e.expected = "LINEARIZABLE";
         e.anchor = "fixed point";
         return e;
       }},
      {"minus_identity",
       [](const auto&) {
         auto e = make("minus_identity", "-I acting on the diagonal quadric in P^4");
         e.generators = {Matrix::scalar(5, Cyclo(-1L))};
         e.gram = kIdentity5;
         e.order = 2;
         e.expected = "NotGenericallyFree";
         e.anchor = "generic freeness";
         return e;
       }},
      {"d4_projective_line",
       [](const auto&) {
         auto e = make("d4_projective_line", "dihedral group of order 8 on a 2-dimensional V2");
         e.generators = {diagonal({z(4, 1), z(4, 3)}), swap2()};
         e.gram = hyperbolic2();
         e.order = 8;
         e.expected = "NotGenericallyFree";
         e.anchor = "generic freeness";
         return e;
       }},
  };
  return entries;
}

const std::vector<std::pair<std::string, Builder>>& families() {
  static const std::vector<std::pair<std::string, Builder>> entries = {
      {"cyclic",
       [](const auto& p) {
         long n = param(p, "n", 1, 1000);
         auto e = make("cyclic", "cyclic group of order n on a conic: weights 1, -1, 0");
         e.generators = {diagonal({z(n, 1), z(n, -1), num(1)})};
         e.gram = from_ints({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
         e.order = static_cast<std::size_t>(n);
         e.expected = "LINEARIZABLE";  // (1:0:0) is fixed and isotropic
         return e;
       }},
      {"dihedral",
       [](const auto& p) {
         long n = param(p, "n", 2, 500);
         auto e = make("dihedral", "dihedral group of order 2n on a conic");
         e.generators = {diagonal({z(n, 1), z(n, -1), num(1)}), block_diagonal({swap2(), one()})};
         e.gram = from_ints({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
         e.order = static_cast<std::size_t>(2 * n);
         // for even n the Klein four group <r^(n/2), s> has no fixed point on the conic
         e.expected = n % 2 ? "STABLY_LINEARIZABLE" : "UNKNOWN";
         return e;
       }},
      {"semidihedral",
       [](const auto& p) {
         long k = param(p, "k", 4, 9);
         long n = 1L << (k - 1);
         auto e = make("semidihedral", "semidihedral group of order 2^k on V2 + V2 dual + 1");
         hyperbolic_extension(e, {diagonal({z(n, 1), z(n, n / 2 - 1)}), swap2()});
         e.order = static_cast<std::size_t>(2 * n);
         e.expected = "LINEARIZABLE";
         return e;
       }},
      {"wreath",
       [](const auto& p) {
         long n = param(p, "n", 2, 30);
         auto e = make("wreath", "C_n wr C2 on its monomial plane W, as W + W dual + 1");
         hyperbolic_extension(e, {diagonal({z(n, 1), num(1)}), swap2()});
         e.order = static_cast<std::size_t>(2 * n * n);
         e.expected = "LINEARIZABLE";
         return e;
       }},
      {"symmetric",
       [](const auto& p) {
         long n = param(p, "n", 3, 6);
         auto e = make("symmetric", "S_n permuting coordinates of the diagonal quadric in P^(n-1)");
         std::vector<int> t(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
         for (int i = 0; i < n; ++i) {
           t[static_cast<std::size_t>(i)] = i;
           c[static_cast<std::size_t>(i)] = (i + 1) % static_cast<int>(n);
         }
         std::swap(t[0], t[1]);
         e.generators = {permutation_matrix(t), permutation_matrix(c)};
         e.gram = Matrix::identity(static_cast<std::size_t>(n));
         std::size_t f = 1;
         for (long i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
         e.order = f;
         // the double transpositions of S4 have no common isotropic eigenvector
         e.expected = n == 4 ? "UNKNOWN" : "STABLY_LINEARIZABLE";
         return e;
       }},
  };
  return entries;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : fixed_entries()) out.push_back(name);
  return out;
}

std::vector<std::string> catalog_families() {
  std::vector<std::string> out;
  for (const auto& [name, _] : families()) out.push_back(name);
  return out;
}

CatalogEntry build(const std::string& name, const std::map<std::string, long>& params) {
  const Builder* builder = nullptr;
  bool family = false;
  for (const auto& [n, b] : fixed_entries())
    if (n == name) builder = &b;
  for (const auto& [n, b] : families())
    if (n == name) {
      builder = &b;
      family = true;
    }
  if (!builder) throw Error(Error::Kind::UnknownEntry, "no catalog entry named '" + name + "'");
  if (!family && !params.empty()) throw Error(Error::Kind::BadParams, "entry '" + name + "' takes no parameters");
  CatalogEntry e = (*builder)(params);
  e.params = params;
  auto g = FiniteGroup::closure(e.generators);
  if (g->order() != e.order)
    throw Error(Error::Kind::Internal, "catalog entry '" + name + "' has order " + std::to_string(g->order()) +
                                          ", expected " + std::to_string(e.order));
  if (!e.character_tuple.empty()) {
    auto chi = character_of(g);
    std::vector<std::string> got, want = e.character_tuple;
    for (const auto& v : chi.values()) got.push_back(to_string(v));
    if (got.size() != want.size() || got.front() != want.front())
      throw Error(Error::Kind::Internal, "catalog entry '" + name + "' does not match its character tuple");
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want)
      throw Error(Error::Kind::Internal, "catalog entry '" + name + "' does not match its character tuple");
  }
  return e;
}

}  // namespace quadlin
