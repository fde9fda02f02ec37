#include "quadlin/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "quadlin/error.hpp"

namespace quadlin {

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclo> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->class_count())
    throw Error(Error::Kind::Internal, "class function has the wrong number of values");
}

ClassFunction ClassFunction::conjugate() const {
  std::vector<Cyclo> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.conjugate());
  return {group_, std::move(v)};
}

ClassFunction ClassFunction::adams(long k) const {
  std::vector<Cyclo> v;
  v.reserve(values_.size());
  for (std::size_t c = 0; c < values_.size(); ++c) v.push_back(values_[group_->class_power(c, k)]);
  return {group_, std::move(v)};
}

void ClassFunction::check_same_group(const ClassFunction& rhs) const {
  if (group_ != rhs.group_) throw Error(Error::Kind::Internal, "class functions on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& rhs) {
  check_same_group(rhs);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += rhs.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& rhs) {
  check_same_group(rhs);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] -= rhs.values_[c];
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  a.check_same_group(b);
  std::vector<Cyclo> v(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) v[c] = a.values_[c] * b.values_[c];
  return {a.group_, std::move(v)};
}

ClassFunction operator*(const Cyclo& s, const ClassFunction& a) {
  std::vector<Cyclo> v(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) v[c] = s * a.values_[c];
  return {a.group_, std::move(v)};
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

std::vector<std::string> ClassFunction::keys() const {
  std::vector<std::string> out;
  for (const auto& v : values_) out.push_back(v.key());
  return out;
}

ClassFunction trivial_character(const GroupPtr& g) {
  return {g, std::vector<Cyclo>(g->class_count(), Cyclo(1L))};
}

ClassFunction character_of(const GroupPtr& g) {
  std::vector<Cyclo> v;
  for (const auto& cls : g->classes()) v.push_back(g->element(cls.representative).trace());
  return {g, std::move(v)};
}

Cyclo inner_product(const ClassFunction& a, const ClassFunction& b) {
  const auto& g = *a.group();
  Cyclo sum;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    sum += Cyclo(static_cast<long>(g.classes()[c].size())) * a[c] * b[c].conjugate();
  }
  return sum * Cyclo(mpq_class(1, static_cast<long>(g.order())));
}

// ------------------------------------------------------------ Dixon-Schneider

namespace {

using i64 = long long;

i64 pmod(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

i64 pow_mod(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b = pmod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

i64 inv_mod(i64 a, i64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 primitive_root(i64 p) {
  std::vector<i64> qs;
  i64 m = p - 1;
  for (i64 d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    qs.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) qs.push_back(m);
  for (i64 g = 2;; ++g) {
    if (std::all_of(qs.begin(), qs.end(), [&](i64 q) { return pow_mod(g, (p - 1) / q, p) != 1; }))
      return g;
  }
}

using ModMatrix = std::vector<std::vector<i64>>;

// Row-reduce in place over F_p; returns pivot columns.
std::vector<std::size_t> rref_mod(ModMatrix& a, std::size_t cols, i64 p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t q = r;
    while (q < a.size() && a[q][c] == 0) ++q;
    if (q == a.size()) continue;
    std::swap(a[q], a[r]);
    i64 inv = inv_mod(a[r][c], p);
    for (auto& x : a[r]) x = x * inv % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      i64 f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] = pmod(a[i][j] - f * a[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Kernel basis of an s x s matrix.
std::vector<std::vector<i64>> kernel_mod(ModMatrix a, i64 p) {
  std::size_t s = a.empty() ? 0 : a.front().size();
  auto pivots = rref_mod(a, s, p);
  std::vector<bool> piv(s, false);
  for (auto c : pivots) piv[c] = true;
  std::vector<std::vector<i64>> out;
  for (std::size_t f = 0; f < s; ++f) {
    if (piv[f]) continue;
    std::vector<i64> v(s, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = pmod(-a[r][f], p);
    out.push_back(std::move(v));
  }
  return out;
}

// Space spanned by the columns of `basis` (each entry is one column of length r).
using Space = std::vector<std::vector<i64>>;

std::vector<Space> split(const Space& basis, const ModMatrix& m, i64 p) {
  const std::size_t s = basis.size(), r = basis.front().size();
  // images of basis vectors under m
  std::vector<std::vector<i64>> img(s, std::vector<i64>(r, 0));
  for (std::size_t b = 0; b < s; ++b)
    for (std::size_t j = 0; j < r; ++j) {
      i64 acc = 0;
      for (std::size_t k = 0; k < r; ++k) acc = (acc + m[j][k] * basis[b][k]) % p;
      img[b][j] = acc;
    }
  // solve basis * X = img: augmented r x (s + s)
  ModMatrix aug(r, std::vector<i64>(2 * s, 0));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t b = 0; b < s; ++b) {
      aug[j][b] = basis[b][j];
      aug[j][s + b] = img[b][j];
    }
  auto pivots = rref_mod(aug, s, p);
  if (pivots.size() != s) throw Error(Error::Kind::Internal, "character space basis lost rank");
  ModMatrix x(s, std::vector<i64>(s, 0));  // x[a][b]: coefficient of basis a in img b
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) x[a][b] = aug[a][s + b];

  std::vector<Space> parts;
  std::size_t found = 0;
  for (i64 lambda = 0; lambda < p && found < s; ++lambda) {
    ModMatrix y = x;
    for (std::size_t a = 0; a < s; ++a) y[a][a] = pmod(y[a][a] - lambda, p);
    auto ker = kernel_mod(y, p);
    if (ker.empty()) continue;
    Space part;
    for (const auto& coeffs : ker) {
      std::vector<i64> v(r, 0);
      for (std::size_t b = 0; b < s; ++b)
        if (coeffs[b])
          for (std::size_t j = 0; j < r; ++j) v[j] = (v[j] + coeffs[b] * basis[b][j]) % p;
      part.push_back(std::move(v));
    }
    found += part.size();
    parts.push_back(std::move(part));
  }
  if (found != s) throw Error(Error::Kind::Internal, "class matrix is not diagonalizable mod p");
  return parts;
}

bool is_trivial(const ClassFunction& chi) {
  return std::all_of(chi.values().begin(), chi.values().end(),
                     [](const Cyclo& c) { return c.is_one(); });
}

}  // namespace

std::vector<std::size_t> CharacterTable::linear() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] == 1) out.push_back(i);
  return out;
}

std::size_t CharacterTable::index_of(const ClassFunction& chi) const {
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    if (irreducibles[i] == chi) return i;
  throw Error(Error::Kind::NotIrreducible, "class function is not an irreducible character");
}

CharacterTable character_table(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  const i64 n = static_cast<i64>(g.order());
  const std::size_t r = g.class_count();
  const i64 e = static_cast<i64>(g.exponent());

  i64 p = e + 1;
  const double bound = 2.0 * std::sqrt(static_cast<double>(n));
  while (!(is_prime(p) && static_cast<double>(p) > bound)) p += e;

  // a[i][j][k] = #{x in C_i : x^-1 z in C_j} for a fixed z in C_k
  std::vector<i64> a(r * r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t z = g.classes()[k].representative;
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::size_t y = g.mul(g.inverse(x), z);
      ++a[(g.class_of(x) * r + g.class_of(y)) * r + k];
    }
  }

  std::vector<Space> spaces;
  {
    Space full;
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<i64> v(r, 0);
      v[j] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t i = 1; i < r; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.size() == 1; })) break;
    ModMatrix m(r, std::vector<i64>(r, 0));
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) m[j][k] = a[(i * r + j) * r + k] % p;
    std::vector<Space> next;
    for (const Space& s : spaces) {
      if (s.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& part : split(s, m, p)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw Error(Error::Kind::Internal, "class matrices did not separate characters");

  std::vector<std::size_t> inv_class(r);
  for (std::size_t c = 0; c < r; ++c) inv_class[c] = g.class_of(g.inverse(g.classes()[c].representative));

  const i64 z = pow_mod(primitive_root(p), (p - 1) / e, p);
  CharacterTable table;
  table.group = gp;
  table.prime = p;
  std::vector<ClassFunction> chars;
  for (const Space& s : spaces) {
    const auto& w = s.front();
    if (w[0] == 0) throw Error(Error::Kind::Internal, "eigenvector vanishes on the identity class");
    i64 w0inv = inv_mod(w[0], p);
    std::vector<i64> omega(r);
    for (std::size_t k = 0; k < r; ++k) omega[k] = w[k] * w0inv % p;
    i64 sum = 0;
    for (std::size_t k = 0; k < r; ++k) {
      i64 csize = static_cast<i64>(g.classes()[k].size()) % p;
      sum = (sum + omega[k] * omega[inv_class[k]] % p * inv_mod(csize, p)) % p;
    }
    i64 d2 = n % p * inv_mod(sum, p) % p;
    i64 d = 0;
    for (i64 c = 1; c * c <= n; ++c)
      if (c * c % p == d2) {
        d = c;
        break;
      }
    if (d == 0) throw Error(Error::Kind::Internal, "no admissible character degree");
    std::vector<i64> chi_p(r);
    for (std::size_t k = 0; k < r; ++k) {
      i64 csize = static_cast<i64>(g.classes()[k].size()) % p;
      chi_p[k] = d * omega[k] % p * inv_mod(csize, p) % p;
    }
    std::vector<Cyclo> values(r);
    for (std::size_t k = 0; k < r; ++k) {
      const i64 o = static_cast<i64>(g.element_order(g.classes()[k].representative));
      const i64 zeta = pow_mod(z, e / o, p);
      const i64 oinv = inv_mod(o % p, p);
      std::vector<std::pair<long, mpq_class>> terms;
      i64 total = 0;
      for (i64 t = 0; t < o; ++t) {
        i64 acc = 0;
        for (i64 j = 0; j < o; ++j) {
          acc = (acc + chi_p[g.class_power(k, j)] * pow_mod(zeta, pmod(-j * t, o), p)) % p;
        }
        i64 mult = acc * oinv % p;
        if (mult > d) throw Error(Error::Kind::Internal, "eigenvalue multiplicity out of range");
        total += mult;
        if (mult) terms.emplace_back(static_cast<long>(t), mpq_class(static_cast<long>(mult)));
      }
      if (total != d) throw Error(Error::Kind::Internal, "eigenvalue multiplicities do not sum to degree");
      values[k] = Cyclo::from_terms(static_cast<long>(o), terms);
    }
    chars.emplace_back(gp, std::move(values));
  }

  std::vector<std::vector<std::string>> keys;
  for (const auto& c : chars) keys.push_back(c.keys());
  std::vector<std::size_t> order(chars.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    long dx = *chars[x].degree().integer(), dy = *chars[y].degree().integer();
    if (dx != dy) return dx < dy;
    bool tx = is_trivial(chars[x]), ty = is_trivial(chars[y]);
    if (tx != ty) return tx;
    // larger real parts first, so e.g. a permutation character's summand
    // precedes its sign twist
    for (std::size_t c = 0; c < chars[x].size(); ++c) {
      auto fx = chars[x][c].float_view(), fy = chars[y][c].float_view();
      if (std::abs(fx.real() - fy.real()) > 1e-9) return fx.real() > fy.real();
      if (std::abs(fx.imag() - fy.imag()) > 1e-9) return fx.imag() > fy.imag();
    }
    return keys[x] < keys[y];
  });
  for (std::size_t i : order) {
    table.irreducibles.push_back(chars[i]);
    table.degrees.push_back(*chars[i].degree().integer());
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    table.dual.push_back(table.index_of(table.irreducibles[i].conjugate()));
    table.indicators.push_back(frobenius_schur(table.irreducibles[i]));
  }
  return table;
}

std::vector<long> decompose(const ClassFunction& chi, const CharacterTable& table) {
  if (chi.group() != table.group) throw Error(Error::Kind::Internal, "character and table on different groups");
  std::vector<long> mult;
  for (const auto& irr : table.irreducibles) {
    auto m = inner_product(chi, irr).integer();
    if (!m || *m < 0) throw Error(Error::Kind::NotACharacter, "class function is not a character");
    mult.push_back(*m);
  }
  if (compose(mult, table) != chi)
    throw Error(Error::Kind::NotACharacter, "class function is not a combination of irreducibles");
  return mult;
}

ClassFunction compose(const std::vector<long>& mult, const CharacterTable& table) {
  ClassFunction sum(table.group, std::vector<Cyclo>(table.group->class_count()));
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i]) sum += Cyclo(mult[i]) * table.irreducibles[i];
  return sum;
}

int frobenius_schur(const ClassFunction& chi) {
  if (!inner_product(chi, chi).is_one())
    throw Error(Error::Kind::NotIrreducible, "indicator requested for a reducible class function");
  const auto& g = *chi.group();
  Cyclo sum;
  for (std::size_t c = 0; c < chi.size(); ++c)
    sum += Cyclo(static_cast<long>(g.classes()[c].size())) * chi[g.class_power(c, 2)];
  auto v = (sum * Cyclo(mpq_class(1, static_cast<long>(g.order())))).integer();
  if (!v || *v < -1 || *v > 1) throw Error(Error::Kind::Internal, "indicator outside {-1, 0, 1}");
  return static_cast<int>(*v);
}

ClassFunction exterior_power(const ClassFunction& chi, int n) {
  std::vector<ClassFunction> e{trivial_character(chi.group())};
  for (int m = 1; m <= n; ++m) {
    ClassFunction acc(chi.group(), std::vector<Cyclo>(chi.size()));
    for (int k = 1; k <= m; ++k) {
      ClassFunction term = e[m - k] * chi.adams(k);
      if (k % 2 == 1) acc += term; else acc -= term;
    }
    e.push_back(Cyclo(mpq_class(1, m)) * acc);
  }
  return e[n];
}

ClassFunction symmetric_square(const ClassFunction& chi) {
  return Cyclo(mpq_class(1, 2)) * (chi * chi + chi.adams(2));
}

ClassFunction restrict(const ClassFunction& chi, const GroupPtr& h) {
  const FiniteGroup& g = *chi.group();
  std::vector<Cyclo> v;
  for (const auto& cls : h->classes()) {
    auto idx = h->degree() == g.degree() ? g.find_key(h->key(cls.representative)) : std::nullopt;
    if (!idx) throw Error(Error::Kind::NotASubgroup, "restriction target is not a subgroup");
    v.push_back(chi[g.class_of(*idx)]);
  }
  embed(g, *h);  // every element, not just class representatives
  return {h, std::move(v)};
}

bool verify_table(const CharacterTable& table) {
  const auto& g = *table.group;
  if (table.size() != g.class_count()) return false;
  long sum = 0;
  for (long d : table.degrees) sum += d * d;
  if (sum != static_cast<long>(g.order())) return false;
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i; j < table.size(); ++j) {
      Cyclo ip = inner_product(table.irreducibles[i], table.irreducibles[j]);
      if (i == j ? !ip.is_one() : !ip.is_zero()) return false;
    }
  // column orthogonality: sum_chi |chi(g)|^2 = |C_G(g)|
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    Cyclo s;
    for (const auto& chi : table.irreducibles) s += chi[c] * chi[c].conjugate();
    if (s != Cyclo(static_cast<long>(g.order() / g.classes()[c].size()))) return false;
  }
  return true;
}

}  // namespace quadlin
