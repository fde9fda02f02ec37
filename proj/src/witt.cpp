#include "quadlin/witt.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "quadlin/error.hpp"

namespace quadlin {

// ------------------------------------------------------------ extension vectors

ExtVector ExtVector::bar() const {
  if (is_plain()) return *this;
  return {radicand, a, scale(Cyclo(-1L), b)};
}

namespace {

Cyclo common_radicand(const Cyclo& r, const Cyclo& s) {
  if (r.is_zero()) return s;
  if (s.is_zero() || r == s) return r;
  throw Error(Error::Kind::Internal, "vectors over different quadratic extensions");
}

Cyclo safe_bilinear(const Vector& x, const Matrix& q, const Vector& y) {
  if (x.empty() || y.empty()) return Cyclo();
  return bilinear(x, q, y);
}

// B(x, y) is zero for every choice of both square roots.
bool ext_orthogonal(const ExtVector& x, const Matrix& q, const ExtVector& y) {
  if (x.radicand.is_zero() || y.radicand.is_zero() || x.radicand == y.radicand)
    return ext_bilinear(x, q, y).is_zero();
  return safe_bilinear(x.a, q, y.a).is_zero() && safe_bilinear(x.a, q, y.b).is_zero() &&
         safe_bilinear(x.b, q, y.a).is_zero() && safe_bilinear(x.b, q, y.b).is_zero();
}

}  // namespace

ExtScalar ext_bilinear(const ExtVector& x, const Matrix& q, const ExtVector& y) {
  Cyclo r = common_radicand(x.radicand, y.radicand);
  ExtScalar s;
  s.a = safe_bilinear(x.a, q, y.a);
  if (!x.b.empty() && !y.b.empty()) s.a += r * bilinear(x.b, q, y.b);
  s.b = safe_bilinear(x.a, q, y.b) + safe_bilinear(x.b, q, y.a);
  return s;
}

bool ext_nonzero(const ExtScalar& s, const Cyclo& radicand) {
  if (radicand.is_zero()) return !s.a.is_zero();
  return !(s.a * s.a - radicand * s.b * s.b).is_zero();
}

ExtVector ext_apply(const Matrix& m, const ExtVector& v) {
  return {v.radicand, m * v.a, v.b.empty() ? Vector{} : m * v.b};
}

Vector stacked(const ExtVector& v) {
  Vector out = v.a;
  if (v.b.empty()) out.resize(2 * v.a.size());
  else out.insert(out.end(), v.b.begin(), v.b.end());
  return out;
}

bool ext_span_invariant(const std::vector<ExtVector>& vs, const FiniteGroup& g) {
  std::vector<Vector> basis;
  for (const auto& v : vs) basis.push_back(stacked(v));
  for (const Matrix& m : g.generator_matrices())
    for (const auto& v : vs)
      if (!in_span(basis, stacked(ext_apply(m, v)))) return false;
  return true;
}

bool ext_proportional(const ExtVector& v, const ExtVector& w) {
  Cyclo r = common_radicand(v.radicand, w.radicand);
  auto at = [](const ExtVector& x, std::size_t i) {
    return ExtScalar{x.a[i], x.b.empty() ? Cyclo() : x.b[i]};
  };
  auto mul = [&r](const ExtScalar& x, const ExtScalar& y) {
    return ExtScalar{x.a * y.a + r * x.b * y.b, x.a * y.b + x.b * y.a};
  };
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      ExtScalar lhs = mul(at(v, i), at(w, j)), rhs = mul(at(v, j), at(w, i));
      if (!(lhs.a == rhs.a && lhs.b == rhs.b)) return false;
    }
  return true;
}

// ------------------------------------------------------------ forms

bool is_invariant(const Matrix& gram, const FiniteGroup& g) {
  for (const Matrix& m : g.generator_matrices())
    if (m.transpose() * gram * m != gram) return false;
  return true;
}

Matrix invariant_form(const FiniteGroup& g) {
  const std::size_t d = g.degree();
  const std::size_t seeds = d * (d + 1) / 2 + 1;
  unsigned long state = 12345;
  for (std::size_t t = 0; t < seeds; ++t) {
    Matrix s = Matrix::identity(d);
    if (t > 0) {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
          state = state * 6364136223846793005UL + 1442695040888963407UL;
          long v = static_cast<long>((state >> 33) % 5) - 2;
          s(i, j) = Cyclo(v);
          s(j, i) = Cyclo(v);
        }
    }
    Matrix avg(d, d);
    for (std::size_t k = 0; k < g.order(); ++k) {
      const Matrix& m = g.element(k);
      avg += m.transpose() * s * m;
    }
    if (!determinant(avg).is_zero()) return avg;
  }
  throw Error(Error::Kind::NoInvariantForm, "no nondegenerate invariant symmetric form");
}

std::vector<Matrix> class_sums(const FiniteGroup& g) {
  std::vector<Matrix> sums;
  for (const auto& cls : g.classes()) {
    Matrix s(g.degree(), g.degree());
    for (std::size_t x : cls.elements) s += g.element(x);
    sums.push_back(std::move(s));
  }
  return sums;
}

Matrix isotypic_projector(const ClassFunction& chi, const std::vector<Matrix>& sums) {
  const auto& g = *chi.group();
  Matrix p(g.degree(), g.degree());
  for (std::size_t c = 0; c < chi.size(); ++c)
    if (!chi[c].is_zero()) p += chi[c].conjugate() * sums[c];
  return (chi.degree() * Cyclo(mpq_class(1, static_cast<long>(g.order())))) * p;
}

const char* to_string(PairKind kind) {
  switch (kind) {
    case PairKind::NonSelfDual: return "non_self_dual";
    case PairKind::Symplectic: return "symplectic";
    case PairKind::Orthogonal: return "orthogonal";
  }
  return "unknown";
}

std::size_t WittDecomposition::witt_index() const {
  std::size_t s = 0;
  for (const auto& p : pairs) s += p.w.size();
  return s;
}

// ------------------------------------------------------------ decomposition

namespace {

struct Copies {
  // t[j][a]: basis vector a of copy j; all copies share one model basis x_a
  std::vector<std::vector<Vector>> t;
};

Copies extract_copies(const FiniteGroup& g, const ClassFunction& chi, const Matrix& proj,
                      long mult, long deg) {
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    if (c == 0 && deg != 1) continue;
    std::size_t h = g.classes()[c].representative;
    long o = static_cast<long>(g.element_order(h));
    for (long t = 0; t < o; ++t) {
      Cyclo m;
      for (long j = 0; j < o; ++j) m += chi[g.class_power(c, j)] * Cyclo::root(o, -j * t);
      m *= Cyclo(mpq_class(1, o));
      if (!m.is_one()) continue;
      // projector onto the zeta^t eigenspace of h
      Matrix p(g.degree(), g.degree());
      std::size_t hj = 0;
      for (long j = 0; j < o; ++j) {
        p += Cyclo::root(o, -j * t) * g.element(hj);
        hj = g.mul(hj, h);
      }
      auto lines = column_basis(p * proj);
      if (static_cast<long>(lines.size()) != mult)
        throw Error(Error::Kind::Internal, "eigenline count differs from multiplicity");
      std::vector<std::size_t> elems;
      std::vector<Vector> orbit;
      for (std::size_t x = 0; x < g.order() && static_cast<long>(orbit.size()) < deg; ++x) {
        Vector v = g.element(x) * lines.front();
        if (in_span(orbit, v)) continue;
        orbit.push_back(std::move(v));
        elems.push_back(x);
      }
      Copies copies;
      for (const auto& l : lines) {
        std::vector<Vector> copy;
        for (std::size_t x : elems) copy.push_back(g.element(x) * l);
        copies.t.push_back(std::move(copy));
      }
      return copies;
    }
  }
  throw Error(Error::Kind::Internal, "no cyclic subgroup with a simple eigenvalue for this character");
}

// sum over a, j of xc[a] * mc[j] * t[j][a]
Vector tensor(const Copies& c, const std::vector<Cyclo>& xc, const std::vector<Cyclo>& mc) {
  Vector out(c.t.front().front().size());
  for (std::size_t j = 0; j < mc.size(); ++j) {
    if (mc[j].is_zero()) continue;
    for (std::size_t a = 0; a < xc.size(); ++a) {
      if (xc[a].is_zero()) continue;
      out = add(out, scale(xc[a] * mc[j], c.t[j][a]));
    }
  }
  return out;
}

std::vector<Cyclo> unit(std::size_t n, std::size_t i) {
  std::vector<Cyclo> v(n);
  v[i] = Cyclo(1L);
  return v;
}

Cyclo form(const Matrix& m, const std::vector<Cyclo>& x, const std::vector<Cyclo>& y) {
  return bilinear(x, m, y);
}

struct Factorization {
  Matrix j;  // d x d
  Matrix m;  // mult x mult
};

Factorization factor_gram(const Copies& c, const Matrix& q) {
  const std::size_t mult = c.t.size(), d = c.t.front().size();
  std::vector<Cyclo> vals(mult * mult * d * d);
  auto at = [&](std::size_t j, std::size_t k, std::size_t a, std::size_t b) -> Cyclo& {
    return vals[((j * mult + k) * d + a) * d + b];
  };
  std::optional<std::array<std::size_t, 4>> first;
  for (std::size_t j = 0; j < mult; ++j)
    for (std::size_t k = 0; k < mult; ++k)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          at(j, k, a, b) = bilinear(c.t[j][a], q, c.t[k][b]);
          if (!first && !at(j, k, a, b).is_zero()) first = std::array<std::size_t, 4>{j, k, a, b};
        }
  if (!first) throw Error(Error::Kind::Degenerate, "isotypic component is totally isotropic");
  auto [j0, k0, a0, b0] = *first;
  Factorization f{Matrix(d, d), Matrix(mult, mult)};
  for (std::size_t j = 0; j < mult; ++j)
    for (std::size_t k = 0; k < mult; ++k) f.m(j, k) = at(j, k, a0, b0);
  Cyclo inv = f.m(j0, k0).inverse();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) f.j(a, b) = at(j0, k0, a, b) * inv;
  for (std::size_t j = 0; j < mult; ++j)
    for (std::size_t k = 0; k < mult; ++k)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          if (at(j, k, a, b) != f.j(a, b) * f.m(j, k))
            throw Error(Error::Kind::Internal, "isotypic gram does not factor as J x M");
  return f;
}

// Symplectic basis (c_s, d_s) of an antisymmetric nondegenerate form.
std::vector<std::pair<std::vector<Cyclo>, std::vector<Cyclo>>> symplectic_basis(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Cyclo>> rest;
  for (std::size_t i = 0; i < n; ++i) rest.push_back(unit(n, i));
  std::vector<std::pair<std::vector<Cyclo>, std::vector<Cyclo>>> out;
  while (!rest.empty()) {
    auto c = rest.front();
    std::optional<std::size_t> partner;
    for (std::size_t i = 1; i < rest.size(); ++i)
      if (!form(m, c, rest[i]).is_zero()) {
        partner = i;
        break;
      }
    if (!partner) throw Error(Error::Kind::Degenerate, "degenerate multiplicity form");
    auto d = scale(form(m, c, rest[*partner]).inverse(), rest[*partner]);
    std::vector<std::vector<Cyclo>> next;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      if (i == *partner) continue;
      auto v = rest[i];
      v = add(v, scale(-form(m, v, d), c));
      v = add(v, scale(form(m, v, c), d));
      next.push_back(std::move(v));
    }
    out.emplace_back(std::move(c), std::move(d));
    rest = std::move(next);
  }
  return out;
}

// Orthogonal basis u_k with nonzero values a_k of a symmetric nondegenerate form.
std::vector<std::pair<std::vector<Cyclo>, Cyclo>> orthogonal_basis(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Cyclo>> rest;
  for (std::size_t i = 0; i < n; ++i) rest.push_back(unit(n, i));
  std::vector<std::pair<std::vector<Cyclo>, Cyclo>> out;
  while (!rest.empty()) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (!form(m, rest[i], rest[i]).is_zero()) {
        pick = i;
        break;
      }
    if (!pick) {
      for (std::size_t i = 1; i < rest.size() && !pick; ++i)
        if (!form(m, rest[0], rest[i]).is_zero()) {
          rest[0] = add(rest[0], rest[i]);
          pick = 0;
        }
    }
    if (!pick) throw Error(Error::Kind::Degenerate, "degenerate multiplicity form");
    auto u = rest[*pick];
    Cyclo a = form(m, u, u);
    std::vector<std::vector<Cyclo>> next;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (i == *pick) continue;
      next.push_back(add(rest[i], scale(-form(m, rest[i], u) / a, u)));
    }
    out.emplace_back(std::move(u), a);
    rest = std::move(next);
  }
  return out;
}

}  // namespace

WittDecomposition witt_decompose(const QuadraticSpace& qs, const CharacterTable& table) {
  const FiniteGroup& g = *qs.group;
  const Matrix& q = qs.gram;
  if (determinant(q).is_zero()) throw Error(Error::Kind::Degenerate, "gram matrix is singular");
  WittDecomposition wd;
  wd.multiplicities = decompose(character_of(qs.group), table);
  const auto sums = class_sums(g);

  std::vector<HyperbolicPair> nsd, symp, orth;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const long mult = wd.multiplicities[i];
    if (mult == 0) continue;
    const long deg = table.degrees[i];
    const ClassFunction& chi = table.irreducibles[i];
    const std::size_t dual = table.dual[i];
    const int fs = table.indicators[i];
    if (dual < i) continue;  // handled with its partner
    Matrix proj = isotypic_projector(chi, sums);
    if (fs == 1 && mult == 1) {
      wd.anisotropic.push_back({i, column_basis(proj)});
      continue;
    }
    Copies c = extract_copies(g, chi, proj, mult, deg);
    const std::size_t d = static_cast<std::size_t>(deg);

    if (fs == 0) {
      std::vector<Vector> x;
      for (const auto& copy : c.t)
        for (const auto& v : copy) x.push_back(v);
      auto y = column_basis(isotypic_projector(table.irreducibles[dual], sums));
      Matrix xm = Matrix::from_columns(x, qs.dim()), ym = Matrix::from_columns(y, qs.dim());
      auto ginv = inverse(xm.transpose() * q * ym);
      if (!ginv) throw Error(Error::Kind::Degenerate, "dual isotypic components pair degenerately");
      Matrix f = ym * *ginv;
      for (std::size_t j = 0; j < c.t.size(); ++j) {
        HyperbolicPair p{PairKind::NonSelfDual, i, dual, Cyclo(), {}, {}};
        for (std::size_t a = 0; a < d; ++a) {
          p.w.push_back(ExtVector::plain(c.t[j][a]));
          p.w_dual.push_back(ExtVector::plain(f.column(j * d + a)));
        }
        nsd.push_back(std::move(p));
      }
      continue;
    }

    Factorization fac = factor_gram(c, q);
    auto kinv = inverse(fac.j);
    if (!kinv) throw Error(Error::Kind::Degenerate, "model form of an irreducible is singular");
    // dual model coefficients: column b of K
    auto dual_coeffs = [&](std::size_t b) { return kinv->column(b); };

    if (fs == -1) {
      for (auto& [cv, dv] : symplectic_basis(fac.m)) {
        HyperbolicPair p{PairKind::Symplectic, i, i, Cyclo(), {}, {}};
        for (std::size_t a = 0; a < d; ++a) {
          p.w.push_back(ExtVector::plain(tensor(c, unit(d, a), cv)));
          p.w_dual.push_back(ExtVector::plain(tensor(c, dual_coeffs(a), dv)));
        }
        symp.push_back(std::move(p));
      }
      continue;
    }

    // orthogonal multiplicity space
    auto diag = orthogonal_basis(fac.m);
    std::vector<bool> used(diag.size(), false);
    for (std::size_t k = 0; k < diag.size(); ++k) {
      if (used[k]) continue;
      std::optional<std::size_t> partner;
      std::optional<Cyclo> root;
      for (std::size_t l = k + 1; l < diag.size(); ++l) {
        if (used[l]) continue;
        if (!partner) partner = l;
        if (auto s = try_sqrt(-diag[k].second / diag[l].second)) {
          partner = l;
          root = s;
          break;
        }
      }
      if (!partner) break;
      used[k] = used[*partner] = true;
      const auto& uk = diag[k].first;
      const auto& ul = diag[*partner].first;
      const Cyclo ak = diag[k].second;
      const Cyclo r = -ak / diag[*partner].second;
      const Cyclo half = (Cyclo(2L) * ak).inverse();
      HyperbolicPair p{PairKind::Orthogonal, i, i, root ? Cyclo() : r, {}, {}};
      for (std::size_t a = 0; a < d; ++a) {
        Vector wa = tensor(c, unit(d, a), uk), wb = tensor(c, unit(d, a), ul);
        Vector da = scale(half, tensor(c, dual_coeffs(a), uk));
        Vector db = scale(-half, tensor(c, dual_coeffs(a), ul));
        if (root) {
          p.w.push_back(ExtVector::plain(add(wa, scale(*root, wb))));
          p.w_dual.push_back(ExtVector::plain(add(da, scale(*root, db))));
        } else {
          p.w.push_back({r, wa, wb});
          p.w_dual.push_back({r, da, db});
        }
      }
      orth.push_back(std::move(p));
    }
    for (std::size_t k = 0; k < diag.size(); ++k) {
      if (used[k]) continue;
      AnisotropicComponent an{i, {}};
      for (std::size_t a = 0; a < d; ++a) an.basis.push_back(tensor(c, unit(d, a), diag[k].first));
      wd.anisotropic.push_back(std::move(an));
    }
  }
  for (auto* list : {&nsd, &symp, &orth})
    for (auto& p : *list) wd.pairs.push_back(std::move(p));
  return wd;
}

// ------------------------------------------------------------ checks

// Character of the group acting on span(vs), from explicit action matrices.
std::optional<ClassFunction> span_character(const std::vector<ExtVector>& vs, const GroupPtr& g) {
  std::vector<Vector> basis;
  for (const auto& v : vs) basis.push_back(stacked(v));
  Matrix bm = Matrix::from_columns(basis, basis.front().size());
  std::vector<Cyclo> values;
  for (const auto& cls : g->classes()) {
    const Matrix& m = g->element(cls.representative);
    Cyclo tr;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      auto coeffs = solve(bm, stacked(ext_apply(m, vs[k])));
      if (!coeffs) return std::nullopt;
      tr += (*coeffs)[k];
    }
    values.push_back(tr);
  }
  return ClassFunction(g, std::move(values));
}

std::vector<std::string> check_witt(const QuadraticSpace& qs, const CharacterTable& table,
                                    const WittDecomposition& wd) {
  std::vector<std::string> problems;
  const Matrix& q = qs.gram;
  std::vector<std::vector<ExtVector>> components;
  std::size_t dim = 0;
  for (std::size_t n = 0; n < wd.pairs.size(); ++n) {
    const auto& p = wd.pairs[n];
    const std::string tag = "pair " + std::to_string(n) + ": ";
    const std::size_t d = p.w.size();
    if (p.w_dual.size() != d || static_cast<long>(d) != table.degrees[p.character]) {
      problems.push_back(tag + "sizes do not match the character degree");
      continue;
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (!ext_bilinear(p.w[i], q, p.w[j]).is_zero()) problems.push_back(tag + "W is not isotropic");
        if (!ext_bilinear(p.w_dual[i], q, p.w_dual[j]).is_zero())
          problems.push_back(tag + "W' is not isotropic");
        ExtScalar s = ext_bilinear(p.w[i], q, p.w_dual[j]);
        if (!(s.b.is_zero() && s.a == Cyclo(i == j ? 1L : 0L)))
          problems.push_back(tag + "pairing is not the identity");
      }
    if (!ext_span_invariant(p.w, *qs.group)) problems.push_back(tag + "W is not invariant");
    if (!ext_span_invariant(p.w_dual, *qs.group)) problems.push_back(tag + "W' is not invariant");
    auto chw = span_character(p.w, qs.group);
    if (!chw || *chw != table.irreducibles[p.character])
      problems.push_back(tag + "W does not carry the recorded character");
    auto chd = span_character(p.w_dual, qs.group);
    if (!chd || *chd != table.irreducibles[p.dual_character])
      problems.push_back(tag + "W' does not carry the recorded character");
    components.push_back(p.w);
    components.back().insert(components.back().end(), p.w_dual.begin(), p.w_dual.end());
    dim += 2 * d;
  }
  std::vector<std::size_t> seen;
  for (const auto& an : wd.anisotropic) {
    std::vector<ExtVector> vs;
    for (const auto& v : an.basis) vs.push_back(ExtVector::plain(v));
    if (table.indicators[an.character] != 1) problems.push_back("anisotropic part is not orthogonal type");
    if (std::find(seen.begin(), seen.end(), an.character) != seen.end())
      problems.push_back("anisotropic part repeats an irreducible");
    seen.push_back(an.character);
    auto ch = span_character(vs, qs.group);
    if (!ch || *ch != table.irreducibles[an.character])
      problems.push_back("anisotropic part does not carry the recorded character");
    Matrix b = Matrix::from_columns(an.basis, qs.dim());
    if (determinant(b.transpose() * q * b).is_zero()) problems.push_back("anisotropic part is degenerate");
    components.push_back(std::move(vs));
    dim += an.basis.size();
  }
  if (dim != qs.dim()) problems.push_back("component dimensions do not add up");
  for (std::size_t x = 0; x < components.size(); ++x)
    for (std::size_t y = x + 1; y < components.size(); ++y)
      for (const auto& u : components[x])
        for (const auto& v : components[y])
          if (!ext_orthogonal(u, q, v)) {
            problems.push_back("components " + std::to_string(x) + " and " + std::to_string(y) +
                               " are not orthogonal");
            goto next_pair;
          }
  next_pair:;
  return problems;
}

// ------------------------------------------------------------ fixed lines

std::optional<ExtVector> find_isotropic(const std::vector<Vector>& basis, const Matrix& gram) {
  if (basis.empty()) return std::nullopt;
  for (const auto& v : basis)
    if (bilinear(v, gram, v).is_zero()) return ExtVector::plain(v);
  const Vector& e = basis.front();
  const Cyclo qe = bilinear(e, gram, e);
  for (std::size_t j = 1; j < basis.size(); ++j) {
    Vector f = add(basis[j], scale(-bilinear(basis[j], gram, e) / qe, e));
    if (is_zero(f)) continue;
    Cyclo qf = bilinear(f, gram, f);
    if (qf.is_zero()) return ExtVector::plain(f);
    Cyclo r = -qe / qf;
    if (auto s = try_sqrt(r)) return ExtVector::plain(add(e, scale(*s, f)));
    return ExtVector{r, e, f};
  }
  return std::nullopt;
}

std::vector<FixedLine> fixed_lines_on_quadric(const QuadraticSpace& qs, const GroupPtr& h,
                                              const CharacterTable& h_table) {
  embed(*qs.group, *h);
  const auto sums = class_sums(*h);
  std::vector<FixedLine> out;
  for (std::size_t idx : h_table.linear()) {
    auto basis = column_basis(isotypic_projector(h_table.irreducibles[idx], sums));
    if (basis.empty()) continue;
    if (auto v = find_isotropic(basis, qs.gram)) out.push_back({idx, basis.size(), *v});
  }
  return out;
}

}  // namespace quadlin
