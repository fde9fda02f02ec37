#include "quadlin/criteria.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "quadlin/error.hpp"

namespace quadlin {

const char* to_string(Level level) {
  switch (level) {
    case Level::Linearizable: return "LINEARIZABLE";
    case Level::StablyLinearizable: return "STABLY_LINEARIZABLE";
    case Level::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

Level level_from_string(const std::string& name) {
  for (Level l : {Level::Linearizable, Level::StablyLinearizable, Level::Unknown})
    if (name == to_string(l)) return l;
  throw Error(Error::Kind::Schema, "unknown verdict '" + name + "'");
}

namespace {

constexpr const char* kFixedPoint = "fixed_point";
constexpr const char* kIsotropic = "isotropic_projection";
constexpr const char* kTwistedCubic = "twisted_cubic";
constexpr const char* kPfaffian = "pfaffian";
constexpr const char* kSpringer = "springer_reduction";

const char* anchor_of(const std::string& criterion) {
  if (criterion == kFixedPoint) return "a fixed point on the quadric gives a linearization";
  if (criterion == kIsotropic) return "projection from an invariant isotropic subspace of a hyperbolic pair";
  if (criterion == kTwistedCubic) return "projection of the twisted cubic model of the quadric threefold";
  if (criterion == kPfaffian) return "lift to a 4-dimensional representation through the exterior square";
  if (criterion == kSpringer) return "stable linearizability is decided by a Sylow 2-subgroup";
  return "";
}

CriterionRecord record(const char* criterion) {
  CriterionRecord r;
  r.criterion = criterion;
  r.anchor = anchor_of(criterion);
  return r;
}

// c with m = c * q, if one exists
std::optional<Cyclo> proportionality(const Matrix& m, const Matrix& q) {
  std::optional<Cyclo> c;
  for (std::size_t i = 0; i < q.rows() && !c; ++i)
    for (std::size_t j = 0; j < q.cols() && !c; ++j)
      if (!q(i, j).is_zero()) c = m(i, j) / q(i, j);
  if (!c || *c * q != m) return std::nullopt;
  return c;
}

ClassFunction class_function(const GroupPtr& g, const std::function<Cyclo(const Matrix&)>& f) {
  std::vector<Cyclo> values;
  for (const auto& cls : g->classes()) values.push_back(f(g->element(cls.representative)));
  return ClassFunction(g, std::move(values));
}

bool is_trivial(const ClassFunction& chi) {
  return std::all_of(chi.values().begin(), chi.values().end(), [](const Cyclo& c) { return c.is_one(); });
}

// Whether some non-identity element acts on a representation with this
// character by a scalar: |chi(g)| = chi(1) exactly.
std::vector<std::size_t> scalar_classes(const ClassFunction& chi) {
  std::vector<std::size_t> out;
  const Cyclo d2 = chi.degree() * chi.degree();
  for (std::size_t c = 1; c < chi.size(); ++c)
    if (chi[c] * chi[c].conjugate() == d2) out.push_back(c);
  return out;
}

Json linear_json(const CharacterTable& t, std::size_t idx) {
  Json j = Json::object();
  j["index"] = idx;
  j["values"] = to_json(t.irreducibles[idx]);
  return j;
}

}  // namespace

// ------------------------------------------------------------ validation

Prepared validate(const std::vector<Matrix>& generators, const Matrix& gram, const Options& options) {
  if (generators.empty()) throw Error(Error::Kind::Schema, "a group needs at least one generator");
  const std::size_t d = gram.rows();
  if (!gram.square() || d == 0) throw Error(Error::Kind::Schema, "gram matrix must be square");
  for (const auto& g : generators)
    if (!g.square() || g.rows() != d) throw Error(Error::Kind::Schema, "generators must match the gram size");
  if (!gram.is_symmetric()) throw Error(Error::Kind::Schema, "gram matrix is not symmetric");
  if (determinant(gram).is_zero()) throw Error(Error::Kind::DegenerateForm, "gram matrix is singular");

  GroupPtr g = FiniteGroup::closure(generators, options.closure_cap);
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!proportionality(generators[i].transpose() * gram * generators[i], gram))
      throw Error(Error::Kind::FormNotInvariant,
                  "generator " + std::to_string(i) + " does not preserve the quadric");
  if (g->scalar_kernel().size() > 1) {
    const Matrix& s = g->element(g->scalar_kernel()[1]);
    throw Error(Error::Kind::NotGenericallyFree,
                "a non-identity element acts as the scalar " + to_string(s(0, 0)) + " on P(V)");
  }
  if (d < 3) throw Error(Error::Kind::DimensionTooSmall, "the quadric must have dimension at least 1");

  Prepared p;
  Json report = Json::object();
  report["dimension"] = d;
  report["quadric_dimension"] = d - 2;
  report["group_order"] = g->order();
  report["classes"] = g->class_count();
  report["generically_free"] = true;

  auto multiplier = [&gram](const Matrix& m) { return *proportionality(m.transpose() * gram * m, gram); };
  ClassFunction lambda = class_function(g, multiplier);
  if (!is_trivial(lambda)) {
    report["form_multiplier"] = to_json(lambda);
    std::optional<std::vector<Cyclo>> mu;
    if (d % 2 == 1) {
      // det(g)^2 = lambda(g)^d, so mu = (det * lambda^(-(d-1)/2))^-1 squares to lambda^-1
      std::vector<Cyclo> m;
      for (const auto& s : generators) {
        Cyclo l = multiplier(s);
        m.push_back((determinant(s) * l.inverse().pow(static_cast<long>((d - 1) / 2))).inverse());
      }
      mu = std::move(m);
    } else {
      CharacterTable t0 = character_table(g);
      for (std::size_t idx : t0.linear()) {
        const auto& psi = t0.irreducibles[idx];
        if (!is_trivial(psi * psi * lambda)) continue;
        std::vector<Cyclo> m;
        for (std::size_t s : g->generator_indices()) m.push_back(psi[g->class_of(s)]);
        mu = std::move(m);
        break;
      }
    }
    if (mu) {
      std::vector<Matrix> twisted;
      for (std::size_t i = 0; i < generators.size(); ++i) twisted.push_back((*mu)[i] * generators[i]);
      GroupPtr g2 = FiniteGroup::closure(twisted, options.closure_cap);
      if (g2->order() != g->order() || !is_invariant(gram, *g2))
        throw Error(Error::Kind::Internal, "rescaling by a linear character failed");
      g = g2;
      p.rescaled = true;
      p.rescaling = *mu;
      lambda = trivial_character(g);
      report["rescaled_generators"] = to_json(*mu);
    } else {
      p.semi_invariant = true;
    }
  }
  report["form"] = p.semi_invariant ? "semi-invariant" : "invariant";

  p.qs = {g, gram};
  p.table = character_table(g);
  p.multiplier = lambda;
  ClassFunction det = class_function(g, [](const Matrix& m) { return determinant(m); });
  p.in_special_orthogonal = is_trivial(det);
  report["determinant"] = to_json(det);
  report["special_linear"] = p.in_special_orthogonal;
  if (d % 2 == 1) {
    // det(g) g has determinant det(g)^(d+1) = 1 for an orthogonal g
    report["special_linear_after_determinant_twist"] = true;
  }
  p.report = std::move(report);
  return p;
}

// ------------------------------------------------------------ fixed point

CriterionRecord fixed_point_criterion(const Prepared& p) {
  CriterionRecord r = record(kFixedPoint);
  auto lines = fixed_lines_on_quadric(p.qs, p.qs.group, p.table);
  if (lines.empty()) {
    r.note = "no eigenline of the group lies on the quadric";
    return r;
  }
  const FixedLine& f = lines.front();
  r.fired = true;
  r.level = Level::Linearizable;
  r.witness["point"] = to_json(f.point);
  r.witness["character"] = linear_json(p.table, f.linear_character);
  r.witness["eigenspace_dimension"] = f.eigenspace_dim;
  return r;
}

// ------------------------------------------------------------ isotropic projection

CriterionRecord isotropic_projection_criterion(const Prepared& p) {
  CriterionRecord r = record(kIsotropic);
  if (p.semi_invariant) {
    r.note = "form is only semi-invariant; no Witt decomposition";
    return r;
  }
  WittDecomposition wd = witt_decompose(p.qs, p.table);
  if (wd.pairs.empty()) {
    r.note = "anisotropic: no hyperbolic pair";
    return r;
  }
  const ClassFunction chi_v = character_of(p.qs.group);
  std::optional<std::size_t> best_pair;
  bool best_dual = true;
  bool free = false;
  for (std::size_t n = 0; n < wd.pairs.size() && !free; ++n) {
    const auto& pair = wd.pairs[n];
    for (bool keep_dual : {true, false}) {
      // U = W' + complement when projecting from P(W), and symmetrically
      const auto& dropped = p.table.irreducibles[keep_dual ? pair.character : pair.dual_character];
      if (scalar_classes(chi_v - dropped).empty()) {
        best_pair = n;
        best_dual = keep_dual;
        free = true;
        break;
      }
    }
  }
  if (!best_pair) best_pair = 0;
  const auto& pair = wd.pairs[*best_pair];
  const auto& dropped = p.table.irreducibles[best_dual ? pair.character : pair.dual_character];
  r.fired = true;
  r.level = free ? Level::Linearizable : Level::StablyLinearizable;
  r.note = free ? "generically free on the projection target" : "not generically free on any projection target";
  Json w = Json::array(), wdual = Json::array();
  for (const auto& v : pair.w) w.push_back(to_json(v));
  for (const auto& v : pair.w_dual) wdual.push_back(to_json(v));
  r.witness["pair_kind"] = to_string(pair.kind);
  r.witness["hyperbolic_pairs"] = wd.pairs.size();
  r.witness["w_character"] = to_json(p.table.irreducibles[pair.character]);
  r.witness["w_dual_character"] = to_json(p.table.irreducibles[pair.dual_character]);
  r.witness["w"] = w;
  r.witness["w_dual"] = wdual;
  r.witness["projected_from"] = best_dual ? "w" : "w_dual";
  r.witness["target_character"] = to_json(chi_v - dropped);
  r.witness["generically_free_on_target"] = free;
  return r;
}

// ------------------------------------------------------------ twisted cubic

namespace {

struct CubicSetup {
  std::size_t sigma;
  std::optional<std::size_t> tau;
  long order;      // of sigma
  Cyclo c;         // sigma' = c^-1 sigma
  long eps;        // tau' = eps tau
  long w;
};

Matrix scaled(const Cyclo& s, const Matrix& m) { return s * m; }

Cyclo zeta(long n, long k) { return Cyclo::root(n, k); }

// Basis of the zeta^k eigenspace of sigma' = cinv * sigma.
std::vector<Vector> eigenspace(const FiniteGroup& g, std::size_t sigma, const Cyclo& cinv, long o, long k) {
  Matrix proj(g.degree(), g.degree());
  std::size_t x = 0;
  Cyclo cj(1L);
  for (long j = 0; j < o; ++j) {
    proj += (zeta(o, -j * k) * cj) * g.element(x);
    x = g.mul(x, sigma);
    cj *= cinv;
  }
  return column_basis(proj);
}

std::vector<Vector> combine(const std::vector<Vector>& basis, const std::vector<Vector>& coeffs) {
  std::vector<Vector> out;
  for (const auto& c : coeffs) {
    Vector v(basis.front().size());
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) v = add(v, scale(c[i], basis[i]));
    out.push_back(std::move(v));
  }
  return out;
}

// Vectors of span(e) orthogonal to every vector in prior.
std::vector<Vector> orthogonal_part(const std::vector<Vector>& e, const std::vector<Vector>& prior, const Matrix& q) {
  if (e.empty() || prior.empty()) return e;
  Matrix a(prior.size(), e.size());
  for (std::size_t i = 0; i < prior.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) a(i, j) = bilinear(prior[i], q, e[j]);
  return combine(e, nullspace(a));
}

// Vectors of span(e) fixed by m.
std::vector<Vector> fixed_part(const std::vector<Vector>& e, const Matrix& m) {
  if (e.empty()) return e;
  Matrix a(m.rows(), e.size());
  for (std::size_t j = 0; j < e.size(); ++j) {
    Vector d = add(m * e[j], scale(Cyclo(-1L), e[j]));
    for (std::size_t i = 0; i < m.rows(); ++i) a(i, j) = d[i];
  }
  return combine(e, nullspace(a));
}

// Isotropic vectors of span(s) reachable from pairs of basis vectors.
std::vector<Vector> isotropic_candidates(const std::vector<Vector>& s, const Matrix& q) {
  std::vector<Vector> out;
  for (const auto& b : s)
    if (bilinear(b, q, b).is_zero()) out.push_back(b);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Cyclo qi = bilinear(s[i], q, s[i]), qj = bilinear(s[j], q, s[j]), bij = bilinear(s[i], q, s[j]);
      std::vector<Cyclo> roots;
      if (qj.is_zero()) {
        if (!bij.is_zero()) roots.push_back(-qi / (Cyclo(2L) * bij));
      } else if (auto r = try_sqrt(bij * bij - qi * qj)) {
        roots.push_back((-bij + *r) / qj);
        if (!r->is_zero()) roots.push_back((-bij - *r) / qj);
      }
      for (const auto& t : roots) {
        Vector v = add(s[i], scale(t, s[j]));
        if (!is_zero(v)) out.push_back(std::move(v));
      }
    }
  return out;
}

std::vector<Vector> anisotropic_candidates(const std::vector<Vector>& s, const Matrix& q) {
  std::vector<Vector> out;
  for (const auto& b : s)
    if (!bilinear(b, q, b).is_zero()) out.push_back(b);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Vector v = add(s[i], s[j]);
      if (!bilinear(v, q, v).is_zero()) out.push_back(std::move(v));
    }
  return out;
}

// Exact check of the model: sigma' e = (w-weights) e, tau' swaps the pairs and
// fixes e5, and the gram in the basis is zero apart from B(e1,e2), B(e3,e4),
// q(e5), all nonzero.
std::vector<std::string> cubic_pattern_problems(const Matrix& q, const Matrix& sigma_p,
                                                const std::optional<Matrix>& tau_p, long o, long w,
                                                const std::array<Vector, 5>& e) {
  std::vector<std::string> problems;
  const long weights[5] = {-3 * w, 3 * w, -w, w, 0};
  for (int i = 0; i < 5; ++i)
    if (sigma_p * e[i] != scale(zeta(o, weights[i]), e[i]))
      problems.push_back("basis vector " + std::to_string(i + 1) + " has the wrong weight");
  if (tau_p) {
    const int swap_of[5] = {1, 0, 3, 2, 4};
    for (int i = 0; i < 5; ++i)
      if (*tau_p * e[i] != e[swap_of[i]])
        problems.push_back("tau does not act on basis vector " + std::to_string(i + 1) + " as the model swap");
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j) {
      bool block = (i == 0 && j == 1) || (i == 2 && j == 3) || (i == 4 && j == 4);
      bool zero = bilinear(e[i], q, e[j]).is_zero();
      if (block == zero)
        problems.push_back("gram entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") breaks the pattern");
    }
  return problems;
}

std::optional<std::array<Vector, 5>> cubic_basis(const FiniteGroup& g, const Matrix& q, const CubicSetup& s,
                                                 const Deadline& deadline) {
  const long o = s.order, w = s.w;
  const Cyclo cinv = s.c.inverse();
  const Matrix sigma_p = scaled(cinv, g.element(s.sigma));
  std::optional<Matrix> tau_p;
  if (s.tau) tau_p = scaled(Cyclo(s.eps), g.element(*s.tau));
  auto space = [&](long k) { return eigenspace(g, s.sigma, cinv, o, ((k % o) + o) % o); };

  std::vector<Vector> z = space(0);
  if (tau_p) z = fixed_part(z, *tau_p);
  for (const auto& e5 : anisotropic_candidates(z, q)) {
    deadline.check("twisted cubic search");
    auto pick_pair = [&](long k, const std::vector<Vector>& prior,
                         const std::function<bool(const Vector&, const Vector&)>& accept) -> bool {
      auto xs = isotropic_candidates(orthogonal_part(space(-k), prior, q), q);
      for (const auto& x : xs) {
        std::vector<Vector> ys;
        if (tau_p) ys.push_back(*tau_p * x);
        else ys = isotropic_candidates(orthogonal_part(space(k), prior, q), q);
        for (const auto& y : ys)
          if (!bilinear(x, q, y).is_zero() && accept(x, y)) return true;
      }
      return false;
    };
    std::optional<std::array<Vector, 5>> found;
    pick_pair(3 * w, {e5}, [&](const Vector& e1, const Vector& e2) {
      return pick_pair(w, {e5, e1, e2}, [&](const Vector& e3, const Vector& e4) {
        std::array<Vector, 5> e{e1, e2, e3, e4, e5};
        if (!cubic_pattern_problems(q, sigma_p, tau_p, o, w, e).empty()) return false;
        found = e;
        return true;
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

// Eigenvalue exponents t (of zeta_o) of an element of order o, with multiplicity.
std::vector<long> weights_of(const FiniteGroup& g, std::size_t x, long o) {
  std::vector<Cyclo> traces;
  std::size_t y = 0;
  for (long j = 0; j < o; ++j) {
    traces.push_back(g.element(y).trace());
    y = g.mul(y, x);
  }
  std::vector<long> out;
  for (long t = 0; t < o; ++t) {
    Cyclo m;
    for (long j = 0; j < o; ++j) m += traces[static_cast<std::size_t>(j)] * zeta(o, -j * t);
    m *= Cyclo(mpq_class(1, o));
    auto k = m.integer();
    for (long i = 0; k && i < *k; ++i) out.push_back(t);
  }
  return out;
}

}  // namespace

CriterionRecord twisted_cubic_criterion(const Prepared& p, const Deadline& deadline) {
  CriterionRecord r = record(kTwistedCubic);
  const FiniteGroup& g = *p.qs.group;
  if (p.qs.dim() != 5) {
    r.note = "needs a quadric threefold";
    return r;
  }
  if (p.semi_invariant) {
    r.note = "form is only semi-invariant";
    return r;
  }
  std::vector<std::vector<std::size_t>> seen_cyclic;
  for (std::size_t sigma = 0; sigma < g.order(); ++sigma) {
    const long o = static_cast<long>(g.element_order(sigma));
    const std::size_t index = g.order() / static_cast<std::size_t>(o);
    if (index > 2) continue;
    Subgroup c = generate(g, {sigma});
    if (std::find(seen_cyclic.begin(), seen_cyclic.end(), c.elements) != seen_cyclic.end()) continue;
    seen_cyclic.push_back(c.elements);
    std::vector<std::optional<std::size_t>> taus;
    if (index == 1) taus.push_back(std::nullopt);
    for (std::size_t t = 0; index == 2 && t < g.order(); ++t) {
      if (std::binary_search(c.elements.begin(), c.elements.end(), t)) continue;
      if (g.mul(t, t) != 0 || g.conjugate(sigma, t) != g.inverse(sigma)) continue;
      taus.push_back(t);
    }
    std::vector<long> wts = weights_of(g, sigma, o);
    std::vector<long> shifts = wts;
    shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
    for (long shift : shifts) {
      std::vector<long> got;
      for (long t : wts) got.push_back(((t - shift) % o + o) % o);
      std::sort(got.begin(), got.end());
      for (long w = 0; w < o; ++w) {
        std::vector<long> want;
        for (long k : {-3 * w, 3 * w, -w, w, 0L}) want.push_back(((k % o) + o) % o);
        std::sort(want.begin(), want.end());
        if (want != got) continue;
        for (const auto& tau : taus)
          for (long eps : {1L, -1L}) {
            if (!tau && eps == -1) continue;
            CubicSetup s{sigma, tau, o, zeta(o, shift), eps, w};
            auto basis = cubic_basis(g, p.qs.gram, s, deadline);
            if (!basis) continue;
            r.fired = true;
            r.level = Level::Linearizable;
            r.witness["sigma"] = to_json(g.element(sigma));
            r.witness["sigma_order"] = o;
            r.witness["sigma_scalar"] = to_json(s.c);
            if (tau) {
              r.witness["tau"] = to_json(g.element(*tau));
              r.witness["tau_sign"] = eps;
            }
            r.witness["weight"] = w;
            Json b = Json::array();
            for (const auto& v : *basis) b.push_back(to_json(v));
            r.witness["basis"] = b;
            r.witness["block_values"] = Json::array({to_json(bilinear((*basis)[0], p.qs.gram, (*basis)[1])),
                                                     to_json(bilinear((*basis)[2], p.qs.gram, (*basis)[3])),
                                                     to_json(p.qs.q((*basis)[4]))});
            return r;
          }
      }
    }
  }
  r.note = "no cyclic subgroup of index at most 2 carries the weight pattern";
  return r;
}

// ------------------------------------------------------------ Pfaffian

namespace {

// All multiplicity vectors with sum of m_i * deg_i == target.
void degree_combinations(const std::vector<long>& degrees, long target, std::size_t from, std::vector<long>& cur,
                         std::vector<std::vector<long>>& out) {
  if (target == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < degrees.size(); ++i) {
    if (degrees[i] > target) continue;
    ++cur[i];
    degree_combinations(degrees, target - degrees[i], i, cur, out);
    --cur[i];
  }
}

bool admits_symplectic_form(const std::vector<long>& mult, const CharacterTable& t) {
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    if (t.indicators[i] == 1 && mult[i] % 2 != 0) return false;
    if (t.indicators[i] == 0 && mult[i] != mult[t.dual[i]]) return false;
  }
  return true;
}

}  // namespace

CriterionRecord pfaffian_criterion(const Prepared& p, const Deadline& deadline) {
  CriterionRecord r = record(kPfaffian);
  const std::size_t d = p.qs.dim();
  if (d != 5 && d != 6) {
    r.note = "needs dimension 5 or 6";
    return r;
  }
  const CharacterTable& t = p.table;
  const ClassFunction chi_v = character_of(p.qs.group);
  const ClassFunction one = trivial_character(p.qs.group);
  std::vector<std::vector<long>> combos;
  std::vector<long> cur(t.size(), 0);
  degree_combinations(t.degrees, 4, 0, cur, combos);
  const auto linear = t.linear();
  for (const auto& m : combos) {
    deadline.check("Pfaffian character search");
    if (d == 5 && !admits_symplectic_form(m, t)) continue;
    ClassFunction chi_w = compose(m, t);
    ClassFunction alt2 = exterior_power(chi_w, 2);
    ClassFunction alt4 = exterior_power(chi_w, 4);
    for (std::size_t idx : linear) {
      const ClassFunction& psi = t.irreducibles[idx];
      bool ok;
      if (d == 5) {
        ok = is_trivial(psi * psi) && alt2 == one + psi * chi_v;
      } else {
        ok = alt2 == psi * chi_v && alt4 == p.multiplier * psi * psi;
      }
      if (!ok) continue;
      r.fired = true;
      r.level = Level::StablyLinearizable;
      Json mult = Json::array();
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) mult.push_back(Json::object({{"index", i}, {"multiplicity", m[i]}}));
      r.witness["w_constituents"] = mult;
      r.witness["w_character"] = to_json(chi_w);
      r.witness["twist"] = linear_json(t, idx);
      r.witness["alt2"] = to_json(alt2);
      r.witness["alt4"] = to_json(alt4);
      r.witness["form_multiplier"] = to_json(p.multiplier);
      r.witness["condition"] = d == 5 ? "alt2 W = 1 + psi V, W symplectic" : "alt2 W = psi V, alt4 W = multiplier psi^2";
      return r;
    }
  }
  r.note = "no degree-4 character has the required exterior square";
  return r;
}

// ------------------------------------------------------------ Springer

CriterionRecord springer_reduction(const Prepared& p, const Options& options, const Deadline& deadline) {
  CriterionRecord r = record(kSpringer);
  const FiniteGroup& g = *p.qs.group;
  Subgroup s = sylow2(g);
  if (s.elements.size() == g.order()) {
    r.note = "the group is its own Sylow 2-subgroup";
    return r;
  }
  GroupPtr h = realize(g, s);
  std::vector<Matrix> gens = h->generator_matrices();
  Options inner = options;
  inner.springer = false;
  Prepared ph;
  try {
    ph = validate(gens, p.qs.gram, inner);
  } catch (const Error& e) {
    if (e.kind() != Error::Kind::NotGenericallyFree) throw;
    r.note = std::string("Sylow subgroup not generically free: ") + e.what();
    return r;
  }
  deadline.check("Sylow analysis");
  Certificate nested = analyze(ph, inner);
  r.witness["sylow_order"] = h->order();
  Json jg = Json::array();
  for (const auto& m : gens) jg.push_back(to_json(m));
  r.witness["sylow_generators"] = jg;
  r.witness["certificate"] = certificate_json(nested);
  if (nested.verdict == Level::Unknown) {
    r.note = "no criterion applies to the Sylow 2-subgroup";
    return r;
  }
  r.fired = true;
  r.level = Level::StablyLinearizable;
  return r;
}

// ------------------------------------------------------------ pipeline

Certificate analyze(const Prepared& p, const Options& options) {
  Deadline deadline(options.budget_ms);
  Certificate cert;
  cert.validation = p.report;
  auto push = [&](CriterionRecord rec) {
    if (rec.fired && rec.level > cert.verdict) cert.verdict = rec.level;
    cert.trace.push_back(std::move(rec));
  };
  auto skip = [&](const char* criterion, const char* why) {
    CriterionRecord rec = record(criterion);
    rec.skipped = true;
    rec.note = why;
    cert.trace.push_back(std::move(rec));
  };
  const char* have_lin = "linearizability already established";
  const char* have_sl = "stable linearizability already established";

  push(fixed_point_criterion(p));
  if (cert.verdict < Level::Linearizable) push(isotropic_projection_criterion(p));
  else skip(kIsotropic, have_lin);
  if (cert.verdict < Level::Linearizable) push(twisted_cubic_criterion(p, deadline));
  else skip(kTwistedCubic, have_lin);
  if (cert.verdict < Level::StablyLinearizable) push(pfaffian_criterion(p, deadline));
  else skip(kPfaffian, cert.verdict == Level::Linearizable ? have_lin : have_sl);
  if (!options.springer) return cert;
  if (cert.verdict < Level::StablyLinearizable) push(springer_reduction(p, options, deadline));
  else skip(kSpringer, cert.verdict == Level::Linearizable ? have_lin : have_sl);
  return cert;
}

Certificate analyze(const std::vector<Matrix>& generators, const Matrix& gram, const Options& options) {
  return analyze(validate(generators, gram, options), options);
}

Json certificate_json(const Certificate& cert) {
  Json out = Json::object();
  out["verdict"] = to_string(cert.verdict);
  Json trace = Json::array();
  for (const auto& r : cert.trace) {
    Json j = Json::object();
    j["criterion"] = r.criterion;
    j["paper_anchor"] = r.anchor;
    j["fired"] = r.fired;
    if (r.skipped) j["skipped"] = true;
    if (r.fired) j["level"] = to_string(r.level);
    if (!r.note.empty()) j["note"] = r.note;
    j["witness"] = r.witness;
    trace.push_back(j);
  }
  out["trace"] = trace;
  out["validation"] = cert.validation;
  return out;
}

// ------------------------------------------------------------ verification

namespace {

std::vector<std::string> verify_record(const Prepared& p, const Json& rec, const Options& options);

std::vector<std::string> verify_prepared(const Prepared& p, const Json& certificate, const Options& options) {
  std::vector<std::string> problems;
  if (!certificate.is_object() || !certificate.contains("verdict") || !certificate.contains("trace") ||
      !certificate["trace"].is_array())
    return {"certificate lacks verdict or trace"};
  Level claimed = level_from_string(certificate["verdict"].get<std::string>());
  Level best = Level::Unknown;
  for (const auto& rec : certificate["trace"]) {
    if (!rec.value("fired", false)) continue;
    Level l = level_from_string(rec.value("level", std::string("UNKNOWN")));
    auto more = verify_record(p, rec, options);
    for (auto& m : more) problems.push_back(rec.value("criterion", std::string("?")) + ": " + m);
    if (more.empty() && l > best) best = l;
  }
  if (claimed > best) problems.push_back("verdict is stronger than the verified records");
  return problems;
}

std::vector<std::string> verify_record(const Prepared& p, const Json& rec, const Options& options) {
  std::vector<std::string> problems;
  const std::string crit = rec.value("criterion", std::string());
  const Json& w = rec["witness"];
  const Matrix& q = p.qs.gram;
  const FiniteGroup& g = *p.qs.group;
  Level level = level_from_string(rec.value("level", std::string("UNKNOWN")));

  if (crit == kFixedPoint) {
    ExtVector v = ext_vector_from_json(w["point"], "/witness/point");
    if (v.size() != p.qs.dim() || (is_zero(v.a) && (v.b.empty() || is_zero(v.b))))
      problems.push_back("point is zero or of the wrong size");
    else {
      if (!ext_bilinear(v, q, v).is_zero()) problems.push_back("point is not on the quadric");
      for (const auto& m : g.generator_matrices())
        if (!ext_proportional(ext_apply(m, v), v)) problems.push_back("point is not fixed by a generator");
    }
    if (level != Level::Linearizable) problems.push_back("fixed point must claim linearizability");
  } else if (crit == kIsotropic) {
    std::vector<ExtVector> ws, ds;
    for (std::size_t i = 0; i < w["w"].size(); ++i) ws.push_back(ext_vector_from_json(w["w"][i], "/witness/w"));
    for (std::size_t i = 0; i < w["w_dual"].size(); ++i)
      ds.push_back(ext_vector_from_json(w["w_dual"][i], "/witness/w_dual"));
    if (ws.empty() || ws.size() != ds.size()) return {"pair bases missing or of different sizes"};
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = 0; j < ws.size(); ++j) {
        if (!ext_bilinear(ws[i], q, ws[j]).is_zero()) problems.push_back("W is not isotropic");
        if (!ext_bilinear(ds[i], q, ds[j]).is_zero()) problems.push_back("W' is not isotropic");
        ExtScalar s = ext_bilinear(ws[i], q, ds[j]);
        if (!(s.b.is_zero() && s.a == Cyclo(i == j ? 1L : 0L))) problems.push_back("pairing is not the identity");
      }
    auto chw = span_character(ws, p.qs.group);
    auto chd = span_character(ds, p.qs.group);
    if (!chw || !chd) return {"W or W' is not invariant"};
    bool from_w = w.value("projected_from", std::string("w")) == "w";
    ClassFunction target = character_of(p.qs.group) - (from_w ? *chw : *chd);
    bool free = scalar_classes(target).empty();
    if ((level == Level::Linearizable) != free)
      problems.push_back("claimed level does not match generic freeness on the projection target");
  } else if (crit == kTwistedCubic) {
    Matrix sigma = matrix_from_json(w["sigma"], "/witness/sigma");
    auto si = g.find(sigma);
    if (!si) return {"sigma is not in the group"};
    long o = static_cast<long>(g.element_order(*si));
    std::size_t index = g.order() / static_cast<std::size_t>(o);
    Cyclo c = cyclo_from_json(w["sigma_scalar"], "/witness/sigma_scalar");
    std::optional<Matrix> tau_p;
    if (w.contains("tau")) {
      Matrix tau = matrix_from_json(w["tau"], "/witness/tau");
      auto ti = g.find(tau);
      if (!ti) return {"tau is not in the group"};
      Subgroup cs = generate(g, {*si});
      if (index != 2 || std::binary_search(cs.elements.begin(), cs.elements.end(), *ti) ||
          g.mul(*ti, *ti) != 0 || g.conjugate(*si, *ti) != g.inverse(*si))
        problems.push_back("tau does not extend <sigma> to the group as a reflection");
      tau_p = Cyclo(w["tau_sign"].get<long>()) * tau;
    } else if (index != 1) {
      problems.push_back("sigma does not generate the group");
    }
    if (w["sigma_order"].get<long>() != o) problems.push_back("sigma order mismatch");
    std::array<Vector, 5> e;
    if (!w["basis"].is_array() || w["basis"].size() != 5) return {"basis must have five vectors"};
    for (std::size_t i = 0; i < 5; ++i) e[i] = vector_from_json(w["basis"][i], "/witness/basis");
    for (auto& m : cubic_pattern_problems(q, c.inverse() * sigma, tau_p, o, w["weight"].get<long>(), e))
      problems.push_back(m);
  } else if (crit == kPfaffian) {
    const ClassFunction chi_v = character_of(p.qs.group);
    ClassFunction chi_w(p.qs.group, vector_from_json(w["w_character"], "/witness/w_character"));
    ClassFunction psi(p.qs.group, vector_from_json(w["twist"]["values"], "/witness/twist/values"));
    if (chi_w.degree() != Cyclo(4L)) problems.push_back("W does not have degree 4");
    std::vector<long> mult;
    try {
      mult = decompose(chi_w, p.table);
      p.table.index_of(psi);
    } catch (const Error& e) {
      return {std::string("witness characters invalid: ") + e.what()};
    }
    if (psi.degree() != Cyclo(1L)) problems.push_back("twist is not linear");
    ClassFunction alt2 = exterior_power(chi_w, 2), alt4 = exterior_power(chi_w, 4);
    if (p.qs.dim() == 5) {
      if (!admits_symplectic_form(mult, p.table)) problems.push_back("W carries no invariant symplectic form");
      if (!is_trivial(psi * psi)) problems.push_back("twist does not square to the trivial character");
      if (alt2 != trivial_character(p.qs.group) + psi * chi_v) problems.push_back("alt2 W differs from 1 + psi V");
    } else if (p.qs.dim() == 6) {
      if (alt2 != psi * chi_v) problems.push_back("alt2 W differs from psi V");
      if (alt4 != p.multiplier * psi * psi) problems.push_back("alt4 W differs from multiplier psi^2");
    } else {
      problems.push_back("dimension is not 5 or 6");
    }
  } else if (crit == kSpringer) {
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < w["sylow_generators"].size(); ++i)
      gens.push_back(matrix_from_json(w["sylow_generators"][i], "/witness/sylow_generators"));
    if (gens.empty()) return {"no Sylow generators"};
    for (const auto& m : gens)
      if (!g.find(m)) problems.push_back("Sylow generator is not in the group");
    GroupPtr h = FiniteGroup::closure(gens, options.closure_cap);
    std::size_t two = 1;
    for (std::size_t n = g.order(); n % 2 == 0; n /= 2) two *= 2;
    if (h->order() != two) problems.push_back("subgroup is not a Sylow 2-subgroup");
    Options inner = options;
    inner.springer = false;
    Prepared ph = validate(gens, q, inner);
    for (auto& m : verify_prepared(ph, w["certificate"], inner)) problems.push_back("nested: " + m);
    Level nested = level_from_string(w["certificate"]["verdict"].get<std::string>());
    if (nested == Level::Unknown) problems.push_back("nested verdict is UNKNOWN");
    if (level != Level::StablyLinearizable) problems.push_back("the reduction only yields stable linearizability");
  } else {
    problems.push_back("unknown criterion");
  }
  return problems;
}

}  // namespace

std::vector<std::string> verify_certificate(const std::vector<Matrix>& generators, const Matrix& gram,
                                            const Json& certificate, const Options& options) {
  try {
    return verify_prepared(validate(generators, gram, options), certificate, options);
  } catch (const Error& e) {
    return {std::string("verification failed: ") + e.what()};
  } catch (const nlohmann::json::exception& e) {
    return {std::string("malformed witness: ") + e.what()};
  }
}

// ------------------------------------------------------------ corollary scan

namespace {

bool is_even_signed_permutation(const Matrix& m) {
  if (m.rows() != 5 || !m.square()) return false;
  long negatives = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    int nonzero = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      const Cyclo& x = m(i, j);
      if (x.is_zero()) continue;
      ++nonzero;
      if (x == Cyclo(-1L)) ++negatives;
      else if (!x.is_one()) return false;
    }
    if (nonzero != 1) return false;
  }
  return negatives % 2 == 0 && !determinant(m).is_zero() && rank(m) == 5;
}

// V2 + three pairwise distinct linear characters
bool bad_d4_restriction(const GroupPtr& h) {
  CharacterTable t = character_table(h);
  auto mult = decompose(character_of(h), t);
  long planes = 0, lines = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    if (mult[i] != 1) return false;
    if (t.degrees[i] == 2) ++planes;
    else if (t.degrees[i] == 1) ++lines;
  }
  return planes == 1 && lines == 3;
}

}  // namespace

Json ScanReport::to_json() const {
  Json j = Json::object();
  j["complete"] = complete;
  j["abelian_subgroups_checked"] = abelian_checked;
  j["every_abelian_subgroup_has_fixed_points"] = abelian_fixed_points;
  j["abelian_without_fixed_points"] = abelian_failures;
  j["d4_subgroups_checked"] = d4_checked;
  j["no_d4_with_distinct_characters"] = no_bad_d4;
  j["d4_with_distinct_characters"] = bad_d4;
  j["hypotheses_hold"] = complete && abelian_fixed_points && no_bad_d4;
  j["verdict"] = to_string(verdict);
  j["consistent"] = consistent;
  return j;
}

ScanReport corollary_scan(const std::vector<Matrix>& generators, const Options& options) {
  for (const auto& m : generators)
    if (!is_even_signed_permutation(m))
      throw Error(Error::Kind::NotASubgroup, "generator is not an even signed permutation of 5 coordinates");
  Deadline deadline(options.budget_ms);
  Prepared p = validate(generators, Matrix::identity(5), options);
  const FiniteGroup& g = *p.qs.group;
  ScanReport rep;
  auto key_of = [&g](const Subgroup& s) {
    std::string k;
    for (std::size_t x : s.generators) k += (k.empty() ? "" : " | ") + g.key(x);
    return k.empty() ? std::string("identity") : k;
  };
  try {
    for (const auto& s : abelian_subgroups(g, deadline)) {
      deadline.check("abelian fixed points");
      GroupPtr h = realize(g, s);
      ++rep.abelian_checked;
      if (fixed_lines_on_quadric(p.qs, h, character_table(h)).empty()) {
        rep.abelian_fixed_points = false;
        rep.abelian_failures.push_back(key_of(s));
      }
    }
    // D4 subgroups are 2-generated
    if (options.max_subgroup_gens < 2) rep.complete = false;
    for (const auto& s : options.max_subgroup_gens < 2 ? std::vector<Subgroup>{} : dihedral_subgroups(g, 4, deadline)) {
      ++rep.d4_checked;
      if (bad_d4_restriction(realize(g, s))) {
        rep.no_bad_d4 = false;
        rep.bad_d4.push_back(key_of(s));
      }
    }
  } catch (const Error& e) {
    if (e.kind() != Error::Kind::BudgetExceeded) throw;
    rep.complete = false;
  }
  try {
    rep.verdict = analyze(p, options).verdict;
  } catch (const Error& e) {
    if (e.kind() != Error::Kind::BudgetExceeded) throw;
    rep.verdict = Level::Unknown;
    rep.complete = false;
  }
  bool hypotheses = rep.complete && rep.abelian_fixed_points && rep.no_bad_d4;
  rep.consistent = !hypotheses || rep.verdict >= Level::StablyLinearizable;
  return rep;
}

}  // namespace quadlin
