// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "support.hpp"

using namespace quadlin;
using namespace testing;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

bool report(int number, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(s < limit_s, "took longer than " + std::to_string(limit_s) + " s");
  std::ostringstream line;
  line << (o.pass ? "PASS" : "FAIL") << " " << number << " " << title << " (" << std::fixed;
  line.precision(2);
  line << s << " s)";
  for (const auto& n : o.notes) line << "; " << n;
  std::cout << line.str() << std::endl;
  return o.pass;
}

Certificate analyze_entry(const std::string& name) {
  auto e = build(name);
  return analyze(e.generators, gram_for(e));
}

std::vector<Cyclo> values_of(const Json& j) { return vector_from_json(j, ""); }

// Printed restriction tuples, with the two-dimensional constituents where printed.
void character_fixtures(Outcome& o) {
  struct Fixture {
    std::string entry;
    std::vector<std::string> chi;
    std::vector<std::vector<std::string>> planes;
  };
  const std::string r2 = "E(8)-E(8)^3", m2 = "-E(8)+E(8)^3";
  const std::vector<Fixture> fixtures{
      {"c4wrc2_in_wd5",
       {"5", "-3", "1", "1", "1", "1", "1", "-3", "1", "1", "-3", "1", "-1", "-1"},
       {{"2", "-2", "0", "0", "2*E(4)", "-2*E(4)", "1-E(4)", "0", "1+E(4)", "-1-E(4)", "-1+E(4)", "0", "0", "0"},
        {"2", "-2", "0", "0", "-2*E(4)", "2*E(4)", "1+E(4)", "0", "1-E(4)", "-1+E(4)", "-1-E(4)", "0", "0", "0"}}},
      {"sd16_in_wd5", {"5", "-3", "-1", "1", "1", "-1", "-1"}, {}},
      {"d8_in_wd5",
       {"5", "-3", "-1", "1", "1", "-1", "-1"},
       {{"2", "-2", "0", "0", "0", r2, m2}, {"2", "-2", "0", "0", "0", m2, r2}}}};
  auto weyl = FiniteGroup::closure(weyl_d5_generators());
  auto chi_w = character_of(weyl);
  for (const auto& f : fixtures) {
    auto g = group_of(f.entry);
    auto chi = restrict(chi_w, g);
    o.require(same_columns({chi.values()}, {cyclos(f.chi)}), f.entry + ": restriction tuple differs");
    if (f.planes.empty()) continue;
    auto t = character_table(g);
    auto mult = decompose(chi, t);
    std::vector<std::size_t> planes;
    for (std::size_t i = 0; i < mult.size(); ++i)
      if (mult[i] && t.degrees[i] == 2) planes.push_back(i);
    bool found = false;
    if (planes.size() == 2)
      for (int flip = 0; flip < 2; ++flip) {
        const auto& a = t.irreducibles[planes[static_cast<std::size_t>(flip)]].values();
        const auto& b = t.irreducibles[planes[static_cast<std::size_t>(1 - flip)]].values();
        found |= same_columns({a, b}, {cyclos(f.planes[0]), cyclos(f.planes[1])});
      }
    o.require(found, f.entry + ": two-dimensional constituents differ from the printed ones");
  }
}

void two_group_verdicts(Outcome& o) {
  for (const char* name : {"c4wrc2_in_wd5", "sd16_in_wd5"}) {
    auto c = analyze_entry(name);
    const auto& r = record_of(c, "isotropic_projection");
    o.require(c.verdict == Level::Linearizable, std::string(name) + ": not LINEARIZABLE");
    o.require(r.fired && r.level == Level::Linearizable, std::string(name) + ": isotropic_projection did not fire");
    if (!r.fired) continue;
    auto w = values_of(r.witness["w_character"]);
    auto wd = values_of(r.witness["w_dual_character"]);
    bool dual = w.size() == wd.size();
    for (std::size_t i = 0; dual && i < w.size(); ++i) dual = wd[i] == w[i].conjugate();
    o.require(dual && w.front() == Cyclo(2L), std::string(name) + ": pair is not V2 with its dual");
    o.require(r.witness["hyperbolic_pairs"].get<long>() >= 1, std::string(name) + ": no hyperbolic pair");
  }
  auto d8 = analyze_entry("d8_in_wd5");
  o.require(d8.verdict == Level::Linearizable, "d8_in_wd5: not LINEARIZABLE");
  o.require(record_of(d8, "twisted_cubic").fired, "d8_in_wd5: twisted_cubic did not fire");
}

void d12_springer(Outcome& o) {
  auto c = analyze_entry("d12_split_quadric");
  const auto& r = record_of(c, "springer_reduction");
  o.require(c.verdict == Level::StablyLinearizable, "verdict is not STABLY_LINEARIZABLE");
  o.require(r.fired, "springer_reduction did not fire");
  if (!r.fired) return;
  const Json& nested = r.witness["certificate"];
  const Json* proj = nullptr;
  for (const auto& rec : nested["trace"])
    if (rec["criterion"] == "isotropic_projection" && rec["fired"] == true) proj = &rec;
  o.require(proj != nullptr, "nested certificate has no fired isotropic projection");
  if (!proj) return;
  const Json& w = (*proj)["witness"];
  o.require(w["hyperbolic_pairs"] == 1, "nested certificate shows more than one pair");

  std::vector<Matrix> gens;
  for (const auto& m : r.witness["sylow_generators"]) gens.push_back(matrix_from_json(m, ""));
  auto h = FiniteGroup::closure(gens);
  o.require(h->order() == 8 && !h->is_abelian(), "Sylow subgroup is not dihedral of order 8");
  auto t = character_table(h);
  auto chi = character_of(h);
  auto mult = decompose(chi, t);
  bool from_double = false;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] != 2) continue;
    auto target = chi - t.irreducibles[t.dual[i]];
    from_double |= same_columns({t.irreducibles[i].values(), target.values()},
                                {values_of(w["w_character"]), values_of(w["target_character"])});
  }
  o.require(from_double, "the pair does not come from the multiplicity-2 component");
}

void sylow_fixed_points(Outcome& o) {
  for (const char* name : {"s5_in_wd5", "s3xc2c2"}) {
    auto c = analyze_entry(name);
    const auto& r = record_of(c, "springer_reduction");
    o.require(c.verdict == Level::StablyLinearizable, std::string(name) + ": not STABLY_LINEARIZABLE");
    bool nested_fixed = false;
    if (r.fired)
      for (const auto& rec : r.witness["certificate"]["trace"])
        nested_fixed |= rec["criterion"] == "fixed_point" && rec["fired"] == true;
    o.require(nested_fixed, std::string(name) + ": no Sylow fixed point in the nested certificate");
  }
  o.require(!fixed_point_criterion(prepare("s5_in_wd5")).fired, "fixed_point fires on the full S5");
}

void wedge_example(Outcome& o) {
  auto p = prepare("s5_wedge_quadric");
  auto c = analyze(p);
  const auto& r = record_of(c, "pfaffian");
  o.require(c.verdict == Level::StablyLinearizable, "verdict is not STABLY_LINEARIZABLE");
  o.require(r.fired, "pfaffian did not fire");
  if (!r.fired) return;
  auto w = ClassFunction(p.qs.group, values_of(r.witness["w_character"]));
  const auto& classes = p.qs.group->classes();
  // std4 is the degree-4 irreducible with value 2 on the ten transpositions
  bool is_std4 = w.degree() == Cyclo(4L);
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (classes[k].size() == 10 && p.qs.group->element_order(classes[k].representative) == 2)
      is_std4 &= w.values()[k] == Cyclo(2L);
  o.require(is_std4 && inner_product(w, w).is_one(), "witness W is not std4");
  auto alt4 = exterior_power(w, 4);
  o.require(alt4 == trivial_character(p.qs.group),
            "alt4 of the witness is not trivial (it is " + to_json(alt4).dump() + ")");
}

void negative_controls(Outcome& o) {
  for (const char* name : {"d4_open_case", "d8_open_case"}) {
    auto c = analyze_entry(name);
    o.require(c.verdict == Level::Unknown, std::string(name) + ": verdict is not UNKNOWN");
    o.require(c.trace.size() == 5, std::string(name) + ": not every criterion is recorded");
    for (const auto& r : c.trace) o.require(!r.fired, std::string(name) + ": " + r.criterion + " fired");
  }
}

// Random invariant forms on catalog groups, direct sums and conjugates.
void witt_suite(Outcome& o) {
  std::mt19937 rng(20261015);
  auto pick = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const std::vector<std::pair<std::string, std::map<std::string, long>>> sources{
      {"d4_sylow_restriction", {}}, {"d8_in_wd5", {}},       {"sd16_in_wd5", {}},   {"c4wrc2_in_wd5", {}},
      {"s3xc2c2", {}},              {"d12_split_quadric", {}}, {"s3_twisted_cubic", {}}, {"d4_open_case", {}},
      {"d8_open_case", {}},         {"q8_symplectic", {}},   {"trivial_in_wd5", {}},  {"dihedral", {{"n", 3}}},
      {"dihedral", {{"n", 4}}},     {"dihedral", {{"n", 5}}}, {"cyclic", {{"n", 6}}}, {"symmetric", {{"n", 4}}}};

  auto random_seed_form = [&](std::size_t d) {
    Matrix s(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        Cyclo v(pick(-3, 3));
        if (pick(0, 5) == 0) v += Cyclo(pick(-1, 1)) * Cyclo::root(4, 1);
        s(i, j) = v;
        s(j, i) = v;
      }
    return s;
  };
  auto average = [](const FiniteGroup& g, const Matrix& s) {
    Matrix q(s.rows(), s.cols());
    for (std::size_t i = 0; i < g.order(); ++i) q = q + g.element(i).transpose() * s * g.element(i);
    return q;
  };
  auto random_unimodular = [&](std::size_t d) {
    Matrix p = Matrix::identity(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j) p(i, j) = Cyclo(pick(-2, 2));
    std::vector<int> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    return permutation_matrix(perm) * p;
  };

  std::size_t done = 0, attempts = 0, failures = 0;
  while (done < 200 && attempts < 2000) {
    ++attempts;
    const auto& [name, params] = sources[static_cast<std::size_t>(pick(0, static_cast<long>(sources.size()) - 1))];
    std::vector<Matrix> gens = build(name, params).generators;
    const long shape = pick(0, 2);
    if (shape == 1) {  // V (+) V, or V (+) trivial line
      const bool twice = pick(0, 1) == 1;
      for (auto& g : gens) g = block_diagonal({g, twice ? g : Matrix::identity(1)});
    }
    const std::size_t d = gens.front().rows();
    auto g0 = FiniteGroup::closure(gens);
    Matrix q = average(*g0, random_seed_form(d));
    if (determinant(q).is_zero()) continue;
    if (shape == 2) {  // conjugate the action and transport the form
      Matrix p = random_unimodular(d);
      Matrix pinv = *inverse(p);
      for (auto& g : gens) g = pinv * g * p;
      q = p.transpose() * q * p;
    }
    auto g = shape == 2 ? FiniteGroup::closure(gens) : g0;
    QuadraticSpace qs{g, q};
    if (!is_invariant(q, *g)) {
      o.require(false, name + ": transported form is not invariant");
      ++failures;
      continue;
    }
    ++done;
    auto t = character_table(g);
    auto wd = witt_decompose(qs, t);
    std::vector<std::string> problems = check_witt(qs, t, wd);

    std::size_t dims = 0;
    for (const auto& pair : wd.pairs) {
      dims += 2 * pair.w.size();
      for (std::size_t i = 0; i < pair.w.size(); ++i)
        for (std::size_t j = 0; j < pair.w.size(); ++j) {
          if (!ext_bilinear(pair.w[i], q, pair.w[j]).is_zero()) problems.push_back("W is not isotropic");
          if (!ext_bilinear(pair.w_dual[i], q, pair.w_dual[j]).is_zero()) problems.push_back("W' is not isotropic");
          ExtScalar b = ext_bilinear(pair.w[i], q, pair.w_dual[j]);
          if (b.a != Cyclo(i == j ? 1L : 0L) || !b.b.is_zero()) problems.push_back("W and W' are not dual");
        }
    }
    std::vector<std::size_t> seen;
    for (const auto& an : wd.anisotropic) {
      dims += an.basis.size();
      if (t.indicators[an.character] != 1) problems.push_back("kernel component is not of orthogonal type");
      if (std::find(seen.begin(), seen.end(), an.character) != seen.end()) problems.push_back("kernel repeats");
      if (static_cast<long>(an.basis.size()) != t.degrees[an.character]) problems.push_back("kernel component size");
      seen.push_back(an.character);
    }
    if (dims != d) problems.push_back("dimensions do not add up");

    // Every invariant subspace of a multiplicity-free kernel is a sum of
    // components; none may be totally isotropic.
    const std::size_t k = wd.anisotropic.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      std::vector<Vector> span;
      for (std::size_t c = 0; c < k; ++c)
        if (mask >> c & 1) span.insert(span.end(), wd.anisotropic[c].basis.begin(), wd.anisotropic[c].basis.end());
      bool isotropic = true;
      for (const auto& x : span)
        for (const auto& y : span) isotropic &= bilinear(x, q, y).is_zero();
      if (isotropic) problems.push_back("invariant isotropic subspace inside the kernel");
    }
    if (!problems.empty()) {
      ++failures;
      o.require(false, name + ": " + problems.front());
    }
  }
  o.require(done == 200, "only " + std::to_string(done) + " nondegenerate spaces were drawn");
  o.require(failures == 0, std::to_string(failures) + " spaces failed");
}

void character_suite(Outcome& o) {
  std::vector<std::pair<std::string, GroupPtr>> groups;
  for (const auto& name : catalog_names()) groups.emplace_back(name, group_of(name));
  groups.emplace_back("cyclic n=2", FiniteGroup::closure(build("cyclic", {{"n", 2}}).generators));
  for (const auto& [name, g] : groups) {
    auto t = character_table(g);
    const auto& classes = g->classes();
    const std::size_t n = t.size();
    const Cyclo order(static_cast<long>(g->order()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (inner_product(t.irreducibles[i], t.irreducibles[j]) != Cyclo(i == j ? 1L : 0L))
          o.require(false, name + ": row orthogonality");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Cyclo s;
        for (std::size_t i = 0; i < n; ++i)
          s += t.irreducibles[i].values()[a] * t.irreducibles[i].values()[b].conjugate();
        Cyclo expected = a == b ? order * Cyclo(mpq_class(1, static_cast<long>(classes[a].size()))) : Cyclo();
        if (s != expected) o.require(false, name + ": column orthogonality");
      }
    long sum = 0;
    for (long d : t.degrees) sum += d * d;
    o.require(static_cast<std::size_t>(sum) == g->order(), name + ": sum of squared degrees");
    for (int fs : t.indicators) o.require(fs >= -1 && fs <= 1, name + ": indicator out of range");
    auto chi = character_of(g);
    std::vector<Cyclo> traces;
    for (const auto& c : classes) traces.push_back(exterior_square(g->element(c.representative)).trace());
    o.require(exterior_power(chi, 2).values() == traces, name + ": alt2 disagrees with exterior square matrices");
  }
}

void pfaffian_oracle(Outcome& o) {
  std::mt19937 rng(8);
  auto pick = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        Cyclo v;
        for (long k = 0; k < 4; ++k) v += Cyclo(mpq_class(pick(-5, 5), pick(1, 3))) * Cyclo::root(8, k);
        m(i, j) = v;
        m(j, i) = -v;
      }
    const Cyclo pf = pfaffian(m);
    o.require(pf * pf == determinant(m), "Pf^2 != det on trial " + std::to_string(trial));
    // a12 a34 - a13 a24 + a14 a23
    o.require(pf == m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2), "sign convention");
  }
}

void corollary_cross_check(Outcome& o) {
  for (const char* name : {"s5_in_wd5", "s3xc2c2_in_wd5", "c4wrc2_in_wd5", "sd16_in_wd5", "d8_in_wd5"}) {
    Options opts;
    opts.budget_ms = 300'000;
    auto rep = corollary_scan(build(name).generators, opts);
    o.require(rep.complete, std::string(name) + ": scan incomplete");
    o.require(rep.consistent, std::string(name) + ": hypotheses hold but the verdict is UNKNOWN");
  }
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "printed restriction tuples", 30, character_fixtures);
  ok &= report(2, "2-group verdicts", 90, two_group_verdicts);
  ok &= report(3, "D12 through its Sylow subgroup", 30, d12_springer);
  ok &= report(4, "Sylow fixed points for S5 and S3 x C2^2", 60, sylow_fixed_points);
  ok &= report(5, "S5 on the wedge square", 60, wedge_example);
  ok &= report(6, "negative controls", 60, negative_controls);
  ok &= report(7, "Witt property suite", 300, witt_suite);
  ok &= report(8, "character-theory suite", 300, character_suite);
  ok &= report(9, "Pfaffian identity", 60, pfaffian_oracle);
  ok &= report(10, "subgroup hypotheses versus verdicts", 600, corollary_cross_check);
  return ok ? 0 : 1;
}
