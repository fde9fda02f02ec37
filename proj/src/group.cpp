#include "quadlin/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "quadlin/error.hpp"

namespace quadlin {

namespace {
constexpr std::size_t kTableLimit = 2048;
constexpr std::uint32_t kUnset = UINT32_MAX;
}  // namespace

Deadline::Deadline(long milliseconds)
    : end_(std::chrono::steady_clock::now() + std::chrono::milliseconds(milliseconds)) {}

bool Deadline::expired() const {
  return end_ && std::chrono::steady_clock::now() > *end_;
}

void Deadline::check(const std::string& what) const {
  if (expired()) throw Error(Error::Kind::BudgetExceeded, "budget exhausted during " + what);
}

GroupPtr FiniteGroup::closure(const std::vector<Matrix>& generators, std::size_t cap) {
  if (generators.empty()) throw Error(Error::Kind::Schema, "a group needs at least one generator");
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->degree_ = generators.front().rows();
  for (const Matrix& m : generators) {
    if (!m.square() || m.rows() != g->degree_ || m.rows() == 0)
      throw Error(Error::Kind::Schema, "generators must be square matrices of one size");
    if (determinant(m).is_zero()) throw Error(Error::Kind::NotInvertible, "a generator is singular");
  }
  g->generators_ = generators;
  const std::size_t ngen = generators.size();

  g->elements_.push_back(Matrix::identity(g->degree_));
  g->keys_.push_back(g->elements_.front().key());
  g->index_.emplace(g->keys_.front(), 0);
  g->parent_.push_back(0);
  g->parent_gen_.push_back(0);
  g->right_gen_.emplace_back(ngen, kUnset);

  std::vector<std::size_t> layer{0};
  while (!layer.empty()) {
    struct Fresh {
      std::string key;
      Matrix m;
      std::uint32_t parent, gen;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> sources;
    };
    std::vector<Fresh> fresh;
    std::unordered_map<std::string, std::size_t> fresh_index;
    for (std::size_t x : layer) {
      for (std::size_t s = 0; s < ngen; ++s) {
        Matrix y = g->elements_[x] * generators[s];
        std::string k = y.key();
        if (auto it = g->index_.find(k); it != g->index_.end()) {
          g->right_gen_[x][s] = static_cast<std::uint32_t>(it->second);
        } else if (auto jt = fresh_index.find(k); jt != fresh_index.end()) {
          fresh[jt->second].sources.emplace_back(x, s);
        } else {
          fresh_index.emplace(k, fresh.size());
          fresh.push_back({k, std::move(y), static_cast<std::uint32_t>(x),
                           static_cast<std::uint32_t>(s), {{x, s}}});
        }
      }
    }
    std::sort(fresh.begin(), fresh.end(),
              [](const Fresh& a, const Fresh& b) { return a.key < b.key; });
    layer.clear();
    for (Fresh& f : fresh) {
      std::size_t idx = g->elements_.size();
      if (idx >= cap)
        throw Error(Error::Kind::CapExceeded,
                    "group closure exceeded " + std::to_string(cap) + " elements");
      for (auto [x, s] : f.sources) g->right_gen_[x][s] = static_cast<std::uint32_t>(idx);
      g->index_.emplace(f.key, idx);
      g->keys_.push_back(std::move(f.key));
      g->elements_.push_back(std::move(f.m));
      g->parent_.push_back(f.parent);
      g->parent_gen_.push_back(f.gen);
      g->right_gen_.emplace_back(ngen, kUnset);
      layer.push_back(idx);
    }
  }
  g->build_tables();
  return g;
}

void FiniteGroup::build_tables() {
  const std::size_t n = order();
  const std::size_t ngen = generators_.size();
  if (n <= kTableLimit) {
    table_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) table_[i * n] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        table_[i * n + j] = right_gen_[table_[i * n + parent_[j]]][parent_gen_[j]];
      }
    }
  }
  generator_index_.resize(ngen);
  for (std::size_t s = 0; s < ngen; ++s) generator_index_[s] = right_gen_[0][s];

  element_order_.assign(n, 0);
  inverse_.assign(n, 0);
  exponent_ = 1;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t y = a, prev = 0, o = 1;
    while (y != 0) {
      prev = y;
      y = mul(y, a);
      ++o;
    }
    element_order_[a] = a == 0 ? 1 : o;
    inverse_[a] = a == 0 ? 0 : prev;  // a^(o-1)
    exponent_ = std::lcm(exponent_, element_order_[a]);
  }
  class_of_.assign(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of_[i] != SIZE_MAX) continue;
    std::size_t c = classes_.size();
    ConjugacyClass cls{i, {i}};
    class_of_[i] = c;
    for (std::size_t q = 0; q < cls.elements.size(); ++q) {
      std::size_t x = cls.elements[q];
      for (std::size_t s : generator_index_) {
        std::size_t y = conjugate(x, s);
        if (class_of_[y] == SIZE_MAX) {
          class_of_[y] = c;
          cls.elements.push_back(y);
        }
      }
    }
    std::sort(cls.elements.begin(), cls.elements.end());
    classes_.push_back(std::move(cls));
  }
  power_classes_.resize(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    std::size_t r = classes_[c].representative;
    std::size_t o = element_order_[r];
    std::size_t y = 0;
    for (std::size_t j = 0; j < o; ++j) {
      power_classes_[c].push_back(class_of_[y]);
      y = mul(y, r);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (elements_[i].scalar_value()) scalar_kernel_.push_back(i);
  }
}

std::optional<std::size_t> FiniteGroup::find(const Matrix& m) const {
  if (m.rows() != degree_ || m.cols() != degree_) return std::nullopt;
  return find_key(m.key());
}

std::optional<std::size_t> FiniteGroup::find_key(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const {
  const std::size_t n = order();
  if (!table_.empty()) return table_[a * n + b];
  std::vector<std::uint32_t> word;
  for (std::size_t x = b; x != 0; x = parent_[x]) word.push_back(parent_gen_[x]);
  std::size_t y = a;
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = right_gen_[y][*it];
  return y;
}

std::size_t FiniteGroup::power(std::size_t a, long k) const {
  long o = static_cast<long>(element_order_.empty() ? 0 : element_order_[a]);
  if (o > 0) {
    k %= o;
    if (k < 0) k += o;
  }
  std::size_t result = 0, base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

std::size_t FiniteGroup::conjugate(std::size_t x, std::size_t g) const {
  return mul(mul(inverse_[g], x), g);
}

std::size_t FiniteGroup::class_power(std::size_t c, long k) const {
  const auto& pc = power_classes_[c];
  long o = static_cast<long>(pc.size());
  long r = k % o;
  if (r < 0) r += o;
  return pc[r];
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a : generator_index_)
    for (std::size_t b : generator_index_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// ------------------------------------------------------------ subgroups

Subgroup generate(const FiniteGroup& g, const std::vector<std::size_t>& generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> elems{0};
  in[0] = true;
  for (std::size_t q = 0; q < elems.size(); ++q) {
    for (std::size_t s : generators) {
      std::size_t y = g.mul(elems[q], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return {generators, elems};
}

GroupPtr realize(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Matrix> gens;
  for (std::size_t s : h.generators) gens.push_back(g.element(s));
  if (gens.empty()) gens.push_back(g.element(0));
  return FiniteGroup::closure(gens);
}

std::vector<std::vector<std::size_t>> conjugates(const FiniteGroup& g,
                                                 const std::vector<std::size_t>& elements) {
  std::set<std::vector<std::size_t>> seen{elements};
  std::vector<std::vector<std::size_t>> out{elements};
  const auto& gens = g.generator_indices();
  for (std::size_t q = 0; q < out.size(); ++q) {
    for (std::size_t s : gens) {
      std::vector<std::size_t> c;
      c.reserve(out[q].size());
      for (std::size_t x : out[q]) c.push_back(g.conjugate(x, s));
      std::sort(c.begin(), c.end());
      if (seen.insert(c).second) out.push_back(std::move(c));
    }
  }
  return out;
}

Subgroup sylow2(const FiniteGroup& g) {
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % 2 == 0; n /= 2) target *= 2;
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::vector<std::size_t> elems{0}, gens;
  while (elems.size() < target) {
    std::optional<std::size_t> best;
    for (std::size_t x = 1; x < g.order(); ++x) {
      if (in[x] || !in[g.mul(x, x)]) continue;
      bool normalizes = std::all_of(gens.begin(), gens.end(), [&](std::size_t p) {
        return in[g.conjugate(p, g.inverse(x))];
      });
      if (!normalizes) continue;
      if (!best || g.key(x) < g.key(*best)) best = x;
    }
    if (!best) throw Error(Error::Kind::Internal, "no normalizing involution coset found");
    std::size_t x = *best;
    std::size_t m = elems.size();
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t y = g.mul(elems[i], x);
      in[y] = true;
      elems.push_back(y);
    }
    gens.push_back(x);
  }
  std::sort(elems.begin(), elems.end());
  return {gens, elems};
}

std::vector<Subgroup> abelian_subgroups(const FiniteGroup& g, const Deadline& deadline) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgroup> reps{Subgroup{{}, {0}}};
  seen.insert({0});
  for (std::size_t q = 0; q < reps.size(); ++q) {
    deadline.check("abelian subgroup enumeration");
    Subgroup a = reps[q];
    std::vector<bool> in(g.order(), false);
    for (std::size_t x : a.elements) in[x] = true;
    for (std::size_t x = 1; x < g.order(); ++x) {
      if (in[x]) continue;
      bool commutes = std::all_of(a.generators.begin(), a.generators.end(), [&](std::size_t s) {
        return g.mul(x, s) == g.mul(s, x);
      });
      if (!commutes) continue;
      auto gens = a.generators;
      gens.push_back(x);
      Subgroup b = generate(g, gens);
      if (seen.count(b.elements)) continue;
      for (auto& c : conjugates(g, b.elements)) seen.insert(std::move(c));
      reps.push_back(std::move(b));
    }
  }
  std::sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return reps;
}

std::vector<Subgroup> dihedral_subgroups(const FiniteGroup& g, std::size_t n,
                                         const Deadline& deadline) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgroup> reps;
  for (const auto& cls : g.classes()) {
    std::size_t sigma = cls.representative;
    if (g.element_order(sigma) != n) continue;
    Subgroup rot = generate(g, {sigma});
    for (std::size_t tau = 1; tau < g.order(); ++tau) {
      deadline.check("dihedral subgroup search");
      if (g.element_order(tau) != 2) continue;
      if (std::binary_search(rot.elements.begin(), rot.elements.end(), tau)) continue;
      if (g.conjugate(sigma, tau) != g.inverse(sigma)) continue;
      Subgroup h = generate(g, {sigma, tau});
      if (h.elements.size() != 2 * n || seen.count(h.elements)) continue;
      for (auto& c : conjugates(g, h.elements)) seen.insert(std::move(c));
      reps.push_back(std::move(h));
    }
  }
  return reps;
}

std::vector<std::size_t> embed(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<std::size_t> idx(h.order());
  for (std::size_t i = 0; i < h.order(); ++i) {
    auto j = h.degree() == g.degree() ? g.find_key(h.key(i)) : std::nullopt;
    if (!j) throw Error(Error::Kind::NotASubgroup, "element of the subgroup is not in the group");
    idx[i] = *j;
  }
  return idx;
}

}  // namespace quadlin
