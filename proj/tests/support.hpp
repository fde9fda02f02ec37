#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "quadlin/catalog.hpp"
#include "quadlin/criteria.hpp"
#include "quadlin/error.hpp"

namespace testing {

using namespace quadlin;

inline Matrix ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Cyclo>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return Matrix::from_rows(r);
}

inline std::vector<Cyclo> cyclos(const std::vector<std::string>& texts) {
  std::vector<Cyclo> out;
  for (const auto& t : texts) out.push_back(parse_cyclo(t));
  return out;
}

inline Matrix gram_for(const CatalogEntry& e) {
  return e.gram.rows() ? e.gram : invariant_form(*FiniteGroup::closure(e.generators));
}

inline Prepared prepare(const std::string& name) {
  auto e = build(name);
  return validate(e.generators, gram_for(e));
}

inline GroupPtr group_of(const std::string& name) { return FiniteGroup::closure(build(name).generators); }

template <class F>
Error::Kind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return Error::Kind::Internal;
}

inline std::vector<std::string> sorted_keys(const FiniteGroup& g) {
  std::vector<std::string> k;
  for (std::size_t i = 0; i < g.order(); ++i) k.push_back(g.key(i));
  std::sort(k.begin(), k.end());
  return k;
}

inline const CriterionRecord& record_of(const Certificate& c, const std::string& criterion) {
  for (const auto& r : c.trace)
    if (r.criterion == criterion) return r;
  throw Error(Error::Kind::Internal, "no record " + criterion);
}

// Whether some bijection of classes carries the rows `ours` onto the rows
// `printed` column by column, with the identity class first in both.
inline bool same_columns(const std::vector<std::vector<Cyclo>>& ours,
                         const std::vector<std::vector<Cyclo>>& printed) {
  if (ours.size() != printed.size() || ours.empty()) return false;
  const std::size_t n = ours.front().size();
  auto column = [n](const std::vector<std::vector<Cyclo>>& rows, std::size_t c) {
    std::vector<std::string> col;
    for (const auto& r : rows) {
      if (r.size() != n) return std::vector<std::string>{};
      col.push_back(r[c].key());
    }
    return col;
  };
  std::vector<std::vector<std::string>> a, b;
  for (std::size_t c = 0; c < n; ++c) {
    a.push_back(column(ours, c));
    b.push_back(column(printed, c));
  }
  if (a.front() != b.front()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// S5 on f_i = e_i - e_5, i = 1..4.
inline Matrix standard_rep(const std::vector<int>& perm) {
  Matrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    auto image = [&](std::size_t k) {
      Vector v(4);
      if (k < 4) v[k] = Cyclo(1L);  // f_5 = 0
      return v;
    };
    Vector col = image(static_cast<std::size_t>(perm[i]));
    if (perm[4] < 4) col = add(col, scale(Cyclo(-1L), image(static_cast<std::size_t>(perm[4]))));
    for (std::size_t r = 0; r < 4; ++r) m(r, i) = col[r];
  }
  return m;
}

}  // namespace testing
