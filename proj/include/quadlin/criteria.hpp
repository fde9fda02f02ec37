#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadlin/json_io.hpp"
#include "quadlin/witt.hpp"

namespace quadlin {

/// Verdict lattice: LINEARIZABLE > STABLY_LINEARIZABLE > UNKNOWN.
enum class Level { Unknown = 0, StablyLinearizable = 1, Linearizable = 2 };
const char* to_string(Level level);
/// Throws Schema on an unknown name.
Level level_from_string(const std::string& name);

struct Options {
  std::size_t closure_cap = kDefaultClosureCap;
  long budget_ms = 60'000;
  bool springer = true;  // off for the nested Sylow analysis
  /// Cap on generators of the non-abelian subgroups searched by the scan.
  std::size_t max_subgroup_gens = 3;
};

/// A validated action: the (possibly rescaled) group, the form, and what
/// validation had to do to get there.
struct Prepared {
  QuadraticSpace qs;
  CharacterTable table;
  /// g^T Q g = multiplier(g) Q. Trivial unless the form is only
  /// semi-invariant and no linear twist makes it invariant.
  ClassFunction multiplier;
  bool semi_invariant = false;
  /// Generators were rescaled by a linear character to make the form
  /// invariant; the action on P(V) is unchanged.
  bool rescaled = false;
  std::vector<Cyclo> rescaling;  // scalar per input generator
  bool in_special_orthogonal = false;  // det = 1 on every element
  Json report;
};

/// Checks: gram symmetric and nondegenerate (DegenerateForm); the group is
/// finite; the form is semi-invariant (FormNotInvariant); no non-identity
/// element acts by a scalar (NotGenericallyFree); dim X >= 1
/// (DimensionTooSmall).
Prepared validate(const std::vector<Matrix>& generators, const Matrix& gram, const Options& options = {});

struct CriterionRecord {
  std::string criterion;
  std::string anchor;
  bool fired = false;
  bool skipped = false;
  Level level = Level::Unknown;  // the claim when fired
  std::string note;
  Json witness = Json::object();
};

struct Certificate {
  Level verdict = Level::Unknown;
  std::vector<CriterionRecord> trace;
  Json validation;
};

CriterionRecord fixed_point_criterion(const Prepared& p);
CriterionRecord isotropic_projection_criterion(const Prepared& p);
CriterionRecord twisted_cubic_criterion(const Prepared& p, const Deadline& deadline = {});
CriterionRecord pfaffian_criterion(const Prepared& p, const Deadline& deadline = {});
CriterionRecord springer_reduction(const Prepared& p, const Options& options, const Deadline& deadline = {});

/// Validation followed by the criteria in their fixed order.
Certificate analyze(const std::vector<Matrix>& generators, const Matrix& gram, const Options& options = {});
Certificate analyze(const Prepared& p, const Options& options = {});

Json certificate_json(const Certificate& cert);

/// Re-checks every fired record of a certificate against the action, without
/// reusing anything from the search. Empty result means the certificate holds.
std::vector<std::string> verify_certificate(const std::vector<Matrix>& generators, const Matrix& gram,
                                            const Json& certificate, const Options& options = {});

struct ScanReport {
  bool complete = true;         // false if the budget ran out
  bool abelian_fixed_points = true;
  std::size_t abelian_checked = 0;
  std::vector<std::string> abelian_failures;  // generator keys of offending H
  bool no_bad_d4 = true;
  std::size_t d4_checked = 0;
  std::vector<std::string> bad_d4;
  Level verdict = Level::Unknown;
  bool consistent = true;       // hypotheses hold => verdict >= SL
  Json to_json() const;
};

/// Checks the two subgroup hypotheses for G inside W(D5) acting on the
/// diagonal quadric and compares with analyze. Throws NotASubgroup unless
/// every generator is an even signed permutation.
ScanReport corollary_scan(const std::vector<Matrix>& generators, const Options& options = {});

}  // namespace quadlin
