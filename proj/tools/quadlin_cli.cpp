#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quadlin/catalog.hpp"
#include "quadlin/criteria.hpp"
#include "quadlin/error.hpp"
#include "quadlin/json_io.hpp"

using namespace quadlin;

namespace {

enum Exit { kOk = 0, kBadInput = 1, kInvalid = 2, kBudget = 3, kInternal = 4 };

int exit_code(Error::Kind kind) {
  switch (kind) {
    case Error::Kind::Parse:
    case Error::Kind::Schema:
    case Error::Kind::UnknownEntry:
    case Error::Kind::BadParams:
      return kBadInput;
    case Error::Kind::BudgetExceeded:
      return kBudget;
    default:
      return is_validation_error(kind) ? kInvalid : kInternal;
  }
}

struct Request {
  std::string input;
  std::string catalog;
  std::vector<std::string> params;
  std::string output;
  long budget_ms = 60'000;
  std::size_t closure_cap = kDefaultClosureCap;
  std::size_t max_subgroup_gens = 3;

  Options options() const {
    Options o;
    o.budget_ms = budget_ms;
    o.closure_cap = closure_cap;
    o.max_subgroup_gens = max_subgroup_gens;
    return o;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Error::Kind::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, long> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, long> out;
  for (const auto& kv : raw) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(Error::Kind::BadParams, "expected key=value, got '" + kv + "'");
    try {
      std::size_t used = 0;
      long v = std::stol(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
      out[kv.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw Error(Error::Kind::BadParams, "parameter '" + kv + "' is not an integer");
    }
  }
  return out;
}

GroupSpec load_spec(const Request& r) {
  if (!r.catalog.empty() && !r.input.empty())
    throw Error(Error::Kind::Schema, "give either --input or --catalog, not both");
  if (!r.catalog.empty()) {
    auto e = build(r.catalog, parse_params(r.params));
    GroupSpec spec{e.generators, std::nullopt, e.name};
    if (e.gram.rows()) spec.gram = e.gram;
    return spec;
  }
  if (r.input.empty()) throw Error(Error::Kind::Schema, "missing --input or --catalog");
  return group_spec_from_json(parse_json_text(read_file(r.input)));
}

Matrix gram_of(const GroupSpec& spec, const Options& o) {
  if (spec.gram) return *spec.gram;
  return invariant_form(*FiniteGroup::closure(spec.generators, o.closure_cap));
}

void emit(const Request& r, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (r.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(r.output, std::ios::binary);
  if (!out) throw Error(Error::Kind::Schema, "cannot write " + r.output);
  out << text;
}

Json analyze_json(const GroupSpec& spec, const Options& o) {
  Json out = certificate_json(analyze(spec.generators, gram_of(spec, o), o));
  if (!spec.name.empty()) out["group"] = spec.name;
  return out;
}

int cmd_analyze(const Request& r) {
  emit(r, analyze_json(load_spec(r), r.options()));
  return kOk;
}

int cmd_chartab(const Request& r) {
  GroupSpec spec = load_spec(r);
  GroupPtr g = FiniteGroup::closure(spec.generators, r.closure_cap);
  emit(r, character_table_json(character_table(g)));
  return kOk;
}

int cmd_witt(const Request& r) {
  GroupSpec spec = load_spec(r);
  Options o = r.options();
  GroupPtr g = FiniteGroup::closure(spec.generators, o.closure_cap);
  Matrix gram = spec.gram ? *spec.gram : invariant_form(*g);
  if (!gram.square() || gram.rows() != g->degree() || !gram.is_symmetric())
    throw Error(Error::Kind::Schema, "gram matrix must be symmetric of the generator size");
  if (determinant(gram).is_zero()) throw Error(Error::Kind::DegenerateForm, "gram matrix is singular");
  if (!is_invariant(gram, *g)) throw Error(Error::Kind::FormNotInvariant, "the form is not invariant");
  QuadraticSpace qs{g, gram};
  CharacterTable t = character_table(g);
  emit(r, witt_json(qs, t, witt_decompose(qs, t)));
  return kOk;
}

int cmd_scan(const Request& r) {
  GroupSpec spec = load_spec(r);
  ScanReport report = corollary_scan(spec.generators, r.options());
  emit(r, report.to_json());
  return report.complete ? kOk : kBudget;
}

int cmd_verify(const Request& r, const std::string& certificate_path) {
  GroupSpec spec = load_spec(r);
  Options o = r.options();
  Json cert = parse_json_text(read_file(certificate_path));
  auto problems = verify_certificate(spec.generators, gram_of(spec, o), cert, o);
  Json out = Json::object();
  out["valid"] = problems.empty();
  out["problems"] = problems;
  emit(r, out);
  return problems.empty() ? kOk : kInvalid;
}

Json entry_summary(const CatalogEntry& e) {
  Json j = Json::object();
  j["name"] = e.name;
  j["description"] = e.description;
  j["order"] = e.order;
  j["dimension"] = e.generators.front().rows();
  if (!e.expected.empty()) j["expected"] = e.expected;
  if (!e.anchor.empty()) j["anchor"] = e.anchor;
  if (!e.literature.empty()) j["literature"] = e.literature;
  return j;
}

int cmd_catalog_list(const Request& r) {
  Json out = Json::object();
  Json entries = Json::array();
  for (const auto& n : catalog_names()) entries.push_back(entry_summary(build(n)));
  out["entries"] = entries;
  out["families"] = catalog_families();
  emit(r, out);
  return kOk;
}

int cmd_catalog_show(const Request& r, const std::string& name) {
  auto e = build(name, parse_params(r.params));
  GroupSpec spec{e.generators, std::nullopt, e.name};
  if (e.gram.rows()) spec.gram = e.gram;
  Json out = group_spec_to_json(spec);
  if (!e.params.empty()) out["params"] = e.params;
  emit(r, out);
  return kOk;
}

int cmd_catalog_run(const Request& r, const std::string& name) {
  auto e = build(name, parse_params(r.params));
  Json out = entry_summary(e);
  Options o = r.options();
  std::string got;
  try {
    Matrix gram = e.gram.rows() ? e.gram : invariant_form(*FiniteGroup::closure(e.generators, o.closure_cap));
    Json cert = certificate_json(analyze(e.generators, gram, o));
    got = cert["verdict"].get<std::string>();
    out["certificate"] = cert;
  } catch (const Error& err) {
    if (!is_validation_error(err.kind())) throw;
    got = to_string(err.kind());
    out["error"] = Json::object({{"kind", got}, {"message", err.what()}});
  }
  out["result"] = got;
  if (!e.expected.empty()) out["matches_expected"] = got == e.expected;
  emit(r, out);
  return e.expected.empty() || got == e.expected ? kOk : kInternal;
}

void add_group_options(CLI::App* c, Request& r) {
  auto* in = c->add_option("--input", r.input, "group JSON file");
  c->add_option("--catalog", r.catalog, "catalog entry or family name")->excludes(in);
  c->add_option("--param", r.params, "family parameter key=value (repeatable)");
}

void add_common_options(CLI::App* c, Request& r) {
  c->add_option("--output", r.output, "write JSON here instead of standard output");
  c->add_option("--budget-ms", r.budget_ms, "search budget in milliseconds")->check(CLI::PositiveNumber);
  c->add_option("--closure-cap", r.closure_cap, "largest group the closure may build")->check(CLI::PositiveNumber);
  c->add_option("--max-subgroup-gens", r.max_subgroup_gens, "generator cap for the subgroup search")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linearizability certificates for finite group actions on quadrics"};
  app.require_subcommand(1);
  Request r;
  std::string cert_path, entry_name;

  auto* analyze_cmd = app.add_subcommand("analyze", "run the criteria and print a certificate");
  auto* chartab_cmd = app.add_subcommand("chartab", "print the character table");
  auto* witt_cmd = app.add_subcommand("witt", "print the equivariant Witt decomposition");
  auto* scan_cmd = app.add_subcommand("scan", "check the subgroup hypotheses for a subgroup of W(D5)");
  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate against a group");
  verify_cmd->add_option("--certificate", cert_path, "certificate JSON file")->required();
  for (auto* c : {analyze_cmd, chartab_cmd, witt_cmd, scan_cmd, verify_cmd}) {
    add_group_options(c, r);
    add_common_options(c, r);
  }

  auto* catalog_cmd = app.add_subcommand("catalog", "list, show or run catalog entries");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list the fixed entries and the families");
  auto* show_cmd = catalog_cmd->add_subcommand("show", "print an entry as group JSON");
  auto* run_cmd = catalog_cmd->add_subcommand("run", "analyze an entry and compare with its expected verdict");
  for (auto* c : {show_cmd, run_cmd}) {
    c->add_option("name", entry_name, "entry or family name")->required();
    c->add_option("--param", r.params, "family parameter key=value (repeatable)");
  }
  for (auto* c : {list_cmd, show_cmd, run_cmd}) add_common_options(c, r);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(r);
    if (*chartab_cmd) return cmd_chartab(r);
    if (*witt_cmd) return cmd_witt(r);
    if (*scan_cmd) return cmd_scan(r);
    if (*verify_cmd) return cmd_verify(r, cert_path);
    if (*list_cmd) return cmd_catalog_list(r);
    if (*show_cmd) return cmd_catalog_show(r, entry_name);
    if (*run_cmd) return cmd_catalog_run(r, entry_name);
  } catch (const Error& e) {
    Json err = Json::object({{"error", to_string(e.kind())}, {"message", e.what()}});
    std::cerr << err.dump() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << Json::object({{"error", "Internal"}, {"message", e.what()}}).dump() << "\n";
    return kInternal;
  }
  return kInternal;
}
