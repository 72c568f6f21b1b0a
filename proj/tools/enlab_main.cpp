// enlab command line front end. Parses flags, assembles a JSON request and
// drives the shared library through its C API.
#include <cstdio>
#include <cstdint>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "enlab.h"

namespace {

using nlohmann::json;

struct CommonOpts {
  int n = 0;
  int max_degree = 0;
  int degree = -1;
  std::string field = "Q";
  std::string builtin;
  std::string algebra;
  std::string module = "trivial";
  std::string tree;
  std::string source;
  std::string target;
  std::string format = "table";
  std::uint64_t seed = 20240811ull;
  bool count_only = false;
  bool cohomology = false;
};

void add_field_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--field", o.field, "Coefficient field: Q or F:p")->capture_default_str();
  cmd->add_option("--format", o.format, "Output format: table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
}

void add_algebra_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--builtin", o.builtin, "Builtin algebra NAME[:PARAM] (square_zero, trunc_poly)");
  cmd->add_option("--algebra", o.algebra, "Algebra file (JSON)");
  cmd->add_option("--module", o.module, "Coefficient module: trivial, A, or a module file")
      ->capture_default_str();
}

json field_json(const std::string& spec) {
  if (spec == "Q" || spec == "q") return json{{"kind", "rational"}};
  if (spec.size() > 2 && (spec[0] == 'F' || spec[0] == 'f') && spec[1] == ':')
    return json{{"kind", "prime"}, {"p", std::stoull(spec.substr(2))}};
  // let the library report the error uniformly
  return json(spec);
}

int dispatch(const json& request, const std::string& format) {
  enlab_result* result = nullptr;
  int status = enlab_run(request.dump().c_str(), &result);
  if (result == nullptr) {
    std::fprintf(stderr, "error: %s\n", enlab_last_error());
    return ENLAB_INVALID_INPUT;
  }
  if (format == "json")
    std::printf("%s\n", enlab_result_json(result));
  else
    std::fputs(enlab_result_text(result), stdout);
  enlab_result_free(result);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"enlab — E_n-homology of commutative algebras over the tree category"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(enlab_version()));

  CommonOpts o;

  auto* homology = app.add_subcommand("homology", "Betti table of E_n-homology");
  homology->add_option("--n", o.n, "Number of levels n")->required();
  homology->add_option("--max-degree", o.max_degree, "Assemble the complex up to this degree")
      ->required();
  homology->add_flag("--cohomology", o.cohomology, "Compute cohomology of the dual system");
  add_algebra_flags(homology, o);
  add_field_flags(homology, o);

  auto* cohomology = app.add_subcommand("cohomology", "Betti table of E_n-cohomology");
  cohomology->add_option("--n", o.n)->required();
  cohomology->add_option("--max-degree", o.max_degree)->required();
  add_algebra_flags(cohomology, o);
  add_field_flags(cohomology, o);

  auto* trees = app.add_subcommand("trees", "Enumerate trees of a homological degree");
  trees->add_option("--n", o.n)->required();
  trees->add_option("--degree", o.degree, "Homological degree")->required();
  trees->add_flag("--count-only", o.count_only, "Print only the count");
  add_field_flags(trees, o);

  auto* homset = app.add_subcommand("homset", "Enumerate morphisms between two trees");
  homset->add_option("--source", o.source, "Source tree (JSON, C<leaves> or L<levels>)")
      ->required();
  homset->add_option("--target", o.target, "Target tree")->required();
  homset->add_option("--n", o.n, "Expected level count (checked)");
  homset->add_flag("--count-only", o.count_only, "Print only the count");
  add_field_flags(homset, o);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  verify
      ->add_option("suite", suite,
                   "d2 | multicomplex | oracle | hochschild | projective | bstar | duality | "
                   "category")
      ->required();
  verify->add_option("--n", o.n);
  verify->add_option("--max-degree", o.max_degree);
  verify->add_option("--tree", o.tree, "Tree literal (JSON)");
  verify->add_option("--seed", o.seed, "Seed for the randomized suites")->capture_default_str();
  add_algebra_flags(verify, o);
  add_field_flags(verify, o);

  CLI11_PARSE(app, argc, argv);

  json req;
  req["field"] = field_json(o.field);
  if (!o.builtin.empty()) req["builtin"] = o.builtin;
  if (!o.algebra.empty()) req["algebra"] = o.algebra;
  req["module"] = o.module;

  if (homology->parsed() || cohomology->parsed()) {
    req["command"] = (cohomology->parsed() || o.cohomology) ? "cohomology" : "homology";
    req["n"] = o.n;
    req["max_degree"] = o.max_degree;
  } else if (trees->parsed()) {
    req["command"] = "trees";
    req["n"] = o.n;
    req["degree"] = o.degree;
    req["count_only"] = o.count_only;
  } else if (homset->parsed()) {
    req["command"] = "homset";
    req["source"] = o.source;
    req["target"] = o.target;
    if (homset->count("--n") > 0) req["n"] = o.n;
    req["count_only"] = o.count_only;
  } else if (verify->parsed()) {
    req["command"] = "verify";
    req["suite"] = suite;
    if (verify->count("--n") > 0) req["n"] = o.n;
    if (verify->count("--max-degree") > 0) req["max_degree"] = o.max_degree;
    if (!o.tree.empty()) req["tree"] = o.tree;
    req["seed"] = o.seed;
  }

  return dispatch(req, o.format);
}
