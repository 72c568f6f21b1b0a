#include "run.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "verify.hpp"

namespace enlab {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Field field_from_request(const json& req) {
  if (!req.contains("field")) return Field::rationals();
  const auto& f = req["field"];
  if (f.is_string()) return Field::parse(f.get<std::string>());
  if (!f.is_object() || !f.contains("kind"))
    throw ValidationError("field spec must be {\"kind\":\"rational\"} or {\"kind\":\"prime\",\"p\":P}");
  std::string kind = f["kind"].get<std::string>();
  if (kind == "rational") return Field::rationals();
  if (kind == "prime") {
    if (!f.contains("p")) throw ValidationError("prime field spec needs \"p\"");
    return Field::prime(f["p"].get<std::uint64_t>());
  }
  throw ValidationError("unknown field kind '" + kind + "'");
}

ordered_json field_to_json(const Field& f) {
  ordered_json out;
  if (f.kind() == Field::Kind::Rational) {
    out["kind"] = "rational";
  } else {
    out["kind"] = "prime";
    out["p"] = f.characteristic();
  }
  return out;
}

int int_arg(const json& req, const std::string& key, int fallback, int lo, int hi) {
  if (!req.contains(key)) {
    if (fallback < lo) throw ValidationError("missing required parameter \"" + key + "\"");
    return fallback;
  }
  int v;
  try {
    v = req[key].get<int>();
  } catch (const json::exception&) {
    throw ValidationError("parameter \"" + key + "\" must be an integer");
  }
  if (v < lo || v > hi)
    throw ValidationError("parameter \"" + key + "\" out of range [" + std::to_string(lo) + "," +
                          std::to_string(hi) + "]");
  return v;
}

Tree checked_tree(const Tree& t) {
  if (degree(t) > 64)
    throw ValidationError("tree literal too large (" + std::to_string(degree(t)) +
                          " edges; the tool is meant for desk-scale trees)");
  return t;
}

Tree tree_literal(const json& v) {
  if (v.is_object()) return checked_tree(tree_from_json(v));
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (!s.empty() && s[0] == '{') {
      json parsed;
      try {
        parsed = json::parse(s);
      } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed tree literal: ") + e.what());
      }
      return checked_tree(tree_from_json(parsed));
    }
    if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'c')) {
      int k = 0;
      try {
        k = std::stoi(s.substr(1));
      } catch (const std::exception&) {
        throw ValidationError("bad corolla literal '" + s + "'");
      }
      if (k < 1) throw ValidationError("corolla needs at least one leaf");
      return checked_tree(corolla(k));
    }
    if (s.size() >= 2 && (s[0] == 'L' || s[0] == 'l')) {
      int k = 0;
      try {
        k = std::stoi(s.substr(1));
      } catch (const std::exception&) {
        throw ValidationError("bad linear-tree literal '" + s + "'");
      }
      if (k < 1) throw ValidationError("linear tree needs at least one level");
      return checked_tree(linear_tree(k));
    }
    throw ValidationError("tree literal must be JSON, C<leaves> or L<levels>");
  }
  throw ValidationError("tree literal must be a JSON object or string");
}

// Module resolution: "A" = the algebra acting on itself, "trivial" = the
// one-dimensional zero-action module (or the module embedded in the algebra
// file, if any), anything else = a module file path.
std::pair<AlgebraData, BimoduleData> algebra_from_request(const json& req, const Field& field) {
  std::string module = req.value("module", "trivial");
  AlgebraData A;
  BimoduleData M;
  if (req.contains("builtin")) {
    std::string base = module == "A" ? "A" : "trivial";
    std::tie(A, M) = builtin_algebra(req["builtin"].get<std::string>(), base, field);
  } else if (req.contains("algebra")) {
    std::string path = req["algebra"].get<std::string>();
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open algebra file " + path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ValidationError(std::string("malformed algebra file: ") + e.what());
    }
    if (j.contains("field")) {
      // the file's field, when present, must agree with the requested one
      Field file_field = j["field"].is_string() ? Field::parse(j["field"].get<std::string>())
                                                : field_from_request(j);
      if (file_field != field)
        throw ValidationError("algebra file declares field " + file_field.name() +
                              " but the request uses " + field.name());
    }
    std::tie(A, M) = algebra_from_json(j, field);
    if (module == "A") M = regular_module(A);
  } else {
    throw ValidationError("specify --builtin NAME[:PARAM] or --algebra FILE");
  }
  if (module != "A" && module != "trivial") {
    std::ifstream in(module);
    if (!in) throw ValidationError("cannot open module file " + module);
    json jm;
    try {
      in >> jm;
    } catch (const json::exception& e) {
      throw ValidationError(std::string("malformed module file: ") + e.what());
    }
    M = module_from_json(jm, A);
    auto diags = validate(A, M);
    if (!diags.empty()) throw ValidationError("module fails validation: " + diags.front());
  }
  return {A, M};
}

std::string betti_text(const std::vector<int>& betti) {
  std::ostringstream deg, val;
  deg << "degree:";
  val << "betti :";
  for (size_t m = 0; m < betti.size(); ++m) {
    size_t w = std::max(std::to_string(m).size(), std::to_string(betti[m]).size()) + 1;
    deg << std::setw(static_cast<int>(w)) << m;
    val << std::setw(static_cast<int>(w)) << betti[m];
  }
  return deg.str() + "\n" + val.str() + "\n";
}

ordered_json betti_json(int n, const Field& field, int D, const std::vector<int>& betti) {
  ordered_json out;
  out["n"] = n;
  out["field"] = field_to_json(field);
  out["maxDegree"] = D;
  ordered_json b;
  for (size_t m = 0; m < betti.size(); ++m) b[std::to_string(m)] = betti[m];
  out["betti"] = b;
  return out;
}

RunOutcome cmd_homology(const json& req, bool cohomology) {
  Field field = field_from_request(req);
  int n = int_arg(req, "n", -1, 1, 6);
  int D = int_arg(req, "max_degree", -1, 1, 16);
  auto [A, M] = algebra_from_request(req, field);
  auto diags = validate(A, M);
  if (!diags.empty()) throw ValidationError("algebra fails validation: " + diags.front());
  std::vector<int> betti;
  if (cohomology)
    betti = homology_table(build_cochain(dual_loday(A, M), n, D));
  else
    betti = homology_table(build_chain(loday(A, M), n, D));
  RunOutcome out;
  out.json = betti_json(n, field, D, betti);
  out.json["command"] = cohomology ? "cohomology" : "homology";
  std::ostringstream text;
  text << "E_" << n << (cohomology ? "-cohomology" : "-homology") << " over " << field.name()
       << ", degrees 0.." << D - 1 << "\n"
       << betti_text(betti);
  out.text = text.str();
  return out;
}

RunOutcome cmd_trees(const json& req) {
  int n = int_arg(req, "n", -1, 1, 8);
  int degree = int_arg(req, "degree", -1, 0, 24);
  bool count_only = req.value("count_only", false);
  auto trees = enumerate_by_degree(n, degree);
  RunOutcome out;
  out.json["command"] = "trees";
  out.json["n"] = n;
  out.json["degree"] = degree;
  out.json["count"] = trees.size();
  std::ostringstream text;
  if (count_only) {
    text << trees.size() << "\n";
  } else {
    ordered_json list = ordered_json::array();
    for (const auto& t : trees) {
      list.push_back(ordered_json(tree_to_json(t)));
      text << tree_to_string(t) << "\n";
    }
    out.json["trees"] = list;
  }
  out.text = text.str();
  return out;
}

RunOutcome cmd_homset(const json& req) {
  if (!req.contains("source") || !req.contains("target"))
    throw ValidationError("homset needs --source and --target tree literals");
  Tree src = tree_literal(req["source"]);
  Tree tgt = tree_literal(req["target"]);
  if (req.contains("n")) {
    int n = int_arg(req, "n", -1, 1, 8);
    if (src.n != n || tgt.n != n)
      throw ValidationError("tree literals do not match --n " + std::to_string(n));
  }
  bool count_only = req.value("count_only", false);
  auto hom = enumerate_hom(src, tgt);
  RunOutcome out;
  out.json["command"] = "homset";
  out.json["source"] = tree_to_json(src);
  out.json["target"] = tree_to_json(tgt);
  out.json["count"] = hom.size();
  std::ostringstream text;
  if (count_only) {
    text << hom.size() << "\n";
  } else {
    ordered_json list = ordered_json::array();
    for (const auto& h : hom) {
      list.push_back(ordered_json(morphism_to_json(h)));
      text << morphism_to_string(h) << "\n";
    }
    out.json["morphisms"] = list;
  }
  out.text = text.str();
  return out;
}

RunOutcome suite_outcome(const SuiteReport& rep) {
  RunOutcome out;
  out.json["command"] = "verify";
  out.json["suite"] = rep.suite;
  ordered_json checks = ordered_json::array();
  std::ostringstream text;
  for (const auto& line : rep.lines) {
    ordered_json c;
    c["name"] = line.name;
    c["pass"] = line.pass;
    if (!line.details.empty()) c["details"] = line.details;
    checks.push_back(c);
    text << (line.pass ? "[PASS] " : "[FAIL] ") << line.name;
    if (!line.details.empty()) text << " — " << line.details;
    text << "\n";
  }
  out.json["checks"] = checks;
  out.json["pass"] = rep.pass;
  text << (rep.pass ? "all checks passed" : "some checks FAILED") << "\n";
  out.text = text.str();
  out.status = rep.pass ? kStatusOk : kStatusCheckFailed;
  return out;
}

RunOutcome cmd_verify(const json& req) {
  if (!req.contains("suite")) throw ValidationError("verify needs a suite name");
  std::string suite = req["suite"].get<std::string>();
  Field field = field_from_request(req);
  if (suite == "d2") {
    int n = int_arg(req, "n", -1, 1, 6);
    int D = int_arg(req, "max_degree", -1, 1, 16);
    auto [A, M] = algebra_from_request(req, field);
    return suite_outcome(verify_d2(loday(A, M), n, D));
  }
  if (suite == "multicomplex") {
    int D = int_arg(req, "max_degree", -1, 1, 16);
    if (req.contains("tree")) {
      Tree t = tree_literal(req["tree"]);
      return suite_outcome(verify_multicomplex(representable(t, field), t.n, D,
                                               "representable(" + tree_to_string(t) + ")"));
    }
    int n = int_arg(req, "n", -1, 1, 6);
    auto [A, M] = algebra_from_request(req, field);
    return suite_outcome(verify_multicomplex(loday(A, M), n, D, "loday"));
  }
  if (suite == "oracle") {
    int n = int_arg(req, "n", -1, 1, 2);
    int D = int_arg(req, "max_degree", -1, 1, 10);
    auto [A, M] = algebra_from_request(req, field);
    return suite_outcome(verify_oracle(A, M, n, D));
  }
  if (suite == "hochschild") {
    int D = int_arg(req, "max_degree", -1, 1, 12);
    auto [A, M] = algebra_from_request(req, field);
    return suite_outcome(verify_hochschild(A, M, D));
  }
  if (suite == "projective") {
    int D = int_arg(req, "max_degree", 4, 1, 10);
    if (req.contains("tree")) {
      Tree t = tree_literal(req["tree"]);
      return suite_outcome(verify_projective(t, D, field));
    }
    int n = int_arg(req, "n", 2, 1, 3);
    return suite_outcome(verify_projective_all(n, 2, D, field));
  }
  if (suite == "bstar") {
    int n = int_arg(req, "n", -1, 1, 4);
    int D = int_arg(req, "max_degree", -1, 1, 12);
    return suite_outcome(verify_bstar(n, D, field));
  }
  if (suite == "duality") {
    int n = int_arg(req, "n", -1, 1, 2);
    int D = int_arg(req, "max_degree", -1, 1, 10);
    auto [A, M] = algebra_from_request(req, field);
    return suite_outcome(verify_duality(A, M, n, D));
  }
  if (suite == "category") {
    std::uint64_t seed = req.value("seed", 20240811ull);
    return suite_outcome(verify_category(seed, 1000, 1000, 500, field));
  }
  throw ValidationError("unknown verify suite '" + suite + "'");
}

}  // namespace

RunOutcome run_request(const nlohmann::json& request) {
  RunOutcome out;
  try {
    if (!request.is_object() || !request.contains("command"))
      throw ValidationError("request must be a JSON object with a \"command\"");
    std::string cmd = request["command"].get<std::string>();
    if (cmd == "homology") return cmd_homology(request, false);
    if (cmd == "cohomology") return cmd_homology(request, true);
    if (cmd == "trees") return cmd_trees(request);
    if (cmd == "homset") return cmd_homset(request);
    if (cmd == "verify") return cmd_verify(request);
    throw ValidationError("unknown command '" + cmd + "'");
  } catch (const NotAComplexError& e) {
    out.status = kStatusInternal;
    out.json["error"] = e.what();
    out.json["kind"] = "not_a_complex";
    out.text = std::string("error: ") + e.what() + "\n";
  } catch (const ValidationError& e) {
    out.status = kStatusInvalidInput;
    out.json["error"] = e.what();
    out.json["kind"] = "invalid_input";
    out.text = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    out.status = kStatusInternal;
    out.json["error"] = e.what();
    out.json["kind"] = "internal";
    out.text = std::string("error: ") + e.what() + "\n";
  }
  return out;
}

RunOutcome run_request_text(const std::string& request_json) {
  nlohmann::json req;
  try {
    req = nlohmann::json::parse(request_json);
  } catch (const nlohmann::json::exception& e) {
    RunOutcome out;
    out.status = kStatusInvalidInput;
    out.json["error"] = std::string("malformed request: ") + e.what();
    out.json["kind"] = "invalid_input";
    out.text = "error: malformed request\n";
    return out;
  }
  return run_request(req);
}

}  // namespace enlab
