#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "enlab.h"

namespace {

struct Result {
  int status;
  nlohmann::json json;
  std::string text;
  std::string raw;
};

Result run(const std::string& request) {
  enlab_result* r = nullptr;
  int status = enlab_run(request.c_str(), &r);
  REQUIRE(r != nullptr);
  Result out{status, nlohmann::json::parse(enlab_result_json(r)), enlab_result_text(r),
             enlab_result_json(r)};
  CHECK(enlab_result_status(r) == status);
  enlab_result_free(r);
  return out;
}

}  // namespace

TEST_CASE("homology through the C API") {
  Result r = run(R"({"command":"homology","n":1,"max_degree":4,
                     "builtin":"square_zero:1","module":"trivial",
                     "field":{"kind":"rational"}})");
  CHECK(r.status == ENLAB_OK);
  CHECK(r.json["betti"]["0"] == 1);
  CHECK(r.json["betti"]["3"] == 1);
  CHECK(r.json["maxDegree"] == 4);
  CHECK(r.json["field"]["kind"] == "rational");
  // identical request, byte-identical report
  Result again = run(R"({"command":"homology","n":1,"max_degree":4,
                     "builtin":"square_zero:1","module":"trivial",
                     "field":{"kind":"rational"}})");
  CHECK(again.raw == r.raw);
}

TEST_CASE("trees and homset counts") {
  Result t = run(R"({"command":"trees","n":2,"degree":3,"count_only":true})");
  CHECK(t.status == ENLAB_OK);
  CHECK(t.json["count"] == 3);
  CHECK(t.text == "3\n");
  Result h = run(R"({"command":"homset","source":"C2","target":"C1","count_only":true})");
  CHECK(h.status == ENLAB_OK);
  CHECK(h.json["count"] == 3);
}

TEST_CASE("verify suite through the C API") {
  Result r = run(R"({"command":"verify","suite":"projective",
                     "tree":{"r":[1,2],"maps":[[0,0,1]]},"max_degree":4,
                     "field":{"kind":"prime","p":2}})");
  CHECK(r.status == ENLAB_OK);
  CHECK(r.json["pass"] == true);
  CHECK(r.json["checks"].size() == 1);
}

TEST_CASE("algebra files end to end") {
  const char* path = "enlab_test_algebra.json";
  {
    std::ofstream out(path);
    // x·k[x]/(x^3) with the regular module spelled out by hand
    out << R"({"field":"Q","basis":["x","x2"],
               "mul":[[0,0,1,"1"]],
               "module":{"basis":["x","x2"],"action":[[0,0,1,"1"]]}})";
  }
  Result r = run(std::string(R"({"command":"homology","n":1,"max_degree":4,"algebra":")") + path +
                 R"(","field":{"kind":"rational"}})");
  CHECK(r.status == ENLAB_OK);
  CHECK(r.json["betti"]["0"] == 2);
  CHECK(r.json["betti"]["3"] == 2);
  // a declared field that disagrees with the request is rejected
  Result clash = run(std::string(R"({"command":"homology","n":1,"max_degree":4,"algebra":")") +
                     path + R"(","field":{"kind":"prime","p":5}})");
  CHECK(clash.status == ENLAB_INVALID_INPUT);
  std::remove(path);
}

TEST_CASE("seeded suites are byte-deterministic") {
  const std::string req =
      R"({"command":"verify","suite":"category","seed":99,"field":{"kind":"rational"}})";
  Result a = run(req);
  Result b = run(req);
  CHECK(a.status == ENLAB_OK);
  CHECK(a.raw == b.raw);
}

TEST_CASE("error paths and status codes") {
  Result bad = run(R"({"command":"homology","n":0,"max_degree":4,"builtin":"square_zero"})");
  CHECK(bad.status == ENLAB_INVALID_INPUT);
  CHECK(bad.json.contains("error"));
  CHECK(std::string(enlab_last_error()).size() > 0);
  Result unknown = run(R"({"command":"walk"})");
  CHECK(unknown.status == ENLAB_INVALID_INPUT);
  Result suite = run(R"({"command":"verify","suite":"vibes"})");
  CHECK(suite.status == ENLAB_INVALID_INPUT);
  Result garbage = run("not json");
  CHECK(garbage.status == ENLAB_INVALID_INPUT);
  enlab_result* r = nullptr;
  CHECK(enlab_run(nullptr, &r) == ENLAB_INVALID_INPUT);
  CHECK(r == nullptr);
  CHECK(enlab_run("{}", nullptr) == ENLAB_INVALID_INPUT);
  CHECK(std::string(enlab_version()) == "0.1.0");
}
