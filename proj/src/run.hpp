#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace enlab {

// Exit/status codes shared by the C API and the CLI.
inline constexpr int kStatusOk = 0;
inline constexpr int kStatusCheckFailed = 1;
inline constexpr int kStatusInvalidInput = 2;
inline constexpr int kStatusInternal = 3;

struct RunOutcome {
  int status = kStatusOk;
  std::string text;              // human-readable report
  nlohmann::ordered_json json;   // machine-readable report
};

// Executes one toolkit request. The request is a JSON object:
//   command: homology | cohomology | trees | homset | verify
//   n, max_degree, degree, field {kind[,p]}, builtin "name[:param]",
//   algebra (file path), module ("trivial" | "A" | file path),
//   tree / source / target (tree literals), suite (for verify),
//   seed, count_only, format.
// Never throws; errors are reported through status and the report body.
RunOutcome run_request(const nlohmann::json& request);
RunOutcome run_request_text(const std::string& request_json);

}  // namespace enlab
