#include "enlab.h"

#include <string>

#include "run.hpp"

struct enlab_result {
  int status = ENLAB_OK;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

}  // namespace

extern "C" {

int enlab_run(const char* request_json, enlab_result** out_result) {
  if (out_result == nullptr) return ENLAB_INVALID_INPUT;
  *out_result = nullptr;
  if (request_json == nullptr) {
    g_last_error = "request_json is NULL";
    return ENLAB_INVALID_INPUT;
  }
  auto* res = new enlab_result;
  try {
    enlab::RunOutcome outcome = enlab::run_request_text(request_json);
    res->status = outcome.status;
    res->json = outcome.json.dump();
    res->text = outcome.text;
    if (outcome.status != enlab::kStatusOk && outcome.json.contains("error"))
      g_last_error = outcome.json["error"].get<std::string>();
    else
      g_last_error.clear();
  } catch (const std::exception& e) {
    // run_request is designed not to throw; this is a last-resort barrier
    res->status = ENLAB_INTERNAL;
    res->json = std::string("{\"error\":\"internal error\"}");
    res->text = std::string("error: ") + e.what() + "\n";
    g_last_error = e.what();
  }
  *out_result = res;
  return res->status;
}

int enlab_result_status(const enlab_result* result) {
  return result ? result->status : ENLAB_INVALID_INPUT;
}

const char* enlab_result_json(const enlab_result* result) {
  return result ? result->json.c_str() : "";
}

const char* enlab_result_text(const enlab_result* result) {
  return result ? result->text.c_str() : "";
}

void enlab_result_free(enlab_result* result) { delete result; }

const char* enlab_last_error(void) { return g_last_error.c_str(); }

const char* enlab_version(void) { return "0.1.0"; }

}  // extern "C"
