#include "pcurv/pcurv.h"

#include <cstdlib>
#include <cstring>

#include "pcurv/dispatch.hpp"
#include "pcurv/parser.hpp"

struct pcurv_op {
  pcurv::QOp op;
};

namespace {

thread_local std::string g_last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

struct Failure {
  pcurv_status status;
  pcurv::Json error;
};

// Runs f, translating exceptions into a status and an error object.
template <class F>
Failure guarded(F&& f) {
  using namespace pcurv;
  Failure out{PCURV_OK, nullptr};
  try {
    f();
    g_last_error.clear();
    return out;
  } catch (const ParseError& e) {
    out = {PCURV_ERR_PARSE,
           Json{{"kind", parse_error_kind_name(e.kind())}, {"message", e.what()}, {"position", e.position()}}};
  } catch (const MathError& e) {
    out = {PCURV_ERR_MATH, Json{{"kind", error_kind_name(e.kind())}, {"message", e.what()}}};
  } catch (const ArgError& e) {
    out = {PCURV_ERR_ARG, Json{{"kind", "ArgError"}, {"message", e.what()}}};
  } catch (const std::exception& e) {
    out = {PCURV_ERR_INTERNAL, Json{{"kind", "Internal"}, {"message", e.what()}}};
  }
  g_last_error = out.error.dump();
  return out;
}

}  // namespace

extern "C" {

const char* pcurv_version(void) { return "1.0.0"; }

const char* pcurv_last_error(void) { return g_last_error.c_str(); }

void pcurv_string_free(char* s) { std::free(s); }

pcurv_status pcurv_op_parse(const char* text, pcurv_op** out) {
  if (!text || !out) return PCURV_ERR_ARG;
  *out = nullptr;
  return guarded([&] { *out = new pcurv_op{pcurv::parse_operator(text)}; }).status;
}

void pcurv_op_free(pcurv_op* op) { delete op; }

int pcurv_op_order(const pcurv_op* op) { return op ? op->op.order() : -1; }

char* pcurv_op_to_string(const pcurv_op* op) { return op ? dup(op->op.str()) : nullptr; }

pcurv_status pcurv_op_mul(const pcurv_op* a, const pcurv_op* b, pcurv_op** out) {
  if (!a || !b || !out) return PCURV_ERR_ARG;
  *out = nullptr;
  return guarded([&] { *out = new pcurv_op{a->op * b->op}; }).status;
}

pcurv_status pcurv_op_divmod(const pcurv_op* a, const pcurv_op* b, pcurv_op** q, pcurv_op** r) {
  if (!a || !b || !q || !r) return PCURV_ERR_ARG;
  *q = *r = nullptr;
  return guarded([&] {
           auto dm = pcurv::right_divmod(a->op, b->op);
           *q = new pcurv_op{dm.quotient};
           *r = new pcurv_op{dm.remainder};
         })
      .status;
}

pcurv_status pcurv_run(const char* command, const char* args_json, char** text_out, char** json_out) {
  using pcurv::Json;
  if (text_out) *text_out = nullptr;
  if (json_out) *json_out = nullptr;
  if (!command) return PCURV_ERR_ARG;
  Json args = Json::object();
  pcurv::Report rep;
  Failure f = guarded([&] {
    if (args_json && *args_json) {
      args = Json::parse(args_json, nullptr, false);
      if (args.is_discarded() || !args.is_object()) {
        args = Json::object();
        throw pcurv::ArgError("arguments must be a JSON object");
      }
    }
    rep = pcurv::run_command(command, args);
  });
  if (f.status == PCURV_OK) {
    if (text_out) *text_out = dup(rep.text);
    if (json_out) *json_out = dup(rep.json.dump(2));
  } else {
    Json out;
    out["command"] = command;
    out["args"] = args;
    out["status"] = "error";
    out["error"] = f.error;
    if (json_out) *json_out = dup(out.dump(2));
  }
  return f.status;
}

const char* const* pcurv_commands(void) { return pcurv::command_names(); }

}  // extern "C"
