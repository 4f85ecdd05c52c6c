#pragma once

#include <string>

#include "json.hpp"

namespace pcurv {

using Json = nlohmann::ordered_json;

// Invalid or missing command arguments.
class ArgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string text;  // human-readable
  Json json;         // machine-readable, fixed field order
};

// Runs one subcommand; throws ParseError, MathError or ArgError.
Report run_command(const std::string& command, const Json& args);

const char* const* command_names();

}  // namespace pcurv
