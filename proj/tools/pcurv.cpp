#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcurv/pcurv.h"

namespace {

struct Flag {
  const char* name;
  const char* help;
};

struct Command {
  const char* name;
  const char* help;
  std::vector<Flag> flags;
};

const Flag kSeriesSource[] = {
    {"op", "operator whose power-series solution is used"},
    {"init", "initial values c_0,...,c_{r-1} (default 1 for order 1)"},
    {"upper", "hypergeometric upper parameters, comma separated"},
    {"lower", "hypergeometric lower parameters, comma separated"},
    {"scale", "argument scale: series in scale*x"},
};

std::vector<Flag> with_source(std::vector<Flag> extra) {
  std::vector<Flag> out(std::begin(kSeriesSource), std::end(kSeriesSource));
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

std::vector<Command> commands() {
  return {
      {"divide", "right Euclidean division num = q*den + r", {{"num", "dividend operator"}, {"den", "divisor operator"}, {"prime", "reduce mod this prime first"}}},
      {"pcurvature", "p-curvature matrix and its characteristic polynomial",
       {{"op", "operator"}, {"prime", "prime p"}, {"method", "recurrence | remainders | local-series-crt | closed-form"},
        {"points", "sample points for local-series-crt, comma separated"}}},
      {"cartier", "Cartier test with witness", {{"op", "operator"}, {"prime", "prime p"}}},
      {"scan", "p-curvature status over a prime range",
       {{"op", "operator"}, {"pmin", "smallest prime (inclusive)"}, {"pmax", "largest prime (inclusive)"}, {"workers", "worker threads (0 = auto)"}}},
      {"order1", "algebraicity of solutions of y' = a y", {{"a", "rational function a(x)"}, {"prime", "also decide in characteristic p"}}},
      {"hypergeom", "interlacing classification of a hypergeometric function",
       {{"upper", "upper parameters"}, {"lower", "lower parameters"}, {"terms", "also print this many series terms"}, {"scale", "argument scale"}}},
      {"eisenstein", "Eisenstein denominator test on a series prefix",
       with_source({{"terms", "number of coefficients"}, {"bound", "largest accepted N"}})},
      {"integrality", "p-integrality of a series solution",
       {{"op", "operator"}, {"init", "initial values"}, {"prime", "prime p"}, {"terms", "number of coefficients"}}},
      {"locallogs", "indicial analysis and logarithm detection at 0", {{"op", "operator"}}},
      {"series", "power-series solution, hypergeometric series or algebraic root",
       with_source({{"terms", "number of coefficients"}, {"prime", "work mod p"}, {"algebraic", "P(x,y) for a Hensel root mod p"}, {"y0", "constant term of the root"}})},
      {"diagonal", "diagonal of a rational function in 2 or 3 variables",
       {{"f", "rational function in x, y, z"}, {"vars", "number of variables"}, {"terms", "number of coefficients"}}},
      {"kronecker", "primes where X^p = X mod (P, p)", {{"poly", "polynomial in x"}, {"pmin", "smallest prime"}, {"pmax", "largest prime"}}},
      {"relation", "check P(x, s(x)) = 0 to a truncation order",
       with_source({{"coeffs", "explicit series coefficients"}, {"poly", "P(x,y)"}, {"terms", "truncation order"}, {"prime", "check mod p"}})},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-curvature and algebraicity toolkit", "pcurv"};
  app.set_version_flag("--version", std::string(pcurv_version()));
  app.require_subcommand(1);
  std::string json_path;
  bool timing = false;
  app.add_option("--json", json_path, "write the machine-readable report to PATH")->option_text("PATH");
  app.add_flag("--time", timing, "print elapsed time to stderr");

  auto cmds = commands();
  std::map<std::string, std::map<std::string, std::string>> values;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    for (const auto& f : c.flags) sub->add_option(std::string("--") + f.name, values[c.name][f.name], f.help);
  }

  if (argc > 1 && argv[1][0] != '-') {
    bool known = false;
    for (const auto& c : cmds) known = known || c.name == std::string(argv[1]);
    if (!known) {
      std::cerr << "error: UnknownCommand: '" << argv[1] << "'\n" << app.help();
      return 2;
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::string name = sub->get_name();
  nlohmann::ordered_json args = nlohmann::ordered_json::object();
  for (const auto& c : cmds) {
    if (name != c.name) continue;
    for (const auto& f : c.flags)
      if (sub->count(std::string("--") + f.name) > 0) args[f.name] = values[name][f.name];
  }

  char* text = nullptr;
  char* json = nullptr;
  auto t0 = std::chrono::steady_clock::now();
  pcurv_status st = pcurv_run(name.c_str(), args.dump().c_str(), &text, &json);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (st == PCURV_OK) {
    std::fputs(text, stdout);
  } else {
    auto err = nlohmann::json::parse(json)["error"];
    std::cerr << "error: " << err["kind"].get<std::string>() << ": " << err["message"].get<std::string>();
    if (err.contains("position")) std::cerr << " (at offset " << err["position"] << ")";
    std::cerr << "\n";
    if (st == PCURV_ERR_ARG) std::cerr << sub->help();
  }
  if (!json_path.empty() && json) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
    } else {
      out << json << "\n";
    }
  }
  if (timing) std::fprintf(stderr, "elapsed: %.3f s\n", secs);
  pcurv_string_free(text);
  pcurv_string_free(json);

  switch (st) {
    case PCURV_OK: return 0;
    case PCURV_ERR_PARSE: return 2;
    case PCURV_ERR_ARG: return 2;
    case PCURV_ERR_MATH: return 3;
    default: return 1;
  }
}
