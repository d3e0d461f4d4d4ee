#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"
#include "nashcar/nashcar.h"

namespace {

bool read_input(const std::string& path, std::string& out) {
  if (path.empty() || path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cA/r singularities: Nash valuations, essential divisors and Q-factoriality", "nashcar"};
  app.require_subcommand(1);

  std::string format = "table";
  bool oracle = false, strict = false;
  int64_t trunc = 0, max_k = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--oracle", oracle, "Cross-check the closed-form catalog against the explicit resolution");
  app.add_flag("--strict", strict, "Exit with status 3 when a verdict is unknown");
  app.add_option("--trunc", trunc, "Override the truncation bound of the input")->check(CLI::PositiveNumber);
  app.add_option("--max-k", max_k, "Length of the m_k table")->check(CLI::PositiveNumber);

  const struct {
    const char* name;
    const char* help;
  } commands[] = {
      {"analyze", "Full report"},
      {"mk", "Newton weights m_k and delta"},
      {"nash", "Nash valuations"},
      {"essential", "Essential valuations and the surjectivity verdict"},
      {"resolve", "Explicit Gorenstein resolution"},
      {"factor", "Factorization of f and the Q-factoriality verdict"},
      {"oracle-check", "Closed-form catalog against the explicit resolution"},
  };
  std::string input;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("input", input, "JSON document (single germ or array); stdin when omitted or \"-\"");
  }

  CLI11_PARSE(app, argc, argv);

  std::string document;
  if (!read_input(input, document)) {
    std::cerr << "nashcar: cannot read " << input << '\n';
    return 1;
  }

  nashcar_run_options opts;
  nashcar_run_options_init(&opts);
  const std::string command = app.get_subcommands().front()->get_name();
  opts.command = command.c_str();
  opts.format = format.c_str();
  opts.oracle = oracle;
  opts.strict = strict;
  opts.trunc = trunc;
  opts.max_k = max_k;

  nashcar_run* run = nullptr;
  const nashcar_status st = nashcar_run_document(document.c_str(), &opts, &run);
  if (st != NASHCAR_OK) {
    std::cerr << "nashcar: " << nashcar_status_name(st) << ": " << nashcar_last_error() << '\n';
    return 1;
  }
  std::cout << nashcar_run_output(run);
  std::cerr << nashcar_run_diagnostics(run);
  const int code = nashcar_run_exit_code(run);
  nashcar_run_free(run);
  return code;
}
