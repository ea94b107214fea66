// Command-line front end. Talks to the library only through the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jhilbert/jhilbert.h"

namespace {

bool readInput(const std::string& path, std::string& text) {
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> commands;
  for (size_t i = 0; i < jh_command_count(); ++i) commands.emplace_back(jh_command_name(i));

  CLI::App app{
      "Generalized Hilbert coefficients j_0..j_d of an ideal I in R = F_p[vars]/Q.\n"
      "R is localized at the origin: every length is computed in the local ring at the\n"
      "maximal ideal generated by the variables, and containments are checked locally.\n"
      "Input (file or stdin):\n"
      "  ring char=32003 vars=x,y\n"
      "  mod x^3-x^2*y\n"
      "  ideal x*y^2\n"
      "Exit codes: 0 ok, 1 other failure, 2 parse error, 3 hypothesis surrogate\n"
      "failure, 4 non-stabilization, 5 cross-check violation."};
  app.set_version_flag("--version", std::string(jh_version()));

  std::string command, inputPath = "-", format = "json", colon = "x1";
  std::uint64_t seed = 0;
  std::uint32_t characteristic = 0, nmax = 0, capM = 200, window = 0;
  bool assertGd = false, assertAn = false, assertS2 = false, oracle = false;

  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(commands));
  app.add_option("input", inputPath, "Input file, '-' for stdin")->capture_default_str();
  app.add_option("--seed", seed, "Seed for general elements")->capture_default_str();
  app.add_option("--char", characteristic, "Override the characteristic of the input");
  app.add_option("--nmax", nmax, "Largest n for per-n checks (0: r + d + 2)")->capture_default_str();
  app.add_option("--cap-m", capM, "Truncation cap M for length computations")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--window", window, "Hilbert fit window (0: d + 2)")->capture_default_str();
  app.add_flag("--assert-gd", assertGd, "Assert the G_d condition");
  app.add_flag("--assert-an", assertAn, "Assert the weak Artin-Nagata property");
  app.add_flag("--assert-s2", assertS2, "Assert weak residual S_2");
  app.add_option("--omega-colon", colon, "Colon element in the K-tilde terms")
      ->capture_default_str()
      ->check(CLI::IsMember({"x1", "xnext"}));
  app.add_option("--format", format, "Report format")->capture_default_str()->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--oracle", oracle, "Cross-check against the monomial oracle where it applies");

  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (!readInput(inputPath, text)) {
    std::cerr << "cannot read " << inputPath << "\n";
    return JH_ERR_FAILURE;
  }

  jh_problem* problem = nullptr;
  char* error = nullptr;
  jh_status st = jh_problem_parse(text.c_str(), characteristic, &problem, &error);
  if (st != JH_OK) {
    std::cerr << (error ? error : jh_status_name(st)) << "\n";
    jh_string_free(error);
    return st;
  }

  jh_options* options = jh_options_new();
  jh_options_set_seed(options, seed);
  jh_options_set_nmax(options, nmax);
  jh_options_set_cap_m(options, capM);
  jh_options_set_window(options, window);
  jh_options_set_assertions(options, assertGd, assertAn, assertS2);
  jh_options_set_colon_reading(options, colon == "xnext" ? JH_COLON_XNEXT : JH_COLON_X1);
  jh_options_set_oracle(options, oracle);

  char* report = nullptr;
  st = jh_run(problem, command.c_str(), options, format == "table" ? JH_FORMAT_TABLE : JH_FORMAT_JSON, &report);
  if (report) std::fputs(report, st == JH_ERR_INVALID_ARGUMENT ? stderr : stdout);
  jh_string_free(report);
  jh_options_free(options);
  jh_problem_free(problem);
  return st;
}
