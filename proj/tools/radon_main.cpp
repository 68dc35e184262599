#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "radon/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    radon::fail(radon::Errc::ParseError, "cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "radon: exact combinatorics of intertwining transforms for twisted "
      "sheaves on partial flag varieties"};

  std::string input = "-";
  std::string format = "json";
  radon::cli::RunOptions options;

  app.add_option("--input", input, "request file, or - for stdin");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--require-applies", options.require_applies,
               "exit 1 unless the verdict is Applies");
  app.add_option("--enumeration-cap", options.enumeration_cap,
                 "largest group order to enumerate");
  app.add_option("--seed", options.seed, "seed for randomized suites");
  app.add_flag("--include-large", options.include_large,
               "add F4 to the default verify types");

  CLI11_PARSE(app, argc, argv);

  try {
    radon::Json request = radon::parse_json_text(read_input(input));
    const std::string command =
        radon::require_field(request, "command").is_string()
            ? request.at("command").get<std::string>()
            : "";
    radon::cli::RunResult result = radon::cli::run_request(request, options);
    if (format == "text")
      std::cout << radon::cli::render_text(command, result.document);
    else
      std::cout << result.document.dump(2) << "\n";
    return result.exit_code;
  } catch (const radon::Error& e) {
    radon::Json err = radon::Json::object();
    err["error"] = {{"code", e.code_name()}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    radon::Json err = radon::Json::object();
    err["error"] = {{"code", "Internal"}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
}
