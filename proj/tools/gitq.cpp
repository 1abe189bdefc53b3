#include <iostream>
#include <string>
#include <vector>

#include "gitq/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = gitq::cli::run(args);
  std::cout << result.output;
  for (const auto& d : result.diagnostics) std::cerr << "gitq: " << d << "\n";
  return result.exit_code;
}
