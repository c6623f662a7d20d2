#include <iostream>

#include "cli_commands.hpp"

int main(int argc, char** argv) {
  const auto result = edgeideal::cli::run(argc, argv);
  std::cout << result.out;
  std::cerr << result.err;
  return result.code;
}
