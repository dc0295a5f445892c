#include <exception>
#include <iostream>

#include "inthull/cli/commands.hpp"

int main(int argc, char** argv) {
  try {
    return inthull::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
