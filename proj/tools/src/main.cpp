#include <iostream>

#include "oudesign/cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return oudesign::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
