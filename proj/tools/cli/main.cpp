#include <iostream>

#include "locallip_cli/cli.hpp"

int main(int argc, char** argv) {
  return locallip::cli::run_cli(argc, argv, std::cout, std::cerr);
}
