#include <iostream>

#include "coopdecay/cli_io.hpp"

int main(int argc, char** argv) {
  return coopdecay::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
