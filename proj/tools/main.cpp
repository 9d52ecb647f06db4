// Process entry point for the command-line tool.
#include <iostream>

#include "stemcalc/cli.hpp"

int main(int argc, char** argv) {
  return stemcalc::run_cli(argc, argv, std::cout, std::cerr);
}
