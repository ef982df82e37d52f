#include <iostream>

#include "dirac_step/cli.hpp"

int main(int argc, char** argv) {
  return dirac_step::cli::run(argc, argv, std::cout, std::cerr);
}
