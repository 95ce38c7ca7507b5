#include <exception>
#include <iostream>

#include "riesz/cli.hpp"

int main(int argc, char **argv) {
  try {
    return riesz::run_cli(argc, argv, std::cout, std::cerr);
  } catch (const std::exception &e) {
    std::cerr << "riesz: internal error: " << e.what() << "\n";
    return 70;
  }
}
