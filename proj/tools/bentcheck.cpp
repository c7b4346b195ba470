#include <iostream>

#include "bent/cli.hpp"

int main(int argc, char** argv) {
  return bent::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
