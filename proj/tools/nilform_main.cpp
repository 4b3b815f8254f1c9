#include <iostream>

#include "nilform/cli.hpp"

int main(int argc, char** argv) {
  return nilform::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
