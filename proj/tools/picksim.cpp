#include <iostream>

#include "picksim/cli.hpp"

int main(int argc, char** argv) {
  return picksim::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
